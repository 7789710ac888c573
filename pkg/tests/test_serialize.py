import json

import pytest
from hypothesis import given, settings, strategies as st

from heckefusion import hecke as H
from heckefusion import idempotents as I
from heckefusion import symgroup as S
from heckefusion import tableaux as TB
from heckefusion.errors import ParseError
from heckefusion.serialize import from_json, round_trip_exact, to_json

from strategies import hecke_elements


def test_schema_fields():
    d = json.loads(to_json(H.generator(3, 1), tableau="x"))
    assert d["schema"] == 1 and d["n"] == 3 and d["scalar"] == "qrat" and d["tableau"] == "x"
    assert d["terms"] == [{"perm": [2, 1, 3], "coeff": "1"}]


@pytest.mark.parametrize("n", range(1, 5))
def test_idempotents_round_trip(n):
    for T in TB.all_syt(n):
        assert round_trip_exact(I.dipper_james(T))


def test_urat_and_group_algebra_round_trip():
    assert round_trip_exact(I.resolvent(3))
    e = S.sn_fusion(TB.Tableau.parse("1 2 / 3"))
    assert round_trip_exact(e)
    assert json.loads(to_json(e))["group_algebra"] is True


@settings(max_examples=40)
@given(hecke_elements(3))
def test_random_round_trip(a):
    assert round_trip_exact(a)


@pytest.mark.parametrize("text", [
    "not json",
    '{"schema": 2, "n": 1, "scalar": "qrat", "terms": []}',
    '{"schema": 1, "n": 2, "scalar": "qrat", "terms": [{"perm": [1, 1], "coeff": "1"}]}',
    '{"schema": 1, "n": 2, "scalar": "qrat", "terms": [{"perm": [1, 2], "coeff": "u"}]}',
    '{"schema": 1, "n": 2, "scalar": "urat", "terms": []}',
    '{"schema": 1, "n": 2, "scalar": "float", "terms": []}',
    '{"schema": 1, "n": 1, "scalar": "rational", "group_algebra": true, "terms": [{"perm": [1], "coeff": "1/0"}]}',
])
def test_malformed_input(text):
    with pytest.raises(ParseError):
        from_json(text)
