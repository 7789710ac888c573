import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckefusion import hecke as H
from heckefusion import idempotents as I
from heckefusion import perm as P
from heckefusion import symgroup as S
from heckefusion import tableaux as TB
from heckefusion.errors import PoleError
from heckefusion.limits import hecke_limit, phi_limit_check
from heckefusion.scalar import ONE, Q

G = S.GroupAlgebraElement
tab = TB.Tableau.parse


def test_oracle_does_not_import_hecke():
    prog = (
        "import sys\n"
        "import heckefusion.symgroup as S, heckefusion.tableaux as TB\n"
        "S.sn_fusion(TB.Tableau.parse('1 2 / 3'))\n"
        "bad = [m for m in ('heckefusion.hecke', 'heckefusion.idempotents', 'heckefusion.trace') if m in sys.modules]\n"
        "assert not bad, bad\n"
    )
    subprocess.run([sys.executable, "-c", prog], check=True)


def test_small_fusion_values():
    assert S.sn_fusion(tab("1")) == G.one(1)
    half = Fraction(1, 2)
    assert S.sn_fusion(tab("1 2")) == (G.one(2) + S.transposition(2, 1, 2)).scale(half)
    assert S.sn_fusion(tab("1 / 2")) == (G.one(2) - S.transposition(2, 1, 2)).scale(half)


@pytest.mark.parametrize("n", range(1, 6))
def test_group_algebra_idempotent_system(n):
    rep = S.idempotent_system_check(n)
    assert rep.pop("tableaux") == len(TB.all_syt(n))
    assert all(rep.values()), rep


def test_row_tableau_is_rank_one():
    # E x E is a multiple of E for every group element x
    T = tab("1 2 / 3")
    e = S.sn_fusion(T)
    for w in P.all_perms(3):
        exe = e * G.basis(w) * e
        ratios = {exe.coeff(v) / e.coeff(v) for v in e.coeffs}
        assert len(ratios) == 1 and all(exe.coeff(v) == 0 for v in exe.coeffs if v not in e.coeffs)


def test_sn_fusion_rejects_nonstandard():
    with pytest.raises(PoleError):
        S.sn_fusion(tab("2 1"))


def test_phi_pole():
    with pytest.raises(PoleError):
        S.phi(3, 1, 2, 1, 1)


@settings(max_examples=30)
@given(st.permutations(range(1, 5)), st.permutations(range(1, 5)), st.permutations(range(1, 5)))
def test_group_product_is_composition(x, y, z):
    x, y, z = tuple(x), tuple(y), tuple(z)
    a, b, c = G.basis(x), G.basis(y), G.basis(z)
    assert a * b == G.basis(P.compose(x, y))
    assert (a * b) * c == a * (b * c)


def test_right_transposition_matches_product():
    a = G.basis((2, 3, 1)) + G.basis((1, 3, 2)).scale(Fraction(5, 3))
    assert a.right_mul_transposition(1, 3) == a * S.transposition(3, 1, 3)


# -- q -> 1 limit -----------------------------------------------------------


def test_hecke_limit_examples():
    assert hecke_limit(H.HeckeElement.one(3)) == G.one(3)
    e2 = I.dipper_james(tab("1 2"))
    assert hecke_limit(e2) == (G.one(2) + S.transposition(2, 1, 2)).scale(Fraction(1, 2))


def test_hecke_limit_pole_names_permutation():
    a = H.generator(2, 1).scale(ONE / (Q - 1))
    with pytest.raises(PoleError, match=r"2, 1"):
        hecke_limit(a)


@pytest.mark.parametrize("n", range(1, 5))
def test_limit_matches_group_algebra_fusion(n):
    for T in TB.all_syt(n):
        assert hecke_limit(I.dipper_james(T)) == S.sn_fusion(T)


def test_phi_limit():
    assert phi_limit_check(1, (0,))
    assert phi_limit_check(2, (0, 1))
    assert phi_limit_check(3, (0, 1, -1))
    assert not phi_limit_check(2, (0, 1), phi_contents=(0, 2))
