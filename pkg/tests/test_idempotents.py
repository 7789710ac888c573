import pytest
from hypothesis import given, settings, strategies as st

from heckefusion import hecke as H
from heckefusion import idempotents as I
from heckefusion import tableaux as TB
from heckefusion.errors import PoleError
from heckefusion.scalar import ONE, Q, URat, qint

E = H.HeckeElement
tab = TB.Tableau.parse


def syt_upto(n):
    return [T for k in range(1, n + 1) for T in TB.all_syt(k)]


def test_small_idempotents():
    assert I.dipper_james(tab("1")) == E.one(1)
    t1 = H.generator(2, 1)
    e2 = (t1 + E.one(2).scale(ONE / Q)).scale(1 / (Q + 1 / Q))
    e11 = (E.one(2).scale(Q) - t1).scale(1 / (Q + 1 / Q))
    assert I.dipper_james(tab("1 2")) == e2
    assert I.dipper_james(tab("1 / 2")) == e11
    assert e2 + e11 == E.one(2)
    assert I.fusion(tab("1")) == E.one(1)


@pytest.mark.parametrize("text", ["1 2 / 3", "1 3 / 2"])
def test_three_cell_product_with_prefactor(text):
    T = tab(text)
    direct = I.direct_product(3, I.psi_pairs(T.contents()), 1 / qint(3))
    assert direct == I.dipper_james(T) == I.fusion(T)


@pytest.mark.parametrize("text", ["1 2 / 3 4", "1 3 / 2 4"])
def test_singular_factor_is_regular_under_consecutive_evaluation(text):
    T = tab(text)
    cs = T.contents()
    assert cs[0] == cs[3] == 0  # T_3(s_1, s_4) has coinciding arguments
    with pytest.raises(PoleError):
        I.direct_product(4, I.psi_pairs(cs), ONE)
    assert TB.f_lambda((2, 2)) == 1 / (qint(3) * qint(2) ** 2)
    log = []
    assert I.fusion(T, log) == I.dipper_james(T)
    assert [e["chain"] for e in log] == [1, 2, 3]


def test_fusion_equals_dipper_james_small():
    for T in syt_upto(4):
        assert I.fusion(T) == I.dipper_james(T)


def test_fusion_rejects_nonstandard():
    with pytest.raises(PoleError):
        I.fusion(tab("2 1"))


def test_idempotent_system_n4():
    Ts = TB.all_syt(4)
    Es = {T: I.dipper_james(T) for T in Ts}
    total = E.zero(4)
    for T, e in Es.items():
        assert e * e == e
        total = total + e
    assert total == E.one(4)
    for S in Ts:
        for T in Ts:
            if S != T:
                assert not Es[S] * Es[T]


@settings(max_examples=20)
@given(st.sampled_from(syt_upto(4)), st.data())
def test_eigenvalues(T, data):
    k = data.draw(st.integers(1, T.n))
    e = I.dipper_james(T)
    y = H.jucys_murphy(k, T.n)
    s = T.q_contents()[k - 1]
    assert y * e == e.scale(s) == e * y


@settings(max_examples=15)
@given(st.sampled_from(syt_upto(3)))
def test_branching(U):
    total = E.zero(U.n + 1)
    for T in U.extensions():
        total = total + I.dipper_james(T)
    assert total == I.dipper_james(U).embed(U.n + 1)


def test_spectral_limit():
    one = tab("1")
    assert I.em_via_spectral_limit(one, 1) == I.dipper_james(tab("1 2"))
    assert I.em_via_spectral_limit(one, -1) == I.dipper_james(tab("1 / 2"))
    with pytest.raises(PoleError):
        I.em_via_spectral_limit(one, 0)
    for T in TB.all_syt(3):
        assert I.em_via_spectral_limit(T.remove_max(), T.contents()[-1]) == I.dipper_james(T)


def test_y_element_small_case():
    n = 2
    u = URat.variable("u")
    y1 = I.y_element(1, (0,), n)
    expected = H.baxterized(n, 1, ONE, u) * H.gen_inverse(n, 1, "u")
    assert y1 == expected


@pytest.mark.parametrize("U", syt_upto(3), ids=str)
def test_y_element_identity(U):
    assert I.y_element_check(U)


def test_y_element_identity_negative_control():
    U = tab("1 2")
    assert not I.y_element_check(U, contents=(0, -1))
    assert not I.y_element_check(tab("1"), contents=(1,))


def test_resolvent_is_an_inverse():
    u = URat.variable("u")
    for n in (2, 3):
        R = I.resolvent(n)
        a = E.one(n, "u").scale(u) - H.jucys_murphy(n, n, "u")
        assert R * a == E.one(n, "u")
        assert R == H.invert_dense(a)


def test_f_n_examples():
    F2 = I.f_n_function(tab("1 2"))
    u = URat.variable("u")
    assert F2 == (u - 1) / (u - Q**-2)
    assert I.f_n_value(tab("1 2")) == Q / qint(2) == TB.f_lambda((2,))
    assert I.f_n_value(tab("1 2 / 3")) == qint(2) / (Q * qint(3))


def test_f_n_value_recursion():
    for T in syt_upto(5):
        if T.n >= 2:
            assert I.f_n_value(T) * TB.f_lambda(T.remove_max().shape) == TB.f_lambda(T.shape)


def test_fusion_log_and_record():
    rec = I.idempotent(tab("1 2 / 3"), "dj")
    assert rec.method == "dipper_james"
    with pytest.raises(ValueError):
        I.idempotent(tab("1"), "other")
