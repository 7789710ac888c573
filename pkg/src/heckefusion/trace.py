"""Conditional expectations Tr_{m+1}: H_{m+1} -> H_m and the Ocneanu-Markov trace.

The trace parameter Q is an indeterminate (URat variable ``"Q"``) unless a
numeric value is supplied; it cannot be symbolic while a spectral ``u`` is
live.
"""
from functools import lru_cache

from . import hecke as H
from . import perm as P
from .idempotents import SPECTRAL, dipper_james, fusion, resolvent
from .scalar import QRat, URat, T as QT

TRACE_VAR = "Q"


@lru_cache(maxsize=None)
def _trace_basis(m, w):
    """Tr_{m+1}(T_w) split as ``(kind, element of H_m)``.

    Coset decomposition ``w = x s_m s_{m-1} ... s_j`` with x in S_m:
    kind ``"Q"`` means ``Q * T_x`` (w already in S_m); kind ``"1"`` means
    ``T_x T_{m-1} ... T_j``.
    """
    j = w.index(m + 1) + 1
    x = (w[: j - 1] + w[j:])[:m]
    base = H.HeckeElement.basis(x) if m else H.HeckeElement.one(0)
    if j == m + 1:
        return "Q", base
    for i in range(m - 1, j - 1, -1):
        base = H.right_mul_gen(base, i)
    return "1", base


def _split(m, a):
    """``(A0, A1)`` with ``Tr_{m+1}(a) = Q * A0 + A1``, over a's scalar kind."""
    if a.support_rank() > m + 1:
        raise ValueError(f"support is outside S_{m + 1}")
    a = a.restrict(m + 1) if a.n != m + 1 else a
    parts = {"Q": {}, "1": {}}
    for w, c in a.terms.items():
        kind, el = _trace_basis(m, w)
        acc = parts[kind]
        for x, d in el.terms.items():
            v = H.lift(d, a.var) * c
            acc[x] = acc[x] + v if x in acc else v
    return H.HeckeElement(m, parts["Q"], a.var), H.HeckeElement(m, parts["1"], a.var)


def cond_trace(m, a, Q=None):
    """Tr_{m+1}(a) for a in H_{m+1}; result in H_m (H_0 is the ground field)."""
    A0, A1 = _split(m, a)
    if Q is not None:
        return A0.scale(Q) + A1
    if a.var is None:
        out = {}
        for x in set(A0.terms) | set(A1.terms):
            out[x] = URat.poly(TRACE_VAR, [A1.coeff(x), A0.coeff(x)])
        return H.HeckeElement(m, out, TRACE_VAR)
    if a.var != TRACE_VAR:
        raise TypeError(f"symbolic Q needs a numeric value while {a.var!r} is live")
    return A0.scale(URat.variable(TRACE_VAR)) + A1


def markov_trace(a, Q=None):
    """Tr_1 Tr_2 ... Tr_n (a) as a scalar (URat in Q unless Q is numeric)."""
    cur = a
    for m in range(a.n - 1, -1, -1):
        cur = cond_trace(m, cur, Q)
    return cur.coeff(())


def qdim(T, method="dipper_james"):
    E = fusion(T) if method == "fusion" else dipper_james(T)
    return markov_trace(E)


# ---------------------------------------------------------------------------
# resolvent identities


def z_direct(m, Q):
    """``Tr_{m+1}((u - y_{m+1})^{-1})`` with Q numeric."""
    return cond_trace(m, resolvent(m + 1), QRat.coerce(Q))


def z_closed_form(m, Q):
    """Closed form of Z_{m+1}(u) in H_m over Q(q)(u), with Q numeric."""
    Q = QRat.coerce(Q)
    u = URat.variable(SPECTRAL)
    t = QT
    q2 = QRat.q_power(2)
    pref = (t * Q + u - 1) / (t * u * (u - 1))
    prod = H.HeckeElement.one(m, SPECTRAL)
    for k in range(1, m + 1):
        y = H.jucys_murphy(k, m, SPECTRAL)
        one = H.HeckeElement.one(m, SPECTRAL)
        a = one.scale(u) - y
        b1 = H.invert(one.scale(u) - y.scale(q2))
        b2 = H.invert(one.scale(u) - y.scale(q2.inverse()))
        prod = prod * a * a * b1 * b2
    tail = (1 - t * Q) * (u - 1) / (t * Q + u - 1)
    return (prod - tail).scale(pref)


def z_function(m, Q_values):
    """Check the resolvent trace against its closed form for each numeric Q."""
    if m > 3:
        raise ValueError("z_function is limited to m <= 3")
    return all(z_direct(m, Q) == z_closed_form(m, Q) for Q in Q_values)


def recursion_identity_check(m, swap_sides=False):
    """``1/(u - y_{m+1}) = T_m R_m T_m^{-1} + R_m (T_m^{-1} + t u R_{m+1}) t y_m R_m``.

    R_k = (u - y_k)^{-1} in H_{m+1}.  ``swap_sides`` puts T_m^{-1} on the
    wrong side of the first term (negative control).
    """
    if not 1 <= m <= 3:
        raise ValueError("need 1 <= m <= 3")
    n = m + 1
    u = URat.variable(SPECTRAL)
    t = H.lift(QT, SPECTRAL)
    Rm, Rn = resolvent(n, m), resolvent(n, n)
    Tm = H.generator(n, m, SPECTRAL)
    Tm_inv = H.gen_inverse(n, m, SPECTRAL)
    ym = H.jucys_murphy(m, n, SPECTRAL)
    first = Tm_inv * Rm * Tm if swap_sides else Tm * Rm * Tm_inv
    second = Rm * (Tm_inv + Rn.scale(t * u)) * ym.scale(t) * Rm
    return Rn == first + second


def normalization_check(T, method="dipper_james"):
    """f(shape) == qdim(T) * prod_k s_k / (Q + (s_k - 1)/t), Q symbolic."""
    from .tableaux import f_lambda

    Qv = URat.variable(TRACE_VAR)
    rhs = qdim(T, method)
    for c in T.contents():
        s = QRat.q_power(2 * c)
        rhs = rhs * s / (Qv + (s - 1) / QT)
    return rhs == f_lambda(T.shape)


proposition2_check = normalization_check


# ---------------------------------------------------------------------------
# trace axioms on bases


def _basis(m, var=None):
    return [H.HeckeElement.basis(w, var) for w in P.all_perms(m)] if m else [H.HeckeElement.one(0, var)]


def check_module_property(m):
    """Tr_{m+1}(X Z Y) == X Tr_{m+1}(Z) Y for all basis X, Y in H_m and Z in H_{m+1}."""
    n = m + 1
    Xs = _basis(m)
    trZ = {}
    for Z in _basis(n):
        trZ[tuple(Z.terms)[0]] = cond_trace(m, Z)
    for X in Xs:
        Xe = X.embed(n)
        for Y in Xs:
            Ye = Y.embed(n)
            for Z in _basis(n):
                lhs = cond_trace(m, Xe * Z * Ye)
                tz = trZ[tuple(Z.terms)[0]]
                if lhs != X.promote(TRACE_VAR) * tz * Y.promote(TRACE_VAR):
                    return False
    return True


def check_scalar_property(m):
    """Tr_{m+1}(X) == Q X for X in H_m."""
    Qv = URat.variable(TRACE_VAR)
    return all(
        cond_trace(m, X.embed(m + 1)) == X.promote(TRACE_VAR).scale(Qv) for X in _basis(m)
    )


def check_conjugation_property(m):
    """Tr_{m+1}(T_m^{+-1} X T_m^{-+1}) == Tr_m(X) for X in H_m, m >= 1."""
    n = m + 1
    Tm, Tmi = H.generator(n, m), H.gen_inverse(n, m)
    for X in _basis(m):
        rhs = cond_trace(m - 1, X).embed(m)
        Xe = X.embed(n)
        if cond_trace(m, Tm * Xe * Tmi) != rhs or cond_trace(m, Tmi * Xe * Tm) != rhs:
            return False
    return True


def check_generator_property(m):
    """Tr_{m+1}(T_m) == 1."""
    return cond_trace(m, H.generator(m + 1, m)) == H.HeckeElement.one(m, TRACE_VAR)


def check_markov_property(m):
    """Tr_m Tr_{m+1}(T_m Z) == Tr_m Tr_{m+1}(Z T_m) for basis Z in H_{m+1}, m >= 1."""
    n = m + 1
    Tm = H.generator(n, m)
    for Z in _basis(n):
        a = cond_trace(m - 1, cond_trace(m, Tm * Z))
        b = cond_trace(m - 1, cond_trace(m, Z * Tm))
        if a != b:
            return False
    return True


def trace_axioms(m):
    """All five defining properties at level m; returns a dict name -> bool."""
    out = {
        "module": check_module_property(m),
        "scalar": check_scalar_property(m),
    }
    if m >= 1:
        out["generator"] = check_generator_property(m)
        out["conjugation"] = check_conjugation_property(m)
        out["markov"] = check_markov_property(m)
    return out
