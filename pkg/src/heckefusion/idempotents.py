"""Primitive idempotents E_T of H_n: Dipper-James rule and the fusion procedure."""
from dataclasses import dataclass, field
from functools import lru_cache

from . import hecke as H
from .errors import PoleError
from .scalar import QRat, URat, T as QT
from .tableaux import Tableau, addable_cells, content, f_lambda

SPECTRAL = "u"


@dataclass(frozen=True)
class IdempotentRecord:
    tableau: Tableau
    element: H.HeckeElement
    method: str  # "dipper_james" or "fusion"


def _sigma(c):
    return QRat.q_power(2 * c)


@lru_cache(maxsize=None)
def dipper_james(T):
    """E_T = E_U * prod_i (y_n - rho_i) / (sigma - rho_i) over the other addable cells."""
    n = T.n
    if n == 1:
        return H.HeckeElement.one(1)
    U = T.remove_max()
    alpha = T.cell_of(n)
    sigma = _sigma(content(alpha))
    E = dipper_james(U).embed(n)
    y = H.jucys_murphy(n, n)
    for cell in addable_cells(U.shape):
        if cell == alpha:
            continue
        rho = _sigma(content(cell))
        E = (E * y - E.scale(rho)) / (sigma - rho)
    return E


@lru_cache(maxsize=None)
def resolvent(n, k=None):
    """``(u - y_k)^{-1}`` in H_n over Q(q)(u).

    Computed by ``hecke.invert`` (linear algebra only: the minimal relation
    among powers of y_k), never from the idempotents it is used to check.
    """
    k = n if k is None else k
    u = URat.variable(SPECTRAL)
    a = H.HeckeElement.one(n, SPECTRAL).scale(u) - H.jucys_murphy(k, n, SPECTRAL)
    return H.invert(a)


def em_via_spectral_limit(U, c):
    """``E_U (u - sigma) / (u - y_n)`` evaluated at ``u = sigma = q^{2c}``.

    Only addable contents are accepted: elsewhere the rational function does
    not describe a one-cell extension and PoleError is raised.
    """
    n = U.n + 1
    if c not in {content(a) for a in addable_cells(U.shape)}:
        raise PoleError(f"q^{2 * c} is not an addable q-content of {U.shape}")
    u = URat.variable(SPECTRAL)
    EU = dipper_james(U).embed(n).promote(SPECTRAL)
    f = (EU * resolvent(n)).scale(u - _sigma(c))
    return f.eval_at_q_power(c)


def right_mul_baxterized(a, i, x, y):
    """``a * T_i(x, y)`` without building the factor."""
    var = a.var
    x, y = H.lift(x, var), H.lift(y, var)
    diff = y - x
    if not diff:
        raise PoleError(f"T_{i}(x, y) has a pole at x = y = {x}")
    return H.right_mul_gen(a, i) + a.scale(H.lift(QT, var) * x / diff)


def y_element(k, contents, n):
    """``Y_k = T_{w_k} T_k(s_1, u) T_{k-1}(s_2, u) ... T_1(s_k, u) T_{w_{k+1}}^{-1}``."""
    if not 1 <= k <= n - 1 or len(contents) != k:
        raise ValueError("need 1 <= k <= n - 1 and k contents")
    u = URat.variable(SPECTRAL)
    out = H.t_longest(k, n, SPECTRAL)
    for j, c in enumerate(contents, start=1):
        out = right_mul_baxterized(out, k - j + 1, _sigma(c), u)
    for i in reversed(H.longest_word(k + 1)):
        out = H.right_mul_gen_inverse(out, i)
    return out


def _defect_factor(contents, var=SPECTRAL):
    """``prod_j (u - q^2 s_j)(u - q^-2 s_j) / (u - s_j)^2``."""
    u = URat.variable(var)
    q2 = QRat.q_power(2)
    out = URat.const(var, 1)
    for c in contents:
        s = _sigma(c)
        out = out * (u - q2 * s) * (u - s / q2) / ((u - s) * (u - s))
    return out


def y_element_check(U, contents=None):
    """E_U Y_k(s; u) == (u - s_1) * defect * E_U (u - y_{k+1})^{-1}, exactly.

    ``contents`` overrides the content sequence of U (negative controls).
    """
    k = U.n
    n = k + 1
    cs = U.contents() if contents is None else tuple(contents)
    u = URat.variable(SPECTRAL)
    EU = dipper_james(U).embed(n).promote(SPECTRAL)
    lhs = EU * y_element(k, cs, n)
    scal = (u - _sigma(cs[0])) * _defect_factor(cs)
    rhs = (EU * resolvent(n)).scale(scal)
    return lhs == rhs


lemma2_check = y_element_check


def f_n_function(T):
    """``F_n(u) = (u - s_n)/(u - s_1) prod_{k<n} (u - s_k)^2 / ((u - q^2 s_k)(u - q^-2 s_k))``."""
    if not T.is_standard():
        raise PoleError(f"tableau {T} is not standard")
    cs = T.contents()
    if len(cs) < 2:
        raise ValueError("F_n needs at least two cells")
    u = URat.variable(SPECTRAL)
    return (u - _sigma(cs[-1])) / (u - _sigma(cs[0])) / _defect_factor(cs[:-1])


def f_n_value(T):
    return f_n_function(T).eval_at_q_power(T.contents()[-1])


@dataclass
class FusionState:
    contents: tuple
    accumulator: H.HeckeElement
    k: int  # next chain index
    log: list = field(default_factory=list)


def fusion_steps(T):
    """Yield the fusion state after each consecutive evaluation.

    Chain k multiplies the accumulator by ``T_k(s_1, u) ... T_1(s_k, u)`` with
    u live, then substitutes ``u = s_{k+1}``.  Factors where ``u_{k+1}`` is
    the first argument sit in later chains and are regular there, so this
    single-variable schedule realizes the consecutive evaluation of the
    whole product.
    """
    if not T.is_standard():
        raise PoleError(f"tableau {T} is not standard")
    cs = T.contents()
    n = len(cs)
    u = URat.variable(SPECTRAL)
    state = FusionState(cs, H.HeckeElement.one(n), 1)
    yield state
    for k in range(1, n):
        P = state.accumulator.promote(SPECTRAL)
        for j in range(1, k + 1):
            P = right_mul_baxterized(P, k - j + 1, _sigma(cs[j - 1]), u)
        den_deg = max((len(c.den) - 1 for c in P.terms.values()), default=0)
        A = P.eval_at_q_power(cs[k])
        entry = {"chain": k, "den_degree": den_deg, "point": f"q^{2 * cs[k]}"}
        state = FusionState(cs, A, k + 1, state.log + [entry])
        yield state


def fusion(T, log=None):
    """E_T = f(shape) * Psi(u_1..u_n) evaluated consecutively at u_k = s_k."""
    for state in fusion_steps(T):
        pass
    if log is not None:
        log.extend(state.log)
    A = state.accumulator
    for i in reversed(H.longest_word(T.n)):
        A = H.right_mul_gen_inverse(A, i)
    return A.scale(f_lambda(T.shape))


def idempotent(T, method="fusion"):
    if method in ("fusion",):
        return IdempotentRecord(T, fusion(T), "fusion")
    if method in ("dj", "dipper_james"):
        return IdempotentRecord(T, dipper_james(T), "dipper_james")
    raise ValueError(f"unknown method {method!r}")


def direct_product(n, pairs, prefactor):
    """``prefactor * prod T_i(x, y) * T_{w_n}^{-1}`` for explicit constant pairs.

    ``pairs`` lists ``(i, x, y)`` in product order.  A coinciding pair raises
    PoleError, which is how singular factors such as ``T_3(s_1, s_4)`` show up.
    """
    out = H.HeckeElement.one(n)
    for i, x, y in pairs:
        out = right_mul_baxterized(out, i, x, y)
    for i in reversed(H.longest_word(n)):
        out = H.right_mul_gen_inverse(out, i)
    return out.scale(prefactor)


def psi_pairs(contents):
    """Factor list of Psi at u_k = s_k: chain k is T_k(s_1, s_{k+1}) ... T_1(s_k, s_{k+1})."""
    n = len(contents)
    return [
        (k - j + 1, _sigma(contents[j - 1]), _sigma(contents[k]))
        for k in range(1, n)
        for j in range(1, k + 1)
    ]
