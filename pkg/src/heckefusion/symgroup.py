"""Rational group algebra of S_n and the fusion procedure for its idempotents.

This module deliberately imports nothing from the Hecke side, so comparisons
against the q -> 1 limit of Hecke idempotents are independent.  Products
compose permutations directly: ``(x y)(i) = x(y(i))``.
"""
from fractions import Fraction
from math import lcm, prod

from . import perm as P
from .errors import PoleError
from .scalar import QRat, URat
from .tableaux import hooks

SPECTRAL = "u"


class GroupAlgebraElement:
    """Finite sum of permutations with Fraction (or URat) coefficients."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        self.coeffs = {} if coeffs is None else {w: c for w, c in coeffs.items() if c}

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def one(cls, n):
        return cls(n, {P.identity(n): Fraction(1)})

    @classmethod
    def basis(cls, w, c=Fraction(1)):
        return cls(len(w), {tuple(w): c})

    def coeff(self, w):
        return self.coeffs.get(tuple(w), 0)

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out[w] + c if w in out else c
        return GroupAlgebraElement(self.n, out)

    def __neg__(self):
        return GroupAlgebraElement(self.n, {w: -c for w, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GroupAlgebraElement(self.n, {w: x * c for w, x in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        if _all_fractions(self) and _all_fractions(other):
            return _mul_integer(self, other)
        out = {}
        for x, a in self.coeffs.items():
            for y, b in other.coeffs.items():
                z = P.compose(x, y)
                v = a * b
                out[z] = out[z] + v if z in out else v
        return GroupAlgebraElement(self.n, out)

    def __rmul__(self, c):
        return self.scale(c)

    def __truediv__(self, c):
        return self.scale(Fraction(1) / c)

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    __hash__ = None

    def right_mul_transposition(self, i, j):
        """``self * (i j)``: swap positions i and j of each permutation."""
        out = {}
        for w, c in self.coeffs.items():
            v = list(w)
            v[i - 1], v[j - 1] = v[j - 1], v[i - 1]
            out[tuple(v)] = c
        return GroupAlgebraElement(self.n, out)

    def map_coefficients(self, fn):
        return GroupAlgebraElement(self.n, {w: fn(c) for w, c in self.coeffs.items()})

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for w in sorted(self.coeffs):
            parts.append(f"({self.coeffs[w]}) * {list(w)}")
        return " + ".join(parts)

    __repr__ = __str__


def _all_fractions(a):
    return all(isinstance(c, (Fraction, int)) for c in a.coeffs.values())


def _integer_form(a):
    d = 1
    for c in a.coeffs.values():
        d = lcm(d, Fraction(c).denominator)
    return d, {w: int(c * d) for w, c in a.coeffs.items()}


def _mul_integer(a, b):
    # common denominators keep the double loop in integer arithmetic
    da, ia = _integer_form(a)
    db, ib = _integer_form(b)
    out = {}
    get = out.get
    for x, p in ia.items():
        for y, r in ib.items():
            z = tuple(x[i - 1] for i in y)
            out[z] = get(z, 0) + p * r
    den = da * db
    return GroupAlgebraElement(a.n, {w: Fraction(v, den) for w, v in out.items() if v})


def transposition(n, i, j):
    return GroupAlgebraElement.basis(P.transposition(n, i, j))


def jucys_murphy(k, n):
    """``x_k = (1 k) + (2 k) + ... + (k-1 k)``; ``x_1 = 0``."""
    out = GroupAlgebraElement.zero(n)
    for i in range(1, k):
        out = out + transposition(n, i, k)
    return out


def phi(n, i, j, a, b):
    """``phi_{ij}(a, b) = 1 - (i j)/(a - b)`` for constant a, b."""
    d = Fraction(a) - Fraction(b)
    if not d:
        raise PoleError(f"phi_{i}{j} has a pole at a = b = {a}")
    return GroupAlgebraElement.one(n) - transposition(n, i, j).scale(1 / d)


def phi_product(n, k, contents, v):
    """``phi_{1,k+1}(c_1, v) phi_{2,k+1}(c_2, v) ... phi_{k,k+1}(c_k, v)``."""
    out = GroupAlgebraElement.one(n)
    for i, c in enumerate(contents, start=1):
        out = out * phi(n, i, k + 1, c, v)
    return out


def _to_fraction(c):
    # constant QRat (no q dependence) -> Fraction
    return c.eval_q_one()


def sn_fusion(T):
    """Primitive idempotent of Q[S_n] for T by consecutive evaluation.

    The product of ``phi_{ij}(u_i, u_j)`` over pairs in lexicographic order is
    regrouped by the second index (disjoint transpositions commute), so chain
    j carries the only live variable ``u_j`` and is evaluated at ``c_j``;
    the result is divided by the product of the hook lengths.
    """
    if not T.is_standard():
        raise PoleError(f"tableau {T} is not standard")
    cs = T.contents()
    n = len(cs)
    u = URat.variable(SPECTRAL)
    acc = GroupAlgebraElement.one(n)
    for j in range(2, n + 1):
        cur = acc.map_coefficients(lambda c: URat.const(SPECTRAL, QRat.from_fraction(c)))
        for i in range(1, j):
            cur = cur - cur.right_mul_transposition(i, j).scale((cs[i - 1] - u).inverse())
        point = QRat.from_int(cs[j - 1])
        acc = cur.map_coefficients(lambda c: _to_fraction(c.subs(point)))
    return acc.scale(Fraction(1, prod(hooks(T.shape))))


def idempotent_system_check(n):
    """Idempotency, orthogonality, completeness and x_k E_T = c_k E_T over all SYT of n."""
    from .tableaux import all_syt

    Ts = all_syt(n)
    Es = {T: sn_fusion(T) for T in Ts}
    one = GroupAlgebraElement.one(n)
    report = {"tableaux": len(Ts)}
    report["idempotent"] = all(E * E == E for E in Es.values())
    report["orthogonal"] = all(
        not (Es[S] * Es[T]) for S in Ts for T in Ts if S != T
    )
    total = GroupAlgebraElement.zero(n)
    for E in Es.values():
        total = total + E
    report["complete"] = total == one
    xs = [jucys_murphy(k, n) for k in range(1, n + 1)]
    report["eigenvalues"] = all(
        xs[k] * E == E.scale(c) and E * xs[k] == E.scale(c)
        for T, E in Es.items()
        for k, c in enumerate(T.contents())
    )
    return report
