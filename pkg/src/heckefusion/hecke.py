"""The Hecke algebra H_n over Q(q), or over Q(q)(u) when a spectral variable is live.

Elements are sparse maps from permutations (one-line tuples) to scalars.  The
scalar kind is fixed per element by ``var``: ``None`` for QRat coefficients,
otherwise the tag of the live URat variable.
"""
from fractions import Fraction
from functools import lru_cache

from . import perm as P
from .errors import PoleError, SingularError
from .linalg import first_dependency, solve
from .scalar.urat import up_divexact, up_divmod, up_gcd, up_mul
from .scalar import QRat, URat, ONE as QONE, ZERO as QZERO, T as QT, qsum, kernels as K


def scalar_zero(var):
    return QZERO if var is None else URat.const(var, 0)


def scalar_one(var):
    return QONE if var is None else URat.const(var, 1)


def lift(c, var):
    """Coerce ``c`` into the scalar kind named by ``var``."""
    if var is None:
        if isinstance(c, URat):
            raise TypeError(f"URat scalar {c} in a Q(q) element; promote first")
        out = QRat.coerce(c)
        if out is None:
            raise TypeError(f"not a scalar: {c!r}")
        return out
    if isinstance(c, URat):
        if c.var != var:
            raise TypeError(f"scalar variable {c.var!r} does not match {var!r}")
        return c
    out = QRat.coerce(c)
    if out is None:
        raise TypeError(f"not a scalar: {c!r}")
    return URat.const(var, out)


def scalar_var(c):
    return c.var if isinstance(c, URat) else None


class HeckeElement:
    __slots__ = ("n", "terms", "var")

    def __init__(self, n, terms=None, var=None):
        self.n = n
        self.var = var
        self.terms = {} if terms is None else {w: c for w, c in terms.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n, var=None):
        return cls(n, {}, var)

    @classmethod
    def one(cls, n, var=None):
        return cls(n, {P.identity(n): scalar_one(var)}, var)

    @classmethod
    def basis(cls, w, var=None):
        w = tuple(w)
        return cls(len(w), {w: scalar_one(var)}, var)

    @classmethod
    def scalar(cls, n, c):
        var = scalar_var(c)
        return cls(n, {P.identity(n): lift(c, var)}, var)

    # -- structure ----------------------------------------------------------

    def coeff(self, w):
        return self.terms.get(tuple(w), scalar_zero(self.var))

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def max_length(self):
        return max((P.length(w) for w in self.terms), default=0)

    def support_rank(self):
        """Smallest m with support inside S_m."""
        m = 0
        for w in self.terms:
            for i in range(len(w), 0, -1):
                if w[i - 1] != i:
                    m = max(m, i)
                    break
        return max(m, 1) if self.n else 0

    def embed(self, n):
        """View this element inside H_n for n >= self.n."""
        if n < self.n:
            raise ValueError("cannot embed into a smaller algebra")
        return HeckeElement(n, {P.embed(w, n): c for w, c in self.terms.items()}, self.var)

    def restrict(self, m):
        """View as an element of H_m; the support must lie in S_m."""
        if self.support_rank() > m:
            raise ValueError(f"support is not contained in S_{m}")
        return HeckeElement(m, {w[:m]: c for w, c in self.terms.items()}, self.var)

    def promote(self, var):
        """Lift QRat coefficients to constants in Q(q)(var)."""
        if self.var == var:
            return self
        if self.var is not None:
            raise TypeError(f"element already carries variable {self.var!r}")
        return HeckeElement(self.n, {w: URat.const(var, c) for w, c in self.terms.items()}, var)

    def map_coefficients(self, fn, var=None):
        return HeckeElement(self.n, {w: fn(c) for w, c in self.terms.items()}, var)

    def subs(self, value):
        """Substitute the live variable: a URat element becomes a QRat element."""
        if self.var is None:
            raise TypeError("no live variable to substitute")
        return HeckeElement(self.n, {w: c.subs(value) for w, c in self.terms.items()}, None)

    def eval_at_q_power(self, c):
        return self.subs(QRat.q_power(2 * c))

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: H_{self.n} vs H_{other.n}")
        if self.var != other.var:
            raise TypeError(f"scalar-kind mismatch: {self.var!r} vs {other.var!r}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.scalar(self.n, lift(other, self.var))
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement.scalar(self.n, lift(other, self.var))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = lift(c, self.var)
        if not c:
            return HeckeElement.zero(self.n, self.var)
        return HeckeElement(self.n, {w: x * c for w, x in self.terms.items()}, self.var)

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, c):
        c = lift(c, self.var)
        return self.scale(c.inverse())

    def __pow__(self, k):
        out = HeckeElement.one(self.n, self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, HeckeElement):
            if self.n != other.n:
                return False
            if self.var != other.var:
                return self.terms == other.terms == {}
            return self.terms == other.terms
        try:
            return self == HeckeElement.scalar(self.n, lift(other, self.var))
        except TypeError:
            return NotImplemented

    __hash__ = None

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            word = " ".join(str(i) for i in P.reduced_word(w))
            parts.append(f"({self.terms[w]}) * T[{word}]")
        return " + ".join(parts)

    def __repr__(self):
        return f"HeckeElement(n={self.n}, var={self.var!r}, {self})"


# ---------------------------------------------------------------------------
# multiplication


def right_mul_gen(a, i):
    """``a * T_i``."""
    t = lift(QT, a.var)
    out = {}
    for w, c in a.terms.items():
        ws = P.right_swap(w, i)
        out[ws] = out[ws] + c if ws in out else c
        if w[i - 1] > w[i]:
            tc = t * c
            out[w] = out[w] + tc if w in out else tc
    return HeckeElement(a.n, out, a.var)


def left_mul_gen(i, a):
    """``T_i * a``."""
    t = lift(QT, a.var)
    out = {}
    for w, c in a.terms.items():
        sw = P.left_swap(w, i)
        out[sw] = out[sw] + c if sw in out else c
        # length goes down iff i+1 precedes i in w
        if w.index(i) > w.index(i + 1):
            tc = t * c
            out[w] = out[w] + tc if w in out else tc
    return HeckeElement(a.n, out, a.var)


def right_mul_gen_inverse(a, i):
    """``a * T_i^{-1}`` with ``T_i^{-1} = T_i - (q - q^{-1})``."""
    return right_mul_gen(a, i) - a.scale(QT)


def mul(a, b):
    """Product in H_n; basis products via right multiplication by generators."""
    a._check(b)
    if not a.terms or not b.terms:
        return HeckeElement.zero(a.n, a.var)
    ident = P.identity(a.n)
    if len(b.terms) == 1 and ident in b.terms:
        return a.scale(b.terms[ident])
    if len(a.terms) == 1 and ident in a.terms:
        return b.scale(a.terms[ident])
    if a.var is None:
        return _mul_packed(a, b)
    return _mul_graded(a, b)


def _mul_generic(a, b):
    memo = {P.identity(a.n): a}

    def get(v):
        stack = []
        while v not in memo:
            i = P.first_right_descent(v)
            stack.append((v, i))
            v = P.right_swap(v, i)
        cur = memo[v]
        for v, i in reversed(stack):
            cur = right_mul_gen(cur, i)
            memo[v] = cur
        return cur

    cols = {}
    for v, cv in b.terms.items():
        for w, c in get(v).terms.items():
            cols.setdefault(w, []).append(c * cv)
    out = {}
    for w, vals in cols.items():
        s = vals[0]
        for x in vals[1:]:
            s = s + x
        out[w] = s
    return HeckeElement(a.n, out, a.var)


def _graded(a):
    """Write a URat element as ``D(u)^{-1} sum_k u^k A_k`` with A_k over Q(q)."""
    den = (QONE,)
    for d in {c.den for c in a.terms.values()}:
        if len(d) == 1 or d == den:
            continue
        _, rem = up_divmod(den, d)
        if rem:
            den = up_mul(den, up_divexact(d, up_gcd(den, d)))
    slices = {}
    for w, c in a.terms.items():
        num = c.num if c.den == den else up_mul(c.num, up_divexact(den, c.den))
        for k, x in enumerate(num):
            if x:
                slices.setdefault(k, {})[w] = x
    return den, {k: HeckeElement(a.n, t) for k, t in slices.items()}


def _mul_graded(a, b):
    """URat product: one packed Q(q) product per pair of u-degree slices."""
    da, sa = _graded(a)
    db, sb = _graded(b)
    prod = {}
    for i, x in sa.items():
        for j, y in sb.items():
            z = _mul_packed(x, y)
            prod[i + j] = prod[i + j] + z if i + j in prod else z
    den = up_mul(da, db)
    nums = {}
    for k, el in prod.items():
        for w, c in el.terms.items():
            nums.setdefault(w, {})[k] = c
    out = {}
    for w, cs in nums.items():
        num = [cs.get(k, QZERO) for k in range(max(cs) + 1)]
        out[w] = URat.from_parts(a.var, num, den)
    return HeckeElement(a.n, out, a.var)


def _lcm(a, b):
    if a == b:
        return a
    g = K.pgcd(a, b)
    return K.pmul(a, K.pdivexact(b, g))


def to_integer_form(a):
    """Write a QRat element as ``q**e / D * sum P_w S_w`` with ``S_w = q^{l(w)} T_w``.

    Returns ``(polys, D, e)``, ``polys`` mapping permutations to integer
    polynomials in q.
    """
    den = (1,)
    for d in {c.den for c in a.terms.values()}:
        den = _lcm(den, d)
    e = min(c.sh - P.length(w) for w, c in a.terms.items())
    polys = {}
    for w, c in a.terms.items():
        p = c.num if c.den == den else K.pmul(c.num, K.pdivexact(den, c.den))
        polys[w] = K.pshift(p, c.sh - P.length(w) - e)
    return polys, den, e


def _norm1(polys):
    return sum(abs(x) for p in polys.values() for x in p)


def _mul_packed(a, b):
    pa, da, ea = to_integer_form(a)
    pb, db, eb = to_integer_form(b)
    lmax = max(P.length(w) for w in pb)
    bound = _norm1(pa) * _norm1(pb) * 3 ** lmax
    bits = bound.bit_length() + 2
    packed_a = {w: K.pack(p, bits) for w, p in pa.items()}
    packed_b = {w: K.pack(p, bits) for w, p in pb.items()}
    res = K.hecke_product_packed(packed_a, packed_b, bits)
    den = K.pmul(da, db)
    e = ea + eb
    out = {}
    for z, v in res.items():
        out[z] = QRat.from_parts(K.unpack(v, bits), den, e + P.length(z))
    return HeckeElement(a.n, out, None)


# ---------------------------------------------------------------------------
# distinguished elements


def t_of_word(n, word, var=None):
    """``T_{i_1} ... T_{i_l}`` for a word of generator indices."""
    out = HeckeElement.one(n, var)
    for i in word:
        if not 1 <= i <= n - 1:
            raise ValueError(f"generator index {i} out of range for H_{n}")
        out = right_mul_gen(out, i)
    return out


def generator(n, i, var=None):
    return t_of_word(n, [i], var)


def gen_inverse(n, i, var=None):
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for H_{n}")
    return generator(n, i, var) - lift(QT, var)


def word_inverse(n, word, var=None):
    """``(T_{i_1} ... T_{i_l})^{-1}``."""
    out = HeckeElement.one(n, var)
    for i in reversed(word):
        out = right_mul_gen_inverse(out, i)
    return out


def longest_word(k):
    """Reduced word of w_k read off ``T_1 (T_2 T_1) ... (T_{k-1} ... T_1)``."""
    return [i for j in range(1, k) for i in range(j, 0, -1)]


def longest_word_alt(k):
    """Reduced word of w_k read off ``(T_1 ... T_{k-1}) (T_1 ... T_{k-2}) ... T_1``."""
    return [i for j in range(k - 1, 0, -1) for i in range(1, j + 1)]


def _check_k(k, n):
    if not 1 <= k <= n:
        raise ValueError(f"k = {k} out of range for H_{n}")


def t_longest(k, n, var=None):
    _check_k(k, n)
    return t_of_word(n, longest_word(k), var)


def t_longest_alt(k, n, var=None):
    _check_k(k, n)
    return t_of_word(n, longest_word_alt(k), var)


def t_longest_inverse(k, n, var=None):
    _check_k(k, n)
    return word_inverse(n, longest_word(k), var)


@lru_cache(maxsize=None)
def _jm(k, n):
    if k == 1:
        return HeckeElement.one(n)
    return left_mul_gen(k - 1, right_mul_gen(_jm(k - 1, n), k - 1))


def jucys_murphy(k, n, var=None):
    """``y_k`` from ``y_1 = 1, y_{k+1} = T_k y_k T_k``."""
    _check_k(k, n)
    y = _jm(k, n)
    return y if var is None else y.promote(var)


def jucys_murphy_closed(k, n):
    """``1 + (q - q^{-1}) (T_{(1 k)} + ... + T_{(k-1 k)})``."""
    _check_k(k, n)
    terms = {P.identity(n): QONE}
    for i in range(1, k):
        terms[P.transposition(n, i, k)] = QT
    return HeckeElement(n, terms)


def baxterized(n, i, x, y):
    """``T_i(x, y) = T_i + (q - q^{-1}) / (x^{-1} y - 1)``."""
    var = scalar_var(x) or scalar_var(y)
    x, y = lift(x, var), lift(y, var)
    diff = y - x
    if not diff:
        raise PoleError(f"T_{i}(x, y) has a pole at x = y = {x}")
    return generator(n, i, var) + lift(QT, var) * x / diff


def yang_baxter_check(n, i, x, y, z):
    """``T_i(x,y) T_{i+1}(x,z) T_i(y,z) == T_{i+1}(y,z) T_i(x,z) T_{i+1}(x,y)``."""
    var = scalar_var(x) or scalar_var(y) or scalar_var(z)
    x, y, z = lift(x, var), lift(y, var), lift(z, var)
    lhs = baxterized(n, i, x, y) * baxterized(n, i + 1, x, z) * baxterized(n, i, y, z)
    rhs = baxterized(n, i + 1, y, z) * baxterized(n, i, x, z) * baxterized(n, i + 1, x, y)
    return lhs == rhs


def inversion_check(n, i, x, y):
    """``T_i(x,y) T_i(y,x) == (x - q^2 y)(x - q^-2 y)/(x - y)^2``."""
    var = scalar_var(x) or scalar_var(y)
    x, y = lift(x, var), lift(y, var)
    q2 = QRat.q_power(2)
    c = (x - y * q2) * (x - y / q2) / ((x - y) * (x - y))
    return baxterized(n, i, x, y) * baxterized(n, i, y, x) == HeckeElement.one(n, var).scale(c)


# ---------------------------------------------------------------------------
# inversion


def left_mult_columns(a):
    """All products ``a T_v``, keyed by v, sharing prefixes of reduced words."""
    memo = {P.identity(a.n): a}
    for v in sorted(P.all_perms(a.n), key=P.length):
        if v in memo:
            continue
        i = P.first_right_descent(v)
        memo[v] = right_mul_gen(memo[P.right_swap(v, i)], i)
    return memo


def _affine_split(a):
    """``(alpha, B)`` with ``a = alpha * var * 1 - B`` and B over Q(q), or None."""
    if a.var is None:
        return None
    e = P.identity(a.n)
    alpha = QZERO
    B = {}
    for w, c in a.terms.items():
        if len(c.den) != 1 or len(c.num) > 2:
            return None
        if len(c.num) == 2:
            if w != e:
                return None
            alpha = c.num[1]
        if c.num and c.num[0]:
            B[w] = -c.num[0]
    if not alpha:
        return None
    return alpha, HeckeElement(a.n, B)


def _resolvent_krylov(B, var):
    """``(u - B)^{-1}`` from the first linear dependency among 1, B, B^2, ...

    With ``p(x) = x^d - sum c_i x^i`` and ``p(B) = 0``,
    ``(u - B)^{-1} = p(u)^{-1} sum_j h_j(u) B^j`` where
    ``h_j(u) = sum_{i > j} p_i u^{i-1-j}``.  The dependency is found by
    Gaussian elimination over Q(q); nothing about the spectrum is assumed.
    """
    n = B.n
    powers = [HeckeElement.one(n)]

    def gen():
        while True:
            yield powers[-1].terms
            powers.append(powers[-1] * B)

    d, c = first_dependency(gen())
    p = [-c.get(i, QZERO) for i in range(d)] + [QONE]
    nums = {}
    for j in range(d):
        for w, x in powers[j].terms.items():
            acc = nums.setdefault(w, [QZERO] * d)
            for i in range(j + 1, d + 1):
                acc[i - 1 - j] = acc[i - 1 - j] + x * p[i]
    terms = {w: URat.from_parts(var, num, p) for w, num in nums.items()}
    return HeckeElement(n, terms, var)


def invert(a):
    """Two-sided inverse by exact Gaussian elimination.

    In general solves ``a * X = 1`` for the n! coefficients of X by a dense
    solve over the scalar field; SingularError when the left-multiplication
    matrix is singular.  Resolvent-shaped elements ``alpha u - B`` (B over
    Q(q)) go through the dependency among powers of B instead, so that the
    elimination runs over Q(q) rather than Q(q)(u).
    """
    n, var = a.n, a.var
    split = _affine_split(a)
    if split is not None:
        alpha, B = split
        return _resolvent_krylov(B / alpha, var).scale(URat.const(var, alpha.inverse()))
    return invert_dense(a)


def invert_dense(a):
    """``invert`` without the resolvent shortcut."""
    n, var = a.n, a.var
    basis = sorted(P.all_perms(n))
    index = {w: j for j, w in enumerate(basis)}
    cols = left_mult_columns(a)
    rows = [dict() for _ in basis]
    for v, prod in cols.items():
        j = index[v]
        for w, c in prod.terms.items():
            rows[index[w]][j] = c
    rhs = [scalar_zero(var)] * len(basis)
    rhs[index[P.identity(n)]] = scalar_one(var)
    try:
        x = solve(rows, rhs, len(basis))
    except SingularError:
        raise SingularError(f"element of H_{n} is not invertible") from None
    return HeckeElement(n, {basis[j]: c for j, c in enumerate(x)}, var)


# ---------------------------------------------------------------------------
# identities for longest elements


def commutes_through_longest(n, k, j, x, y):
    """``T_{w_k} T_j(x, y) == T_{k-j}(x, y) T_{w_k}``."""
    tw = t_longest(k, n, scalar_var(x) or scalar_var(y))
    return tw * baxterized(n, j, x, y) == baxterized(n, k - j, x, y) * tw


def shifted_chain_identity(n, k, u, sigmas):
    """Check
    ``T_{w_{k+1}} T_2(u, s_{k-1}) ... T_k(u, s_1) T_{w_k}^{-1}
    == T_{w_k} T_1(u, s_{k-1}) ... T_{k-1}(u, s_1) T_{w_{k-1}}^{-1} T_k``
    with ``sigmas = (s_1, ..., s_{k-1})`` (constants).
    """
    if not 2 <= k < n:
        raise ValueError("need 2 <= k < n")
    if len(sigmas) != k - 1:
        raise ValueError("need k - 1 parameters")
    var = scalar_var(u)
    lhs = t_longest(k + 1, n, var)
    for i in range(2, k + 1):
        lhs = lhs * baxterized(n, i, u, sigmas[k - i])
    lhs = lhs * t_longest_inverse(k, n, var)
    rhs = t_longest(k, n, var)
    for i in range(1, k):
        rhs = rhs * baxterized(n, i, u, sigmas[k - 1 - i])
    rhs = rhs * t_longest_inverse(k - 1, n, var) * generator(n, k, var)
    return lhs == rhs


def _random_distinct(rng, count, lo=-9, hi=9):
    vals = set()
    while len(vals) < count:
        num = rng.randint(lo, hi)
        den = rng.randint(1, 5)
        if num:
            vals.add(Fraction(num, den))
    out = list(vals)
    rng.shuffle(out)
    return out


def longest_element_check(k, j, n, rng):
    """Both longest-element identities at random distinct rational parameters.

    The first identity uses ``(k, j)``; the second uses ``k`` when
    ``2 <= k < n`` and is skipped otherwise.
    """
    x, y = _random_distinct(rng, 2)
    ok = commutes_through_longest(n, k, j, x, y)
    if 2 <= k < n:
        params = _random_distinct(rng, k)
        ok = ok and shifted_chain_identity(n, k, params[0], params[1:])
    return ok


lemma1_check = longest_element_check
