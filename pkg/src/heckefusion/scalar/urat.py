"""Univariate rational functions over the field of rational functions in q.

Exactly one auxiliary variable is live per value; its name is the ``var`` tag
(``"u"`` for spectral parameters, ``"Q"`` for the trace parameter).  Values
are kept as ``num / den`` with ``gcd(num, den) = 1`` and ``den`` monic, so
equality is structural.
"""
from ..errors import PoleError
from ._backend import kernels as K
from .qrat import QRat, ZERO as QZERO, ONE as QONE, qsum

# ---------------------------------------------------------------------------
# dense polynomials over QRat: tuples lowest degree first, no trailing zeros


def up_norm(a):
    n = len(a)
    while n and not a[n - 1].num:
        n -= 1
    return tuple(a[:n])


def up_add(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] = r[i] + c
    return up_norm(r)


def up_neg(a):
    return tuple(-c for c in a)


def up_sub(a, b):
    return up_add(a, up_neg(b))


def up_scale(a, c):
    if not c:
        return ()
    if c == QONE:
        return a
    return up_norm([x * c for x in a])


def up_mul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return up_scale(b, a[0])
    if len(b) == 1:
        return up_scale(a, b[0])
    cols = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if x.num:
            for j, y in enumerate(b):
                if y.num:
                    cols[i + j].append(x * y)
    return up_norm([qsum(c) for c in cols])


def up_divmod(a, b):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    r = list(a)
    lb = len(b)
    inv_lead = b[-1].inverse()
    quot = [QZERO] * (len(a) - lb + 1)
    for k in range(len(a) - lb, -1, -1):
        c = r[k + lb - 1]
        if c.num:
            f = c * inv_lead
            quot[k] = f
            for j in range(lb - 1):
                if b[j].num:
                    r[k + j] = r[k + j] - f * b[j]
        r[k + lb - 1] = QZERO
    return up_norm(quot), up_norm(r[: lb - 1])


def up_divexact(a, b):
    quot, rem = up_divmod(a, b)
    if rem:
        raise ValueError("inexact polynomial division")
    return quot


def up_monic(a):
    if not a or a[-1] == QONE:
        return a
    inv = a[-1].inverse()
    return tuple(c * inv for c in a[:-1]) + (QONE,)


_P = (1 << 61) - 1
_Q_POINTS = (1234577, 7654321)


def _qmod(c, r):
    """Image of a QRat under q -> r in F_p, or None if the denominator vanishes."""
    d = K.peval(c.den, r) % _P
    if not d:
        return None
    return K.peval(c.num, r) % _P * pow(r, c.sh % (_P - 1), _P) * pow(d, -1, _P) % _P


def _modp_degree(a, r):
    out = []
    for c in a:
        v = _qmod(c, r)
        if v is None:
            return None
        out.append(v)
    if not out[-1]:
        return None
    return out


def _fp_gcd_degree(a, b):
    while b:
        inv = pow(b[-1], -1, _P)
        r = list(a)
        lb = len(b)
        for k in range(len(r) - lb, -1, -1):
            f = r[k + lb - 1] * inv % _P
            if f:
                for j in range(lb):
                    r[k + j] = (r[k + j] - f * b[j]) % _P
        r = r[: lb - 1]
        while r and not r[-1]:
            r.pop()
        a, b = b, r
    return len(a) - 1


def _coprime_by_reduction(a, b):
    """True only if a, b are certainly coprime: their images under some
    q -> r mod p are coprime with both leading coefficients surviving."""
    for r in _Q_POINTS:
        ar, br = _modp_degree(a, r), _modp_degree(b, r)
        if ar is not None and br is not None:
            return _fp_gcd_degree(ar, br) == 0
    return False


def up_gcd(a, b):
    """Monic gcd over QRat by the Euclidean algorithm."""
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return up_monic(a)
    if len(b) == 1:
        return (QONE,)
    if _coprime_by_reduction(a, b):
        return (QONE,)
    a, b = up_monic(a), up_monic(b)
    while b:
        _, r = up_divmod(a, b)
        a, b = b, up_monic(r)
        if len(b) == 1:
            return (QONE,)
    return a


def up_eval(a, x):
    acc = QZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def up_coerce(a):
    return tuple(QRat.coerce(c) for c in a)


# ---------------------------------------------------------------------------

_UONE = (QONE,)


class URat:
    __slots__ = ("var", "num", "den", "_hash")

    def __init__(self, var, num, den=_UONE):
        # trusted constructor: canonical arguments only
        self.var = var
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def from_parts(cls, var, num, den=_UONE):
        num = up_norm(tuple(num))
        den = up_norm(tuple(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return cls(var, (), _UONE)
        if len(den) > 1:
            g = up_gcd(num, den)
            if len(g) > 1:
                num = up_divexact(num, g)
                den = up_divexact(den, g)
        lead = den[-1]
        if lead != QONE:
            inv = lead.inverse()
            num = tuple(c * inv for c in num)
            den = tuple(c * inv for c in den[:-1]) + (QONE,)
        return cls(var, num, den)

    @classmethod
    def variable(cls, var="u"):
        return cls(var, (QZERO, QONE), _UONE)

    @classmethod
    def const(cls, var, c):
        c = QRat.coerce(c)
        if not c:
            return cls(var, (), _UONE)
        return cls(var, (c,), _UONE)

    @classmethod
    def poly(cls, var, coeffs):
        return cls(var, up_norm(up_coerce(coeffs)), _UONE)

    def _coerce(self, x):
        if isinstance(x, URat):
            if x.var != self.var:
                raise ValueError(f"cannot mix variables {self.var!r} and {x.var!r}")
            return x
        c = QRat.coerce(x)
        if c is None:
            return None
        return URat.const(self.var, c)

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def is_polynomial(self):
        return len(self.den) == 1

    def is_constant(self):
        return len(self.den) == 1 and len(self.num) <= 1

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant in {self.var}")
        return self.num[0] if self.num else QZERO

    def degree(self):
        return len(self.num) - 1

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return URat(self.var, up_neg(self.num), self.den)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        d1, d2 = self.den, o.den
        if d1 == d2:
            num = up_add(self.num, o.num)
            if len(d1) == 1:
                return URat(self.var, num, _UONE)
            return URat.from_parts(self.var, num, d1)
        if len(d1) == 1:
            return URat(self.var, up_add(up_mul(self.num, d2), o.num), d2)
        if len(d2) == 1:
            return URat(self.var, up_add(self.num, up_mul(o.num, d1)), d1)
        g = up_gcd(d1, d2)
        if len(g) == 1:
            num = up_add(up_mul(self.num, d2), up_mul(o.num, d1))
            return URat(self.var, num, up_mul(d1, d2))
        d1g = up_divexact(d1, g)
        d2g = up_divexact(d2, g)
        num = up_add(up_mul(self.num, d2g), up_mul(o.num, d1g))
        if not num:
            return URat(self.var, (), _UONE)
        den = up_mul(d1, d2g)
        g2 = up_gcd(num, g)
        if len(g2) > 1:
            num = up_divexact(num, g2)
            den = up_divexact(den, g2)
        return URat(self.var, num, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return URat(self.var, (), _UONE)
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if len(d2) > 1:
            g = up_gcd(n1, d2)
            if len(g) > 1:
                n1 = up_divexact(n1, g)
                d2 = up_divexact(d2, g)
        if len(d1) > 1:
            g = up_gcd(n2, d1)
            if len(g) > 1:
                n2 = up_divexact(n2, g)
                d1 = up_divexact(d1, g)
        return URat(self.var, up_mul(n1, n2), up_mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("URat division by zero")
        return URat.from_parts(self.var, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = URat.const(self.var, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, URat):
            if other.var != self.var:
                return False
            return self.num == other.num and self.den == other.den
        c = QRat.coerce(other)
        if c is None:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash((self.var, self.num, self.den))
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def subs(self, x):
        """Substitute the live variable by a QRat value; PoleError on a pole."""
        x = QRat.coerce(x)
        d = up_eval(self.den, x)
        if not d:
            raise PoleError(f"{self} has a pole at {self.var} = {x}")
        return up_eval(self.num, x) / d

    def eval_at_q_power(self, c):
        """Value at ``var = q**(2c)``."""
        return self.subs(QRat.q_power(2 * c))

    def map_coefficients(self, fn):
        return URat.from_parts(
            self.var, [fn(c) for c in self.num], [fn(c) for c in self.den]
        )

    def __str__(self):
        ns = upoly_str(self.num, self.var)
        if len(self.den) == 1:
            return ns
        if _n_terms(self.num) > 1 or not _is_simple(ns):
            ns = f"({ns})"
        return f"{ns}/({upoly_str(self.den, self.var)})"

    def __repr__(self):
        return f"URat[{self.var}]({self})"


def _n_terms(a):
    return sum(1 for c in a if c.num)


def _is_simple(s):
    return all(ch.isalnum() or ch in "^_" for ch in s.lstrip("-"))


def upoly_str(a, var):
    if not a:
        return "0"
    out = ""
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c.num:
            continue
        cs = str(c)
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        if not mono:
            part = cs if cs.lstrip("-").isdigit() else f"({cs})"
        elif c == QONE:
            part = mono
        elif c == -QONE:
            part = "-" + mono
        else:
            part = f"({cs})*{mono}"
        if out and not part.startswith("-"):
            out += "+"
        out += part
    return out


def eval_at_q_power(f, c):
    """Substitute ``q**(2c)`` for the live variable of ``f``."""
    return f.eval_at_q_power(c)


def eval_q_one(f):
    """Specialize a QRat at ``q = 1``."""
    return f.eval_q_one()
