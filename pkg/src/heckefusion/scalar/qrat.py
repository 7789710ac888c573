"""Exact rational functions in ``q`` over the rationals.

A nonzero value is stored as ``q**sh * num(q) / den(q)`` where ``num`` and
``den`` are integer polynomials with nonzero constant terms, coprime in
``Z[q]`` (content included) and ``den`` has a positive leading coefficient.
This form is unique, so equality is tuple equality.
"""
from fractions import Fraction

from ..errors import PoleError
from ._backend import kernels as K

_ONE = (1,)


class QRat:
    __slots__ = ("num", "den", "sh", "_hash")

    def __init__(self, num=(), den=_ONE, sh=0):
        # trusted constructor: arguments must already be canonical
        self.num = num
        self.den = den
        self.sh = sh
        self._hash = None

    # -- construction -------------------------------------------------------

    @classmethod
    def from_parts(cls, num, den=_ONE, sh=0):
        """Canonicalize ``q**sh * num / den`` from arbitrary integer polynomials."""
        num = K.pnorm(tuple(num))
        den = K.pnorm(tuple(den))
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ZERO
        k = 0
        while not num[k]:
            k += 1
        j = 0
        while not den[j]:
            j += 1
        if k:
            num = num[k:]
        if j:
            den = den[j:]
        sh += k - j
        if den != _ONE:
            g = K.pgcd(num, den)
            if g != _ONE:
                num = K.pdivexact(num, g)
                den = K.pdivexact(den, g)
            if den[-1] < 0:
                num = K.pneg(num)
                den = K.pneg(den)
        return cls(num, den, sh)

    @classmethod
    def from_int(cls, k):
        if not k:
            return ZERO
        return cls((k,), _ONE, 0)

    @classmethod
    def from_fraction(cls, f):
        f = Fraction(f)
        if not f:
            return ZERO
        return cls((f.numerator,), (f.denominator,), 0)

    @classmethod
    def laurent(cls, coeffs):
        """Laurent polynomial from a mapping ``exponent -> integer coefficient``."""
        coeffs = {e: c for e, c in coeffs.items() if c}
        if not coeffs:
            return ZERO
        lo, hi = min(coeffs), max(coeffs)
        return cls(tuple(coeffs.get(e, 0) for e in range(lo, hi + 1)), _ONE, lo)

    @classmethod
    def q_power(cls, k):
        return cls(_ONE, _ONE, k)

    @classmethod
    def coerce(cls, x):
        if isinstance(x, QRat):
            return x
        if isinstance(x, int):
            return cls.from_int(x)
        if isinstance(x, Fraction):
            return cls.from_fraction(x)
        return None

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.num)

    def is_zero(self):
        return not self.num

    def is_laurent(self):
        return self.den == _ONE

    def is_rational(self):
        """True when the value is a constant (no dependence on q)."""
        return len(self.num) == 1 and len(self.den) == 1 and (self.sh == 0)

    def to_fraction(self):
        if not self.num:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"{self} is not a rational constant")
        return Fraction(self.num[0], self.den[0])

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        if not self.num:
            return self
        return QRat(K.pneg(self.num), self.den, self.sh)

    def __add__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return o
        return _add(self, o)

    __radd__ = __add__

    def __sub__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            return self
        if not self.num:
            return -o
        return _add(self, -o)

    def __rsub__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        if not self.num or not o.num:
            return ZERO
        n1, d1, n2, d2 = self.num, self.den, o.num, o.den
        if d2 != _ONE:
            g = K.pgcd(n1, d2)
            if g != _ONE:
                n1 = K.pdivexact(n1, g)
                d2 = K.pdivexact(d2, g)
        if d1 != _ONE:
            g = K.pgcd(n2, d1)
            if g != _ONE:
                n2 = K.pdivexact(n2, g)
                d1 = K.pdivexact(d1, g)
        return QRat(K.pmul(n1, n2), K.pmul(d1, d2), self.sh + o.sh)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("QRat division by zero")
        num, den = self.den, self.num
        if den[-1] < 0:
            num, den = K.pneg(num), K.pneg(den)
        return QRat(num, den, -self.sh)

    def __truediv__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- comparison ---------------------------------------------------------

    def _key(self):
        return (self.num, self.den, self.sh)

    def __eq__(self, other):
        o = QRat.coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den and self.sh == o.sh

    def __hash__(self):
        if self._hash is None:
            if self.is_rational() or not self.num:
                # agree with hash(int) / hash(Fraction) for constants
                self._hash = hash(self.to_fraction())
            else:
                self._hash = hash(self._key())
        return self._hash

    # -- evaluation ---------------------------------------------------------

    def eval_q_one(self):
        """Value at ``q = 1``; PoleError if ``(q - 1)`` divides the reduced denominator."""
        if not self.num:
            return Fraction(0)
        d = sum(self.den)
        if not d:
            raise PoleError(f"{self} has a pole at q = 1")
        return Fraction(sum(self.num), d)

    def subs(self, x):
        """Value at ``q = x`` for a rational number ``x``."""
        x = Fraction(x)
        if not self.num:
            return Fraction(0)
        d = K.peval(self.den, x)
        if not d or (not x and self.sh < 0):
            raise PoleError(f"{self} has a pole at q = {x}")
        return K.peval(self.num, x) * x ** self.sh / d

    # -- rendering ----------------------------------------------------------

    def numerator_denominator(self):
        """Ordinary-polynomial numerator and denominator (q-power folded into one)."""
        if self.sh >= 0:
            return K.pshift(self.num, self.sh), self.den
        return self.num, K.pshift(self.den, -self.sh)

    def __str__(self):
        if not self.num:
            return "0"
        if self.den == _ONE:
            return laurent_str(self.num, self.sh)
        n, d = self.numerator_denominator()
        ns, ds = laurent_str(n, 0), laurent_str(d, 0)
        if _n_terms(n) > 1:
            ns = f"({ns})"
        if _n_terms(d) > 1 or "*" in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self):
        return f"QRat({self})"


def _n_terms(p):
    return sum(1 for c in p if c)


def laurent_str(coeffs, sh=0, var="q"):
    """Descending-power rendering of ``q**sh * sum coeffs[i] q**i``."""
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if not c:
            continue
        e = i + sh
        if e == 0:
            mono = None
        elif e == 1:
            mono = var
        else:
            mono = f"{var}^{e}"
        if mono is None:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += sign + body
    return out


def _add(a, b):
    e = min(a.sh, b.sh)
    n1 = K.pshift(a.num, a.sh - e)
    n2 = K.pshift(b.num, b.sh - e)
    d1, d2 = a.den, b.den
    if d1 == d2:
        num = K.padd(n1, n2)
        if d1 == _ONE:
            return _strip(num, _ONE, e)
        return QRat.from_parts(num, d1, e)
    g = K.pgcd(d1, d2)
    if g == _ONE:
        # coprime denominators: the sum is already reduced
        num = K.padd(K.pmul(n1, d2), K.pmul(n2, d1))
        return _strip(num, K.pmul(d1, d2), e)
    d1g = K.pdivexact(d1, g)
    d2g = K.pdivexact(d2, g)
    num = K.padd(K.pmul(n1, d2g), K.pmul(n2, d1g))
    if not num:
        return ZERO
    den = K.pmul(d1, d2g)
    g2 = K.pgcd(num, g)
    if g2 != _ONE:
        num = K.pdivexact(num, g2)
        den = K.pdivexact(den, g2)
    return _strip(num, den, e)


def _strip(num, den, sh):
    if not num:
        return ZERO
    k = 0
    while not num[k]:
        k += 1
    if k:
        num = num[k:]
    return QRat(num, den, sh + k)


def qsum(values):
    """Sum of many QRat values, grouping equal denominators first."""
    groups = {}
    for v in values:
        if not v.num:
            continue
        key = v.den
        acc = groups.get(key)
        groups[key] = v if acc is None else _add(acc, v)
    out = ZERO
    for v in groups.values():
        out = out + v
    return out


ZERO = QRat((), _ONE, 0)
ONE = QRat(_ONE, _ONE, 0)
Q = QRat(_ONE, _ONE, 1)
T = QRat((-1, 0, 1), _ONE, -1)  # q - q^{-1}


def qint(n):
    """Quantum integer ``[n]_q = (q^n - q^-n) / (q - q^-1)`` as a Laurent polynomial."""
    if n < 1:
        raise ValueError("qint requires n >= 1")
    coeffs = [0] * (2 * n - 1)
    coeffs[::2] = [1] * n
    return QRat(tuple(coeffs), _ONE, 1 - n)


def q_content(c):
    """The q-content ``q^(2c)`` of a cell with content ``c``."""
    return QRat.q_power(2 * c)
