"""Pure-Python kernels: dense integer polynomials and the packed Hecke product.

Polynomials are tuples of Python ints, lowest degree first, with no trailing
zeros; the zero polynomial is ``()``.  The compiled twin ``_kernels`` exposes
exactly the same functions.
"""
from math import gcd as igcd
from fractions import Fraction

BACKEND = "python"


def pnorm(a):
    # drop trailing zeros
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    r = list(a)
    for i, c in enumerate(b):
        r[i] += c
    if len(a) == len(b):
        return pnorm(r)
    return tuple(r)


def psub(a, b):
    la, lb = len(a), len(b)
    if la >= lb:
        r = list(a)
        for i, c in enumerate(b):
            r[i] -= c
    else:
        r = [-c for c in b]
        for i, c in enumerate(a):
            r[i] += c
    if la == lb:
        return pnorm(r)
    return tuple(r)


def pneg(a):
    return tuple(-c for c in a)


def pscale(a, c):
    if not c:
        return ()
    return tuple(c * x for x in a)


def pshift(a, k):
    """Multiply by ``x**k`` for ``k >= 0``."""
    if not a or not k:
        return a
    return (0,) * k + a


def pmul(a, b):
    if not a or not b:
        return ()
    la, lb = len(a), len(b)
    if la == 1:
        return pscale(b, a[0])
    if lb == 1:
        return pscale(a, b[0])
    if la > 16 and lb > 16:
        return _pmul_kronecker(a, b)
    r = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                r[i + j] += x * y
    return tuple(r)


def _pmul_kronecker(a, b):
    bound = max(abs(c) for c in a) * max(abs(c) for c in b) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    v = pack(a, bits) * pack(b, bits)
    return unpack(v, bits, len(a) + len(b) - 1)


def pack(a, bits):
    v = 0
    for c in reversed(a):
        v = (v << bits) + c
    return v


def unpack(v, bits, length=None):
    """Balanced-digit unpacking of ``pack``; inverse as long as |coeff| < 2**(bits-1)."""
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    while v:
        r = v & mask
        if r >= half:
            r -= 1 << bits
        out.append(r)
        v = (v - r) >> bits
    if length is not None and len(out) < length:
        out.extend([0] * (length - len(out)))
    return pnorm(out)


def peval(a, x):
    v = 0
    for c in reversed(a):
        v = v * x + c
    return v


def pcontent(a):
    g = 0
    for c in a:
        g = igcd(g, c)
        if g == 1:
            return 1
    return g


def pdivexact(a, b):
    """Exact quotient ``a / b`` over the integers; ``ValueError`` if inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    lb = len(b)
    if lb == 1:
        d = b[0]
        out = []
        for c in a:
            q, r = divmod(c, d)
            if r:
                raise ValueError("inexact division")
            out.append(q)
        return tuple(out)
    la = len(a)
    if la < lb:
        raise ValueError("inexact division")
    r = list(a)
    lead = b[-1]
    quot = [0] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        c = r[k + lb - 1]
        if c:
            q, rem = divmod(c, lead)
            if rem:
                raise ValueError("inexact division")
            quot[k] = q
            for j in range(lb):
                r[k + j] -= q * b[j]
    for c in r[: lb - 1]:
        if c:
            raise ValueError("inexact division")
    return tuple(quot)


def ptrydiv(a, b):
    try:
        return pdivexact(a, b)
    except ValueError:
        return None


def pprimitive(a):
    """Primitive part with positive leading coefficient."""
    if not a:
        return a
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return a
    return tuple(c // g for c in a)


def _prem(a, b):
    # pseudo-remainder of a by b
    r = list(a)
    lb = len(b)
    lead = b[-1]
    while len(r) >= lb:
        c = r[-1]
        k = len(r) - lb
        r = [lead * x for x in r]
        for j in range(lb):
            r[k + j] -= c * b[j]
        r = list(pnorm(r))
    return tuple(r)


def _gcd_prs(a, b):
    a, b = pprimitive(a), pprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, pprimitive(r)
    return a


def _interpolate(h, x):
    half = x // 2
    out = []
    while h:
        g = h % x
        if g > half:
            g -= x
        out.append(g)
        h = (h - g) // x
    return tuple(out)


def _gcd_heuristic(a, b):
    """Primitive gcd of primitive ``a, b`` by evaluation at large integers."""
    na = max(abs(c) for c in a)
    nb = max(abs(c) for c in b)
    x = 2 * min(na, nb) + 29
    for _ in range(6):
        va, vb = peval(a, x), peval(b, x)
        if va and vb:
            h = pprimitive(_interpolate(igcd(va, vb), x))
            if h and ptrydiv(a, h) is not None and ptrydiv(b, h) is not None:
                return h
        x = 73794 * x * int(x ** 0.25 + 1) // 27011
    return None


def pgcd(a, b):
    """Greatest common divisor over Z, normalized to positive leading coefficient."""
    if not a:
        return pprimitive(b) if not b else _sign_norm(b)
    if not b:
        return _sign_norm(a)
    ca, cb = pcontent(a), pcontent(b)
    c = igcd(ca, cb)
    if len(a) == 1 or len(b) == 1:
        return (c,)
    pa = tuple(x // ca for x in a)
    pb = tuple(x // cb for x in b)
    if pa == pb or pa == pneg(pb):
        g = pprimitive(pa)
    else:
        g = _gcd_heuristic(pprimitive(pa), pprimitive(pb))
        if g is None:
            g = _gcd_prs(pa, pb)
    if c != 1:
        g = tuple(c * x for x in g)
    return g


def _sign_norm(a):
    return pneg(a) if a[-1] < 0 else a


# --- Hecke algebra product on packed coefficients -------------------------
#
# Basis S_w = q^{l(w)} T_w, so that S_w S_i = S_{w s_i} when the length goes
# up and q^2 S_{w s_i} + (q^2 - 1) S_w otherwise.  Coefficients are integer
# polynomials in q packed into single integers at base 2**bits.


def right_gen_packed(elem, i, bits):
    """Right-multiply a packed S-basis element by S_i (generator index ``i``)."""
    out = {}
    get = out.get
    sh = 2 * bits
    for w, c in elem.items():
        ws = w[: i - 1] + (w[i], w[i - 1]) + w[i + 1:]
        if w[i - 1] < w[i]:
            out[ws] = get(ws, 0) + c
        else:
            c2 = c << sh
            out[ws] = get(ws, 0) + c2
            out[w] = get(w, 0) + c2 - c
    return {w: c for w, c in out.items() if c}


def hecke_product_packed(a, b, bits):
    """Product of packed S-basis elements ``a * b`` (dicts perm -> int)."""
    if not a or not b:
        return {}
    n = len(next(iter(a)))
    ident = tuple(range(1, n + 1))
    memo = {ident: a}

    def get(v):
        stack = []
        while v not in memo:
            for i in range(n - 1):
                if v[i] > v[i + 1]:
                    break
            stack.append((v, i + 1))
            v = v[:i] + (v[i + 1], v[i]) + v[i + 2:]
        cur = memo[v]
        for v, i in reversed(stack):
            cur = right_gen_packed(cur, i, bits)
            memo[v] = cur
        return cur

    res = {}
    rget = res.get
    for v, cv in b.items():
        for w, c in get(v).items():
            res[w] = rget(w, 0) + c * cv
    return {w: c for w, c in res.items() if c}


def frac_eval(a, x):
    """Evaluate an integer polynomial at a ``Fraction``."""
    return peval(a, Fraction(x))
