"""Specialization q -> 1: Hecke elements to the rational group algebra of S_n."""
import random

from .errors import PoleError
from .idempotents import y_element
from .symgroup import GroupAlgebraElement, phi_product


def hecke_limit(a):
    """Evaluate every coefficient at q = 1 and send T_w to w."""
    if a.var is not None:
        raise TypeError("hecke_limit needs Q(q) coefficients")
    out = {}
    for w, c in a.terms.items():
        try:
            out[w] = c.eval_q_one()
        except PoleError:
            raise PoleError(f"coefficient of T_{list(w)} has a pole at q = 1: {c}") from None
    return GroupAlgebraElement(a.n, out)


def phi_limit_check(k, contents, phi_contents=None, points=3, rng=None):
    """Y_k(s_1..s_k; q^{2v}) at q = 1 against ``prod_i phi_{i,k+1}(c_i, v)``.

    The live variable is set to ``q^{2v}`` for random integers v outside the
    contents (rational v would leave the Laurent ring).  ``phi_contents``
    replaces the contents on the group-algebra side (negative controls).
    """
    rng = rng or random.Random(0)
    n = k + 1
    contents = tuple(contents)
    phi_cs = contents if phi_contents is None else tuple(phi_contents)
    Y = y_element(k, contents, n)
    avoid = set(contents) | set(phi_cs)
    for _ in range(points):
        v = rng.choice([x for x in range(-8, 9) if x not in avoid])
        lhs = hecke_limit(Y.eval_at_q_power(v))
        if lhs != phi_product(n, k, phi_cs, v):
            return False
    return True
