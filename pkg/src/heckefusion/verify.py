"""Exhaustive property suites at a fixed size n, with pass/fail counts.

Each suite is a list of named checks; a check returns ``(passed, count)``
where ``count`` is the number of instances examined.  Exceptions inside a
check are reported as failures rather than propagated.
"""
import random
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import hecke as H
from . import idempotents as I
from . import perm as P
from . import symgroup as S
from . import tableaux as TB
from . import trace as TR
from .limits import hecke_limit, phi_limit_check
from .scalar import QRat, URat

SUITES = ("hecke", "idempotents", "trace", "limits")
MAX_N = 5


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int
    seconds: float
    detail: str = ""


def _rand_rational(rng, avoid=()):
    while True:
        x = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
        if x and x not in avoid:
            return x


def _run(name, fn):
    t0 = time.perf_counter()
    try:
        passed, count = fn()
        detail = ""
    except Exception as exc:  # reported, not raised
        passed, count, detail = False, 0, f"{type(exc).__name__}: {exc}"
    return CheckResult(name, bool(passed), count, time.perf_counter() - t0, detail)


# ---------------------------------------------------------------------------
# hecke


def hecke_checks(n, seed=0):
    rng = random.Random(seed)
    one = H.HeckeElement.one(n)
    t = QRat.q_power(1) - QRat.q_power(-1)
    gens = [H.generator(n, i) for i in range(1, n)]
    checks = []

    def quadratic():
        return all(g * g == one + g.scale(t) for g in gens), len(gens)

    def braid():
        count, ok = 0, True
        for i in range(1, n):
            for j in range(i + 1, n):
                a, b = gens[i - 1], gens[j - 1]
                ok &= (a * b * a == b * a * b) if j == i + 1 else (a * b == b * a)
                count += 1
        return ok, count

    def inverses():
        ok = all(
            H.gen_inverse(n, i) * gens[i - 1] == one and H.invert(gens[i - 1]) == H.gen_inverse(n, i)
            for i in range(1, n)
        )
        return ok, n - 1

    def words():
        perms = P.all_perms(n)
        return all(H.t_of_word(n, P.reduced_word(w)) == H.HeckeElement.basis(w) for w in perms), len(perms)

    def longest():
        ok = H.t_longest(n, n) == H.t_longest_alt(n, n)
        y = one
        for k in range(1, n + 1):
            y = y * H.jucys_murphy(k, n)
        return ok and H.t_longest(n, n) ** 2 == y, 2

    def jucys_murphy():
        ys = [H.jucys_murphy(k, n) for k in range(1, n + 1)]
        ok = all(ys[k - 1] == H.jucys_murphy_closed(k, n) for k in range(1, n + 1))
        ok = ok and all(a * b == b * a for a in ys for b in ys)
        return ok, n

    def yang_baxter():
        if n < 3:
            return True, 0
        u = URat.variable("u")
        ok = True
        for trial in range(20):
            i = 1 + trial % (n - 2)
            x = _rand_rational(rng)
            y = _rand_rational(rng, {x})
            z = _rand_rational(rng, {x, y})
            slots = [(u, y, z), (x, u, z), (x, y, u), (x, y, z)]
            ok &= all(H.yang_baxter_check(n, i, *s) for s in slots)
        return ok, 20

    def inversion():
        if n < 2:
            return True, 0
        u = URat.variable("u")
        ok = True
        for trial in range(20):
            i = 1 + trial % (n - 1)
            x = _rand_rational(rng)
            y = _rand_rational(rng, {x})
            ok &= H.inversion_check(n, i, x, u) and H.inversion_check(n, i, x, y)
        return ok, 20

    def longest_identities():
        count, ok = 0, True
        for k in range(2, n + 1):
            for j in range(1, k):
                ok &= H.longest_element_check(k, j, n, rng)
                count += 1
        return ok, count

    checks += [
        ("quadratic relation", quadratic),
        ("braid relations", braid),
        ("generator inverses", inverses),
        ("reduced words give the basis", words),
        ("longest element forms and square", longest),
        ("Jucys-Murphy closed form and commutativity", jucys_murphy),
        ("Yang-Baxter equation", yang_baxter),
        ("inversion relation", inversion),
        ("longest element identities", longest_identities),
    ]
    return checks


# ---------------------------------------------------------------------------
# idempotents


def idempotent_checks(n, seed=0):
    Ts = TB.all_syt(n)
    one = H.HeckeElement.one(n)
    E = {T: I.dipper_james(T) for T in Ts}

    def fusion_equals_dj():
        return all(I.fusion(T) == E[T] for T in Ts), len(Ts)

    def idempotency():
        return all(e * e == e for e in E.values()), len(Ts)

    def orthogonality():
        if n > 4:
            return True, 0
        pairs = [(S_, T) for S_ in Ts for T in Ts if S_ != T]
        return all(not (E[a] * E[b]) for a, b in pairs), len(pairs)

    def completeness():
        total = H.HeckeElement.zero(n)
        for e in E.values():
            total = total + e
        return total == one, len(Ts)

    def eigenvalues():
        ys = [H.jucys_murphy(k, n) for k in range(1, n + 1)]
        ok = all(
            ys[k] * E[T] == E[T].scale(s) and E[T] * ys[k] == E[T].scale(s)
            for T in Ts
            for k, s in enumerate(T.q_contents())
        )
        return ok, len(Ts) * n

    def branching():
        if n < 2:
            return True, 0
        Us = TB.all_syt(n - 1)
        ok = True
        for U in Us:
            total = H.HeckeElement.zero(n)
            for T in U.extensions():
                total = total + E[T]
            ok &= total == I.dipper_james(U).embed(n)
        return ok, len(Us)

    def hook_counts():
        las = TB.enumerate_partitions(n)
        ok = all(TB.count_syt(la) == len(TB.enumerate_syt(la)) for la in las)
        return ok and sum(TB.count_syt(la) for la in las) == len(Ts), len(las)

    def normalization_forms():
        las = TB.enumerate_partitions(n)
        return all(TB.f_lambda(la) == TB.f_lambda_alt(la) for la in las), len(las)

    def f_n_recursion():
        if n < 2:
            return True, 0
        ok = all(I.f_n_value(T) * TB.f_lambda(T.remove_max().shape) == TB.f_lambda(T.shape) for T in Ts)
        return ok, len(Ts)

    def y_identity():
        k = n - 1
        if not 1 <= k <= 3:
            return True, 0
        Us = TB.all_syt(k)
        return all(I.y_element_check(U) for U in Us), len(Us)

    def spectral_limit():
        if not 2 <= n <= 4:
            return True, 0
        ok = all(
            I.em_via_spectral_limit(T.remove_max(), T.contents()[-1]) == E[T] for T in Ts
        )
        return ok, len(Ts)

    return [
        ("fusion equals Dipper-James", fusion_equals_dj),
        ("idempotency", idempotency),
        ("orthogonality", orthogonality),
        ("completeness", completeness),
        ("Jucys-Murphy eigenvalues", eigenvalues),
        ("branching", branching),
        ("hook length counts", hook_counts),
        ("two forms of the normalization", normalization_forms),
        ("F_n value recursion", f_n_recursion),
        ("Y_k resolvent identity", y_identity),
        ("spectral limit of the resolvent", spectral_limit),
    ]


# ---------------------------------------------------------------------------
# trace


def trace_checks(n, seed=0):
    rng = random.Random(seed)
    Ts = TB.all_syt(n)
    m = n - 1
    Qv = URat.variable(TR.TRACE_VAR)

    def axioms():
        if m > 3:
            return True, 0
        res = TR.trace_axioms(m)
        return all(res.values()), len(res)

    def shape_invariance():
        ok = True
        for la in TB.enumerate_partitions(n):
            vals = {str(TR.qdim(T)) for T in TB.enumerate_syt(la)}
            ok &= len(vals) == 1
        return ok, len(Ts)

    def additivity():
        total = URat.const(TR.TRACE_VAR, 0)
        for T in Ts:
            total = total + TR.qdim(T)
        return total == Qv ** n, len(Ts)

    def normalization():
        return all(TR.normalization_check(T) for T in Ts), len(Ts)

    def closed_form():
        if m > 3:
            return True, 0
        Qs = []
        while len(Qs) < 5:
            x = Fraction(rng.randint(2, 40), rng.randint(1, 7))
            if x > 1 and x not in Qs:
                Qs.append(x)
        return TR.z_function(m, Qs), len(Qs)

    def recursion():
        if not 1 <= m <= 3:
            return True, 0
        ok = TR.recursion_identity_check(m)
        if m >= 2:
            ok = ok and not TR.recursion_identity_check(m, swap_sides=True)
        return ok, 1

    def cyclicity():
        if n > 4 or n < 1:
            return True, 0
        perms = P.all_perms(n)
        pairs = 100
        ok = True
        for _ in range(pairs):
            a = _random_element(rng, n, perms)
            b = _random_element(rng, n, perms)
            ok &= TR.markov_trace(a * b) == TR.markov_trace(b * a)
        return ok, pairs

    return [
        ("trace axioms", axioms),
        ("qdim depends only on the shape", shape_invariance),
        ("sum of qdim is Q^n", additivity),
        ("normalization from qdim", normalization),
        ("resolvent trace closed form", closed_form),
        ("resolvent recursion", recursion),
        ("Tr(ab) = Tr(ba)", cyclicity),
    ]


def _random_element(rng, n, perms, terms=3):
    out = {}
    for w in rng.sample(perms, min(terms, len(perms))):
        out[w] = QRat.laurent({rng.randint(-2, 2): rng.randint(-3, 3) or 1, 0: rng.randint(-3, 3)})
    return H.HeckeElement(n, out)


# ---------------------------------------------------------------------------
# limits


def limit_checks(n, seed=0):
    rng = random.Random(seed)
    Ts = TB.all_syt(n)

    def matches_group_algebra():
        return all(hecke_limit(I.dipper_james(T)) == S.sn_fusion(T) for T in Ts), len(Ts)

    def group_algebra_system():
        rep = S.idempotent_system_check(n)
        return all(v for k, v in rep.items() if k != "tableaux"), rep["tableaux"]

    def phi_products():
        k = n - 1
        if k < 1:
            return True, 0
        Us = TB.all_syt(k)
        ok = True
        for U in Us:
            cs = U.contents()
            ok &= phi_limit_check(k, cs, rng=rng)
            wrong = cs[:-1] + (cs[-1] + 1,)
            ok &= not phi_limit_check(k, cs, phi_contents=wrong, rng=rng)
        return ok, len(Us)

    return [
        ("q -> 1 limit equals symmetric group fusion", matches_group_algebra),
        ("symmetric group idempotent system", group_algebra_system),
        ("Y_k limit is a product of phi factors", phi_products),
    ]


_BUILDERS = {
    "hecke": hecke_checks,
    "idempotents": idempotent_checks,
    "trace": trace_checks,
    "limits": limit_checks,
}


def run_suite(n, suite="all", seed=0, force=False):
    """Run one suite (or all) at size n; returns a JSON-ready report."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_N + (1 if force else 0):
        raise ValueError(f"n = {n} exceeds the cap {MAX_N} (use --force for {MAX_N + 1})")
    names = SUITES if suite == "all" else (suite,)
    results = []
    for name in names:
        if name not in _BUILDERS:
            raise ValueError(f"unknown suite {name!r}")
        for label, fn in _BUILDERS[name](n, seed):
            r = _run(label, fn)
            results.append({"suite": name, **asdict(r)})
    return {
        "n": n,
        "suite": suite,
        "tableaux": len(TB.all_syt(n)),
        "passed": all(r["passed"] for r in results),
        "checks": results,
    }
