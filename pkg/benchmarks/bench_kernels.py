"""Compare the compiled and pure-Python kernel backends.

Micro-benchmarks call both kernel modules directly on the same random
polynomials; the end-to-end rows run a workload in a subprocess with
HECKEFUSION_BACKEND set, so each run imports one backend only.

    python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""
import argparse
import os
import random
import subprocess
import sys
import time

from heckefusion.scalar import _kernels_py as pure

try:
    from heckefusion.scalar import _kernels as compiled
except ImportError:
    compiled = None


def random_poly(rng, length, bits):
    p = [rng.randint(-(1 << bits), 1 << bits) for _ in range(length)]
    p[-1] = p[-1] or 1
    return tuple(p)


def micro_cases(rng, count=400):
    cases = []
    for _ in range(count):
        a = random_poly(rng, rng.randint(2, 12), 12)
        b = random_poly(rng, rng.randint(2, 12), 12)
        cases.append((a, b, pure.pmul(a, b)))
    return cases


def time_kernel(mod, cases, repeat):
    best = {}
    for name in ("pmul", "pdivexact", "pgcd"):
        t_best = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            if name == "pmul":
                for a, b, _ in cases:
                    mod.pmul(a, b)
            elif name == "pdivexact":
                for a, b, ab in cases:
                    mod.pdivexact(ab, b)
            else:
                for a, b, ab in cases:
                    mod.pgcd(ab, mod.pmul(b, b))
            t_best = min(t_best, time.perf_counter() - t0)
        best[name] = t_best
    return best


WORKLOADS = {
    "fusion n=4 (all SYT)": (
        "from heckefusion import idempotents as I, tableaux as TB\n"
        "[I.fusion(T) for T in TB.all_syt(4)]"
    ),
    "resolvent (u - y_4)^-1": "from heckefusion import idempotents as I\nI.resolvent(4)",
    "verify n=3 all": "from heckefusion.verify import run_suite\nassert run_suite(3)['passed']",
}
HEAVY = {
    "fusion n=5 (all SYT)": (
        "from heckefusion import idempotents as I, tableaux as TB\n"
        "[I.fusion(T) for T in TB.all_syt(5)]"
    ),
}


def time_workload(code, backend, repeat):
    env = dict(os.environ)
    if backend == "python":
        env["HECKEFUSION_BACKEND"] = "python"
    else:
        env.pop("HECKEFUSION_BACKEND", None)
    prog = (
        "import time\n"
        "from heckefusion.scalar import BACKEND\n"
        f"assert BACKEND == {backend!r}, BACKEND\n"
        "t0 = time.perf_counter()\n"
        f"{code}\n"
        "print(time.perf_counter() - t0)\n"
    )
    best = float("inf")
    for _ in range(repeat):
        out = subprocess.run([sys.executable, "-c", prog], env=env, check=True,
                             capture_output=True, text=True)
        best = min(best, float(out.stdout.strip().splitlines()[-1]))
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the n=5 workload")
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled backend not built; nothing to compare")
        return 1
    rng = random.Random(2024)
    cases = micro_cases(rng)
    tp = time_kernel(pure, cases, args.repeat)
    tc = time_kernel(compiled, cases, args.repeat)
    print(f"{'benchmark':36} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name in tp:
        print(f"{'kernel ' + name:36} {tp[name]:10.4f} {tc[name]:10.4f} {tp[name] / tc[name]:8.2f}")
    work = dict(WORKLOADS)
    if not args.quick:
        work.update(HEAVY)
    for label, code in work.items():
        p = time_workload(code, "python", args.repeat)
        c = time_workload(code, "cython", args.repeat)
        print(f"{label:36} {p:10.3f} {c:10.3f} {p / c:8.2f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
