"""Command-line front end.

Exit codes: 0 success, 2 parse or size error, 3 pole (non-standard input or
a singular evaluation), 4 failed --check or verification.
"""
import argparse
import json
import sys

from . import tableaux as TB
from .errors import ParseError, PoleError
from .verify import MAX_N, SUITES, run_suite

EXIT_OK, EXIT_PARSE, EXIT_POLE, EXIT_CHECK = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _check_n(n, force):
    if n < 1:
        raise UsageError("--n must be positive")
    if n > MAX_N + (1 if force else 0):
        raise UsageError(f"n = {n} exceeds the cap {MAX_N}; --force allows {MAX_N + 1}")
    if n > MAX_N:
        print(f"warning: n = {n} is above the default cap; this may take a long time", file=sys.stderr)


def _shapes(args):
    if args.shape:
        la = TB.parse_partition(args.shape)
        if args.n is not None and sum(la) != args.n:
            raise UsageError(f"shape {args.shape} is not a partition of {args.n}")
        return [la]
    if args.n is None:
        raise UsageError("give --n or --shape")
    return TB.enumerate_partitions(args.n)


# ---------------------------------------------------------------------------
# subcommands


def cmd_tableaux(args):
    shapes = _shapes(args)
    _check_n(sum(shapes[0]), args.force)
    rows = [(la, T) for la in shapes for T in TB.enumerate_syt(la)]
    if args.format == "json":
        data = [{"shape": list(la), "tableau": str(T), "contents": list(T.contents())} for la, T in rows]
        _emit(json.dumps({"count": len(rows), "tableaux": data}), args.out)
    else:
        lines = [f"{TB.partition_str(la)}\t{T}" for la, T in rows]
        lines.append(f"# {len(rows)} standard tableaux")
        _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_idem(args):
    from . import hecke as H
    from .idempotents import dipper_james, fusion
    from .serialize import to_json

    T = TB.Tableau.parse(args.tableau)
    _check_n(T.n, args.force)
    if not T.is_standard():
        raise PoleError(f"tableau {T} is not standard")
    method = "dipper_james" if args.method == "dj" else "fusion"
    E = fusion(T) if method == "fusion" else dipper_james(T)
    if args.check:
        failures = []
        if E * E != E:
            failures.append("idempotency")
        for k, s in enumerate(T.q_contents(), start=1):
            if H.jucys_murphy(k, T.n) * E != E.scale(s):
                failures.append(f"eigenvalue of y_{k}")
        other = dipper_james(T) if method == "fusion" else fusion(T)
        if other != E:
            failures.append("cross-method equality")
        if failures:
            print("check failed: " + ", ".join(failures), file=sys.stderr)
            return EXIT_CHECK
    if args.format == "json":
        _emit(to_json(E, tableau=str(T), method=method), args.out)
    else:
        _emit(f"E[{T}] ({method}) = {E}", args.out)
    return EXIT_OK


def cmd_verify(args):
    if args.n is None:
        raise UsageError("verify needs --n")
    _check_n(args.n, args.force)
    report = run_suite(args.n, args.suite, seed=args.seed, force=args.force)
    if args.format == "json":
        _emit(json.dumps(report), args.out)
    else:
        lines = []
        for r in report["checks"]:
            mark = "PASS" if r["passed"] else "FAIL"
            extra = f"  {r['detail']}" if r["detail"] else ""
            lines.append(f"{mark}  {r['suite']:<12} {r['name']:<46} count={r['count']}{extra}")
        verdict = "PASS" if report["passed"] else "FAIL"
        lines.append(f"{verdict}: n={report['n']} suite={report['suite']} tableaux={report['tableaux']}")
        _emit("\n".join(lines), args.out)
    return EXIT_OK if report["passed"] else EXIT_CHECK


def cmd_qdim(args):
    from .trace import qdim

    shapes = _shapes(args)
    _check_n(sum(shapes[0]), args.force)
    rows = []
    for la in shapes:
        vals = {str(qdim(T)) for T in TB.enumerate_syt(la)}
        if len(vals) != 1:
            print(f"qdim differs across tableaux of {la}", file=sys.stderr)
            return EXIT_CHECK
        rows.append((la, vals.pop()))
    if args.format == "json":
        _emit(json.dumps({"rows": [{"shape": list(la), "qdim": v} for la, v in rows]}), args.out)
    else:
        _emit("\n".join(f"{TB.partition_str(la)}\t{v}" for la, v in rows), args.out)
    return EXIT_OK


def cmd_trace(args):
    from .scalar import QRat, parse_scalar
    from .serialize import from_json
    from .symgroup import GroupAlgebraElement
    from .trace import markov_trace

    if not args.element:
        raise UsageError("trace needs --element FILE")
    try:
        with open(args.element) as fh:
            a = from_json(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {args.element}: {exc}") from None
    if isinstance(a, GroupAlgebraElement):
        raise UsageError("trace takes a Hecke element, not a group-algebra element")
    if args.n is not None and args.n != a.n:
        raise UsageError(f"element lives in H_{a.n}, not H_{args.n}")
    _check_n(max(a.n, 1), args.force)
    Q = None
    if args.Q is not None:
        Q = parse_scalar(args.Q)
        if not isinstance(Q, QRat):
            raise UsageError("--Q must be a scalar in q")
    value = markov_trace(a, Q)
    if args.format == "json":
        _emit(json.dumps({"n": a.n, "trace": str(value)}), args.out)
    else:
        _emit(str(value), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="heckefusion", description="Idempotents of the Hecke algebra by fusion.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--n", type=int)
        sp.add_argument("--format", choices=("text", "json"), default="text")
        sp.add_argument("--out", metavar="FILE")
        sp.add_argument("--force", action="store_true", help=f"allow n = {MAX_N + 1}")

    sp = sub.add_parser("tableaux", help="list standard tableaux")
    common(sp)
    sp.add_argument("--shape")
    sp.set_defaults(func=cmd_tableaux)

    sp = sub.add_parser("idem", help="primitive idempotent of a standard tableau")
    common(sp)
    sp.add_argument("--tableau", required=True, help='rows separated by "/", e.g. "1 2 / 3"')
    sp.add_argument("--method", choices=("fusion", "dj"), default="fusion")
    sp.add_argument("--check", action="store_true")
    sp.set_defaults(func=cmd_idem)

    sp = sub.add_parser("verify", help="run property suites")
    common(sp)
    sp.add_argument("--suite", choices=SUITES + ("all",), default="all")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("qdim", help="quantum dimensions per shape")
    common(sp)
    sp.add_argument("--shape")
    sp.set_defaults(func=cmd_qdim)

    sp = sub.add_parser("trace", help="Markov trace of an element given as JSON")
    common(sp)
    sp.add_argument("--element", metavar="FILE")
    sp.add_argument("--Q", help="numeric value for the trace parameter (default symbolic)")
    sp.set_defaults(func=cmd_trace)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return EXIT_POLE


if __name__ == "__main__":
    sys.exit(main())
