"""Command-line interface.

Subcommands: verify (identity checks), compute (value tables), forms
(reduced-form listings), bijection (tuple-to-form correspondence), and
cache (persist/restore the class-number memo tables).

Exit codes: 0 all checks passed, 1 mathematical mismatch, 2 usage or
domain error, 3 I/O failure.  Stdout is deterministic for identical
invocations; wall-clock durations go to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import counts, qforms, registry
from .backend import active_backend

PRECISION_ENV = "THREESQ_PRECISION"

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_IO = 3

COMPUTE_FUNCS = ("r3", "r2", "r4", "N3", "r3delta", "h", "H")


class DomainError(Exception):
    """Input outside a function's domain (exit code 2)."""


def _fmt_value(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return str(int(v))


def _parse_int_args(tokens: list[str]) -> list[int]:
    """Integers and inclusive a..b ranges."""
    out = []
    for tok in tokens:
        if ".." in tok:
            lo_s, hi_s = tok.split("..", 1)
            try:
                lo, hi = int(lo_s), int(hi_s)
            except ValueError:
                raise DomainError(f"bad range {tok!r}")
            if hi < lo:
                raise DomainError(f"empty range {tok!r}")
            out.extend(range(lo, hi + 1))
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise DomainError(f"bad integer {tok!r}")
    return out


# -- verify -------------------------------------------------------------------


def cmd_verify(args) -> int:
    precision = args.precision
    if precision is None and os.environ.get(PRECISION_ENV):
        try:
            precision = int(os.environ[PRECISION_ENV])
        except ValueError:
            raise DomainError(f"bad {PRECISION_ENV}={os.environ[PRECISION_ENV]!r}")
    report = registry.run_check(
        args.identity,
        order=args.order,
        lo=args.lo,
        hi=args.hi,
        samples=args.samples,
        tolerance=args.tolerance,
        precision=precision,
        seed=args.seed,
        jobs=args.jobs,
    )
    if args.format == "json":
        payload = {
            "command": f"verify {args.identity}",
            "engine": registry.ENGINE_VERSION,
            "identity": report.identity_id,
            "scope": report.scope,
            "checked": report.checked,
            "passed": report.passed,
            "detail": report.detail,
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        status = "PASS" if report.passed else "FAIL"
        line = f"verify {report.identity_id}: {status} [{report.scope}, {report.checked} checks]"
        if report.detail:
            line += f" -- {report.detail}"
        print(line)
    print(
        f"# {registry.ENGINE_VERSION} [{active_backend()} kernels] "
        f"{report.identity_id}: {report.duration:.2f}s",
        file=sys.stderr,
    )
    return EXIT_OK if report.passed else EXIT_MISMATCH


# -- compute ------------------------------------------------------------------


def _compute_values(func: str, inputs: list[int]) -> list[tuple[int, object]]:
    rows = []
    if func in ("r3", "r2", "r4", "N3", "r3delta"):
        for n in inputs:
            if n < 0 or (func == "N3" and n < 1):
                raise DomainError(f"{func} undefined for {n}")
        big = max(inputs, default=0)
        use_table = len(inputs) > 8
        if use_table:
            table = {
                "r2": counts.r2_table,
                "r3": counts.r3_table,
                "r4": counts.r4_table,
                "N3": counts.n3_table,
                "r3delta": counts.tri3_table,
            }[func](big)
            rows = [(n, int(table[n])) for n in inputs]
        else:
            scalar = {
                "r2": lambda n: counts.r_squares(2, n),
                "r3": lambda n: counts.r_squares(3, n),
                "r4": lambda n: counts.r_squares(4, n),
                "N3": counts.n3_primitive,
                "r3delta": counts.r_triangular3,
            }[func]
            rows = [(n, scalar(n)) for n in inputs]
    elif func == "h":
        for D in inputs:
            if D >= 0 or D % 4 not in (0, 1):
                raise DomainError(f"h undefined: not a discriminant: {D}")
        rows = [(D, qforms.class_number_h(D)) for D in inputs]
    elif func == "H":
        for N in inputs:
            if N < 0:
                raise DomainError(f"H undefined for {N}")
        rows = [(N, qforms.hurwitz_direct(N)) for N in inputs]
    else:
        raise DomainError(f"unknown function {func!r}")
    return rows


def cmd_compute(args) -> int:
    inputs = _parse_int_args(args.values)
    if not inputs:
        raise DomainError("no inputs given")
    rows = _compute_values(args.function, inputs)
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["input", "value"])
        for n, v in rows:
            writer.writerow([n, _fmt_value(v)])
    elif args.format == "json":
        print(json.dumps([{"input": n, "value": _fmt_value(v)} for n, v in rows]))
    else:
        for n, v in rows:
            print(f"{args.function}({n}) = {_fmt_value(v)}")
    return EXIT_OK


# -- forms --------------------------------------------------------------------


def cmd_forms(args) -> int:
    D = args.discriminant
    try:
        census = qforms.classify_forms(D)
    except ValueError as exc:
        raise DomainError(str(exc))
    rows = [
        {
            "a": f.a,
            "b": f.b,
            "c": f.c,
            "content": f.content,
            "primitive": f.is_primitive,
            "type": f.form_type,
            "weight": _fmt_value(f.hurwitz_weight()),
        }
        for f in census.forms
    ]
    h = qforms.class_number_h(D)
    H = qforms.hurwitz_direct(-D)
    summary = {
        "h": h,
        "H": _fmt_value(H),
        "A": census.A,
        "types": census.type_counts,
    }
    if args.format == "json":
        print(json.dumps({"D": D, "forms": rows, "summary": summary}))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["a", "b", "c", "content", "primitive", "type", "weight"])
        for r in rows:
            writer.writerow(
                [r["a"], r["b"], r["c"], r["content"], int(r["primitive"]), r["type"], r["weight"]]
            )
    else:
        for r in rows:
            prim = "primitive" if r["primitive"] else "imprimitive"
            print(
                f"({r['a']}, {r['b']}, {r['c']})  content={r['content']} "
                f"{prim} type={r['type']} weight={r['weight']}"
            )
        tc = census.type_counts
        print(
            f"h({D}) = {h}  H({-D}) = {_fmt_value(H)}  A({D}) = {census.A}  "
            f"types I:{tc['I']} II:{tc['II']} III:{tc['III']} IV:{tc['IV']}"
        )
    return EXIT_OK


# -- bijection ----------------------------------------------------------------


def cmd_bijection(args) -> int:
    n = args.n
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    trs = counts.triples(n)
    dec = counts.decompose_solutions(n)
    lines = []
    for tr in trs:
        form = qforms.triple_to_form(tr)
        lines.append(
            f"({tr.r},{tr.s},{tr.t}) -> ({form.a},{form.b},{form.c}) [{form.form_type}]"
        )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "n": n,
                    "pairs": [
                        {
                            "triple": [tr.r, tr.s, tr.t],
                            "form": list(qforms.triple_to_form(tr).tuple()),
                            "type": qforms.triple_to_form(tr).form_type,
                        }
                        for tr in trs
                    ],
                    "decomposition": {
                        "total": dec.total,
                        "strict": dec.strict,
                        "two_equal": dec.two_equal,
                        "all_equal": dec.all_equal,
                    },
                }
            )
        )
    else:
        for line in lines:
            print(line)
        print(
            f"solutions of rs+rt+st={n}: total={dec.total} = "
            f"6*{dec.strict} + 3*{dec.two_equal} + {dec.all_equal}"
        )
    return EXIT_OK


# -- cache --------------------------------------------------------------------


def cmd_cache(args) -> int:
    if args.action == "save":
        rows = qforms.cache_snapshot()
        try:
            with open(args.path, "w", newline="") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow(["key", "numerator", "denominator"])
                writer.writerows(rows)
        except OSError as exc:
            print(f"cache save failed: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"saved {len(rows)} rows to {args.path}")
        return EXIT_OK
    # load
    try:
        with open(args.path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader, None)
            if header != ["key", "numerator", "denominator"]:
                print(f"bad cache header in {args.path}: {header}", file=sys.stderr)
                return EXIT_IO
            rows = [(int(k), int(n), int(d)) for k, n, d in reader]
    except OSError as exc:
        print(f"cache load failed: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"bad cache row in {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    # spot-check 1% of rows (at least one) against fresh computation
    if rows:
        stride = max(1, len(rows) // 100)
        for i in range(0, len(rows), stride):
            key, num, den = rows[i]
            fresh = qforms.recompute_for_key(key)
            if fresh != Fraction(num, den):
                print(
                    f"cache validation failed at row {i + 2} (key={key}): "
                    f"stored {num}/{den}, computed {fresh}"
                )
                return EXIT_MISMATCH
    qforms.cache_restore(rows)
    print(f"loaded {len(rows)} rows from {args.path}")
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="threesq",
        description="Verify sums-of-three-squares identities, class-number "
        "formulas, and Kronecker-type series identities.",
    )
    parser.add_argument(
        "--version", action="version", version=f"{registry.ENGINE_VERSION} [{active_backend()} kernels]"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run an identity check")
    p_verify.add_argument("identity", choices=registry.IDENTITY_IDS, metavar="identity")
    p_verify.add_argument("--order", type=int, help="series truncation order")
    p_verify.add_argument("--from", dest="lo", type=int, help="sweep start (inclusive)")
    p_verify.add_argument("--to", dest="hi", type=int, help="sweep end (inclusive)")
    p_verify.add_argument("--samples", type=int, help="numeric battery size")
    p_verify.add_argument("--tolerance", type=float, help="numeric pass tolerance")
    p_verify.add_argument("--precision", type=int, help="decimal digits (numeric checks)")
    p_verify.add_argument("--seed", type=int, help="regenerate the numeric battery")
    p_verify.add_argument("--jobs", type=int, default=1, help="parallel sweep workers")
    p_verify.add_argument("--format", choices=("human", "json"), default="human")
    p_verify.set_defaults(func=cmd_verify)

    p_compute = sub.add_parser("compute", help="tabulate counting functions")
    p_compute.add_argument("function", choices=COMPUTE_FUNCS)
    p_compute.add_argument("values", nargs="+", help="integers or a..b ranges")
    p_compute.add_argument("--format", choices=("human", "csv", "json"), default="human")
    p_compute.set_defaults(func=cmd_compute)

    p_forms = sub.add_parser("forms", help="list reduced forms of a discriminant")
    p_forms.add_argument("discriminant", type=int)
    p_forms.add_argument("--format", choices=("human", "csv", "json"), default="human")
    p_forms.set_defaults(func=cmd_forms)

    p_bij = sub.add_parser("bijection", help="tuple-to-form correspondence at n")
    p_bij.add_argument("n", type=int)
    p_bij.add_argument("--format", choices=("human", "json"), default="human")
    p_bij.set_defaults(func=cmd_bijection)

    p_cache = sub.add_parser("cache", help="persist or restore class-number tables")
    p_cache.add_argument("action", choices=("save", "load"))
    p_cache.add_argument("path")
    p_cache.set_defaults(func=cmd_cache)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
