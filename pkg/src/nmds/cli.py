"""Command-line front end: ``nmds <command> [options]``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
import time

from .code import LinearCode, classify
from .errors import BudgetExceeded, NmdsError
from .formulas import (
    SubsetSumQuery,
    listed_vanishing_case,
    predict,
    subset_sum_count_bruteforce,
    subset_sum_count_closed,
)
from .gf import Field, format_element, make_field, parse_element
from .golden import verify_all
from .grl import ALPHABETS, GrlSpec, grl_generator, rl_dimension_range
from .matrix import all_k_column_subsets_nonsingular, parse_matrix
from .report import build_report, canonical_json
from .sweep import mds_sweep, prediction_sweep, nmds_sweep

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
UNLIMITED = 10**40


class UsageError(Exception):
    pass


def _field_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--m", type=int, default=1, help="extension degree")


def _code_args(p: argparse.ArgumentParser) -> None:
    _field_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alphabet", choices=ALPHABETS, default="units")
    p.add_argument("--alpha", help="explicit evaluation points, comma separated")
    p.add_argument("--v", help="column multipliers, comma separated")
    p.add_argument("--tail", required=True, help='tail block, rows separated by ";"')


def _run_args(p: argparse.ArgumentParser, fmt: bool = True) -> None:
    if fmt:
        p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--budget", type=int, help="max message vectors to enumerate")
    p.add_argument("--force", action="store_true", help="ignore all budgets")
    p.add_argument("--workers", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nmds", description="Roth-Lempel code workbench")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="print field tables")
    _field_args(p)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("construct", help="emit the generator matrix")
    _code_args(p)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--minors", action="store_true", help="also test every k-column minor")
    p.add_argument("--force", action="store_true", help="ignore the minor budget")

    p = sub.add_parser("classify", help="weight distributions and Singleton class")
    _code_args(p)
    _run_args(p)

    p = sub.add_parser("predict", help="parameters promised by theory only")
    _field_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--alphabet", choices=ALPHABETS, default="units")
    p.add_argument("--tail", required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")

    p = sub.add_parser("subset-sum", help="closed-form subset-sum count vs brute force")
    _field_args(p)
    p.add_argument("--set", dest="domain", choices=ALPHABETS, default="units")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--b", default="0")
    _run_args(p)

    p = sub.add_parser("verify-paper", help="run the golden examples")
    _run_args(p)

    p = sub.add_parser("sweep", help="seeded cross-validation over ranges")
    p.add_argument("--q", default="4,5,7,8,9", help="field orders, comma separated")
    p.add_argument("--tails", type=int, default=10, help="tails per (q, alphabet, k)")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument(
        "--scope",
        choices=("all", "nmds", "mds"),
        default="all",
        help="all constructible k, the NMDS ranges, or the MDS exception list",
    )
    _run_args(p)
    return parser


# -- helpers ------------------------------------------------------------------------


def _budget(args) -> int | None:
    return UNLIMITED if getattr(args, "force", False) else args.budget


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                raise UsageError(f"{q} is not a prime power")
            return p, m
    raise UsageError(f"{q} is not a prime power")


def _elements(F: Field, text: str) -> list[int]:
    return [parse_element(F, t) for t in text.split(",") if t.strip()]


def _spec(F: Field, args) -> GrlSpec:
    alpha = _elements(F, args.alpha) if args.alpha else args.alphabet
    v = _elements(F, args.v) if args.v else None
    return GrlSpec(F, alpha, args.k, parse_matrix(F, args.tail), v)


def _emit(args, payload: dict, text: str) -> None:
    print(canonical_json(payload) if args.format == "json" else text)


# -- commands -----------------------------------------------------------------------


def cmd_field(args) -> int:
    F = make_field(args.p, args.m)
    rows = [
        {"value": a, "poly": F.to_poly(a), "log": F.log(a)} for a in range(F.q)
    ] if F.log(1) is not None else []
    payload = {"p": F.p, "m": F.m, "q": F.q, "modulus": list(F.modulus), "omega": F.omega, "elements": rows}
    lines = [f"GF({F.q}) = GF({F.p}^{F.m})", f"modulus  {list(F.modulus)} (constant term first)", f"omega    {F.omega}"]
    if rows:
        lines.append("value  poly  log_w")
        lines += [f"{r['value']:>5}  {r['poly']}  {'-' if r['log'] is None else r['log']}" for r in rows]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_construct(args) -> int:
    F = make_field(args.p, args.m)
    spec = _spec(F, args)
    G = grl_generator(spec)
    payload = {"q": F.q, "n": G.ncols, "k": G.nrows, "generator": G.tolist()}
    lines = [f"[{G.ncols}, {G.nrows}] generator over GF({F.q})"]
    lines += [" ".join(f"{x:>3}" for x in r) for r in G.rows]
    if args.minors:
        ok, witness = all_k_column_subsets_nonsingular(G, force=args.force)
        payload["all_minors_nonsingular"] = ok
        payload["singular_columns"] = list(witness) if witness else None
        lines.append(f"every {G.nrows}-column minor nonsingular: {ok}")
        if witness:
            lines.append(f"first singular column set: {list(witness)}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _prediction_for(F: Field, args, spec: GrlSpec):
    if args.alpha or args.v or spec.tail.shape != (2, 2):
        return None
    lo, hi = rl_dimension_range(F, args.alphabet)
    if not lo <= args.k <= hi:
        return None
    return predict(F, args.alphabet, args.k, spec.tail)


def cmd_classify(args) -> int:
    F = make_field(args.p, args.m)
    spec = _spec(F, args)
    code = LinearCode(grl_generator(spec))
    start = time.perf_counter()
    report = classify(code, _budget(args), args.workers)
    elapsed = int((time.perf_counter() - start) * 1000)
    out = build_report(F, report, _prediction_for(F, args, spec), elapsed)
    _emit(args, out.as_dict(), out.to_text())
    return EXIT_OK


def cmd_predict(args) -> int:
    F = make_field(args.p, args.m)
    pred = predict(F, args.alphabet, args.k, parse_matrix(F, args.tail))
    text = f"{pred.klass} [{pred.n}, {pred.k}, {pred.d}] a_min={pred.a_min} ({pred.source})"
    _emit(args, pred.as_dict(), text)
    return EXIT_OK


def cmd_subset_sum(args) -> int:
    F = make_field(args.p, args.m)
    b = parse_element(F, args.b)
    query = SubsetSumQuery(F, args.k, b, args.domain)
    closed = subset_sum_count_closed(query)
    brute = subset_sum_count_bruteforce(query, budget=_budget(args) or 10**7)
    match = closed == brute
    payload = {
        "q": F.q,
        "set": args.domain,
        "k": args.k,
        "b": b,
        "closed": closed,
        "brute": brute,
        "match": match,
        "listed_vanishing": listed_vanishing_case(F.q, args.k, b),
    }
    text = f"N({args.k}, {format_element(F, b)}, {args.domain}) closed = {closed}, brute = {brute}, "
    text += "match" if match else "MISMATCH"
    _emit(args, payload, text)
    return EXIT_OK if match else EXIT_MISMATCH


def cmd_verify_paper(args) -> int:
    results = verify_all(_budget(args), args.workers)
    payload, lines, failed = [], [], 0
    for case, runs in results:
        ok = all(r.ok for r in runs)
        failed += not ok
        n, k, d = case.params
        lines.append(f"{'PASS' if ok else 'FAIL'}  {case.name:<18} {case.klass.value:<5} [{n}, {k}, {d}]")
        for r in runs:
            bad = [c for c, good in r.checks.items() if not good]
            if bad:
                lines.append(f"      tail {r.tail}: got {r.klass} {list(r.params)}, failed {bad}")
            payload.append({"case": case.name, "tail": r.tail, "klass": r.klass,
                            "params": list(r.params), "checks": r.checks, "ok": r.ok})
    lines.append(f"{len(results) - failed}/{len(results)} golden cases pass")
    _emit(args, {"cases": payload, "failed": failed}, "\n".join(lines))
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_sweep(args) -> int:
    qs = [int(t) for t in args.q.split(",") if t.strip()]
    fields = [_prime_power(q) for q in qs]
    budget = _budget(args)
    if args.scope == "nmds":
        results = nmds_sweep(fields, args.tails, args.seed, budget)
    elif args.scope == "mds":
        results = mds_sweep(tuple(q for q in qs if q % 2 == 0), args.tails, args.seed, budget)
    else:
        results = prediction_sweep(fields, args.tails, args.seed, budget)
    checked = [r for r in results if r.checks]
    bad = [r for r in checked if not r.ok]
    lines = [f"MISMATCH {r.label()} got {r.report.klass} d={r.report.d}: {r.failures()}" for r in bad]
    lines.append(f"{len(checked) - len(bad)}/{len(checked)} checked codes agree ({len(results)} built)")
    payload = {
        "built": len(results),
        "checked": len(checked),
        "mismatches": [
            {"q": r.q, "alphabet": r.alphabet, "k": r.k, "tail": r.tail,
             "klass": str(r.report.klass), "d": r.report.d, "failed": r.failures()}
            for r in bad
        ],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_MISMATCH if bad else EXIT_OK


COMMANDS = {
    "field": cmd_field,
    "construct": cmd_construct,
    "classify": cmd_classify,
    "predict": cmd_predict,
    "subset-sum": cmd_subset_sum,
    "verify-paper": cmd_verify_paper,
    "sweep": cmd_sweep,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except BudgetExceeded as exc:
        print(f"nmds: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (NmdsError, UsageError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"nmds: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
