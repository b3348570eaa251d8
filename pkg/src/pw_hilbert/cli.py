"""Command-line front end: ``pw-hilbert {betti,filtration,verify,oracle}``.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from .filtrations import P_NORMALIZATION, filtration, pw_exchange_check
from .hilbert import assemble, goettsche_oracle
from .invariants import PieceCache
from .lefschetz import atq2_check, chl_check, hl_check, relative_hl_check
from .partitions import enumerate_partitions
from .report import dumps, make_report
from .surfaces import model

N_BUDGET = 6
SURFACE_FILTRATIONS = {"Y": ("W", "halfW"), "X": ("P", "L")}


def _nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pw-hilbert", description=__doc__.splitlines()[0])
    parser.add_argument("--cache-dir", help="directory for cached invariant bases (env PW_HILBERT_CACHE wins)")
    parser.add_argument("--timing", action="store_true", help="include wall-clock timing in the report")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="json")

    p = sub.add_parser("betti", help="Betti numbers of S^[n] with the product-formula column")
    p.add_argument("--surface", choices=("X", "Y"), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    add_format(p)

    p = sub.add_parser("filtration", help="graded dimensions of a filtration")
    p.add_argument("--surface", choices=("X", "Y"), required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--which", choices=("W", "halfW", "P", "L"), required=True)
    add_format(p)

    p = sub.add_parser("verify", help="run exchange and Lefschetz checks")
    p.add_argument("check", choices=("pw", "chl", "hl", "rhl", "atq2", "all"))
    p.add_argument("--n", type=_nonneg, required=True)
    add_format(p)

    p = sub.add_parser("oracle", help="truncated product-formula table")
    p.add_argument("--n-max", type=_nonneg, required=True)
    p.add_argument("--d-max", type=_nonneg)
    add_format(p)
    return parser


def _cache(args):
    directory = os.environ.get("PW_HILBERT_CACHE") or args.cache_dir
    return PieceCache(directory) if directory else None


def cmd_betti(args, cache):
    coh = assemble(model(args.surface), args.n, cache)
    computed = coh.betti()
    oracle = goettsche_oracle(args.n, 2 * args.n)[args.n]
    rows = [{"d": d, "betti": b, "oracle": o} for d, (b, o) in enumerate(zip(computed, oracle))]
    ok = computed == oracle
    params = {"surface": args.surface, "n": args.n}
    lines = [f"# betti S={args.surface} n={args.n}", "d\tbetti\toracle"]
    lines += [f"{r['d']}\t{r['betti']}\t{r['oracle']}" for r in rows]
    lines.append(f"# oracle_match: {'pass' if ok else 'fail'}")
    return ok, params, {"betti": computed, "oracle": oracle, "rows": rows}, {"oracle_match": ok}, lines


def cmd_filtration(args, cache):
    table = filtration(args.which, args.n, cache)
    params = {"surface": args.surface, "n": args.n, "which": args.which}
    data = table.to_json()
    if args.which in ("P", "L"):
        data["normalization"] = P_NORMALIZATION
    lines = [f"# filtration {args.which} on {args.surface}^[{args.n}]", "d\tk\tdim\tgraded\tpartitions"]
    for r in data["rows"]:
        lines.append(f"{r['d']}\t{r['k']}\t{r['dim']}\t{r['graded']}\t{' '.join(r['partitions'])}")
    return True, params, data, {}, lines


def run_checks(which: str, n: int, cache=None) -> list[dict]:
    """Run the named check family at ``n``; returns JSON-ready per-check reports."""
    out = []
    if which in ("pw", "all"):
        out.append(pw_exchange_check(n, cache).to_json())
    if which in ("chl", "all"):
        out.extend(chl_check(n, k).to_json() for k in range(n + 1))
    if which in ("hl", "all"):
        for nu in enumerate_partitions(n):
            out.extend(hl_check(nu, j).to_json() for j in range(len(nu) + 1))
    if which in ("rhl", "all"):
        out.extend(relative_hl_check(n, j).to_json() for j in range(n + 1))
    if which in ("atq2", "all"):
        out.append(atq2_check(n).to_json())
    return out


def cmd_verify(args, cache):
    if args.n > N_BUDGET:
        print(f"warning: n={args.n} exceeds the tested budget n<={N_BUDGET}", file=sys.stderr)
    checks = run_checks(args.check, args.n, cache)
    ok = all(c["passed"] for c in checks)
    params = {"check": args.check, "n": args.n}
    lines = []
    for c in checks:
        label = c["check"] + " " + " ".join(f"{k}={v}" for k, v in sorted(c.get("params", {"n": c.get("n")}).items()))
        lines.append(f"{'PASS' if c['passed'] else 'FAIL'}\t{label}")
    verdicts = {"all_passed": ok, "count": len(checks), "failed": sum(not c["passed"] for c in checks)}
    return ok, params, checks, verdicts, lines


def cmd_oracle(args, cache):
    d_max = args.d_max if args.d_max is not None else 2 * args.n_max
    table = goettsche_oracle(args.n_max, d_max)
    euler = [sum((-1) ** d * b for d, b in enumerate(row)) for row in table]
    params = {"n_max": args.n_max, "d_max": d_max}
    lines = ["n\teuler\tbetti"] + [f"{n}\t{e}\t{' '.join(map(str, row))}" for n, (row, e) in enumerate(zip(table, euler))]
    return True, params, {"rows": table, "euler": euler}, {}, lines


COMMANDS = {"betti": cmd_betti, "filtration": cmd_filtration, "verify": cmd_verify, "oracle": cmd_oracle}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "filtration" and args.which not in SURFACE_FILTRATIONS[args.surface]:
        parser.error(f"filtration {args.which} is defined on surface "
                     f"{'Y' if args.which in SURFACE_FILTRATIONS['Y'] else 'X'}, not {args.surface}")
    start = time.perf_counter()
    ok, params, results, verdicts, lines = COMMANDS[args.command](args, _cache(args))
    if args.format == "table":
        text = "\n".join(lines) + "\n"
    else:
        timing = {"seconds": round(time.perf_counter() - start, 6)} if args.timing else None
        text = dumps(make_report(args.command, params, results, verdicts, timing))
    sys.stdout.write(text)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
