"""Command-line front end.

Exit codes: 0 success, 1 domain error (or failed verification), 2 usage error.
Set ``FROBSUM_LOG_LEVEL`` (e.g. ``DEBUG``) for log output on stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Sequence

from .errors import DomainError, UsageError
from .frobenius import (
    FrobeniusQuery,
    check_characteristic,
    decompose,
    enumerate_summands,
    gros_kaneda_multiplicity,
    multiplicity_of_trivial,
    stable_line_summands_of_structure_sheaf,
)
from .parabolic import build_parabolic, parse_levi
from .rootsys import build_root_system, weyl_dimension
from .verify import SUITES, run_suites

log = logging.getLogger("frobsum")


def parse_int_list(text: str, what: str = "weight") -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"malformed {what} {text!r}: expected comma-separated integers") from None


def _add_type(p):
    p.add_argument("--type", required=True, dest="type_spec", help='root system, e.g. "A2", "B3", "A1xA1"')


def _add_levi(p):
    p.add_argument("--levi", default="none", dest="levi_spec", help='1-based Levi nodes, e.g. "2" or "1,3", or "none"')
    p.add_argument("--marked", action="store_true", help="interpret --levi as the marked nodes (complement of the Levi)")


def _add_char(p, r_help="Frobenius power r >= 1"):
    p.add_argument("--p", type=int, required=True, help="characteristic")
    p.add_argument("--r", required=True, help=r_help)
    p.add_argument("--allow-composite-p", action="store_true", help="exploration mode: skip the primality check on p")


def _add_mu(p, required=True):
    p.add_argument("--mu", required=required, help="weight in fundamental-weight coordinates, e.g. 1,0")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="frobsum", description="Line-bundle summands of Frobenius pushforwards on G/P.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json", dest="output_format")
    common.add_argument("--output", dest="output_path", help="write the report to this file instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("info", parents=[common], help="root system and parabolic data")
    _add_type(p)
    _add_levi(p)

    for name, help_ in (
        ("summands", "enumerate line-bundle summands"),
        ("multiplicity", "multiplicity of the trivial summand"),
        ("decompose", "summands with known multiplicities"),
    ):
        p = sub.add_parser(name, parents=[common], help=help_)
        _add_type(p)
        _add_levi(p)
        _add_char(p)
        _add_mu(p)

    p = sub.add_parser("weyl-dim", parents=[common], help="Weyl dimension of a dominant weight")
    _add_type(p)
    _add_mu(p)

    p = sub.add_parser("stable", parents=[common], help="line-bundle summands of F^r_* O, or their union over r")
    _add_type(p)
    _add_levi(p)
    _add_char(p, r_help='Frobenius power r >= 1, or "limit"')

    p = sub.add_parser("gros-kaneda", parents=[common], help="multiplicity of L(-rho) in F^r_* O_{G/B}")
    _add_type(p)
    _add_char(p)

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("--suite", default="all", help=f"comma-separated subset of {','.join(SUITES)} or 'all'")
    p.add_argument("--max-n", type=int, default=3)
    p.add_argument("--primes", default="2,3,5")
    p.add_argument("--max-r", type=int, default=2)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # "--mu -1,0" would otherwise be read as an option by argparse
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--mu", "--levi", "--primes"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def _int_r(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"malformed r {text!r}") from None


def _query(args) -> FrobeniusQuery:
    rs = build_root_system(args.type_spec)
    pd = build_parabolic(rs, parse_levi(args.levi_spec, rs.rank, args.marked))
    mu = rs.weight(parse_int_list(args.mu))
    return FrobeniusQuery(pd, args.p, _int_r(args.r), mu, args.allow_composite_p)


def _query_json(q: FrobeniusQuery) -> dict:
    return {"type": q.rs.label, "levi": [i + 1 for i in sorted(q.pd.levi)], "p": q.p, "r": q.r, "mu": list(q.mu)}


def dispatch(args) -> tuple[dict, str, int]:
    """Run one command; returns (json report, table text, exit code)."""
    cmd = args.command
    if cmd == "info":
        rs = build_root_system(args.type_spec)
        pd = build_parabolic(rs, parse_levi(args.levi_spec, rs.rank, args.marked))
        report = {
            "type": rs.label,
            "rank": rs.rank,
            "cartan": [list(row) for row in rs.cartan],
            "positive_roots": [{"root": list(a.root), "coroot": list(a.coroot)} for a in rs.positive_roots],
            "rho": list(rs.rho),
            "levi": [i + 1 for i in sorted(pd.levi)],
            "two_rho_P": list(pd.two_rho_P),
            "dim_GP": pd.dim_GP,
        }
        lines = [
            f"type        {rs.label}",
            f"rank        {rs.rank}",
            "cartan      " + "\n            ".join(" ".join(f"{v:3d}" for v in row) for row in rs.cartan),
            f"|R_+|       {rs.num_positive_roots}",
            f"levi        {pd.levi_label()}",
            f"2rho_P      {list(pd.two_rho_P)}",
            f"dim G/P     {pd.dim_GP}",
        ]
        return report, "\n".join(lines), 0

    if cmd == "summands":
        q = _query(args)
        weights = enumerate_summands(q)
        report = {"query": _query_json(q), "summands": [list(w) for w in weights], "count": len(weights)}
        return report, "\n".join(str(list(w)) for w in weights), 0

    if cmd == "multiplicity":
        q = _query(args)
        m = multiplicity_of_trivial(q)
        return {"query": _query_json(q), "multiplicity": str(m)}, str(m), 0

    if cmd == "decompose":
        q = _query(args)
        rep = decompose(q)
        lines = [f"{str(list(e.weight)):<24} {'unknown' if e.multiplicity is None else e.multiplicity}" for e in rep.summands]
        lines.append(f"total rank     {rep.total_rank}")
        lines.append(f"accounted rank {rep.accounted_rank}")
        for c in rep.conflicts:
            lines.append(f"conflict at {list(c.weight)}: direct {c.direct} vs dual {c.dual}")
        return rep.to_json(), "\n".join(lines), 0

    if cmd == "weyl-dim":
        rs = build_root_system(args.type_spec)
        mu = rs.weight(parse_int_list(args.mu))
        d = weyl_dimension(rs, mu)
        return {"type": rs.label, "mu": list(mu), "dimension": str(d)}, str(d), 0

    if cmd == "stable":
        rs = build_root_system(args.type_spec)
        pd = build_parabolic(rs, parse_levi(args.levi_spec, rs.rank, args.marked))
        r = "limit" if args.r.strip().lower() == "limit" else _int_r(args.r)
        st = stable_line_summands_of_structure_sheaf(pd, args.p, r, args.allow_composite_p)
        report = {
            "type": rs.label,
            "levi": [i + 1 for i in sorted(pd.levi)],
            "p": args.p,
            "r": r,
            "summands": [list(w) for w in st.weights],
            "count": len(st.weights),
        }
        if st.threshold is not None:
            report["threshold_r"] = st.threshold
        lines = [str(list(w)) for w in st.weights]
        if st.threshold is not None:
            lines.append(f"stable from r = {st.threshold}")
        return report, "\n".join(lines), 0

    if cmd == "gros-kaneda":
        rs = build_root_system(args.type_spec)
        r = _int_r(args.r)
        m = gros_kaneda_multiplicity(rs, args.p, r, args.allow_composite_p)
        return {"type": rs.label, "p": args.p, "r": r, "multiplicity": str(m)}, str(m), 0

    if cmd == "verify":
        names = [s.strip() for s in args.suite.split(",") if s.strip()]
        unknown = [s for s in names if s != "all" and s not in SUITES]
        if unknown:
            raise UsageError(f"unknown suite {unknown[0]!r}")
        primes = tuple(parse_int_list(args.primes, "prime list"))
        for p in primes:
            check_characteristic(p, 1)
        if args.max_n < 1 or args.max_r < 1 or args.samples < 0:
            raise UsageError("--max-n and --max-r must be >= 1, --samples >= 0")
        results = []
        for name in (list(SUITES) if "all" in names else names):
            start = time.perf_counter()
            (res,) = run_suites([name], max_n=args.max_n, primes=primes, max_r=args.max_r, samples=args.samples, seed=args.seed)
            log.info("suite %s: %d passed, %d failed in %.2fs", name, res.passed, res.failed, time.perf_counter() - start)
            results.append(res)
        passed = sum(r.passed for r in results)
        failed = sum(r.failed for r in results)
        report = {
            "suite": args.suite,
            "passed": passed,
            "failed": failed,
            "results": [r.to_json() for r in results],
        }
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name:<14} passed={r.passed} failed={r.failed}" for r in results]
        lines.append(f"total passed={passed} failed={failed}")
        return report, "\n".join(lines), 0 if failed == 0 else 1

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("FROBSUM_LOG_LEVEL", "WARNING").upper(), format="%(levelname)s %(name)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(sys.argv[1:] if argv is None else argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, table, code = dispatch(args)
    except UsageError as exc:
        print(f"frobsum: usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"frobsum: error: {exc}", file=sys.stderr)
        return 1

    text = json.dumps(report, sort_keys=True, indent=2) if args.output_format == "json" else table
    if args.output_path:
        with open(args.output_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
