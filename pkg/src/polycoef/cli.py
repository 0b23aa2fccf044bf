"""Command-line surface: query, row, table, verify, bench.

All coefficient values are printed as decimal strings (also inside
JSON, quoted) since they outgrow 64-bit range quickly. Exit codes:
0 success / all checks pass, 1 verification failure, 2 usage error.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from . import densepoly, euler_recurrence, verifier

DEFAULT_AUTO_THRESHOLD = 512
STRATEGIES = ("euler", "direct", "binpow")


@dataclass
class QueryConfig:
    terms_m: int
    power_n: int
    degree_lambda: int = 0
    strategy: str = "auto"
    format: str = "text"

    def resolve_strategy(self, full_row: bool) -> str:
        if self.strategy != "auto":
            return self.strategy
        if not full_row:
            return "euler"
        threshold = int(os.environ.get("POLYCOEF_AUTO_THRESHOLD", DEFAULT_AUTO_THRESHOLD))
        if (self.terms_m - 1) * self.power_n > threshold:
            return "binpow"
        return "euler"


def _usage_error(message: str) -> int:
    print(f"polycoef: error: {message}", file=sys.stderr)
    return 2


def _row_coeffs(cfg: QueryConfig) -> tuple[int, ...]:
    strategy = cfg.resolve_strategy(full_row=True)
    if strategy == "euler":
        return euler_recurrence.row(cfg.terms_m, cfg.power_n).coeffs
    method = "binary" if strategy == "binpow" else "repeated"
    return densepoly.direct_row(cfg.terms_m, cfg.power_n, method).coeffs


def _render_row(m: int, n: int, coeffs, fmt: str) -> str:
    if fmt == "csv":
        return ",".join(str(c) for c in coeffs)
    if fmt == "json":
        return json.dumps({"m": m, "n": n, "coeffs": [str(c) for c in coeffs]})
    return " ".join(str(c) for c in coeffs)


def cmd_query(cfg: QueryConfig) -> int:
    strategy = cfg.resolve_strategy(full_row=False)
    if strategy == "euler":
        value = euler_recurrence.coeff(cfg.terms_m, cfg.power_n, cfg.degree_lambda)
    else:
        coeffs = _row_coeffs(
            QueryConfig(cfg.terms_m, cfg.power_n, strategy=strategy)
        )
        lam = cfg.degree_lambda
        value = coeffs[lam] if 0 <= lam < len(coeffs) else 0
    print(value)
    return 0


def cmd_row(cfg: QueryConfig) -> int:
    coeffs = _row_coeffs(cfg)
    print(_render_row(cfg.terms_m, cfg.power_n, coeffs, cfg.format))
    return 0


def cmd_table(m: int, n_max: int, fmt: str, strategy: str = "auto") -> int:
    rows = []
    memo: dict = {}
    for n in range(n_max + 1):
        cfg = QueryConfig(m, n, strategy=strategy)
        resolved = cfg.resolve_strategy(full_row=True)
        if resolved == "euler":
            coeffs = euler_recurrence.row(m, n, memo).coeffs
        else:
            method = "binary" if resolved == "binpow" else "repeated"
            coeffs = densepoly.direct_row(m, n, method).coeffs
        rows.append(coeffs)
    if fmt == "json":
        print(
            json.dumps(
                {
                    "m": m,
                    "rows": [
                        {"n": n, "coeffs": [str(c) for c in coeffs]}
                        for n, coeffs in enumerate(rows)
                    ],
                }
            )
        )
    else:
        sep = "," if fmt == "csv" else " "
        for coeffs in rows:
            print(sep.join(str(c) for c in coeffs))
    return 0


def cmd_verify(m_max: int, n_max: int) -> int:
    memo: dict = {}
    report = verifier.run_paper_fixtures(memo)
    report.merge(verifier.cross_check(m_max, n_max, memo))
    report.merge(verifier.check_reduced_forms(n_max, memo))
    for m in range(1, m_max + 1):
        for n in range(n_max + 1):
            report.merge(
                verifier.check_row_invariants(euler_recurrence.row(m, n, memo))
            )
    print(report.to_json())
    return 0 if report.ok else 1


def _bench_strategy(strategy: str, m: int, n: int, central: int) -> tuple[dict, tuple, int]:
    """Returns (stats, row coefficients, central coefficient value)."""
    stats: dict = {}
    if strategy == "euler":
        memo: dict = {}
        t0 = time.perf_counter_ns()
        coeffs = euler_recurrence.row(m, n, memo).coeffs
        stats["row_wall_ns"] = time.perf_counter_ns() - t0
        stats["memo_entries"] = len(memo)
        memo = {}
        t0 = time.perf_counter_ns()
        value = euler_recurrence.coeff(m, n, central, memo)
        stats["coeff_wall_ns"] = time.perf_counter_ns() - t0
    else:
        method = "binary" if strategy == "binpow" else "repeated"
        ops: dict = {}
        t0 = time.perf_counter_ns()
        coeffs = densepoly.direct_row(m, n, method, ops).coeffs
        stats["row_wall_ns"] = time.perf_counter_ns() - t0
        stats["multiplications"] = ops.get("mul", 0)
        t0 = time.perf_counter_ns()
        value = densepoly.direct_row(m, n, method).coeffs[central]
        stats["coeff_wall_ns"] = time.perf_counter_ns() - t0
    stats["peak_coefficient_bits"] = max(c.bit_length() for c in coeffs)
    return stats, coeffs, value


def cmd_bench(m: int, n: int, strategies: list[str]) -> int:
    central = (m - 1) * n // 2
    results = {}
    rows = {}
    values = {}
    for strategy in strategies:
        stats, coeffs, value = _bench_strategy(strategy, m, n, central)
        results[strategy] = stats
        rows[strategy] = coeffs
        values[strategy] = value
    reference = strategies[0]
    agreement = all(
        rows[s] == rows[reference] and values[s] == values[reference]
        for s in strategies
    )
    report = {
        "m": m,
        "n": n,
        "central_degree": central,
        "memo_mode": euler_recurrence.MEMO_MODE,
        "agreement": agreement,
        "strategies": results,
    }
    if not agreement:
        print("polycoef: error: strategies disagree on coefficient values", file=sys.stderr)
        print(json.dumps(report, indent=2))
        return 1
    print(json.dumps(report, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycoef",
        description="Exact coefficients of (1 + x + ... + x^(m-1))^n",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_mn(p, with_degree=False):
        p.add_argument("-m", "--terms", type=int, required=True, help="number of terms m >= 1")
        p.add_argument("-n", "--power", type=int, required=True, help="exponent n >= 0")
        if with_degree:
            p.add_argument(
                "-l", "--degree", type=int, required=True,
                help="degree to query; out-of-range degrees give 0",
            )

    q = sub.add_parser("query", help="print one coefficient")
    add_mn(q, with_degree=True)
    q.add_argument("--strategy", choices=("euler", "direct", "binpow", "auto"), default="auto")
    q.add_argument("--format", choices=("text", "csv", "json"), default="text")

    r = sub.add_parser("row", help="print one full coefficient row")
    add_mn(r)
    r.add_argument("--strategy", choices=("euler", "direct", "binpow", "auto"), default="auto")
    r.add_argument("--format", choices=("text", "csv", "json"), default="text")

    t = sub.add_parser("table", help="print rows n = 0..N as a triangle")
    t.add_argument("-m", "--terms", type=int, required=True)
    t.add_argument("--max-n", type=int, required=True)
    t.add_argument("--strategy", choices=("euler", "direct", "binpow", "auto"), default="auto")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")

    v = sub.add_parser("verify", help="run fixtures, invariants and cross-checks")
    v.add_argument("--m-max", type=int, default=6)
    v.add_argument("--n-max", type=int, default=12)

    b = sub.add_parser("bench", help="time the strategies against each other")
    add_mn(b)
    b.add_argument(
        "--strategies",
        default="euler,direct,binpow",
        help="comma-separated subset of euler,direct,binpow",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "query":
            if args.terms < 1:
                return _usage_error(f"m must be >= 1, got {args.terms}")
            if args.power < 0:
                return _usage_error(f"n must be >= 0, got {args.power}")
            return cmd_query(
                QueryConfig(args.terms, args.power, args.degree, args.strategy, args.format)
            )
        if args.command == "row":
            if args.terms < 1:
                return _usage_error(f"m must be >= 1, got {args.terms}")
            if args.power < 0:
                return _usage_error(f"n must be >= 0, got {args.power}")
            return cmd_row(
                QueryConfig(args.terms, args.power, strategy=args.strategy, format=args.format)
            )
        if args.command == "table":
            if args.terms < 1:
                return _usage_error(f"m must be >= 1, got {args.terms}")
            if args.max_n < 0:
                return _usage_error(f"max-n must be >= 0, got {args.max_n}")
            return cmd_table(args.terms, args.max_n, args.format, args.strategy)
        if args.command == "verify":
            if args.m_max < 1:
                return _usage_error(f"m-max must be >= 1, got {args.m_max}")
            if args.n_max < 0:
                return _usage_error(f"n-max must be >= 0, got {args.n_max}")
            return cmd_verify(args.m_max, args.n_max)
        if args.command == "bench":
            if args.terms < 1:
                return _usage_error(f"m must be >= 1, got {args.terms}")
            if args.power < 0:
                return _usage_error(f"n must be >= 0, got {args.power}")
            strategies = [s for s in args.strategies.split(",") if s]
            if not strategies:
                return _usage_error("at least one strategy is required")
            for s in strategies:
                if s not in STRATEGIES:
                    return _usage_error(f"unknown strategy {s!r}")
            return cmd_bench(args.terms, args.power, strategies)
        return _usage_error(f"unknown command {args.command!r}")
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
