"""Command-line front end.

Subcommands:
  closed-form   evaluate W for a family/order by formula, recurrence, or replay
  generate      materialize a tree and write it as an edge-list file
  compute       run a brute-force Wiener algorithm on an edge-list file
  verify        sweep orders, comparing formula vs recurrence vs replay vs oracles
  bench         time the O(k)-arithmetic path against the O(n) and O(n^2) tiers

Exit codes: 0 success, 1 verification mismatch, 2 usage or input error,
3 internal invariant violation (a division that should have been exact).

All numeric output is exact decimal; JSON mode renders integers as decimal
strings because the values outgrow every fixed-width type.  Stdout is
byte-deterministic for identical invocations; bench writes its wall-clock
numbers to stderr (text mode) or into a dedicated "seconds" field (JSON).
"""

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from treewiener import compose, formulas, oracle
from treewiener.errors import (
    EmptyTreeError,
    NotDivisibleError,
    ParseError,
    ResourceLimitError,
    TreeWienerError,
)
from treewiener.trees import (
    DEFAULT_NODE_BUDGET,
    TreeFamily,
    generate,
    node_count,
    parse,
    serialize,
)

FAMILY_CHOICES = [f.value for f in TreeFamily]


def _formula_value(family: TreeFamily, k: int) -> int:
    if family is TreeFamily.BINOMIAL:
        return formulas.wiener_binomial(k)
    if family is TreeFamily.FIBONACCI:
        return formulas.wiener_fib(k)
    return formulas.wiener_binfib(k)


def _recurrence_value(family: TreeFamily, k: int) -> int:
    # The Fibonacci families have no separate closed form for W; their
    # recurrence evaluator serves both methods.
    if family is TreeFamily.BINOMIAL:
        return formulas.wiener_binomial_recurrence(k)
    return _formula_value(family, k)


def _min_verify_order(family: TreeFamily) -> int:
    # Binary Fibonacci order 0 is the empty tree: no Wiener index, no summary.
    return 1 if family is TreeFamily.BINARY_FIBONACCI else family.min_order


@dataclass
class VerificationEntry:
    order: int
    nodes: int
    formula_value: int
    replay_value: int
    oracle_value: int | None
    status: str  # match | mismatch | skipped


@dataclass
class VerificationReport:
    family: TreeFamily
    entries: list = field(default_factory=list)

    @property
    def all_match(self) -> bool:
        return all(e.status != "mismatch" for e in self.entries)


def _verify_order(family: TreeFamily, k: int, node_budget: int) -> VerificationEntry:
    """Compare every evaluation route for one order; oracles only run while
    the materialized tree fits the node budget."""
    formula = _formula_value(family, k)
    recurrence = _recurrence_value(family, k)
    replay = compose.replay_family(family, k).w
    n = node_count(family, k)
    values = [formula, recurrence, replay]
    oracle_value = None
    if n <= node_budget:
        tree = generate(family, k, max_nodes=max(node_budget, 1))
        oracle_value = oracle.wiener_bfs(tree)
        values.append(oracle_value)
        values.append(oracle.wiener_linear(tree))
    if any(v != values[0] for v in values[1:]):
        status = "mismatch"
    elif oracle_value is None:
        status = "skipped"
    else:
        status = "match"
    return VerificationEntry(k, n, formula, replay, oracle_value, status)


def _verify_order_args(args: tuple) -> VerificationEntry:
    return _verify_order(*args)


def run_verify(family: TreeFamily, max_order: int, node_budget: int,
               jobs: int = 1) -> VerificationReport:
    start = _min_verify_order(family)
    orders = range(start, max_order + 1)
    report = VerificationReport(family)
    if jobs > 1:
        tasks = [(family, k, node_budget) for k in orders]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            report.entries = list(pool.map(_verify_order_args, tasks))
    else:
        report.entries = [_verify_order(family, k, node_budget) for k in orders]
    return report


def _render_table(rows: list, out) -> None:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for r in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip(),
              file=out)


def _literal_note() -> str:
    literal = formulas.wiener_binfib_literal(3)
    corrected = formulas.wiener_binfib(3)
    return (
        f"note: the literal printed recurrence gives {literal} at order 3 "
        f"where direct enumeration gives {corrected}; the corrected form is "
        "used throughout and this divergence is documented, not a failure"
    )


# ---------------------------------------------------------------------------
# Subcommand handlers
# ---------------------------------------------------------------------------

def cmd_closed_form(args) -> int:
    family = TreeFamily(args.family)
    k = args.order
    if args.method == "closed":
        value = _formula_value(family, k)
    elif args.method == "recurrence":
        value = _recurrence_value(family, k)
    else:
        value = compose.replay_family(family, k).w
    if args.json:
        print(json.dumps({"family": family.value, "order": k,
                          "method": args.method, "value": str(value)}))
    else:
        print(value)
    return 0


def cmd_generate(args) -> int:
    family = TreeFamily(args.family)
    tree = generate(family, args.order, max_nodes=args.max_nodes)
    with open(args.out, "w", encoding="ascii", newline="\n") as fh:
        fh.write(serialize(tree))
    return 0


def cmd_compute(args) -> int:
    with open(args.input, "r", encoding="ascii") as fh:
        tree = parse(fh.read())
    algo = oracle.wiener_bfs if args.algo == "bfs" else oracle.wiener_linear
    print(algo(tree))
    return 0


def cmd_verify(args) -> int:
    family = TreeFamily(args.family)
    start = _min_verify_order(family)
    if args.max_order < start:
        print(f"error: --max-order must be >= {start} for {family.value}",
              file=sys.stderr)
        return 2
    report = run_verify(family, args.max_order, args.node_budget, args.jobs)
    note = _literal_note() if family is TreeFamily.BINARY_FIBONACCI else None
    if args.json:
        payload = {
            "family": family.value,
            "max_order": args.max_order,
            "node_budget": args.node_budget,
            "entries": [
                {
                    "order": e.order,
                    "nodes": str(e.nodes),
                    "formula_value": str(e.formula_value),
                    "replay_value": str(e.replay_value),
                    "oracle_value": None if e.oracle_value is None else str(e.oracle_value),
                    "status": e.status,
                }
                for e in report.entries
            ],
            "all_match": report.all_match,
        }
        if note:
            payload["note"] = note
        print(json.dumps(payload))
    else:
        rows = [["order", "nodes", "formula", "replay", "oracle", "status"]]
        for e in report.entries:
            rows.append([
                str(e.order), str(e.nodes), str(e.formula_value),
                str(e.replay_value),
                "-" if e.oracle_value is None else str(e.oracle_value),
                e.status,
            ])
        _render_table(rows, sys.stdout)
        if note:
            print(note)
        print("result:", "all match" if report.all_match else "MISMATCH")
    return 0 if report.all_match else 1


def cmd_bench(args) -> int:
    family = TreeFamily(args.family)
    start = _min_verify_order(family)
    if args.max_order < start:
        print(f"error: --max-order must be >= {start} for {family.value}",
              file=sys.stderr)
        return 2
    entries = []
    for k in range(start, args.max_order + 1):
        n = node_count(family, k)
        t0 = time.perf_counter()
        value = _formula_value(family, k)
        t_closed = time.perf_counter() - t0
        t0 = time.perf_counter()
        compose.replay_family(family, k)
        t_replay = time.perf_counter() - t0
        t_linear = t_bfs = None
        if n <= args.node_budget:
            tree = generate(family, k, max_nodes=max(args.node_budget, 1))
            t0 = time.perf_counter()
            oracle.wiener_linear(tree)
            t_linear = time.perf_counter() - t0
            if n <= args.bfs_budget:
                t0 = time.perf_counter()
                oracle.wiener_bfs(tree)
                t_bfs = time.perf_counter() - t0
        entries.append({
            "order": k, "nodes": n, "value": value,
            "linear": t_linear, "bfs": t_bfs,
            "closed_form": t_closed, "replay": t_replay,
        })

    def fmt_s(s):
        return "-" if s is None else f"{s:.6f}"

    if args.json:
        print(json.dumps({
            "family": family.value,
            "max_order": args.max_order,
            "entries": [
                {
                    "order": e["order"],
                    "nodes": str(e["nodes"]),
                    "value": str(e["value"]),
                    "linear": "ran" if e["linear"] is not None else "skipped",
                    "bfs": "ran" if e["bfs"] is not None else "skipped",
                    "seconds": {
                        "closed_form": e["closed_form"],
                        "replay": e["replay"],
                        "linear": e["linear"],
                        "bfs": e["bfs"],
                    },
                }
                for e in entries
            ],
        }))
    else:
        # Deterministic surface on stdout; wall times go to stderr.
        rows = [["order", "nodes", "wiener", "linear", "bfs"]]
        for e in entries:
            rows.append([
                str(e["order"]), str(e["nodes"]), str(e["value"]),
                "ran" if e["linear"] is not None else "skipped",
                "ran" if e["bfs"] is not None else "skipped",
            ])
        _render_table(rows, sys.stdout)
        trows = [["order", "closed_form_s", "replay_s", "linear_s", "bfs_s"]]
        for e in entries:
            trows.append([
                str(e["order"]), fmt_s(e["closed_form"]), fmt_s(e["replay"]),
                fmt_s(e["linear"]), fmt_s(e["bfs"]),
            ])
        _render_table(trows, sys.stderr)
    return 0


# ---------------------------------------------------------------------------
# Parser wiring
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treewiener",
        description="Exact Wiener indices of binomial, Fibonacci, and binary "
                    "Fibonacci trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("closed-form", help="evaluate W(family, order)")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--method", choices=["closed", "recurrence", "replay"],
                   default="closed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_closed_form)

    p = sub.add_parser("generate", help="write a tree as an edge-list file")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--order", required=True, type=int)
    p.add_argument("--out", required=True)
    p.add_argument("--max-nodes", type=int, default=DEFAULT_NODE_BUDGET)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("compute", help="Wiener index of an edge-list file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--algo", choices=["bfs", "linear"], default="linear")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="cross-validate formulas against oracles")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--max-order", required=True, type=int)
    p.add_argument("--node-budget", type=int, default=10**6)
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes for the per-order sweep")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time formula vs linear vs quadratic tiers")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--max-order", required=True, type=int)
    p.add_argument("--node-budget", type=int, default=10**6)
    p.add_argument("--bfs-budget", type=int, default=10**4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotDivisibleError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, EmptyTreeError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TreeWienerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
