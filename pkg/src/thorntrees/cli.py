"""Command-line surface: exact tables, verification suites, transforms,
and DOT exports.

Exit codes: 0 pass, 1 fail, 2 refusal or usage error.  All numeric
output is exact; stdout payloads are byte-stable across identical
invocations (timing goes to stderr).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import bijection, counting, dot, oracle, structures, symfun
from .oracle import BudgetExceeded
from .partition import Partition, partitions_of
from .structures import ParseError

SOLVER_LIMIT = 40  # solve_B stays fast up to roughly this size


@dataclass
class RunReport:
    """Deterministic machine-readable result of one verification run."""

    command: str
    items: list = field(default_factory=list)
    refused: str = None
    wall_time: float = 0.0

    def add(self, name, expected, actual, provenance):
        self.items.append({"actual": str(actual), "check": name,
                           "expected": str(expected),
                           "ok": expected == actual,
                           "provenance": provenance})

    @property
    def status(self):
        if self.refused:
            return "refused"
        return "pass" if all(it["ok"] for it in self.items) else "fail"

    def to_json(self):
        obj = {"command": self.command, "items": self.items,
               "status": self.status}
        if self.refused:
            obj["reason"] = self.refused
        return json.dumps(obj, sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# table


def cmd_table(args):
    fam, n = args.family, args.n
    if fam == "stirling":
        row = counting.stirling1_row(n)
        if args.format == "json":
            print(json.dumps({"family": "stirling", "n": n,
                              "provenance": "formula",
                              "row": [str(v) for v in row[1:]]},
                             sort_keys=True))
        else:
            print("n,m,value,provenance")
            for m in range(1, n + 1):
                print("%d,%d,%d,formula" % (n, m, row[m]))
        return 0
    if fam == "Bprime":
        if n > SOLVER_LIMIT:
            print("refused: n=%d exceeds solver limit %d" % (n, SOLVER_LIMIT),
                  file=sys.stderr)
            return 2
        table = counting.solve_B(n)
        if args.format == "json":
            print(json.dumps(
                {"family": "Bprime", "n": n, "provenance": "solver",
                 "rows": [[str(m), str(counting.count_Bprime(n, m, table))]
                          for m in range(1, n + 1)]}, sort_keys=True))
        else:
            print("m,value,provenance")
            for m in range(1, n + 1):
                print("%d,%d,solver" % (m, counting.count_Bprime(n, m, table)))
        return 0
    if fam == "B":
        if n > SOLVER_LIMIT:
            print("refused: n=%d exceeds solver limit %d" % (n, SOLVER_LIMIT),
                  file=sys.stderr)
            return 2
        table = counting.solve_B(n)
    else:
        try:
            table = (oracle.table_for(fam, n, args.budget) if args.oracle
                     else counting.table_for(fam, n))
        except BudgetExceeded as exc:
            print("refused: %s" % exc, file=sys.stderr)
            return 2
    if args.format == "json":
        obj = table.to_json_obj()
        if args.parity is not None:
            obj["rows"] = [[lam.exponential(), str(table.entries[lam])]
                           for lam in partitions_of(n, args.parity)]
        print(json.dumps(obj, sort_keys=True))
    else:
        if args.parity is None:
            sys.stdout.write(table.to_csv())
        else:
            print("partition,value,provenance")
            for lam in partitions_of(n, args.parity):
                print("%s,%d,%s" % (lam.exponential(), table.entries[lam],
                                    table.provenance))
    return 0


# ---------------------------------------------------------------------------
# verify


def _suite_zagier(n, budget, report):
    if n > SOLVER_LIMIT:
        report.refused = "n=%d exceeds solver limit %d" % (n, SOLVER_LIMIT)
        return
    for row in counting.verify_zagier(n):
        lhs = n * (n + 1) // 2 * row["Bprime"]
        if row["m"] % 2 == n % 2:
            report.add("zagier m=%d" % row["m"], row["stirling"], lhs, "solver")
        else:
            report.add("offparity m=%d" % row["m"], 0, row["Bprime"], "solver")
    if n <= budget:
        for m in range(1, n + 1):
            report.add("oracle Bprime m=%d" % m,
                       counting.count_Bprime(n, m),
                       oracle.enumerate_Bprime(n, m, budget), "oracle")


def _suite_reformulation(n, budget, report):
    for lam in partitions_of(n):
        p = lam.length
        got = oracle.reformulation_probability(lam, budget)
        report.add("probability %s" % lam.exponential(),
                   Fraction(1, n - p + 1), got, "oracle")


def _suite_identities(n, budget, report):
    for rep in (symfun.verify_C2A(n), symfun.verify_D2B(n),
                symfun.verify_reduction(n)):
        report.add(rep["check"], [], rep["diffs"], "formula")


def _suite_bijection(n, budget, report):
    for lam in partitions_of(n):
        images = set()
        for m in structures.all_star_maps(lam, budget):
            t = bijection.psi(m)
            images.add(t)
            out = bijection.psi_inverse(t)
            if not (out.success and out.map == m):
                report.add("roundtrip %s" % lam.exponential(), m, out.map,
                           "oracle")
                break
        report.add("injectivity+image %s" % lam.exponential(),
                   counting.count_D(lam), len(images), "oracle")
        agree = all(
            (bijection.classify(t).kind == "image")
            == bijection.psi_inverse(t).success
            for t in structures.all_permuted_trees(lam, budget))
        report.add("classify agreement %s" % lam.exponential(), True, agree,
                   "oracle")


def _suite_proportions(n, budget, report):
    for lam in partitions_of(n):
        p = lam.length
        P, Pp = bijection.proportion_stats(lam, budget)
        report.add("P %s" % lam.exponential(), Fraction(1, n - p + 1), P,
                   "oracle")
        report.add("P' %s" % lam.exponential(),
                   Fraction(n, p * (n - p + 1)), Pp, "oracle")
        with_p1 = sum(1 for t in structures.all_permuted_trees(lam, budget)
                      if t.tree.white[0] is not None)
        total = sum(1 for _ in structures.all_permuted_trees(lam, budget))
        report.add("P1 incidence %s" % lam.exponential(),
                   Fraction(p, n), Fraction(with_p1, total), "oracle")


SUITES = {"zagier": _suite_zagier, "reformulation": _suite_reformulation,
          "identities": _suite_identities, "bijection": _suite_bijection,
          "proportions": _suite_proportions}


def cmd_verify(args):
    report = RunReport(command="verify %s %d" % (args.suite, args.n))
    t0 = time.monotonic()
    try:
        SUITES[args.suite](args.n, args.budget, report)
    except BudgetExceeded as exc:
        report.refused = str(exc)
    report.wall_time = time.monotonic() - t0
    print(report.to_json())
    print("wall time: %.3fs" % report.wall_time, file=sys.stderr)
    return {"pass": 0, "fail": 1, "refused": 2}[report.status]


# ---------------------------------------------------------------------------
# transform / export-dot


def _load(path):
    with open(path) as fh:
        return structures.deserialize(fh.read())


def _emit(args, text):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_transform(args):
    obj = _load(args.input)
    if args.direction == "psi":
        result = structures.serialize(bijection.psi(obj)) + "\n"
    elif args.direction == "invert":
        out = bijection.psi_inverse(obj)
        result = json.dumps(out.to_json_obj(), sort_keys=True,
                            separators=(",", ":")) + "\n"
    elif args.direction == "classify":
        c = bijection.classify(obj)
        result = json.dumps(c.to_json_obj(), sort_keys=True,
                            separators=(",", ":")) + "\n"
    elif args.direction == "contract":
        if args.mark is None:
            print("contract requires --mark BLACK_VERTEX", file=sys.stderr)
            return 2
        t2, elem = bijection.contract(obj, args.mark)
        result = json.dumps(
            {"marked_element": list(elem),
             "tree": structures.to_json_obj(t2)},
            sort_keys=True, separators=(",", ":")) + "\n"
    _emit(args, result)
    return 0


def cmd_export_dot(args):
    obj = _load(args.input)
    if args.aux:
        obj = bijection.aux_graph(obj)
    _emit(args, dot.to_dot(obj))
    return 0


# ---------------------------------------------------------------------------


def build_parser():
    ap = argparse.ArgumentParser(
        prog="thorntrees",
        description="Exact counting and bijections for star-map "
                    "factorizations and star thorn trees.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    t = sub.add_parser("table", help="print a counting table")
    t.add_argument("family",
                   choices=["A", "B", "Bprime", "C", "D", "ST", "stirling"])
    t.add_argument("n", type=int)
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.add_argument("--budget", type=int, default=oracle.DEFAULT_SN_BUDGET)
    t.add_argument("--parity", type=int, default=None,
                   help="keep only partitions with this length parity")
    t.add_argument("--oracle", action="store_true",
                   help="use brute-force enumeration instead of formulas")
    t.set_defaults(fn=cmd_table)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("n", type=int)
    v.add_argument("--budget", type=int, default=oracle.DEFAULT_PAIR_BUDGET)
    v.set_defaults(fn=cmd_verify)

    tr = sub.add_parser("transform", help="apply a bijection step to a file")
    tr.add_argument("direction", choices=["psi", "invert", "classify",
                                          "contract"])
    tr.add_argument("input")
    tr.add_argument("-o", "--output", default=None)
    tr.add_argument("--mark", type=int, default=None,
                    help="marked black vertex for contract")
    tr.set_defaults(fn=cmd_transform)

    d = sub.add_parser("export-dot", help="render an object as Graphviz DOT")
    d.add_argument("input")
    d.add_argument("-o", "--output", default=None)
    d.add_argument("--aux", action="store_true",
                   help="render the auxiliary graph of a permuted tree")
    d.set_defaults(fn=cmd_export_dot)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print("refused: %s" % exc, file=sys.stderr)
        return 2
    except (ParseError, ValueError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
