"""Command-line front end.

    zzpoly zz --family ribbon 1 1 1 1 --method all
    zzpoly interface --family ribbon 3 6 5 4
    zzpoly verify --ribbon-max 3
    zzpoly bench --ribbon-max 3 --csv
    zzpoly covers --family parallelogram 2 2

Exit codes: 0 success, 2 usage/parameter error, 3 verification mismatch,
4 unsupported method/family or over the brute-force budget.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import os
import sys
import time
from collections import Counter, defaultdict
from dataclasses import dataclass

from . import closed_form as cf
from .clar_enum import dump_covers, enumerate_covers, zz_brute
from .engine import Decomposer
from .errors import ParameterError, ParseError, ZZError
from .interface import (
    central_decomposition,
    central_index,
    classify_cover_by_central_interface,
    interface_report,
    verify_first_rule,
)
from .lattice import (
    Benzenoid,
    RibbonParams,
    build_parallelogram,
    build_ribbon,
    parse_benzenoid,
)
from .poly import Polynomial, degree

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3
EXIT_UNSUPPORTED = 4

FAMILIES = ("parallelogram", "ribbon", "v3", "v4", "file")
ARITY = {"parallelogram": 2, "ribbon": 4, "v3": 3, "v4": 4, "file": 1}
PARAM_NAMES = {
    "parallelogram": ("m", "n"),
    "ribbon": ("n1", "n2", "m1", "m2"),
    "v3": ("k", "m", "n"),
    "v4": ("k1", "k2", "m", "n"),
}
DEFAULT_BUDGET = 40


class CLIError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple

    @classmethod
    def parse(cls, family: str, raw: list) -> "FamilySpec":
        if family not in FAMILIES:
            raise CLIError(f"unknown family {family!r}", EXIT_USAGE)
        if len(raw) != ARITY[family]:
            raise CLIError(
                f"family {family} takes {ARITY[family]} parameter(s), got {len(raw)}",
                EXIT_USAGE,
            )
        if family == "file":
            return cls(family, tuple(raw))
        values = []
        for name, text in zip(PARAM_NAMES[family], raw):
            try:
                values.append(int(text))
            except ValueError:
                raise CLIError(f"{name}={text!r}: not an integer", EXIT_USAGE) from None
        return cls(family, tuple(values))

    @property
    def label(self) -> str:
        return f"{self.family} " + " ".join(str(p) for p in self.params)

    def ribbon_params(self):
        if self.family == "ribbon":
            return RibbonParams(*self.params)
        if self.family == "v3":
            return cf.v3_params(*self.params)
        if self.family == "v4":
            return cf.v4_params(*self.params)
        return None

    def benzenoid(self) -> Benzenoid:
        if self.family == "parallelogram":
            return build_parallelogram(*self.params)
        if self.family == "file":
            path = self.params[0]
            try:
                with open(path) as fh:
                    return parse_benzenoid(fh.read())
            except OSError as exc:
                raise CLIError(f"cannot read {path}: {exc}", EXIT_USAGE) from exc
        return build_ribbon(self.ribbon_params())

    def closed(self) -> Polynomial:
        if self.family == "parallelogram":
            return cf.zz_parallelogram(*self.params)
        if self.family == "ribbon":
            return cf.zz_ribbon_closed(self.params)
        if self.family == "v3":
            return cf.zz_v3(*self.params)
        if self.family == "v4":
            return cf.zz_v4(*self.params)
        raise CLIError("no closed form for family 'file'", EXIT_UNSUPPORTED)


def brute_budget() -> int:
    text = os.environ.get("ZZ_BRUTE_BUDGET")
    if text is None:
        return DEFAULT_BUDGET
    try:
        return int(text)
    except ValueError:
        raise CLIError(f"ZZ_BRUTE_BUDGET={text!r}: not an integer", EXIT_USAGE) from None


def _check_budget(b: Benzenoid, budget: int):
    if len(b) > budget:
        raise CLIError(
            f"{len(b)} hexagons exceeds the brute-force budget of {budget}; "
            "use a smaller structure or raise ZZ_BRUTE_BUDGET",
            EXIT_UNSUPPORTED,
        )


def run_method(spec: FamilySpec, method: str, budget: int) -> Polynomial:
    if method == "closed":
        return spec.closed()
    b = spec.benzenoid()
    if method == "engine":
        return Decomposer().run(b)
    _check_budget(b, budget)
    return zz_brute(b)


def _invariants_dict(zz: Polynomial):
    if not zz:
        return None
    return cf.invariants_from_zz(zz).to_json()


def cmd_zz(args, out) -> int:
    spec = FamilySpec.parse(args.family, args.params)
    budget = brute_budget()
    if args.method == "all":
        methods = ["engine", "brute"]
        if spec.family != "file":
            methods.insert(0, "closed")
    else:
        methods = [args.method]
    results = {m: run_method(spec, m, budget) for m in methods}
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    zz = values[0]
    if args.json:
        json.dump({
            "family": spec.family,
            "params": list(spec.params),
            "zz": zz.to_json(),
            "methods": {m: p.to_json() for m, p in results.items()},
            "agree": agree,
            "invariants": _invariants_dict(zz),
        }, out)
        out.write("\n")
    else:
        out.write(f"{spec.label}\n")
        for m, p in results.items():
            out.write(f"  {m:<7} ZZ = {p.to_text(descending=True)}\n")
        if zz:
            inv = cf.invariants_from_zz(zz)
            out.write(f"K = {inv.kekule}\nC = {inv.clar_covers}\nCl = {inv.clar_number}\n"
                      f"ClarStructures = {inv.clar_structures}\n")
        else:
            out.write("non-Kekulean: no Clar covers\n")
        if len(results) > 1:
            out.write("all methods agree\n" if agree else "METHODS DISAGREE\n")
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_interface(args, out) -> int:
    spec = FamilySpec.parse(args.family, args.params)
    b = spec.benzenoid()
    report = interface_report(b)
    rp = spec.ribbon_params()
    if args.json:
        doc = json.loads(report.to_json())
        if rp is not None:
            doc["central_interface"] = central_index(rp)
        json.dump(doc, out)
        out.write("\n")
        return EXIT_OK
    out.write(f"{spec.label}\n")
    out.write(f"shapes: {report.shapes}\n")
    out.write("orders: " + ",".join(map(str, report.orders)) + "\n")
    out.write("edge_counts: " + ",".join(map(str, report.edge_counts)) + "\n")
    if rp is not None:
        c = central_index(rp)
        out.write(f"central interface: i_{c} (order {report.orders[c]}, "
                  f"{report.edge_counts[c]} vertical edges)\n")
    return EXIT_OK


def cmd_covers(args, out) -> int:
    spec = FamilySpec.parse(args.family, args.params)
    b = spec.benzenoid()
    _check_budget(b, brute_budget())
    dump_covers(b, out)
    return EXIT_OK


CHECKS = ("closed=triple", "closed=engine", "closed=brute", "symmetry",
          "Cl=deg", "central", "first_rule")


def _central_partition_ok(p: RibbonParams, b: Benzenoid) -> bool:
    per = defaultdict(Counter)
    for cover in enumerate_covers(b):
        cls = classify_cover_by_central_interface(p, cover, b)
        per[(cls.kind, cls.k)][cover.order] += 1
    classes = central_decomposition(p)
    if len(per) > len(classes):
        return False
    for cls in classes:
        counts = per.get((cls.kind, cls.k), Counter())
        got = Polynomial(tuple(counts.get(i, 0) for i in range(max(counts, default=-1) + 1)))
        if got != cls.polynomial():
            return False
    return True


def verify_ribbon(p: RibbonParams) -> tuple:
    """Run every check on one ribbon; returns (results, polynomials)."""
    t = p.astuple()
    b = build_ribbon(p)
    closed = cf.zz_ribbon_closed(p)
    polys = {
        "closed": closed,
        "triple": cf.zz_ribbon_triple(p),
        "engine": Decomposer().run(b),
        "brute": zz_brute(b),
        "mirror": cf.zz_ribbon_closed((t[2], t[3], t[0], t[1])),
    }
    results = {
        "closed=triple": polys["triple"] == closed,
        "closed=engine": polys["engine"] == closed,
        "closed=brute": polys["brute"] == closed,
        "symmetry": polys["mirror"] == closed,
        "Cl=deg": cf.clar_number_formula(p) == degree(closed),
        "central": _central_partition_ok(p, b),
        "first_rule": verify_first_rule(b),
    }
    return results, polys


def cmd_verify(args, out) -> int:
    budget = brute_budget()
    hi = args.ribbon_max
    if hi < 1:
        raise CLIError(f"--ribbon-max={hi}: must be >= 1", EXIT_USAGE)
    largest = RibbonParams(hi, hi, hi, hi).hexagon_count
    if largest > budget:
        raise CLIError(
            f"--ribbon-max {hi} reaches {largest} hexagons, over the brute-force "
            f"budget of {budget}; lower --ribbon-max or raise ZZ_BRUTE_BUDGET",
            EXIT_UNSUPPORTED,
        )
    out.write("params    " + " ".join(f"{c:>13}" for c in CHECKS) + "\n")
    failure = None
    for t in itertools.product(range(1, hi + 1), repeat=4):
        results, polys = verify_ribbon(RibbonParams(*t))
        cells = " ".join(f"{'ok' if results[c] else 'FAIL':>13}" for c in CHECKS)
        out.write(f"{' '.join(map(str, t)):<9} {cells}\n")
        if failure is None and not all(results.values()):
            failure = (t, results, polys)
    if failure is not None:
        t, results, polys = failure
        bad = [c for c in CHECKS if not results[c]]
        out.write(f"FAIL at Rb{t}: {', '.join(bad)}\n")
        for name, p in polys.items():
            out.write(f"  {name}: {p.to_text(descending=True)}\n")
        return EXIT_MISMATCH
    out.write(f"all checks passed for {hi ** 4} ribbons\n")
    return EXIT_OK


def cmd_bench(args, out) -> int:
    budget = brute_budget()
    if args.family:
        specs = [FamilySpec.parse(args.family, args.params)]
    else:
        specs = [FamilySpec("ribbon", (k, k, k, k)) for k in range(1, args.ribbon_max + 1)]
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    for m in methods:
        if m not in ("closed", "engine", "brute"):
            raise CLIError(f"unknown method {m!r}", EXIT_USAGE)
    rows = []
    for spec in specs:
        for method in methods:
            if method == "closed" and spec.family == "file":
                continue
            stats = None
            start = time.perf_counter()
            if method == "closed":
                zz = spec.closed()
            elif method == "engine":
                dec = Decomposer()
                zz = dec.run(spec.benzenoid())
                stats = dec.stats
            else:
                b = spec.benzenoid()
                if len(b) > budget:
                    print(f"skipping brute for {spec.label}: {len(b)} hexagons "
                          f"over budget {budget}", file=sys.stderr)
                    continue
                zz = zz_brute(b)
            ms = (time.perf_counter() - start) * 1000.0
            rows.append((spec, method, ms, zz, stats))
    if args.csv:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["family", "params", "method", "ms", "poly_degree"])
        for spec, method, ms, zz, _ in rows:
            deg = degree(zz)
            writer.writerow([spec.family, " ".join(map(str, spec.params)), method,
                             f"{ms:.3f}", deg if zz else "-inf"])
        return EXIT_OK
    out.write(f"{'family':<14}{'params':<14}{'method':<8}{'ms':>12}  {'deg':>4}  cache\n")
    for spec, method, ms, zz, stats in rows:
        deg = degree(zz) if zz else "-inf"
        cache = ""
        if stats is not None:
            cache = f"hits={stats.hits} misses={stats.misses} depth={stats.max_depth}"
        out.write(f"{spec.family:<14}{' '.join(map(str, spec.params)):<14}{method:<8}"
                  f"{ms:>12.3f}  {deg:>4}  {cache}\n")
    return EXIT_OK


def _add_family(parser, required=True):
    parser.add_argument("--family", choices=FAMILIES, required=required,
                        help="structure family")
    parser.add_argument("params", nargs="*",
                        help="family parameters (or a JSON file path for 'file')")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zzpoly",
        description="Zhang-Zhang polynomials of parallelograms, ribbons and arbitrary benzenoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zz", help="compute a ZZ polynomial and its invariants")
    _add_family(p)
    p.add_argument("--method", choices=("closed", "engine", "brute", "all"), default="closed")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zz)

    p = sub.add_parser("interface", help="fragment shapes and interface orders")
    _add_family(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_interface)

    p = sub.add_parser("verify", help="cross-check all methods over a ribbon sweep")
    p.add_argument("--ribbon-max", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the methods")
    _add_family(p, required=False)
    p.add_argument("--ribbon-max", type=int, default=3,
                   help="sweep Rb(k,k,k,k) for k = 1..N when no --family is given")
    p.add_argument("--methods", default="closed,engine,brute")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("covers", help="dump every Clar cover as JSON lines")
    _add_family(p)
    p.set_defaults(func=cmd_covers)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "family", None) is None and args.command == "bench" and args.params:
        parser.error("parameters given without --family")
    try:
        return args.func(args, out)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParameterError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZZError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED


if __name__ == "__main__":
    sys.exit(main())
