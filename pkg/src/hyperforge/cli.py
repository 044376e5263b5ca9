"""Command-line front end.

Batch commands over structure files: validate, classify, ideals,
congruences, verify, enumerate, search-p85.  Output is deterministic for
fixed inputs, seeds, and any thread count; ``--format records`` switches to
line-delimited canonical JSON records.

Exit codes: 0 success, 1 theorem failure or search finding, 2 usage or
parse error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import congruence as cong
from . import explore
from .classify import RegularityClass, classify
from .core import members, subset_repr, validate
from .errors import BudgetExceeded, CarrierTooLarge, HyperforgeError
from .fuzzy import DEFAULT_GRID
from .ideals import Flavor, IdealKind, enumerate_ideals
from .io import (FormatError, dumps_structure, load_structure_file,
                 structure_to_doc)
from .verify import ALL_THEOREM_IDS, VerifyConfig, run_suite

EXIT_OK = 0
EXIT_FINDING = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _record(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _blocks_repr(p: cong.Partition, names) -> str:
    return "".join(subset_repr(b, names) for b in p.blocks())


def _load(path: str):
    s, names, grades = load_structure_file(path)
    return s, names, grades


def _flavor_arg(parser):
    parser.add_argument("--flavor", choices=["ordered", "plain"], default=None,
                        help="ordered uses the order and closures; default: "
                             "ordered when the file carries an order")


def _pick_flavor(args, s) -> Flavor:
    if args.flavor == "ordered" or (args.flavor is None and s.order is not None):
        return Flavor.ORDERED
    return Flavor.PLAIN


def cmd_validate(args) -> int:
    s, _names, _grades = _load(args.file)
    report = validate(s)
    if args.format == "records":
        checks = {"totality": report.totality.ok}
        for key, chk in [("associativity", report.associativity),
                         ("order_axioms", report.order_axioms),
                         ("compatibility", report.compatibility)]:
            checks[key] = None if chk is None else chk.ok
        print(_record({"record": "validation", "checks": checks,
                       "ok": report.ok}))
    else:
        for line in report.lines():
            print(line)
        print("result: " + ("valid" if report.ok else "INVALID"))
    return EXIT_OK if report.ok else EXIT_FINDING


def cmd_classify(args) -> int:
    s, names, _grades = _load(args.file)
    report = validate(s)
    if not report.ok:
        print("structure fails validation", file=sys.stderr)
        return EXIT_FINDING
    flavor = _pick_flavor(args, s)
    for cls in RegularityClass:
        res = classify(s, cls, flavor)
        if args.format == "records":
            witness = None
            if res.ok:
                witness = {names[a]: [names[x] for x in w]
                           for a, w in sorted(res.witnesses.items())}
            print(_record({"record": "class", "class": cls.value,
                           "holds": res.ok, "witness": witness,
                           "failing": None if res.ok else names[res.failing]}))
        elif res.ok:
            parts = ", ".join(
                f"{names[a]}:({','.join(names[x] for x in w)})"
                for a, w in sorted(res.witnesses.items()))
            print(f"{cls.value}: true [{parts}]")
        else:
            print(f"{cls.value}: false [no realizer for {names[res.failing]}]")
    return EXIT_OK


def cmd_ideals(args) -> int:
    s, names, _grades = _load(args.file)
    validate(s)
    flavor = _pick_flavor(args, s)
    kind = IdealKind(args.kind)
    found = enumerate_ideals(s, kind, flavor)
    if args.format == "records":
        for A in found:
            print(_record({"record": "ideal", "kind": kind.value,
                           "members": [names[x] for x in members(A)]}))
    else:
        for A in found:
            print(subset_repr(A, names))
    return EXIT_OK


def cmd_congruences(args) -> int:
    s, names, _grades = _load(args.file)
    report = validate(s)
    if not report.ok:
        print("structure fails validation", file=sys.stderr)
        return EXIT_FINDING
    shown = []
    for p in cong.all_partitions(s.n):
        if not cong.is_congruence(s, p).ok:
            continue
        if args.semilattice or args.complete:
            if not cong.is_semilattice_congruence(s, p):
                continue
        if args.complete and not cong.is_complete(s, p):
            continue
        shown.append(p)
    kind = ("complete semilattice congruence" if args.complete
            else "semilattice congruence" if args.semilattice else "congruence")
    for p in shown:
        if args.format == "records":
            print(_record({"record": "congruence", "kind": kind,
                           "blocks": [[names[x] for x in members(b)]
                                      for b in p.blocks()]}))
        else:
            print(f"{kind}: {_blocks_repr(p, names)}")
    flavor = Flavor.ORDERED if s.order is not None else Flavor.PLAIN
    n_rel = cong.relation_N(s, flavor)
    least = cong.least_semilattice_congruence(s)
    if args.format == "records":
        print(_record({"record": "relation-N",
                       "blocks": [[names[x] for x in members(b)]
                                  for b in n_rel.blocks()]}))
        print(_record({"record": "least-semilattice-congruence",
                       "blocks": [[names[x] for x in members(b)]
                                  for b in least.blocks()]}))
    else:
        print(f"relation-N: {_blocks_repr(n_rel, names)}")
        print(f"least-semilattice-congruence: {_blocks_repr(least, names)}")
    return EXIT_OK


def _parse_grid(raw: str):
    try:
        return tuple(Fraction(part) for part in raw.split(","))
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"bad grid {raw!r}")


def cmd_verify(args) -> int:
    s, _names, _grades = _load(args.file)
    validate(s)
    ids = None
    if args.theorems and args.theorems != "all":
        ids = [t.strip().upper() for t in args.theorems.split(",") if t.strip()]
        for tid in ids:
            if tid not in ALL_THEOREM_IDS:
                print(f"unknown theorem id {tid}", file=sys.stderr)
                return EXIT_USAGE
    cfg = VerifyConfig(grid=_parse_grid(args.grid) if args.grid else DEFAULT_GRID)
    reports = run_suite(s, ids, cfg)
    budget_hit = False
    any_fail = False
    for rep in reports:
        if rep.verdict == "fails":
            any_fail = True
        if (rep.verdict == "not-applicable" and isinstance(rep.witness, dict)
                and "budget_exceeded" in rep.witness):
            budget_hit = True
        if args.format == "records":
            print(_record({"record": "theorem", **rep.canonical()}))
        else:
            extra = ""
            if rep.witness is not None:
                extra = " " + json.dumps(rep.witness, sort_keys=True)
            print(f"{rep.theorem}: {rep.verdict}{extra} micros={rep.micros}")
    if args.out and any_fail:
        os.makedirs(args.out, exist_ok=True)
        doc = structure_to_doc(s)
        for rep in reports:
            if rep.verdict != "fails":
                continue
            path = os.path.join(args.out, f"finding-{rep.theorem}.json")
            with open(path, "w", encoding="utf-8") as fh:
                json.dump({"record": "finding", "theorem": rep.theorem,
                           "witness": rep.witness, "structure": doc},
                          fh, sort_keys=True, indent=2)
                fh.write("\n")
    if budget_hit:
        return EXIT_BUDGET
    return EXIT_FINDING if any_fail else EXIT_OK


def _parse_requirements(raw: str) -> dict:
    out = {"associative": False, "ordered": False, "compatible": False}
    for token in raw.split(","):
        token = token.strip().lower()
        if not token or token == "total":
            continue
        if token in ("assoc", "associative"):
            out["associative"] = True
        elif token == "ordered":
            out["ordered"] = True
        elif token in ("compat", "compatible"):
            out["ordered"] = True
            out["compatible"] = True
        else:
            raise FormatError(f"unknown requirement {token!r}")
    return out


def cmd_enumerate(args) -> int:
    req = _parse_requirements(args.require or "")
    spec = explore.EnumSpec(
        n=args.n, associative=req["associative"], ordered=req["ordered"],
        compatible=req["compatible"] or not req["ordered"],
        mode="random" if args.count else "exhaustive",
        seed=args.seed, count=args.count, canonical_only=args.canonical)
    targets = [t.strip() for t in (args.census or "").split(",") if t.strip()]
    if targets:
        census = explore.classify_corpus(spec, targets, budget=args.budget,
                                         threads=args.threads)
        if args.format == "records":
            print(_record({"record": "census", **census}))
        else:
            print(f"corpus-size: {census['corpus_size']}")
            for name in targets:
                if name in census["classes"]:
                    print(f"class {name}: {census['classes'][name]}")
                else:
                    counts = census["theorems"][name]
                    print(f"theorem {name}: holds={counts['holds']} "
                          f"fails={counts['fails']} "
                          f"not-applicable={counts['not-applicable']}")
        return EXIT_OK
    count = 0
    for s in explore.enumerate_structures(spec, budget=args.budget):
        count += 1
        if args.format == "records":
            print(_record({"record": "structure",
                           **structure_to_doc(s)}))
    print(f"examined: {count}" if args.format != "records"
          else _record({"record": "summary", "examined": count}))
    return EXIT_OK


def cmd_search_p85(args) -> int:
    findings, cert = explore.search_p85(
        n=args.n, budget=args.budget, seed=args.seed, count=args.count,
        threads=args.threads)
    cert_payload = {"record": "certificate",
                    "slice": cert.slice_spec, "examined": cert.examined,
                    "findings": cert.findings,
                    "exhaustive": cert.exhaustive,
                    "zero_findings": cert.zero_findings}
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        index = []
        for i, finding in enumerate(findings):
            name = f"p85-finding-{i:04d}.json"
            with open(os.path.join(args.out, name), "w", encoding="utf-8") as fh:
                json.dump(finding.document, fh, indent=2)
                fh.write("\n")
            index.append({"file": name,
                          "relation_n": list(finding.relation_n),
                          "least": list(finding.least)})
        with open(os.path.join(args.out, "p85-index.json"), "w",
                  encoding="utf-8") as fh:
            json.dump({"certificate": cert_payload, "findings": index},
                      fh, sort_keys=True, indent=2)
            fh.write("\n")
    if args.format == "records":
        for finding in findings:
            print(_record({"record": "p85-finding",
                           "structure": finding.document,
                           "relation_n": list(finding.relation_n),
                           "least": list(finding.least)}))
        print(_record(cert_payload))
    else:
        for finding in findings:
            print(f"finding: {json.dumps(finding.document, sort_keys=True)} "
                  f"relation-N={list(finding.relation_n)} "
                  f"least={list(finding.least)}")
        print(f"examined: {cert.examined} findings: {cert.findings} "
              f"exhaustive: {str(cert.exhaustive).lower()}")
    return EXIT_FINDING if findings else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperforge",
        description="Finite-model engine for (ordered) hypersemigroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=["text", "records"], default="text")
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("validate", help="check all structure axioms")
    p.add_argument("file")
    common(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("classify", help="the seven regularity classes")
    p.add_argument("file")
    _flavor_arg(p)
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("ideals", help="enumerate ideals of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True,
                   choices=[k.value for k in IdealKind])
    _flavor_arg(p)
    common(p)
    p.set_defaults(fn=cmd_ideals)

    p = sub.add_parser("congruences", help="congruences, relation N, least "
                                           "semilattice congruence")
    p.add_argument("file")
    p.add_argument("--semilattice", action="store_true")
    p.add_argument("--complete", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_congruences)

    p = sub.add_parser("verify", help="run the theorem catalog")
    p.add_argument("file")
    p.add_argument("--theorems", default="all",
                   help="comma list of catalog ids, or 'all'")
    p.add_argument("--grid", default=None,
                   help="comma list of grades, e.g. 0,1/4,1/2,3/4,1")
    p.add_argument("--out", default=None,
                   help="directory for serialized failure findings")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("enumerate", help="corpus sweeps and censuses")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--require", default="",
                   help="comma list from: assoc, ordered, compatible")
    p.add_argument("--canonical", action="store_true",
                   help="one representative per isomorphism class")
    p.add_argument("--census", default="",
                   help="comma list of class names and/or theorem ids")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=0,
                   help="random mode with this many samples")
    p.add_argument("--budget", type=int, default=None)
    common(p)
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("search-p85", help="hunt for structures where the "
                       "generated-filter relation is not the least "
                       "semilattice congruence")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=0,
                   help="random sample count (0 = exhaustive when in budget)")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default=None)
    common(p)
    p.set_defaults(fn=cmd_search_p85)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CarrierTooLarge) as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except HyperforgeError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FINDING


if __name__ == "__main__":
    sys.exit(main())
