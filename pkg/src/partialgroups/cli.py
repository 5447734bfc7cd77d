"""Command-line surface.

Subcommands: decompose, build, check, homs, quotient, theorem.  Element lists
are comma-separated 0-based indices (element names are accepted as aliases
when the group has them).  Instance triples are GROUP:SUPPORT:DEFECT, e.g.
``Z6:0,3:0,2``.

Exit codes: 0 all verified / success, 1 at least one FALSIFIED claim,
2 usage or input error.  Identical invocations print byte-identical output.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import CATALOG_NAMES, canonical_spec, group_by_spec
from .errors import AlgebraError
from .formats import TOOL_VERSION, build_report_document, document_to_json, save_cayley
from .groups import GroupTable, all_subgroups, subgroup
from .morphisms import enumerate_partial_homs, hom_anatomy
from .partial import build_partial_group, factorize, find_supplements, partial_mul
from .substructures import decompose_partial_subgroup, partial_quotient
from .theorems import (
    FALSIFIED,
    SELF_HOM_CAP,
    InstanceSpec,
    REGISTRY,
    claim_ids,
    enumerate_instances,
    first_iso_check,
    run_claims,
    second_iso_check,
    third_iso_check,
)


def _fmt_set(elems) -> str:
    return "{" + ",".join(str(a) for a in elems) + "}"


def _parse_elements(table: GroupTable, text: str) -> tuple[int, ...]:
    by_name = {}
    if table.names is not None:
        by_name = {name: idx for idx, name in enumerate(table.names)}
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if token in by_name:
            out.append(by_name[token])
            continue
        try:
            value = int(token)
        except ValueError:
            raise AlgebraError(f"unknown element {token!r}") from None
        if not 0 <= value < table.order:
            raise AlgebraError(f"element {value} out of range for order {table.order}")
        out.append(value)
    return tuple(sorted(set(out)))


def _parse_triple(text: str):
    parts = text.rsplit(":", 2)
    if len(parts) != 3:
        raise AlgebraError(f"expected GROUP:SUPPORT:DEFECT, got {text!r}")
    spec, support_text, defect_text = parts
    table = group_by_spec(spec)
    support = _parse_elements(table, support_text)
    defect = _parse_elements(table, defect_text)
    return spec, table, support, defect


def _build_from_triple(text: str, weak: bool = False):
    spec, table, support, defect = _parse_triple(text)
    pg = build_partial_group(table, support, defect, weak=weak)
    instance = InstanceSpec(canonical_spec(spec), pg.support.elements, pg.defect)
    return instance, pg


def _names_legend(table: GroupTable) -> str | None:
    if table.names is None:
        return None
    return "names: " + " ".join(f"{i}={name}" for i, name in enumerate(table.names))


# ---------------------------------------------------------------------------
# subcommands


def cmd_decompose(args) -> int:
    table = group_by_spec(args.group)
    legend = _names_legend(table)
    if legend:
        print(legend)
    pairs = []
    for support in all_subgroups(table, args.cap):
        for supplement in find_supplements(table, support, args.cap):
            pairs.append((support.elements, supplement.elements))
    print(f"supplement pairs of {canonical_spec(args.group)} (order {table.order}):")
    for left, right in pairs:
        print(f"  E={_fmt_set(left)}  D~={_fmt_set(right)}")
    print(f"{len(pairs)} pairs")
    return 0


def cmd_build(args) -> int:
    table = group_by_spec(args.group)
    support = _parse_elements(table, args.support)
    defect = _parse_elements(table, args.defect)
    pg = build_partial_group(table, support, defect, weak=args.weak_freeness)
    legend = _names_legend(table)
    if legend:
        print(legend)
    print(f"partial group over {canonical_spec(args.group)} (order {table.order})")
    print(f"support E = {_fmt_set(pg.support.elements)}")
    print(f"defect  D = {_fmt_set(pg.defect)}")
    if pg.witness_supplement is not None:
        print(f"witness supplement = {_fmt_set(pg.witness_supplement.elements)}")
    else:
        print("witness supplement = (weak mode: unique factorization only)")
    print(f"carrier = {_fmt_set(pg.carrier)}")
    print("factorizations:")
    for a in pg.carrier:
        x, d = factorize(pg, a)
        print(f"  {a} = {x}*{d}")
    width = max(len(str(a)) for a in pg.carrier) + 1
    print("law table (row . column):")
    header = " " * (width + 2) + "".join(f"{b:>{width}}" for b in pg.carrier)
    print(header)
    for a in pg.carrier:
        row = "".join(f"{partial_mul(pg, a, b):>{width}}" for b in pg.carrier)
        print(f"  {a:>{width}}" + row)
    return 0


def cmd_check(args) -> int:
    if args.list:
        width = max(len(cid) for cid in claim_ids())
        for cid in claim_ids():
            print(f"{cid:<{width}}  {REGISTRY[cid].claim_id.statement}")
        return 0
    ids = args.claims if args.claims else ["all"]
    if ids == ["all"]:
        ids = claim_ids()
    catalog_names = args.catalog.split(",") if args.catalog else list(CATALOG_NAMES)
    instances = list(enumerate_instances(args.max_order, args.max_defect, catalog_names))
    reports = run_claims(ids, instances, jobs=args.jobs)

    by_claim: dict[str, dict[str, int]] = {cid: {"VERIFIED": 0, "FALSIFIED": 0, "SKIPPED": 0} for cid in ids}
    for rep in reports:
        by_claim[rep.claim.id][rep.status] += 1
    width = max(len(cid) for cid in ids)
    print(f"{'claim':<{width}}  verified falsified skipped")
    for cid in ids:
        counts = by_claim[cid]
        print(f"{cid:<{width}}  {counts['VERIFIED']:>8} {counts['FALSIFIED']:>9} {counts['SKIPPED']:>7}")
    falsified = sum(1 for rep in reports if rep.status == FALSIFIED)
    verified = sum(1 for rep in reports if rep.status == "VERIFIED")
    skipped = sum(1 for rep in reports if rep.status == "SKIPPED")
    print(f"summary: verified={verified} falsified={falsified} skipped={skipped} "
          f"instances={len(instances)}")

    if args.out:
        config = {
            "max_order": args.max_order,
            "max_defect": args.max_defect,
            "catalog": catalog_names,
            "claims": ids,
            "hom_budget": SELF_HOM_CAP,
            "seed": None,
        }
        document = build_report_document(reports, config)
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(document_to_json(document))
        print(f"report written to {args.out}")
    return 1 if falsified else 0


def cmd_homs(args) -> int:
    src_instance, src = _build_from_triple(args.source)
    tgt_instance, tgt = _build_from_triple(args.target)
    homs = enumerate_partial_homs(src, tgt, carrier_budget=args.budget, max_homs=args.max_homs)
    print(f"{len(homs)} homomorphisms from {args.source} to {args.target}")
    print(f"source carrier order: {_fmt_set(src.carrier)}")
    for f in homs:
        anatomy = hom_anatomy(f)
        print(
            f"  images={_fmt_set(f.images)}"
            f"  Ker={_fmt_set(anatomy.kernel)}"
            f"  K~={_fmt_set(anatomy.default_kernel)}"
            f"  Im={_fmt_set(anatomy.image)}"
        )
    return 0


def cmd_quotient(args) -> int:
    table = group_by_spec(args.group)
    support = _parse_elements(table, args.support)
    defect = _parse_elements(table, args.defect)
    pg = build_partial_group(table, support, defect, weak=args.weak_freeness)
    n = decompose_partial_subgroup(pg, _parse_elements(table, args.subgroup))
    pq = partial_quotient(pg, n)
    print(f"quotient of {canonical_spec(args.group)}:{args.support}:{args.defect} "
          f"by N={_fmt_set(n.elements)}")
    print(f"support cosets (E/F, F={_fmt_set(n.support.elements)}):")
    for k, block in enumerate(pq.group.cosets):
        labels = pq.group.coset_labels(k)
        print(f"  class {k}: {_fmt_set(labels)}")
    qt = pq.group.quotient_table
    print("quotient table:")
    for i in range(qt.order):
        print("  " + " ".join(str(qt.mul(i, j)) for j in range(qt.order)))
    print("projection (carrier element -> class):")
    for a in pg.carrier:
        print(f"  {a} -> {pq.class_of(a)}")
    return 0


def cmd_theorem(args) -> int:
    number = args.number
    if number == "1":
        _, src = _build_from_triple(args.source)
        if args.target is None:
            raise AlgebraError("theorem 1 needs a target triple")
        _, tgt = _build_from_triple(args.target)
        homs = enumerate_partial_homs(src, tgt, max_homs=args.max_homs)
        falsified = 0
        for f in homs:
            rep = first_iso_check(f)
            line = f"  hom images={_fmt_set(f.images)}: {rep.status}"
            if rep.status == FALSIFIED:
                falsified += 1
                line += f" witness={rep.witness}"
            print(line)
        print(f"theorem 1 on {len(homs)} homomorphisms: {falsified} falsified")
        return 1 if falsified else 0

    instance, pg = _build_from_triple(args.source)
    if number == "2":
        if not (args.subgroup_h and args.subgroup_k):
            raise AlgebraError("theorem 2 needs --h and --k")
        h = _parse_elements(pg.parent, args.subgroup_h)
        k = _parse_elements(pg.parent, args.subgroup_k)
        rep = second_iso_check(pg, h, k)
    else:
        if not (args.subgroup_k and args.subgroup_n):
            raise AlgebraError("theorem 3 needs --k and --n")
        k = _parse_elements(pg.parent, args.subgroup_k)
        n = _parse_elements(pg.parent, args.subgroup_n)
        rep = third_iso_check(pg, k, n)
    print(f"theorem {number}: {rep.status}")
    if rep.witness:
        print(f"witness: {rep.witness}")
    return 1 if rep.status == FALSIFIED else 0


def cmd_save(args) -> int:
    table = group_by_spec(args.group)
    save_cayley(table, args.out)
    print(f"saved {canonical_spec(args.group)} to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partialgroups",
        description="Build partial groups over finite groups and check the claim registry.",
    )
    parser.add_argument("--version", action="version", version=f"partialgroups {TOOL_VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="list all supplement pairs (E, D~) of a group")
    p.add_argument("group", help="group spec, e.g. Z6, S3, Z2xZ4, file:<path>")
    p.add_argument("--cap", type=int, default=32, help="order cap for enumeration")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("build", help="build a partial group and print its law table")
    p.add_argument("group")
    p.add_argument("--support", required=True, help="comma-separated support elements")
    p.add_argument("--defect", required=True, help="comma-separated defect elements")
    p.add_argument("--weak-freeness", action="store_true",
                   help="experimental: require only unique factorization, no supplement")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check", help="run registry claims over enumerated instances")
    p.add_argument("claims", nargs="*", help="claim ids, or 'all' (default)")
    p.add_argument("--max-order", type=int, default=8)
    p.add_argument("--max-defect", type=int, default=4)
    p.add_argument("--catalog", help="comma-separated catalog names (default: the full catalog)")
    p.add_argument("--out", help="write the JSON report document here")
    p.add_argument("--jobs", type=int, default=1, help="worker threads (output is identical)")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("homs", help="enumerate homomorphisms between two instances")
    p.add_argument("source", help="GROUP:SUPPORT:DEFECT, e.g. Z6:0,3:0,2")
    p.add_argument("target", help="GROUP:SUPPORT:DEFECT")
    p.add_argument("--budget", type=int, default=8, help="carrier size budget")
    p.add_argument("--max-homs", type=int, default=100000)
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("quotient", help="quotient a partial group by a normal partial subgroup")
    p.add_argument("group")
    p.add_argument("--support", required=True)
    p.add_argument("--defect", required=True)
    p.add_argument("--subgroup", required=True, help="elements of the normal partial subgroup")
    p.add_argument("--weak-freeness", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("theorem", help="run one isomorphism-theorem checker")
    p.add_argument("number", choices=["1", "2", "3"])
    p.add_argument("source", help="GROUP:SUPPORT:DEFECT")
    p.add_argument("target", nargs="?", help="target triple (theorem 1 only)")
    p.add_argument("--h", dest="subgroup_h", help="subgroup H elements (theorem 2)")
    p.add_argument("--k", dest="subgroup_k", help="subgroup K elements (theorems 2 and 3)")
    p.add_argument("--n", dest="subgroup_n", help="subgroup N elements (theorem 3)")
    p.add_argument("--max-homs", type=int, default=100000)
    p.set_defaults(func=cmd_theorem)

    p = sub.add_parser("save", help="write a catalog group to a .cayley file")
    p.add_argument("group")
    p.add_argument("out")
    p.set_defaults(func=cmd_save)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
