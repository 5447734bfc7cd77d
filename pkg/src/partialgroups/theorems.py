"""Claims registry, bounded-exhaustive instance enumeration, and the three
isomorphism theorems.

Every numbered statement the checker knows about is a Claim: an id, a
one-line formal statement, a checker that exhaustively tests it on one
instance, and a recheck hook that reproduces a falsification from its
witness.  FALSIFIED is an ordinary outcome with a reproducible witness, never
an exception; statements that fail as literally written are exactly what the
sweep is designed to surface.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from time import perf_counter

from .catalog import CATALOG_NAMES, group_by_spec
from .errors import (
    BudgetExceeded,
    NotNested,
    NotNormal,
    NotSubgroup,
    OrderCapExceeded,
    UnknownClaim,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    GroupMap,
    all_subgroups,
    check_group_hom,
    group_quotient,
    is_normal_subgroup,
    product_set,
    subgroup,
    validate_group,
)
from .morphisms import (
    PartialHom,
    check_inverse_hom,
    check_mm3_properties,
    enumerate_partial_homs,
)
from .partial import (
    PartialGroup,
    build_partial_group,
    case_table_mul,
    dot_identity,
    factorize,
    find_supplements,
    free_classes,
    inv_set,
    partial_mul,
    partial_power,
    quotient_by_free_relation,
)
from .substructures import (
    PartialSubgroup,
    congruence_mod,
    coset,
    decompose_partial_subgroup,
    enumerate_partial_subgroups,
    is_normal_partial,
    is_partial_subgroup,
    normal_test,
    partial_quotient,
    product_subgroups,
    totality_flags,
)

VERIFIED = "VERIFIED"
FALSIFIED = "FALSIFIED"
SKIPPED = "SKIPPED"

SELF_HOM_CAP = 1024


@dataclass(frozen=True)
class ClaimId:
    """A registry entry identifier with a one-line formal statement."""

    id: str
    statement: str


@dataclass(frozen=True)
class InstanceSpec:
    """Everything needed to rebuild the structures a report refers to."""

    group: str
    support: tuple[int, ...]
    defect: tuple[int, ...]
    target_group: str | None = None
    target_support: tuple[int, ...] | None = None
    target_defect: tuple[int, ...] | None = None
    hom_images: tuple[int, ...] | None = None
    subgroup_h: tuple[int, ...] | None = None
    subgroup_k: tuple[int, ...] | None = None
    subgroup_n: tuple[int, ...] | None = None

    def to_json(self) -> dict:
        out = {"group": self.group, "support": list(self.support), "defect": list(self.defect)}
        for key in ("target_group", "target_support", "target_defect", "hom_images",
                    "subgroup_h", "subgroup_k", "subgroup_n"):
            value = getattr(self, key)
            if value is not None:
                out[key] = list(value) if isinstance(value, tuple) else value
        return out


def _jsonify(value):
    if isinstance(value, dict):
        return {str(k): _jsonify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonify(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(_jsonify(v) for v in value)
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, float):
        return value
    return int(value)


@dataclass
class ClaimReport:
    """Outcome of one (claim, instance) pair.

    ``elapsed`` is kept in memory for callers but never serialized, so runs
    with identical configuration produce byte-identical documents.
    """

    claim: ClaimId
    instance: InstanceSpec
    status: str
    witness: dict | None = None
    reason: str | None = None
    elapsed: float = 0.0

    def to_json(self) -> dict:
        out = {"claim": self.claim.id, "instance": self.instance.to_json(), "status": self.status}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = _jsonify(self.witness)
        return out


# ---------------------------------------------------------------------------
# per-instance context with cached expensive enumerations


class InstanceContext:
    def __init__(self, spec: InstanceSpec, pg: PartialGroup):
        self.spec = spec
        self.pg = pg
        self._normal_cache: dict[tuple[int, ...], object] = {}
        self._support_quotients: dict[tuple[int, ...], object] = {}

    @cached_property
    def subgroups(self) -> list[PartialSubgroup]:
        return enumerate_partial_subgroups(self.pg)

    @cached_property
    def self_homs(self) -> list[PartialHom] | None:
        try:
            return enumerate_partial_homs(self.pg, self.pg, max_homs=SELF_HOM_CAP)
        except BudgetExceeded:
            return None

    def normal_verdict(self, psg: PartialSubgroup):
        key = psg.elements
        if key not in self._normal_cache:
            self._normal_cache[key] = is_normal_partial(self.pg, psg)
        return self._normal_cache[key]

    def support_quotient(self, normal_elems: tuple[int, ...]):
        if normal_elems not in self._support_quotients:
            nsub = subgroup(self.pg.parent, normal_elems)
            self._support_quotients[normal_elems] = group_quotient(self.pg.support, nsub)
        return self._support_quotients[normal_elems]


def _verified(witness: dict | None = None):
    return VERIFIED, witness, None


def _falsified(witness: dict):
    return FALSIFIED, witness, None


def _skipped(reason: str):
    return SKIPPED, None, reason


# ---------------------------------------------------------------------------
# claim checkers (section 2-3 layer)


def _ck_unique_factorization(ctx):
    pg = ctx.pg
    parent = pg.parent
    for a in pg.carrier:
        pairs = [
            (x, d)
            for x in pg.support.elements
            for d in pg.defect
            if parent.mul(x, d) == a
        ]
        if len(pairs) != 1:
            return _falsified({"element": a, "factorizations": pairs})
    return _verified()


def _relation_support_sets(pg):
    # for every carrier element: the support elements x with x^-1 * a in the defect
    dset = set(pg.defect)
    parent = pg.parent
    return {
        a: frozenset(x for x in pg.support.elements if parent.mul(parent.inv(x), a) in dset)
        for a in pg.carrier
    }


def _ck_free_relation(ctx):
    pg = ctx.pg
    xs = _relation_support_sets(pg)
    for a in pg.carrier:
        if not xs[a]:
            return _falsified({"clause": "reflexivity", "element": a})
    carrier = pg.carrier
    for a in carrier:
        for b in carrier:
            ab = bool(xs[a] & xs[b])
            if ab != bool(xs[b] & xs[a]):
                return _falsified({"clause": "symmetry", "pair": (a, b)})
            if not ab:
                continue
            for c in carrier:
                if xs[b] & xs[c] and not (xs[a] & xs[c]):
                    return _falsified({"clause": "transitivity", "triple": (a, b, c)})
    blocks = {tuple(sorted(b for b in carrier if xs[a] & xs[b])) for a in carrier}
    expected = set(free_classes(pg).blocks)
    if blocks != expected:
        return _falsified({"clause": "classes", "relation_blocks": sorted(blocks)})
    return _verified()


def _ck_closure(ctx):
    pg = ctx.pg
    for a in pg.carrier:
        for b in pg.carrier:
            if partial_mul(pg, a, b) not in pg.support:
                return _falsified({"pair": (a, b)})
    return _verified()


def _ck_dot_identity(ctx):
    pg = ctx.pg
    e = pg.identity
    for a in pg.carrier:
        x, _ = factorize(pg, a)
        if partial_mul(pg, a, e) != x:
            return _falsified({"element": a})
    return _verified()


def _ck_defect_product(ctx):
    pg = ctx.pg
    for d in pg.defect:
        for dp in pg.defect:
            if partial_mul(pg, d, dp) != pg.identity:
                return _falsified({"pair": (d, dp)})
    return _verified()


def _ck_assoc(ctx):
    pg = ctx.pg
    carrier = pg.carrier
    for a in carrier:
        for b in carrier:
            ab = partial_mul(pg, a, b)
            for c in carrier:
                if partial_mul(pg, ab, c) != partial_mul(pg, a, partial_mul(pg, b, c)):
                    return _falsified({"triple": (a, b, c)})
    return _verified()


def _ck_case_table(ctx):
    pg = ctx.pg
    for a in pg.carrier:
        for b in pg.carrier:
            if case_table_mul(pg, a, b) != partial_mul(pg, a, b):
                return _falsified({"pair": (a, b)})
    return _verified()


def _ck_sandwich(ctx):
    pg = ctx.pg

    def chain(u, v, w):
        return partial_mul(pg, partial_mul(pg, u, v), w)

    for x in pg.support.elements:
        for d in pg.defect:
            for dp in pg.defect:
                if not (chain(x, d, dp) == chain(d, x, dp) == chain(d, dp, x) == x):
                    return _falsified({"triple": (x, d, dp)})
    return _verified()


def _ck_support_fixed(ctx):
    pg = ctx.pg
    for a in pg.carrier:
        if (partial_mul(pg, a, pg.identity) == a) != (a in pg.support):
            return _falsified({"element": a})
    return _verified()


def _ck_inverse_criterion(ctx):
    pg = ctx.pg
    parent = pg.parent
    for a in pg.carrier:
        xa, _ = factorize(pg, a)
        for b in pg.carrier:
            xb, _ = factorize(pg, b)
            if (partial_mul(pg, a, b) == pg.identity) != (xb == parent.inv(xa)):
                return _falsified({"pair": (a, b)})
    return _verified()


def _ck_inverse_set(ctx):
    pg = ctx.pg
    for a in pg.carrier:
        brute = tuple(sorted(b for b in pg.carrier if partial_mul(pg, a, b) == pg.identity))
        stated = inv_set(pg, a)
        if brute != stated:
            return _falsified({"element": a, "brute": brute, "stated": stated})
        if not stated:
            return _falsified({"element": a, "clause": "nonempty"})
    return _verified()


def _ck_power(ctx):
    pg = ctx.pg
    parent = pg.parent
    limit = 2 * parent.order
    for a in pg.carrier:
        x, _ = factorize(pg, a)
        fold = None
        power = x
        for n in range(1, limit + 1):
            if n >= 2:
                fold = partial_mul(pg, a, a) if n == 2 else partial_mul(pg, fold, a)
                if fold != power:
                    return _falsified({"element": a, "n": n, "fold": fold, "power": power})
            if partial_power(pg, a, n) != power:
                return _falsified({"element": a, "n": n})
            power = parent.mul(power, x)
    return _verified()


def _ck_melted(ctx):
    pg = ctx.pg
    dset = set(pg.defect)
    parent = pg.parent
    closed = all(parent.mul(a, b) in dset for a in dset for b in dset)
    has_inv = all(parent.inv(a) in dset for a in dset)
    if not (closed and has_inv):
        return _skipped("defect is not a subgroup of the parent")
    expected = {parent.mul(x, d) for x in pg.support.elements for d in dset}
    if expected != set(pg.carrier):
        return _falsified({"clause": "carrier", "expected": sorted(expected)})
    if pg.identity not in dset:
        return _falsified({"clause": "identity"})
    for a in pg.carrier:
        for b in pg.carrier:
            xa, _ = factorize(pg, a)
            xb, _ = factorize(pg, b)
            if partial_mul(pg, a, b) != parent.mul(xa, xb):
                return _falsified({"clause": "law", "pair": (a, b)})
    if pg.support.order == 1:
        for a in pg.carrier:
            if dot_identity(pg, a) != pg.identity:
                return _falsified({"clause": "totally-melted", "element": a})
    return _verified()


def _ck_free_quotient(ctx):
    pg = ctx.pg
    xs = _relation_support_sets(pg)
    carrier = pg.carrier
    blocks = []
    seen = set()
    for a in carrier:
        block = tuple(sorted(b for b in carrier if xs[a] & xs[b]))
        if block not in seen:
            seen.add(block)
            blocks.append(block)
    blocks.sort(key=lambda b: b[0])
    class_of = {a: k for k, block in enumerate(blocks) for a in block}
    k = len(blocks)
    table = [[None] * k for _ in range(k)]
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            values = {class_of[partial_mul(pg, a, b)] for a in bi for b in bj}
            if len(values) != 1:
                return _falsified({"clause": "well-defined", "blocks": (i, j)})
            table[i][j] = values.pop()
    try:
        quotient = validate_group(table)
    except Exception as exc:  # noqa: BLE001 - any axiom failure falsifies
        return _falsified({"clause": "group-axioms", "detail": str(exc)})
    images = [class_of[x] for x in pg.support.elements]
    gm = GroupMap(pg.support, quotient, tuple(images))
    ok, pair = check_group_hom(gm)
    if not ok:
        return _falsified({"clause": "projection-hom", "pair": pair})
    if len(set(images)) != len(images):
        return _falsified({"clause": "projection-injective"})
    if set(images) != set(range(k)):
        return _falsified({"clause": "projection-surjective"})
    built, _ = quotient_by_free_relation(pg)
    if built.order != quotient.order or (built.table != quotient.table).any():
        return _falsified({"clause": "implementation-mismatch"})
    return _verified()


# ---------------------------------------------------------------------------
# claim checkers (substructure layer)


def _ck_decomposition(ctx):
    pg = ctx.pg
    parent = pg.parent
    for h in ctx.subgroups:
        f = sorted(set(h.elements) & pg.support._members)
        if parent.identity not in f:
            return _falsified({"subgroup": h.elements, "clause": "support-identity"})
        fset = set(f)
        for x in f:
            if parent.inv(x) not in fset:
                return _falsified({"subgroup": h.elements, "clause": "support-inverse", "witness": x})
            for y in f:
                if parent.mul(x, y) not in fset:
                    return _falsified({"subgroup": h.elements, "clause": "support-closure", "witness": (x, y)})
        dprime = set(h.elements) & set(pg.defect)
        prod = {parent.mul(x, d) for x in f for d in dprime}
        if prod != set(h.elements):
            return _falsified({
                "subgroup": h.elements,
                "clause": "product-equality",
                "witness": min(prod ^ set(h.elements)),
            })
    return _verified()


def _rk_decomposition(ctx, witness):
    h = tuple(witness["subgroup"])
    if not is_partial_subgroup(ctx.pg, h).ok:
        return False
    psg = decompose_partial_subgroup(ctx.pg, h)
    return not psg.decomposes or witness.get("clause") != "product-equality"


def _ck_support_defect_formulas(ctx):
    pg = ctx.pg
    parent = pg.parent
    inv_of_e = set(inv_set(pg, pg.identity))
    for h in ctx.subgroups:
        members = h.members
        by_description = {
            x for x in pg.support.elements
            if any(parent.mul(x, d) in members for d in pg.defect)
        }
        if by_description != (pg.support._members & members):
            return _falsified({"subgroup": h.elements, "clause": "support-formula"})
        if (inv_of_e & members) != (set(pg.defect) & members):
            return _falsified({"subgroup": h.elements, "clause": "defect-formula"})
    return _verified()


def _ck_restriction(ctx):
    pg = ctx.pg
    parent = pg.parent
    for h in ctx.subgroups:
        f = sorted(h.members & pg.support._members)
        dprime = sorted(h.members & set(pg.defect))
        prod = {parent.mul(x, d) for x in f for d in dprime}
        if prod != h.members:
            return _falsified({
                "subgroup": h.elements,
                "clause": "carrier-equality",
                "witness": min(prod ^ h.members),
            })
        factored = {}
        for x in f:
            for d in dprime:
                a = parent.mul(x, d)
                if a in factored:
                    return _falsified({"subgroup": h.elements, "clause": "unique-factorization", "witness": a})
                factored[a] = x
        for a in h.elements:
            for b in h.elements:
                if partial_mul(pg, a, b) != parent.mul(factored[a], factored[b]):
                    return _falsified({"subgroup": h.elements, "clause": "restricted-law", "witness": (a, b)})
    return _verified()


def _rk_restriction(ctx, witness):
    h = tuple(witness["subgroup"])
    if not is_partial_subgroup(ctx.pg, h).ok:
        return False
    psg = decompose_partial_subgroup(ctx.pg, h)
    return not psg.decomposes or witness.get("clause") != "carrier-equality"


def _ck_totality(ctx):
    for h in ctx.subgroups:
        flags = totality_flags(h)
        if not flags.support_criterion_agrees:
            return _falsified({"subgroup": h.elements, "clause": "support-criterion"})
        if not flags.defect_criterion_agrees:
            return _falsified({"subgroup": h.elements, "clause": "defect-criterion"})
    return _verified()


def _rk_totality(ctx, witness):
    h = decompose_partial_subgroup(ctx.pg, tuple(witness["subgroup"]))
    flags = totality_flags(h)
    return not (flags.support_criterion_agrees and flags.defect_criterion_agrees)


def _coset_relation_matrix(pg, h, side):
    fset = h.support._members
    rel = {}
    for a in pg.carrier:
        astars = inv_set(pg, a)
        for b in pg.carrier:
            if side == "right":
                rel[a, b] = any(partial_mul(pg, b, astar) in fset for astar in astars)
            else:
                rel[a, b] = any(partial_mul(pg, astar, b) in fset for astar in astars)
    return rel


def _ck_coset_partition(ctx, side):
    pg = ctx.pg
    parent = pg.parent
    for h in ctx.subgroups:
        rel = _coset_relation_matrix(pg, h, side)
        for a in pg.carrier:
            if not rel[a, a]:
                return _falsified({"subgroup": h.elements, "clause": "reflexivity", "witness": a})
            for b in pg.carrier:
                if rel[a, b] != rel[b, a]:
                    return _falsified({"subgroup": h.elements, "clause": "symmetry", "witness": (a, b)})
                for c in pg.carrier:
                    if rel[a, b] and rel[b, c] and not rel[a, c]:
                        return _falsified({"subgroup": h.elements, "clause": "transitivity", "witness": (a, b, c)})
        support_blocks = set()
        for x in pg.support.elements:
            if side == "right":
                support_blocks.add(tuple(sorted(parent.mul(f, x) for f in h.support.elements)))
            else:
                support_blocks.add(tuple(sorted(parent.mul(x, f) for f in h.support.elements)))
        covered = sorted(a for block in support_blocks for a in block)
        if covered != sorted(pg.support.elements):
            return _falsified({"subgroup": h.elements, "clause": "support-partition"})
        dset = pg.defect
        for a in pg.carrier:
            block = {b for b in pg.carrier if rel[a, b]}
            side_coset = coset(h, a, side)
            lifted = {parent.mul(y, d) for y in side_coset for d in dset}
            if block != lifted:
                return _falsified({"subgroup": h.elements, "clause": "carrier-vs-support", "witness": a})
    return _verified()


def _ck_abelian_cosets(ctx):
    pg = ctx.pg
    if not pg.is_abelian:
        return _skipped("instance is not abelian under the partial law")
    for h in ctx.subgroups:
        for a in pg.carrier:
            if coset(h, a, "left") != coset(h, a, "right"):
                return _falsified({"subgroup": h.elements, "element": a})
    return _verified()


def _ck_normality_equivalence(ctx):
    for h in ctx.subgroups:
        verdict = ctx.normal_verdict(h)
        flags = (
            verdict.coset_equality,
            verdict.conjugate_equality,
            verdict.conjugate_membership,
            verdict.support_conjugation,
        )
        if len(set(flags)) != 1:
            return _falsified({
                "subgroup": h.elements,
                "flags": list(flags),
                "witnesses": verdict.witnesses,
            })
    return _verified()


def _ck_abelian_normal(ctx):
    pg = ctx.pg
    if not pg.is_abelian:
        return _skipped("instance is not abelian under the partial law")
    for h in ctx.subgroups:
        if not ctx.normal_verdict(h).normal:
            return _falsified({"subgroup": h.elements})
    return _verified()


def _ck_normal_test(ctx):
    pg = ctx.pg
    candidates: list[tuple[int, ...]] = [(pg.identity,)]
    candidates += [(a,) for a in pg.carrier]
    candidates += [tuple(sorted((a, b))) for a in pg.carrier for b in pg.carrier if a < b]
    candidates += [h.elements for h in ctx.subgroups]
    seen = set()
    for cand in candidates:
        if cand in seen:
            continue
        seen.add(cand)
        outcome = normal_test(pg, cand)
        if not outcome.ok:
            continue
        check = is_partial_subgroup(pg, cand)
        if not check.ok:
            return _falsified({"subset": cand, "clause": "not-a-partial-subgroup"})
        psg = decompose_partial_subgroup(pg, cand)
        if not ctx.normal_verdict(psg).normal:
            return _falsified({"subset": cand, "clause": "not-normal"})
    return _verified()


def _ck_congruence(ctx):
    pg = ctx.pg
    fsets = {}
    for h in ctx.subgroups:
        fset = h.support._members
        fsets[h.elements] = fset
        cosets_left = {a: coset(h, a, "left") for a in pg.carrier}
        for a in pg.carrier:
            astars = inv_set(pg, a)
            xa = dot_identity(pg, a)
            for b in pg.carrier:
                c1 = any(xa == partial_mul(pg, b, k) for k in h.elements)
                c2 = all(partial_mul(pg, astar, b) in fset for astar in astars)
                xb = dot_identity(pg, b)
                c3 = any(xb == partial_mul(pg, a, k) for k in h.elements)
                c4 = xb in cosets_left[a]
                c5 = set(cosets_left[b]) <= set(cosets_left[a])
                c6 = cosets_left[b] == cosets_left[a]
                if len({c1, c2, c3, c4, c5, c6}) != 1:
                    return _falsified({
                        "subgroup": h.elements,
                        "pair": (a, b),
                        "conditions": [c1, c2, c3, c4, c5, c6],
                    })
        for a in pg.carrier:
            for b in pg.carrier:
                left_a, left_b = set(cosets_left[a]), set(cosets_left[b])
                if left_a != left_b and left_a & left_b:
                    return _falsified({"subgroup": h.elements, "clause": "equal-or-disjoint", "pair": (a, b)})
    return _verified()


def _ck_quotient_projection(ctx):
    pg = ctx.pg
    gap_equal = 0
    gap_total = 0
    for h in ctx.subgroups:
        if not ctx.normal_verdict(h).normal:
            continue
        pq = partial_quotient(pg, h)
        classes = pq.projection
        table: dict[tuple[int, int], int] = {}
        for i, a in enumerate(pg.carrier):
            for j, b in enumerate(pg.carrier):
                key = (classes[i], classes[j])
                value = classes[pg.local_index(partial_mul(pg, a, b))]
                if table.setdefault(key, value) != value:
                    return _falsified({"subgroup": h.elements, "clause": "well-defined", "pair": (a, b)})
        gq = pq.group
        pos = {a: k for k, a in enumerate(pg.support.elements)}
        for x in pg.support.elements:
            if classes[pg.local_index(x)] != int(gq.projection[pos[x]]):
                return _falsified({"subgroup": h.elements, "clause": "restriction", "witness": x})
        for a in pg.carrier:
            if pq.class_of(a) != pq.class_of(dot_identity(pg, a)):
                return _falsified({"subgroup": h.elements, "clause": "support-factoring", "witness": a})
        identity_class = pq.class_of(pg.identity)
        kernel_on_support = {x for x in pg.support.elements if pq.class_of(x) == identity_class}
        if kernel_on_support != h.support._members:
            return _falsified({"subgroup": h.elements, "clause": "support-kernel"})
        preimage = {a for a in pg.carrier if pq.class_of(a) == identity_class}
        expected = {pg.parent.mul(f, d) for f in h.support.elements for d in pg.defect}
        if preimage != expected:
            return _falsified({"subgroup": h.elements, "clause": "carrier-kernel"})
        if not h.members <= preimage:
            return _falsified({"subgroup": h.elements, "clause": "kernel-containment"})
        gap_total += 1
        if preimage == h.members:
            gap_equal += 1
    return _verified({"identity_preimage_equals_subgroup": gap_equal, "normal_subgroups": gap_total})


# ---------------------------------------------------------------------------
# claim checkers (homomorphism layer)


def _ck_mm3(ctx):
    homs = ctx.self_homs
    if homs is None:
        return _skipped("self-homomorphism enumeration exceeds the budget")
    for f in homs:
        report = check_mm3_properties(f)
        if not report.ok:
            return _falsified({"hom": f.images, "witnesses": report.witnesses})
    return _verified()


def _ck_inverse_hom(ctx):
    homs = ctx.self_homs
    if homs is None:
        return _skipped("self-homomorphism enumeration exceeds the budget")
    checked = 0
    for f in homs:
        try:
            report = check_inverse_hom(f)
        except Exception:  # noqa: BLE001 - hypotheses unmet: not in scope
            continue
        checked += 1
        if not report.ok:
            return _falsified({"hom": f.images, "violation": report.violation.flag})
    if checked == 0:
        return _skipped("no bijective homomorphism meets the hypotheses")
    return _verified()


def _ck_kernel_image(ctx):
    pg = ctx.pg
    homs = ctx.self_homs
    if homs is None:
        return _skipped("self-homomorphism enumeration exceeds the budget")
    d2 = set(pg.defect)
    for f in homs:
        kernel = tuple(a for a in pg.carrier if f.apply(a) == pg.identity)
        ktil = tuple(a for a in pg.carrier if f.apply(a) in d2)
        image = tuple(sorted(set(f.images)))
        if not set(kernel) <= set(ktil):
            return _falsified({"hom": f.images, "clause": "kernel-containment"})
        for name, subset in (("default-kernel", ktil), ("kernel", kernel)):
            check = is_partial_subgroup(pg, subset)
            if not check.ok:
                return _falsified({"hom": f.images, "clause": f"{name}-subgroup", "witness": check.witness})
            psg = decompose_partial_subgroup(pg, subset)
            if not ctx.normal_verdict(psg).normal:
                return _falsified({"hom": f.images, "clause": f"{name}-normal"})
        if not is_partial_subgroup(pg, image).ok:
            return _falsified({"hom": f.images, "clause": "image-subgroup"})
        img_support = set(image) & pg.support._members
        if img_support != {f.apply(x) for x in pg.support.elements}:
            return _falsified({"hom": f.images, "clause": "image-support"})
    return _verified()


# ---------------------------------------------------------------------------
# Lad:011 claims


def _ck_lad_product(ctx):
    pg = ctx.pg
    seen = set()
    indexed = {h.elements: h for h in ctx.subgroups}
    for h in ctx.subgroups:
        for k in ctx.subgroups:
            key = (h.support.elements, k.support.elements)
            if key in seen:
                continue
            seen.add(key)
            left = product_subgroups(indexed[h.elements], indexed[k.elements])
            right = product_set(pg.parent, h.support.elements, k.support.elements)
            if left != right:
                return _falsified({"h": h.elements, "k": k.elements})
    return _verified()


def _ck_lad_cosets(ctx):
    pg = ctx.pg
    parent = pg.parent
    seen = set()
    for h in ctx.subgroups:
        if h.support.elements in seen:
            continue
        seen.add(h.support.elements)
        for a in pg.carrier:
            x = dot_identity(pg, a)
            left = coset(h, a, "left")
            right = coset(h, a, "right")
            xf = tuple(sorted(parent.mul(x, f) for f in h.support.elements))
            fx = tuple(sorted(parent.mul(f, x) for f in h.support.elements))
            if left != xf or right != fx:
                return _falsified({"subgroup": h.elements, "element": a})
    return _verified()


def _ck_lad_normal_support(ctx):
    pg = ctx.pg
    for h in ctx.subgroups:
        partial_normal = ctx.normal_verdict(h).normal
        group_normal = is_normal_subgroup(pg.support, h.support) is None
        if partial_normal != group_normal:
            return _falsified({"subgroup": h.elements, "partial": partial_normal, "support": group_normal})
    return _verified()


def _ck_lad_quotient_support(ctx):
    pg = ctx.pg
    seen = set()
    for h in ctx.subgroups:
        if not ctx.normal_verdict(h).normal:
            continue
        if h.support.elements in seen:
            continue
        seen.add(h.support.elements)
        cong = congruence_mod(pg, h)
        gq = ctx.support_quotient(h.support.elements)
        pos = {a: k for k, a in enumerate(pg.support.elements)}
        mapping = {}
        for k, block in enumerate(cong.blocks):
            values = {int(gq.projection[pos[dot_identity(pg, a)]]) for a in block}
            if len(values) != 1:
                return _falsified({"subgroup": h.elements, "clause": "class-mismatch", "block": block})
            mapping[k] = values.pop()
        if len(set(mapping.values())) != len(mapping) or len(mapping) != gq.quotient_table.order:
            return _falsified({"subgroup": h.elements, "clause": "not-bijective"})
        for i, bi in enumerate(cong.blocks):
            for j, bj in enumerate(cong.blocks):
                prods = {cong.class_of[partial_mul(pg, a, b)] for a in bi for b in bj}
                if len(prods) != 1:
                    return _falsified({"subgroup": h.elements, "clause": "class-product", "blocks": (i, j)})
                if mapping[prods.pop()] != gq.quotient_table.mul(mapping[i], mapping[j]):
                    return _falsified({"subgroup": h.elements, "clause": "not-homomorphic", "blocks": (i, j)})
    return _verified()


def _ck_lad_intersection(ctx):
    pg = ctx.pg
    parent = pg.parent
    for h in ctx.subgroups:
        for k in ctx.subgroups:
            inter = h.members & k.members
            f_meet = h.support._members & k.support._members
            d_meet = set(h.defect) & set(k.defect)
            expected = {parent.mul(x, d) for x in f_meet for d in d_meet}
            if inter != expected:
                return _falsified({
                    "h": h.elements,
                    "k": k.elements,
                    "witness": min(inter ^ expected),
                })
    return _verified()


def _rk_lad_intersection(ctx, witness):
    pg = ctx.pg
    h = decompose_partial_subgroup(pg, tuple(witness["h"]))
    k = decompose_partial_subgroup(pg, tuple(witness["k"]))
    inter = h.members & k.members
    expected = {
        pg.parent.mul(x, d)
        for x in h.support._members & k.support._members
        for d in set(h.defect) & set(k.defect)
    }
    return inter != expected


def _ck_lad_member_coset(ctx):
    pg = ctx.pg
    for h in ctx.subgroups:
        e_coset = coset(h, pg.identity, "left")
        for a in h.elements:
            if not (coset(h, a, "left") == e_coset == coset(h, a, "right")):
                return _falsified({"subgroup": h.elements, "element": a})
    return _verified()


# ---------------------------------------------------------------------------
# the isomorphism theorems (single-configuration checkers)


def _instance_spec_for(pg: PartialGroup, name: str = "(unnamed)") -> InstanceSpec:
    return InstanceSpec(name, pg.support.elements, pg.defect)


def _t1_kernel_bundle(src: PartialGroup, ktil_elems: tuple[int, ...], cache: dict | None):
    """Congruence blocks and support quotient for one default-kernel set.

    The result only depends on the kernel set, so T1 sweeps share it across
    homomorphisms through an optional cache dict.
    """
    if cache is not None and ktil_elems in cache:
        return cache[ktil_elems]
    check = is_partial_subgroup(src, ktil_elems)
    if not check.ok:
        bundle = ("FALSIFIED", {"clause": "default-kernel-subgroup", "witness": check.witness})
    else:
        ktil = decompose_partial_subgroup(src, ktil_elems)
        if not is_normal_partial(src, ktil).normal:
            bundle = ("FALSIFIED", {"clause": "default-kernel-normal"})
        else:
            cong = congruence_mod(src, ktil)
            gq = group_quotient(src.support, ktil.support)
            pos = {a: k for k, a in enumerate(src.support.elements)}
            block_to_coset: dict[int, int] = {}
            bundle = None
            for k, block in enumerate(cong.blocks):
                classes = {int(gq.projection[pos[dot_identity(src, a)]]) for a in block}
                if len(classes) != 1:
                    bundle = ("FALSIFIED", {"clause": "quotient-realization", "block": block})
                    break
                block_to_coset[k] = classes.pop()
            if bundle is None and sorted(block_to_coset.values()) != list(range(gq.quotient_table.order)):
                bundle = ("FALSIFIED", {"clause": "quotient-realization"})
            if bundle is None:
                bundle = ("OK", (cong, gq, block_to_coset))
    if cache is not None:
        cache[ktil_elems] = bundle
    return bundle


def first_iso_check(f: PartialHom, instance: InstanceSpec | None = None,
                    _kernel_cache: dict | None = None) -> ClaimReport:
    """Verify that the image is the quotient by the default kernel.

    Builds K = f^-1(D2) and the induced map on classes sending the class of a
    to f(a).e, then checks well-definedness over every representative,
    injectivity, surjectivity onto the support of the image, and the
    homomorphism law.  The raw (unprojected) variant is measured and its
    multi-valued class count reported alongside.
    """
    src, tgt = f.source, f.target
    if instance is None:
        instance = _instance_spec_for(src)
        instance = InstanceSpec(
            instance.group, instance.support, instance.defect,
            target_group=instance.group, target_support=tgt.support.elements,
            target_defect=tgt.defect, hom_images=f.images,
        )
    claim = REGISTRY["T1-first-iso"].claim_id

    def report(status, witness=None):
        return ClaimReport(claim, instance, status, witness)

    d2 = set(tgt.defect)
    ktil_elems = tuple(a for a in src.carrier if f.apply(a) in d2)
    state, payload = _t1_kernel_bundle(src, ktil_elems, _kernel_cache)
    if state == "FALSIFIED":
        return report(FALSIFIED, dict(payload))
    cong, gq, block_to_coset = payload
    image = tuple(sorted(set(f.images)))
    if not is_partial_subgroup(tgt, image).ok:
        return report(FALSIFIED, {"clause": "image-subgroup"})

    induced: dict[int, int] = {}
    raw_multivalued = 0
    for k, block in enumerate(cong.blocks):
        raw_values = {f.apply(a) for a in block}
        if len(raw_values) > 1:
            raw_multivalued += 1
        values = {dot_identity(tgt, f.apply(a)) for a in block}
        if len(values) != 1:
            return report(FALSIFIED, {"clause": "well-defined", "block": block})
        induced[k] = values.pop()

    values_by_coset = {block_to_coset[k]: v for k, v in induced.items()}
    image_support = tuple(sorted(set(image) & tgt.support._members))
    if set(values_by_coset.values()) != set(image_support):
        return report(FALSIFIED, {"clause": "surjective"})
    if len(set(values_by_coset.values())) != len(values_by_coset):
        return report(FALSIFIED, {"clause": "injective"})
    qt = gq.quotient_table
    for i in range(qt.order):
        for j in range(qt.order):
            lhs = values_by_coset[qt.mul(i, j)]
            rhs = tgt.parent.mul(values_by_coset[i], values_by_coset[j])
            if lhs != rhs:
                return report(FALSIFIED, {"clause": "homomorphism", "pair": (i, j)})
    return report(VERIFIED, {"raw_map_multivalued_classes": raw_multivalued})


def second_iso_check(pg: PartialGroup, h, k, instance: InstanceSpec | None = None) -> ClaimReport:
    """Verify HK/K isomorphic to H/(H meet K) at support level.

    Reduces to the groups F*F'/F' and F/(F meet F'), checks the reduction
    steps (HK equals F*F' elementwise), and verifies the canonical map is a
    well-defined bijective homomorphism.
    """
    h = decompose_partial_subgroup(pg, h)
    k = decompose_partial_subgroup(pg, k)
    if not is_normal_partial(pg, k).normal:
        raise NotNormal(k.elements)
    if instance is None:
        base = _instance_spec_for(pg)
        instance = InstanceSpec(base.group, base.support, base.defect,
                                subgroup_h=h.elements, subgroup_k=k.elements)
    claim = REGISTRY["T2-second-iso"].claim_id

    def report(status, witness=None):
        return ClaimReport(claim, instance, status, witness)

    parent = pg.parent
    hk = product_subgroups(h, k)
    ff = product_set(parent, h.support.elements, k.support.elements)
    if hk != ff:
        return report(FALSIFIED, {"clause": "product-reduction"})
    try:
        ff_sub = subgroup(parent, ff)
        meet = subgroup(parent, h.support._members & k.support._members)
    except NotSubgroup as exc:
        return report(FALSIFIED, {"clause": "subgroup-formation", "detail": str(exc)})
    q_left = group_quotient(ff_sub, k.support)
    q_right = group_quotient(h.support, meet)

    left_class = {label: int(q_left.projection[i]) for i, label in enumerate(q_left.labels)}
    mapping: dict[int, int] = {}
    for idx, block in enumerate(q_right.cosets):
        values = {left_class[q_right.labels[i]] for i in block}
        if len(values) != 1:
            return report(FALSIFIED, {"clause": "well-defined", "coset": idx})
        mapping[idx] = values.pop()
    if len(set(mapping.values())) != q_left.quotient_table.order:
        return report(FALSIFIED, {"clause": "bijective"})
    for i in range(q_right.quotient_table.order):
        for j in range(q_right.quotient_table.order):
            if mapping[q_right.quotient_table.mul(i, j)] != q_left.quotient_table.mul(mapping[i], mapping[j]):
                return report(FALSIFIED, {"clause": "homomorphism", "pair": (i, j)})
    return report(VERIFIED)


def third_iso_check(pg: PartialGroup, k, n, instance: InstanceSpec | None = None) -> ClaimReport:
    """Verify (G/N)/(K/N) isomorphic to G/K for nested normal partial subgroups."""
    k = decompose_partial_subgroup(pg, k)
    n = decompose_partial_subgroup(pg, n)
    if not is_normal_partial(pg, k).normal:
        raise NotNormal(k.elements)
    if not is_normal_partial(pg, n).normal:
        raise NotNormal(n.elements)
    if not n.members <= k.members:
        raise NotNested(min(n.members - k.members))
    if instance is None:
        base = _instance_spec_for(pg)
        instance = InstanceSpec(base.group, base.support, base.defect,
                                subgroup_k=k.elements, subgroup_n=n.elements)
    claim = REGISTRY["T3-third-iso"].claim_id

    def report(status, witness=None):
        return ClaimReport(claim, instance, status, witness)

    q_n = group_quotient(pg.support, n.support)
    pos = {a: i for i, a in enumerate(pg.support.elements)}
    k_classes = sorted({int(q_n.projection[pos[x]]) for x in k.support.elements})
    try:
        k_over_n = subgroup(q_n.quotient_table, k_classes)
    except NotSubgroup as exc:
        return report(FALSIFIED, {"clause": "quotient-subgroup", "detail": str(exc)})
    if is_normal_subgroup(q_n.quotient_table, k_over_n) is not None:
        return report(FALSIFIED, {"clause": "quotient-normality"})
    q_big = group_quotient(q_n.quotient_table, k_over_n)
    q_k = group_quotient(pg.support, k.support)

    mapping: dict[int, int] = {}
    for x in pg.support.elements:
        big = int(q_big.projection[int(q_n.projection[pos[x]])])
        small = int(q_k.projection[pos[x]])
        if mapping.setdefault(big, small) != small:
            return report(FALSIFIED, {"clause": "well-defined", "witness": x})
    if len(mapping) != q_big.quotient_table.order or len(set(mapping.values())) != q_k.quotient_table.order:
        return report(FALSIFIED, {"clause": "bijective"})
    for i in range(q_big.quotient_table.order):
        for j in range(q_big.quotient_table.order):
            if mapping[q_big.quotient_table.mul(i, j)] != q_k.quotient_table.mul(mapping[i], mapping[j]):
                return report(FALSIFIED, {"clause": "homomorphism", "pair": (i, j)})
    return report(VERIFIED)


# ---------------------------------------------------------------------------
# theorem claims over an instance context


def _ck_t1(ctx):
    homs = ctx.self_homs
    if homs is None:
        return _skipped("self-homomorphism enumeration exceeds the budget")
    multivalued = 0
    kernel_cache: dict = {}
    for f in homs:
        rep = first_iso_check(f, ctx.spec, _kernel_cache=kernel_cache)
        if rep.status == FALSIFIED:
            witness = dict(rep.witness or {})
            witness["hom"] = f.images
            return _falsified(witness)
        multivalued += (rep.witness or {}).get("raw_map_multivalued_classes", 0)
    return _verified({"raw_map_multivalued_classes": multivalued})


def _ck_t2(ctx):
    pg = ctx.pg
    seen = set()
    for k in ctx.subgroups:
        if not ctx.normal_verdict(k).normal:
            continue
        for h in ctx.subgroups:
            key = (h.support.elements, k.support.elements)
            if key in seen:
                continue
            seen.add(key)
            rep = second_iso_check(pg, h, k, ctx.spec)
            if rep.status == FALSIFIED:
                witness = dict(rep.witness or {})
                witness.update({"h": h.elements, "k": k.elements})
                return _falsified(witness)
    return _verified()


def _ck_t3(ctx):
    pg = ctx.pg
    seen = set()
    for k in ctx.subgroups:
        if not ctx.normal_verdict(k).normal:
            continue
        for n in ctx.subgroups:
            if not n.members <= k.members:
                continue
            if not ctx.normal_verdict(n).normal:
                continue
            key = (k.support.elements, n.support.elements)
            if key in seen:
                continue
            seen.add(key)
            rep = third_iso_check(pg, k, n, ctx.spec)
            if rep.status == FALSIFIED:
                witness = dict(rep.witness or {})
                witness.update({"k": k.elements, "n": n.elements})
                return _falsified(witness)
    return _verified()


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Claim:
    claim_id: ClaimId
    check: object
    recheck: object | None = None


def _claim(cid: str, statement: str, check, recheck=None) -> tuple[str, Claim]:
    return cid, Claim(ClaimId(cid, statement), check, recheck)


REGISTRY: dict[str, Claim] = dict([
    _claim("P2.1-unique-factorization",
           "every carrier element has exactly one support*defect factorization",
           _ck_unique_factorization),
    _claim("P2.1-free-relation",
           "sharing a support translate of the defect is an equivalence whose classes are x*D",
           _ck_free_relation),
    _claim("P3.2-closure", "partial products land in the support", _ck_closure),
    _claim("P3.2-dot-identity", "a.e is the support part of a", _ck_dot_identity),
    _claim("P3.2-defect-product", "d.d' = e for defect elements", _ck_defect_product),
    _claim("P3.2-assoc", "the partial law is associative", _ck_assoc),
    _claim("P3.2-case-table", "the five-branch case form agrees with the law everywhere", _ck_case_table),
    _claim("P3.2-sandwich", "x.d.d' = d.x.d' = d.d'.x = x", _ck_sandwich),
    _claim("P3.2-support-fixed", "a.e = a exactly on the support", _ck_support_fixed),
    _claim("P3.3-inverse-criterion", "a.b = e iff the support parts are mutually inverse",
           _ck_inverse_criterion),
    _claim("P3.3-inverse-set", "Inv(a) is exactly the set of partial inverses and is nonempty",
           _ck_inverse_set),
    _claim("P3.3-power", "n-fold partial products equal support powers", _ck_power),
    _claim("P3.5-melted", "a subgroup defect yields the melted construction", _ck_melted),
    _claim("P3.6-free-quotient", "the free-relation quotient is a group isomorphic to the support",
           _ck_free_quotient),
    _claim("P4.3-decomposition",
           "a partial subgroup equals (E meet H)*(D meet H) with a subgroup support",
           _ck_decomposition, _rk_decomposition),
    _claim("C4.4-support-defect", "the descriptive support/defect formulas match E meet H and D meet H",
           _ck_support_defect_formulas),
    _claim("C4.5-restriction", "a partial subgroup is itself a partial group under the restricted law",
           _ck_restriction, _rk_restriction),
    _claim("P4.6-totality", "total defect iff inverse sets stay inside; total support iff E is covered",
           _ck_totality, _rk_totality),
    _claim("P5.1-right-cosets", "the right coset relation partitions carrier and support coherently",
           lambda ctx: _ck_coset_partition(ctx, "right")),
    _claim("P5.2-left-cosets", "the left coset relation partitions carrier and support coherently",
           lambda ctx: _ck_coset_partition(ctx, "left")),
    _claim("P5.3-abelian-cosets", "left and right cosets coincide in abelian instances",
           _ck_abelian_cosets),
    _claim("P6.1-normality-equiv", "the four normality criteria agree", _ck_normality_equivalence),
    _claim("P6.2-abelian-normal", "every partial subgroup of an abelian instance is normal",
           _ck_abelian_normal),
    _claim("P6.3-normal-test", "the two-clause test implies a normal partial subgroup", _ck_normal_test),
    _claim("P7.1-congruence-cosets", "the six congruence conditions agree and cosets are equal or disjoint",
           _ck_congruence),
    _claim("P7.2-quotient-projection",
           "coset multiplication is well defined and the projection factors through supports",
           _ck_quotient_projection),
    _claim("P8.1-mm3", "homomorphisms restrict to support homs, fix identities, and shift defects",
           _ck_mm3),
    _claim("P8.2-inverse-hom", "the inverse of a bijective homomorphism is a homomorphism",
           _ck_inverse_hom),
    _claim("P8.3-kernel-image",
           "kernels and default kernels are normal partial subgroups; images are partial subgroups",
           _ck_kernel_image),
    _claim("PLad011-product", "H.K equals the product of the supports", _ck_lad_product),
    _claim("PLad011-cosets", "aH = xF and Ha = Fx", _ck_lad_cosets),
    _claim("PLad011-normal-support", "H is normal iff its support is normal in E", _ck_lad_normal_support),
    _claim("PLad011-quotient-support", "the quotient by a normal partial subgroup is E/F",
           _ck_lad_quotient_support),
    _claim("PLad011-intersection", "H meet K equals (F meet F')*(D' meet D'')",
           _ck_lad_intersection, _rk_lad_intersection),
    _claim("PLad011-member-coset", "members have aH = eH = Ha", _ck_lad_member_coset),
    _claim("T1-first-iso", "the image is the quotient by the default kernel", _ck_t1),
    _claim("T2-second-iso", "HK/K is isomorphic to H/(H meet K)", _ck_t2),
    _claim("T3-third-iso", "(G/N)/(K/N) is isomorphic to G/K", _ck_t3),
])


def claim_ids() -> list[str]:
    return list(REGISTRY)


# ---------------------------------------------------------------------------
# enumeration and the runner


def enumerate_instances(max_order: int, max_defect: int, catalog_names=None,
                        cap: int = DEFAULT_ORDER_CAP):
    """Yield (spec, partial group) for every catalog instance within the caps.

    For each catalog group, each subgroup E, each supplement of E, and each
    defect subset of the supplement containing the identity with at most
    max_defect elements; duplicate (group, E, D) triples are skipped.
    """
    if max_order > cap:
        raise OrderCapExceeded(max_order, cap)
    names = catalog_names if catalog_names is not None else CATALOG_NAMES
    for name in names:
        table = group_by_spec(name)
        if table.order > max_order:
            continue
        seen: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
        for support in all_subgroups(table, cap):
            for supplement in find_supplements(table, support, cap):
                others = [d for d in supplement.elements if d != table.identity]
                for size in range(0, max_defect):
                    if size > len(others):
                        break
                    for combo in itertools.combinations(others, size):
                        defect = tuple(sorted((table.identity,) + combo))
                        key = (support.elements, defect)
                        if key in seen:
                            continue
                        seen.add(key)
                        spec = InstanceSpec(name, support.elements, defect)
                        yield spec, build_partial_group(table, support, defect)


def run_claims(ids, instances, jobs: int = 1) -> list[ClaimReport]:
    """Execute every (claim, instance) pair in canonical order.

    ``ids`` is an iterable of claim ids or the string "all"; instances are
    (InstanceSpec, PartialGroup) pairs.  Reports come back ordered by
    (instance, registry order) regardless of the worker count.
    """
    if isinstance(ids, str):
        ids = claim_ids() if ids == "all" else [ids]
    ids = list(ids)
    if ids == ["all"]:
        ids = claim_ids()
    claims = []
    for cid in ids:
        if cid not in REGISTRY:
            raise UnknownClaim(cid)
        claims.append(REGISTRY[cid])
    instances = list(instances)

    def work(item):
        spec, pg = item
        ctx = InstanceContext(spec, pg)
        out = []
        for claim in claims:
            start = perf_counter()
            status, witness, reason = claim.check(ctx)
            out.append(ClaimReport(claim.claim_id, spec, status, witness, reason,
                                   perf_counter() - start))
        return out

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(work, instances))
    else:
        chunks = [work(item) for item in instances]
    return [rep for chunk in chunks for rep in chunk]


def recheck_witness(report: ClaimReport, pg: PartialGroup) -> bool:
    """Reproduce a FALSIFIED report from its witness.

    Uses the claim's targeted recheck when it has one, otherwise reruns the
    checker and compares outcome and witness.
    """
    claim = REGISTRY[report.claim.id]
    ctx = InstanceContext(report.instance, pg)
    if report.status != FALSIFIED:
        return False
    if claim.recheck is not None:
        return bool(claim.recheck(ctx, report.witness))
    status, witness, _ = claim.check(ctx)
    return status == FALSIFIED and witness == report.witness
