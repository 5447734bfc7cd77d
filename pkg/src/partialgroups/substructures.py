"""Partial subgroups, partial cosets, normality, congruence, and quotients.

Subsets of a carrier are handled as local bitmasks internally; all public
surfaces speak sorted tuples of ambient element indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import (
    AlgebraError,
    DifferentAmbient,
    NotInCarrier,
    NotNormal,
    NotPartialSubgroup,
)
from ._kernels import psg_masks
from .groups import GroupQuotient, SubgroupSet, group_quotient, subgroup
from .partial import PartialGroup, dot_identity, inv_set, partial_mul


class SubgroupCheck(NamedTuple):
    """Outcome of the three-clause partial-subgroup test."""

    ok: bool
    clause: str | None
    witness: object | None

    def __bool__(self):
        return self.ok


class TotalityFlags(NamedTuple):
    """Totality of support/defect, with the agreement of the two stated criteria."""

    total_support: bool
    total_defect: bool
    support_criterion_agrees: bool
    defect_criterion_agrees: bool


class NormalityVerdict(NamedTuple):
    """The four normality criteria evaluated independently.

    normal is their conjunction; witnesses maps a failing criterion name to
    its first counterexample.
    """

    normal: bool
    coset_equality: bool
    conjugate_equality: bool
    conjugate_membership: bool
    support_conjugation: bool
    witnesses: dict


class NormalTestResult(NamedTuple):
    ok: bool
    clause: str | None
    witness: object | None

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class PartialSubgroup:
    """A partial subgroup H with its support F = E meet H and defect D' = D meet H.

    ``decomposes`` records whether H equals the product set F * D' (this is a
    checked fact, not an assumed invariant: the three-clause definition admits
    subsets where the equality fails, and the claim checker reports them).
    """

    ambient: PartialGroup
    elements: tuple[int, ...]
    support: SubgroupSet
    defect: tuple[int, ...]
    decomposes: bool
    decomposition_witness: int | None
    mask: int

    @property
    def members(self) -> frozenset:
        return frozenset(self.elements)

    def __contains__(self, a) -> bool:
        return a in self.members

    def __len__(self):
        return len(self.elements)


@dataclass(frozen=True)
class CosetFamily:
    """Equivalence classes of the one-sided coset relation.

    ``cosets_on_support`` partitions the support E into blocks F*x (right) or
    x*F (left); ``carrier_blocks``/``class_of`` partition the whole carrier.
    """

    ambient: PartialGroup
    subgroup: PartialSubgroup
    side: str
    cosets_on_support: tuple[tuple[int, ...], ...]
    carrier_blocks: tuple[tuple[int, ...], ...]
    class_of: dict[int, int]


@dataclass(frozen=True)
class CongruencePartition:
    """Classes of the congruence a ~ b <=> a.e = b.h for some h in H."""

    ambient: PartialGroup
    subgroup: PartialSubgroup
    blocks: tuple[tuple[int, ...], ...]
    class_of: dict[int, int]


@dataclass(frozen=True)
class PartialQuotient:
    """Quotient of a partial group by a normal partial subgroup.

    Realized as the group quotient of the support E by F, with the projection
    factoring through the support part of each carrier element.
    """

    ambient: PartialGroup
    normal: PartialSubgroup
    group: GroupQuotient
    projection: tuple[int, ...]

    def class_of(self, a: int) -> int:
        return self.projection[self.ambient.local_index(a)]


# ---------------------------------------------------------------------------
# bitmask helpers


def _local_mask(pg: PartialGroup, elems) -> int:
    mask = 0
    for a in elems:
        mask |= 1 << pg.local_index(a)
    return mask


def _mask_elements(pg: PartialGroup, mask: int) -> tuple[int, ...]:
    return tuple(pg.carrier[k] for k in range(len(pg.carrier)) if (mask >> k) & 1)


# ---------------------------------------------------------------------------
# recognition and decomposition


def is_partial_subgroup(pg: PartialGroup, elems) -> SubgroupCheck:
    """Three-clause test: identity in H, closure under the law, Inv(h) meets H."""
    h = tuple(sorted(set(int(a) for a in elems)))
    mask = _local_mask(pg, h)
    if pg.identity not in h:
        return SubgroupCheck(False, "identity", pg.identity)
    pl = pg.pl_local
    for a in h:
        ka = pg.local_index(a)
        for b in h:
            if not (mask >> pl[ka, pg.local_index(b)]) & 1:
                return SubgroupCheck(False, "closure", (a, b))
    for a in h:
        if int(pg.inv_words[pg.local_index(a)]) & mask == 0:
            return SubgroupCheck(False, "inverse-meets", a)
    return SubgroupCheck(True, None, None)


def _build_psg(pg: PartialGroup, h: tuple[int, ...], mask: int) -> PartialSubgroup:
    members = set(h)
    support = subgroup(pg.parent, members & pg.support._members)
    defect = tuple(sorted(members & set(pg.defect)))
    product = {pg.parent.mul(x, d) for x in support.elements for d in defect}
    sym_diff = product ^ members
    return PartialSubgroup(
        ambient=pg,
        elements=h,
        support=support,
        defect=defect,
        decomposes=not sym_diff,
        decomposition_witness=min(sym_diff) if sym_diff else None,
        mask=mask,
    )


def decompose_partial_subgroup(pg: PartialGroup, elems) -> PartialSubgroup:
    """Validate H and split it into support and defect parts."""
    if isinstance(elems, PartialSubgroup):
        return elems
    check = is_partial_subgroup(pg, elems)
    if not check.ok:
        raise NotPartialSubgroup(check.clause, check.witness)
    h = tuple(sorted(set(int(a) for a in elems)))
    return _build_psg(pg, h, _local_mask(pg, h))


def totality_flags(h: PartialSubgroup) -> TotalityFlags:
    """Totality of support and defect, with both characterizations evaluated.

    The direct definitions (F = E, D' = D) decide the flags; the agreement
    fields record whether the stated pointwise criteria match them.
    """
    pg = h.ambient
    total_support = h.support._members == pg.support._members
    ts_criterion = all(
        any(pg.parent.mul(x, d) in h.members for d in h.defect) for x in pg.support.elements
    )
    total_defect = set(h.defect) == set(pg.defect)
    td_criterion = all(set(inv_set(pg, a)) <= h.members for a in h.elements)
    return TotalityFlags(
        total_support,
        total_defect,
        total_support == ts_criterion,
        total_defect == td_criterion,
    )


# ---------------------------------------------------------------------------
# cosets


def coset(h: PartialSubgroup, a: int, side: str) -> tuple[int, ...]:
    """The one-sided partial coset of a: {h.a} (right) or {a.h} (left)."""
    pg = h.ambient
    if a not in pg:
        raise NotInCarrier(a)
    if side == "right":
        return tuple(sorted({partial_mul(pg, x, a) for x in h.elements}))
    if side == "left":
        return tuple(sorted({partial_mul(pg, a, x) for x in h.elements}))
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _blocks_from_relation(elems, related) -> tuple[tuple[tuple[int, ...], ...], dict[int, int]]:
    """Group elements into relation classes; verifies the relation is an equivalence."""
    elems = tuple(elems)
    matrix = {a: frozenset(b for b in elems if related(a, b)) for a in elems}
    for a in elems:
        if a not in matrix[a]:
            raise AlgebraError(f"relation is not reflexive at {a}")
        for b in matrix[a]:
            if a not in matrix[b]:
                raise AlgebraError(f"relation is not symmetric at ({a}, {b})")
            if not matrix[b] <= matrix[a]:
                raise AlgebraError(f"relation is not transitive at ({a}, {b})")
    blocks = []
    assigned: dict[int, int] = {}
    for a in elems:
        if a in assigned:
            continue
        block = tuple(b for b in elems if b in matrix[a])
        blocks.append(block)
        for b in block:
            assigned[b] = len(blocks) - 1
    order = sorted(range(len(blocks)), key=lambda k: blocks[k][0])
    rank = {old: new for new, old in enumerate(order)}
    return tuple(blocks[k] for k in order), {a: rank[k] for a, k in assigned.items()}


def coset_relation_classes(h: PartialSubgroup, side: str) -> CosetFamily:
    """Classes of ~r (b.a* in F) or ~l (a*.b in F) over the carrier.

    Also returns the induced partition of the support into the blocks F*x or
    x*F.  Both relations are verified to be equivalences by exhaustion.
    """
    pg = h.ambient
    fset = h.support._members
    inv_cache = {a: inv_set(pg, a) for a in pg.carrier}

    if side == "right":
        def related(a, b):
            return any(partial_mul(pg, b, astar) in fset for astar in inv_cache[a])
    elif side == "left":
        def related(a, b):
            return any(partial_mul(pg, astar, b) in fset for astar in inv_cache[a])
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    carrier_blocks, class_of = _blocks_from_relation(pg.carrier, related)
    support_blocks = set()
    for x in pg.support.elements:
        if side == "right":
            block = tuple(sorted(pg.parent.mul(f, x) for f in h.support.elements))
        else:
            block = tuple(sorted(pg.parent.mul(x, f) for f in h.support.elements))
        support_blocks.add(block)
    cosets_on_support = tuple(sorted(support_blocks, key=lambda b: b[0]))
    return CosetFamily(pg, h, side, cosets_on_support, carrier_blocks, class_of)


def conjugate_set(pg: PartialGroup, h: PartialSubgroup, a: int) -> tuple[int, ...]:
    """The set {a*.h.a : h in H}, independent of the choice of a* in Inv(a)."""
    if a not in pg:
        raise NotInCarrier(a)
    results = set()
    for astar in inv_set(pg, a):
        conj = frozenset(partial_mul(pg, partial_mul(pg, astar, x), a) for x in h.elements)
        results.add(conj)
    if len(results) != 1:
        raise AlgebraError(f"conjugate set depends on the inverse choice at {a}")
    return tuple(sorted(results.pop()))


# ---------------------------------------------------------------------------
# normality


def is_normal_partial(pg: PartialGroup, h: PartialSubgroup) -> NormalityVerdict:
    """Evaluate the four normality criteria independently.

    (1) Ha = aH for all a; (2) a*Ha = F for all a and every inverse choice;
    (3) a*.h.a lies in F always; (4) x^-1 F x = F for all x in the support.
    """
    fset = h.support._members
    witnesses: dict[str, object] = {}

    coset_equality = True
    for a in pg.carrier:
        if coset(h, a, "right") != coset(h, a, "left"):
            coset_equality = False
            witnesses["coset_equality"] = a
            break

    conjugate_equality = True
    for a in pg.carrier:
        for astar in inv_set(pg, a):
            conj = {partial_mul(pg, partial_mul(pg, astar, x), a) for x in h.elements}
            if conj != fset:
                conjugate_equality = False
                witnesses["conjugate_equality"] = (a, astar)
                break
        if not conjugate_equality:
            break

    conjugate_membership = True
    for a in pg.carrier:
        for astar in inv_set(pg, a):
            for x in h.elements:
                if partial_mul(pg, partial_mul(pg, astar, x), a) not in fset:
                    conjugate_membership = False
                    witnesses["conjugate_membership"] = (a, x, astar)
                    break
            if not conjugate_membership:
                break
        if not conjugate_membership:
            break

    support_conjugation = True
    parent = pg.parent
    for x in pg.support.elements:
        xi = parent.inv(x)
        if {parent.mul(parent.mul(xi, f), x) for f in h.support.elements} != fset:
            support_conjugation = False
            witnesses["support_conjugation"] = x
            break

    flags = (coset_equality, conjugate_equality, conjugate_membership, support_conjugation)
    return NormalityVerdict(all(flags), *flags, witnesses)


def normal_test(pg: PartialGroup, elems) -> NormalTestResult:
    """The two-clause normality test over an arbitrary nonempty subset.

    Clause (a): h.k* lies in F = E meet H for all h, k in H and every inverse
    choice.  Clause (b): a*.h.a lies in F for every h in H, a in the carrier.
    """
    h = tuple(sorted(set(int(a) for a in elems)))
    if not h:
        return NormalTestResult(False, "nonempty", None)
    for a in h:
        if a not in pg:
            raise NotInCarrier(a)
    fset = set(h) & pg.support._members
    for x in h:
        for k in h:
            for kstar in inv_set(pg, k):
                if partial_mul(pg, x, kstar) not in fset:
                    return NormalTestResult(False, "support-product", (x, k, kstar))
    for x in h:
        for a in pg.carrier:
            for astar in inv_set(pg, a):
                if partial_mul(pg, partial_mul(pg, astar, x), a) not in fset:
                    return NormalTestResult(False, "conjugation", (a, x, astar))
    return NormalTestResult(True, None, None)


# ---------------------------------------------------------------------------
# congruence and quotient


def congruence_mod(pg: PartialGroup, h: PartialSubgroup) -> CongruencePartition:
    """Classes of a ~ b <=> a.e = b.k for some k in H, verified as an equivalence."""
    def related(a, b):
        target = dot_identity(pg, a)
        return any(partial_mul(pg, b, k) == target for k in h.elements)

    blocks, class_of = _blocks_from_relation(pg.carrier, related)
    return CongruencePartition(pg, h, blocks, class_of)


def partial_quotient(pg: PartialGroup, n) -> PartialQuotient:
    """Quotient by a normal partial subgroup, realized as E / F at support level."""
    n = decompose_partial_subgroup(pg, n)
    verdict = is_normal_partial(pg, n)
    if not verdict.normal:
        raise NotNormal(next(iter(verdict.witnesses.values())))
    gq = group_quotient(pg.support, n.support)
    pos_in_e = {a: k for k, a in enumerate(pg.support.elements)}
    projection = tuple(
        int(gq.projection[pos_in_e[dot_identity(pg, a)]]) for a in pg.carrier
    )
    for a in pg.carrier:
        k = pg.local_index(a)
        if projection[k] != projection[pg.local_index(dot_identity(pg, a))]:
            raise AlgebraError("projection does not factor through the support part")
    return PartialQuotient(pg, n, gq, projection)


# ---------------------------------------------------------------------------
# products, intersections, enumeration


def product_subgroups(h: PartialSubgroup, k: PartialSubgroup) -> tuple[int, ...]:
    """The product set {a.b : a in H, b in K} under the partial law."""
    if h.ambient is not k.ambient:
        raise DifferentAmbient()
    pg = h.ambient
    return tuple(sorted({partial_mul(pg, a, b) for a in h.elements for b in k.elements}))


def intersect_subgroups(h: PartialSubgroup, k: PartialSubgroup) -> PartialSubgroup:
    """The set intersection, which is again a partial subgroup."""
    if h.ambient is not k.ambient:
        raise DifferentAmbient()
    return decompose_partial_subgroup(h.ambient, h.members & k.members)


def generated_partial_subgroup(pg: PartialGroup, seed) -> PartialSubgroup:
    """Deterministic completion of a seed to a partial subgroup.

    Alternates product closure with adding the least member of Inv(h) for any
    h whose inverse set misses the current set, until stable.
    """
    mask = 1 << pg.e_local
    for a in seed:
        mask |= 1 << pg.local_index(a)
    pl = pg.pl_local
    m = len(pg.carrier)
    while True:
        changed = False
        members = [k for k in range(m) if (mask >> k) & 1]
        for i in members:
            for j in members:
                bit = 1 << int(pl[i, j])
                if not mask & bit:
                    mask |= bit
                    changed = True
        for i in members:
            need = int(pg.inv_words[i])
            if mask & need == 0:
                lowest = need & -need
                mask |= lowest
                changed = True
        if not changed:
            break
    h = _mask_elements(pg, mask)
    return _build_psg(pg, h, mask)


def enumerate_partial_subgroups(pg: PartialGroup, exhaustive_limit: int = 10) -> list[PartialSubgroup]:
    """All partial subgroups for small carriers, else all ones generated by <= 2 elements.

    The exhaustive path sweeps every subset bitmask through the hot kernel;
    results are sorted by (size, elements) either way.
    """
    m = len(pg.carrier)
    if m <= exhaustive_limit:
        masks = psg_masks(pg.pl_local, pg.inv_words, pg.e_local)
        found = [_build_psg(pg, _mask_elements(pg, int(mask)), int(mask)) for mask in masks]
    else:
        seen: dict[tuple[int, ...], PartialSubgroup] = {}
        seeds: list[tuple[int, ...]] = [()]
        seeds += [(a,) for a in pg.carrier]
        seeds += [(a, b) for a in pg.carrier for b in pg.carrier if a < b]
        for seed in seeds:
            psg = generated_partial_subgroup(pg, seed)
            seen.setdefault(psg.elements, psg)
        found = list(seen.values())
    found.sort(key=lambda s: (len(s.elements), s.elements))
    return found
