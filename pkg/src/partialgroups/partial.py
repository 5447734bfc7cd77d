"""Partial groups: supplement pairs, free defect sets, and the partial law.

A partial group lives inside an ambient group and is the product set
``carrier = support * defect`` of a support subgroup E with a defect set D
that is free with E (some supplement subgroup of E contains D).  Every
carrier element factors uniquely as x*d with x in E, d in D, and the partial
product of two elements is the ambient product of their support parts.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    AlgebraError,
    DefectMeetsSupport,
    IdentityMissing,
    NotFree,
    NotInCarrier,
)
from .groups import (
    DEFAULT_ORDER_CAP,
    GroupMap,
    GroupTable,
    SubgroupSet,
    all_subgroups,
    subgroup,
    validate_group,
)


@dataclass(frozen=True)
class SupplementPair:
    """Subgroups with trivial intersection whose product covers the parent."""

    parent: GroupTable
    left: SubgroupSet
    right: SubgroupSet


@dataclass(frozen=True)
class SupplementViolation:
    """Why two subgroups fail to be supplements.

    ``kind`` is "intersection" (witness: a shared non-identity element) or
    "coverage" (witness: a parent element outside the product set).
    """

    kind: str
    witness: int


@dataclass(frozen=True)
class FreeClassPartition:
    """Blocks x*D of the free-equivalence relation over the carrier."""

    source: "PartialGroup"
    blocks: tuple[tuple[int, ...], ...]
    class_of: dict[int, int]


class PartialGroup:
    """The tuple (parent, support E, defect D) with its carrier E*D.

    Factorization maps and the local product table are precomputed at build
    time; instances are immutable afterwards and safe to share.
    """

    __slots__ = (
        "parent", "support", "defect", "witness_supplement", "carrier",
        "_supp_of", "_def_of", "_pos", "_pm", "_inv", "pl_local", "supp_local",
        "def_local", "inv_words", "e_local", "_abelian",
    )

    def __init__(self, parent, support, defect, witness_supplement, supp_of, def_of):
        self.parent = parent
        self.support = support
        self.defect = defect
        self.witness_supplement = witness_supplement
        self.carrier = tuple(sorted(supp_of))
        self._supp_of = supp_of
        self._def_of = def_of
        self._pos = {a: k for k, a in enumerate(self.carrier)}

        m = len(self.carrier)
        carr = self.carrier
        pos = self._pos
        self.supp_local = np.array([pos[supp_of[a]] for a in carr], np.int64)
        self.def_local = np.array([pos[def_of[a]] for a in carr], np.int64)
        self.e_local = pos[parent.identity]
        table = parent.table
        self.pl_local = np.empty((m, m), np.int64)
        for i, a in enumerate(carr):
            xa = supp_of[a]
            for j, b in enumerate(carr):
                self.pl_local[i, j] = pos[int(table[xa, supp_of[b]])]
        inv_words = np.zeros(m, np.int64)
        self._pm = {}
        self._inv = {}
        for i, a in enumerate(carr):
            xa = supp_of[a]
            for b in carr:
                self._pm[(a, b)] = int(table[xa, supp_of[b]])
            xi = parent.inv(xa)
            self._inv[a] = tuple(sorted(int(table[xi, d]) for d in defect))
            for b in self._inv[a]:
                inv_words[i] |= np.int64(1) << pos[b]
        self.inv_words = inv_words
        for arr in (self.supp_local, self.def_local, self.pl_local, self.inv_words):
            arr.setflags(write=False)
        self._abelian = None

    @property
    def identity(self) -> int:
        return self.parent.identity

    @property
    def is_abelian(self) -> bool:
        """Whether the partial law commutes on the whole carrier."""
        if self._abelian is None:
            self._abelian = bool((self.pl_local == self.pl_local.T).all())
        return self._abelian

    def __contains__(self, a) -> bool:
        return a in self._pos

    def local_index(self, a: int) -> int:
        try:
            return self._pos[a]
        except KeyError:
            raise NotInCarrier(a) from None

    def global_of(self, k: int) -> int:
        return self.carrier[k]

    def describe(self) -> str:
        return (
            f"carrier={set(self.carrier)} support={set(self.support.elements)} "
            f"defect={set(self.defect)}"
        )

    def __repr__(self):
        return f"PartialGroup(|G|={len(self.carrier)}, |E|={self.support.order}, |D|={len(self.defect)})"


# ---------------------------------------------------------------------------
# supplements and freeness


def check_supplement(parent: GroupTable, left: SubgroupSet, right: SubgroupSet):
    """SupplementPair when left and right are supplements in parent, else the violation."""
    shared = sorted(set(left.elements) & set(right.elements) - {parent.identity})
    if shared:
        return SupplementViolation("intersection", shared[0])
    covered = {parent.mul(x, d) for x in left.elements for d in right.elements}
    if len(covered) != parent.order:
        missing = min(set(range(parent.order)) - covered)
        return SupplementViolation("coverage", missing)
    return SupplementPair(parent, left, right)


def find_supplements(parent: GroupTable, support: SubgroupSet, cap: int = DEFAULT_ORDER_CAP) -> list[SubgroupSet]:
    """All subgroups that are supplements of the support, canonically ordered."""
    return [
        cand
        for cand in all_subgroups(parent, cap)
        if isinstance(check_supplement(parent, support, cand), SupplementPair)
    ]


def check_free(parent: GroupTable, support: SubgroupSet, defect, cap: int = DEFAULT_ORDER_CAP) -> SubgroupSet | None:
    """First supplement subgroup containing the defect set, or None when not free."""
    defect = tuple(sorted(set(int(d) for d in defect)))
    if parent.identity not in defect:
        raise IdentityMissing()
    dset = set(defect)
    for cand in find_supplements(parent, support, cap):
        if dset <= cand._members:
            return cand
    return None


# ---------------------------------------------------------------------------
# construction


def build_partial_group(parent: GroupTable, support, defect, weak: bool = False,
                        cap: int = DEFAULT_ORDER_CAP) -> PartialGroup:
    """Build the partial group with the given support subgroup and defect set.

    The strict mode requires the defect to be free with the support (a
    supplement subgroup must contain it).  The weak mode, used for
    experiments, only requires unique factorization of the product set and
    records no witness supplement.
    """
    if not isinstance(support, SubgroupSet):
        support = subgroup(parent, support)
    elif support.parent is not parent:
        raise ValueError("support belongs to a different parent group")
    defect = tuple(sorted(set(int(d) for d in defect)))
    if parent.identity not in defect:
        raise IdentityMissing()
    for d in defect:
        if d != parent.identity and d in support:
            raise DefectMeetsSupport(d)

    witness = None
    if not weak:
        witness = check_free(parent, support, defect, cap)
        if witness is None:
            raise NotFree(defect)

    supp_of: dict[int, int] = {}
    def_of: dict[int, int] = {}
    for x in support.elements:
        for d in defect:
            a = parent.mul(x, d)
            if a in supp_of:
                raise NotFree(defect, detail=f"element {a} factors as both "
                              f"({supp_of[a]},{def_of[a]}) and ({x},{d})")
            supp_of[a] = x
            def_of[a] = d
    return PartialGroup(parent, support, defect, witness, supp_of, def_of)


# ---------------------------------------------------------------------------
# the partial law


def factorize(pg: PartialGroup, a: int) -> tuple[int, int]:
    """The unique (x, d) in E x D with a = x*d."""
    if a not in pg:
        raise NotInCarrier(a)
    return pg._supp_of[a], pg._def_of[a]


def partial_mul(pg: PartialGroup, a: int, b: int) -> int:
    """The partial product a.b = x*y, the ambient product of the support parts."""
    try:
        return pg._pm[(a, b)]
    except KeyError:
        raise NotInCarrier(a if a not in pg else b) from None


def dot_identity(pg: PartialGroup, a: int) -> int:
    """a.e, which is the support part of a; equals a exactly when a lies in E."""
    try:
        return pg._supp_of[a]
    except KeyError:
        raise NotInCarrier(a) from None


def case_table_mul(pg: PartialGroup, a: int, b: int) -> int:
    """The five-branch case form of the partial law.

    Factorizations are recomputed here by brute-force search so the function
    stays an independent oracle for partial_mul.  Membership patterns not in
    the five explicit branches fall back to the defining x*y formula.
    """
    if a not in pg or b not in pg:
        raise NotInCarrier(a if a not in pg else b)

    def brute_factor(c: int) -> tuple[int, int]:
        for x in pg.support.elements:
            for d in pg.defect:
                if pg.parent.mul(x, d) == c:
                    return x, d
        raise NotInCarrier(c)

    in_e_a = a in pg.support
    in_e_b = b in pg.support
    in_d_a = a in pg.defect
    in_d_b = b in pg.defect
    if not (in_e_a or in_d_a) and not (in_e_b or in_d_b):
        return pg.parent.mul(brute_factor(a)[0], brute_factor(b)[0])
    if in_e_a and in_e_b:
        return pg.parent.mul(a, b)
    if in_e_a and in_d_b:
        return a
    if in_e_b and in_d_a:
        return b
    if in_d_a and in_d_b:
        return pg.parent.identity
    return pg.parent.mul(brute_factor(a)[0], brute_factor(b)[0])


def inv_set(pg: PartialGroup, a: int) -> tuple[int, ...]:
    """All reverse points of a: the set x^-1 * D where x is the support part."""
    try:
        return pg._inv[a]
    except KeyError:
        raise NotInCarrier(a) from None


def partial_power(pg: PartialGroup, a: int, n: int) -> int:
    """The n-fold partial product a.a.....a, which equals x^n in the parent.

    By convention the value at n = 1 is x (= a.e), so the x^n formula holds
    uniformly for all n >= 1.
    """
    if n < 1:
        raise ValueError("power must be at least 1")
    if a not in pg:
        raise NotInCarrier(a)
    x = pg._supp_of[a]
    acc = x
    for _ in range(n - 1):
        acc = pg.parent.mul(acc, x)
    return acc


# ---------------------------------------------------------------------------
# the free-equivalence quotient


def free_classes(pg: PartialGroup) -> FreeClassPartition:
    """Partition of the carrier into the blocks x*D for x in the support."""
    blocks = []
    class_of: dict[int, int] = {}
    for x in pg.support.elements:
        block = tuple(sorted(pg.parent.mul(x, d) for d in pg.defect))
        blocks.append(block)
    blocks.sort(key=lambda b: b[0])
    for k, block in enumerate(blocks):
        for a in block:
            if a in class_of:
                raise AlgebraError("free-equivalence blocks overlap")
            class_of[a] = k
    if len(class_of) != len(pg.carrier):
        raise AlgebraError("free-equivalence blocks do not cover the carrier")
    return FreeClassPartition(pg, tuple(blocks), class_of)


def quotient_by_free_relation(pg: PartialGroup) -> tuple[GroupTable, GroupMap]:
    """Group structure on the free-equivalence classes and the projection from E.

    Class multiplication uses the partial product and is checked over every
    pair of representatives before the table is validated as a group.
    """
    part = free_classes(pg)
    k = len(part.blocks)
    table = np.empty((k, k), np.int64)
    for i, bi in enumerate(part.blocks):
        for j, bj in enumerate(part.blocks):
            values = {part.class_of[partial_mul(pg, a, b)] for a in bi for b in bj}
            if len(values) != 1:
                raise AlgebraError(f"class product is not well-defined at blocks ({i}, {j})")
            table[i, j] = values.pop()
    quotient = validate_group(table)
    images = tuple(part.class_of[x] for x in pg.support.elements)
    projection = GroupMap(pg.support, quotient, images)
    return quotient, projection
