"""Finite groups as Cayley tables, with subgroups, quotients, and maps.

Elements are dense integer indices 0..n-1 everywhere; higher structures store
index sets and never element values.  All types are immutable after
construction, so instances can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from ._kernels import closure_mask, first_nonassoc
from .errors import (
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotNormal,
    NotSubgroup,
    OrderCapExceeded,
)

DEFAULT_ORDER_CAP = 32


class GroupTable:
    """A finite group stored as an n-by-n Cayley table (row = left factor).

    Construct through :func:`validate_group`, which checks every group axiom
    and locates the identity and the inverse map.
    """

    __slots__ = ("table", "order", "identity", "inverse", "names", "_abelian", "_subgroups", "_orders")

    def __init__(self, table: np.ndarray, identity: int, inverse: np.ndarray, names=None):
        self.table = table
        self.order = int(table.shape[0])
        self.identity = int(identity)
        self.inverse = inverse
        self.names = tuple(str(x) for x in names) if names is not None else None
        self.table.setflags(write=False)
        self.inverse.setflags(write=False)
        self._abelian = None
        self._subgroups = None
        self._orders = None

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def elements(self) -> range:
        return range(self.order)

    def name_of(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    @property
    def is_abelian(self) -> bool:
        if self._abelian is None:
            self._abelian = bool((self.table == self.table.T).all())
        return self._abelian

    def element_order(self, a: int) -> int:
        x = a
        n = 1
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def element_orders(self) -> tuple[int, ...]:
        if self._orders is None:
            self._orders = tuple(self.element_order(a) for a in self.elements())
        return self._orders

    def __repr__(self):
        return f"GroupTable(order={self.order})"


class SubgroupSet:
    """A subgroup of a parent GroupTable, stored as a sorted index tuple.

    Instances produced by this module are already validated; use
    :func:`subgroup` to validate arbitrary element sets.
    """

    __slots__ = ("parent", "elements", "_members")

    def __init__(self, parent: GroupTable, elements):
        self.parent = parent
        self.elements = tuple(sorted(int(x) for x in set(elements)))
        self._members = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self._members

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (
            isinstance(other, SubgroupSet)
            and other.parent is self.parent
            and other.elements == self.elements
        )

    def __hash__(self):
        return hash((id(self.parent), self.elements))

    def mul(self, a: int, b: int) -> int:
        return self.parent.mul(a, b)

    def inv(self, a: int) -> int:
        return self.parent.inv(a)

    def __repr__(self):
        return f"SubgroupSet({set(self.elements)})"


@dataclass(frozen=True)
class GroupMap:
    """A total map between group domains, stored as images over the source.

    ``images[k]`` is the image of the k-th element of ``domain_elements(source)``.
    """

    source: object
    target: object
    images: tuple[int, ...]

    def apply(self, a: int) -> int:
        return self.images[domain_elements(self.source).index(a)]


class GroupQuotient:
    """Cosets of a normal subgroup with the induced group structure.

    ``parent`` is the group being quotiented (reified to its own table when the
    input was a SubgroupSet); ``labels`` maps its local indices back to the
    original ambient indices.
    """

    __slots__ = ("parent", "labels", "normal", "cosets", "quotient_table", "projection")

    def __init__(self, parent, labels, normal, cosets, quotient_table, projection):
        self.parent = parent
        self.labels = labels
        self.normal = normal
        self.cosets = cosets
        self.quotient_table = quotient_table
        self.projection = projection
        self.projection.setflags(write=False)

    def class_of_label(self, label: int) -> int:
        return int(self.projection[self.labels.index(label)])

    def coset_labels(self, k: int) -> tuple[int, ...]:
        return tuple(self.labels[i] for i in self.cosets[k])

    def projection_map(self) -> GroupMap:
        return GroupMap(self.parent, self.quotient_table, tuple(int(x) for x in self.projection))

    def __repr__(self):
        return f"GroupQuotient(order={self.quotient_table.order})"


# ---------------------------------------------------------------------------
# domain helpers shared by maps over GroupTable or SubgroupSet


def domain_elements(g) -> tuple[int, ...]:
    if isinstance(g, GroupTable):
        return tuple(range(g.order))
    return g.elements


def domain_members(g) -> frozenset:
    if isinstance(g, GroupTable):
        return frozenset(range(g.order))
    return g._members


def domain_identity(g) -> int:
    if isinstance(g, GroupTable):
        return g.identity
    return g.parent.identity


def domain_mul(g, a: int, b: int) -> int:
    return g.mul(a, b)


# ---------------------------------------------------------------------------
# construction and validation


def validate_group(raw_table, names=None) -> GroupTable:
    """Validate a raw Cayley table and return the finished GroupTable.

    Checks closure, a two-sided identity, two-sided inverses, and
    associativity, in that order; raises the matching structured error with
    the first violating tuple.
    """
    table = np.ascontiguousarray(np.asarray(raw_table, dtype=np.int64))
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise ValueError("Cayley table must be square and nonempty")
    n = table.shape[0]
    bad = (table < 0) | (table >= n)
    if bad.any():
        i, j = map(int, np.argwhere(bad)[0])
        raise NotClosed(i, j, int(table[i, j]))
    rng = np.arange(n)
    identity = None
    for e in range(n):
        if (table[e] == rng).all() and (table[:, e] == rng).all():
            identity = e
            break
    if identity is None:
        raise NoIdentity()
    inverse = np.empty(n, np.int64)
    for a in range(n):
        hits = np.flatnonzero((table[a] == identity) & (table[:, a] == identity))
        if hits.size == 0:
            raise NoInverse(a)
        inverse[a] = hits[0]
    flat = first_nonassoc(table)
    if flat >= 0:
        a, rest = divmod(flat, n * n)
        b, c = divmod(rest, n)
        raise NotAssociative(a, b, c)
    if names is not None and len(names) != n:
        raise ValueError("names length does not match order")
    return GroupTable(table, identity, inverse, names)


def subgroup(parent: GroupTable, elements) -> SubgroupSet:
    """Validate an element set as a subgroup, raising NotSubgroup otherwise."""
    elems = tuple(sorted(int(x) for x in set(elements)))
    members = frozenset(elems)
    if parent.identity not in members:
        raise NotSubgroup("identity", parent.identity)
    for a in elems:
        if parent.inv(a) not in members:
            raise NotSubgroup("inverse", a)
        for b in elems:
            if parent.mul(a, b) not in members:
                raise NotSubgroup("closure", (a, b))
    return SubgroupSet(parent, elems)


def trivial_subgroup(parent: GroupTable) -> SubgroupSet:
    return SubgroupSet(parent, (parent.identity,))


def full_subgroup(parent: GroupTable) -> SubgroupSet:
    return SubgroupSet(parent, range(parent.order))


def subgroup_closure(parent: GroupTable, seed) -> SubgroupSet:
    """Smallest subgroup containing the seed set (closure under * and inverse)."""
    mask = np.zeros(parent.order, np.bool_)
    mask[parent.identity] = True
    for a in seed:
        mask[int(a)] = True
    member = closure_mask(parent.table, parent.inverse, mask)
    return SubgroupSet(parent, np.flatnonzero(member))


def all_subgroups(parent: GroupTable, cap: int = DEFAULT_ORDER_CAP) -> list[SubgroupSet]:
    """Complete list of subgroups, sorted by (size, elements).

    Seeds with every cyclic subgroup, then joins pairs to a fixpoint; every
    subgroup is a join of cyclic ones, so the sweep is complete.
    """
    if parent.order > cap:
        raise OrderCapExceeded(parent.order, cap)
    if parent._subgroups is not None:
        return list(parent._subgroups)
    seen: set[tuple[int, ...]] = {(parent.identity,)}
    for a in parent.elements():
        seen.add(subgroup_closure(parent, (a,)).elements)
    while True:
        pairs = sorted(seen)
        added = False
        for i, left in enumerate(pairs):
            for right in pairs[i + 1 :]:
                joined = subgroup_closure(parent, left + right).elements
                if joined not in seen:
                    seen.add(joined)
                    added = True
        if not added:
            break
    result = [SubgroupSet(parent, elems) for elems in sorted(seen, key=lambda t: (len(t), t))]
    parent._subgroups = tuple(result)
    return list(result)


def is_normal_subgroup(ambient, sub: SubgroupSet) -> int | None:
    """None when normal inside the ambient domain, else a witness x with x^-1 S x != S."""
    members = sub._members
    parent = sub.parent
    for x in domain_elements(ambient):
        xi = parent.inv(x)
        conj = {parent.mul(parent.mul(xi, s), x) for s in sub.elements}
        if conj != members:
            return x
    return None


def subgroup_table(sub: SubgroupSet) -> GroupTable:
    """Reify a subgroup as its own GroupTable; local index k labels sub.elements[k]."""
    elems = sub.elements
    pos = {a: k for k, a in enumerate(elems)}
    raw = [[pos[sub.parent.mul(a, b)] for b in elems] for a in elems]
    names = [sub.parent.name_of(a) for a in elems] if sub.parent.names else None
    return validate_group(raw, names)


def group_quotient(whole, normal: SubgroupSet) -> GroupQuotient:
    """Quotient of a group (or subgroup) by a normal subgroup.

    Cosets are ordered by their minimal element; the induced table is checked
    over every pair of representatives and validated as a group.
    """
    if isinstance(whole, GroupTable):
        if normal.parent is not whole:
            raise ValueError("normal subgroup belongs to a different group")
        local = whole
        labels = tuple(range(whole.order))
        normal_local = normal.elements
    else:
        if normal.parent is not whole.parent:
            raise ValueError("normal subgroup belongs to a different group")
        if not normal._members <= whole._members:
            raise NotSubgroup("containment", min(normal._members - whole._members))
        labels = whole.elements
        local = subgroup_table(whole)
        pos = {a: k for k, a in enumerate(labels)}
        normal_local = tuple(pos[a] for a in normal.elements)

    nset = frozenset(normal_local)
    for x in range(local.order):
        xi = local.inv(x)
        if {local.mul(local.mul(xi, s), x) for s in normal_local} != nset:
            raise NotNormal(labels[x])

    assigned = np.full(local.order, -1, np.int64)
    blocks: list[tuple[int, ...]] = []
    for a in range(local.order):
        if assigned[a] >= 0:
            continue
        block = tuple(sorted(local.mul(a, s) for s in normal_local))
        blocks.append(block)
        for b in block:
            assigned[b] = len(blocks) - 1
    order = sorted(range(len(blocks)), key=lambda k: blocks[k][0])
    rank = {old: new for new, old in enumerate(order)}
    cosets = tuple(blocks[k] for k in order)
    projection = np.array([rank[int(assigned[a])] for a in range(local.order)], np.int64)

    k = len(cosets)
    qt = np.empty((k, k), np.int64)
    for i, bi in enumerate(cosets):
        for j, bj in enumerate(cosets):
            values = {int(projection[local.mul(a, b)]) for a in bi for b in bj}
            if len(values) != 1:
                raise NotNormal((labels[bi[0]], labels[bj[0]]))
            qt[i, j] = values.pop()
    quotient_table = validate_group(qt)
    return GroupQuotient(local, labels, tuple(normal_local), cosets, quotient_table, projection)


# ---------------------------------------------------------------------------
# maps


def check_group_hom(f: GroupMap) -> tuple[bool, tuple[int, int] | None]:
    """True when f(ab) = f(a)f(b) for every source pair, else (False, first pair)."""
    src = f.source
    tgt = f.target
    elems = domain_elements(src)
    members = domain_members(tgt)
    image_of = dict(zip(elems, f.images))
    for a in elems:
        if image_of[a] not in members:
            return False, (a, a)
    for a in elems:
        for b in elems:
            if image_of[domain_mul(src, a, b)] != domain_mul(tgt, image_of[a], image_of[b]):
                return False, (a, b)
    return True, None


def _greedy_generators(g) -> list[int]:
    parent = g if isinstance(g, GroupTable) else g.parent
    gens: list[int] = []
    closed = {domain_identity(g)}
    for a in domain_elements(g):
        if a not in closed:
            gens.append(a)
            mask = np.zeros(parent.order, np.bool_)
            mask[parent.identity] = True
            for x in gens:
                mask[x] = True
            closed = set(np.flatnonzero(closure_mask(parent.table, parent.inverse, mask)))
    return gens


def _partial_extend(src, gens, gen_images, tgt) -> dict[int, int] | None:
    """Map on the subgroup generated by gens, grown from generator images.

    Checks f(a*g) = f(a)*f(g) for every reached a and every generator, which
    forces the homomorphism property on the generated subgroup; returns None
    on any conflict.
    """
    mapping = {domain_identity(src): domain_identity(tgt)}
    frontier = [domain_identity(src)]
    while frontier:
        a = frontier.pop()
        fa = mapping[a]
        for g, fg in zip(gens, gen_images):
            b = domain_mul(src, a, g)
            fb = domain_mul(tgt, fa, fg)
            known = mapping.get(b)
            if known is None:
                mapping[b] = fb
                frontier.append(b)
            elif known != fb:
                return None
    return mapping


def enumerate_group_homs(src, tgt) -> list[GroupMap]:
    """All group homomorphisms src -> tgt, sorted by image tuple."""
    elems = domain_elements(src)
    tgt_elems = domain_elements(tgt)
    gens = _greedy_generators(src)
    parent_src = src if isinstance(src, GroupTable) else src.parent
    parent_tgt = tgt if isinstance(tgt, GroupTable) else tgt.parent
    found: list[GroupMap] = []

    gen_orders = [parent_src.element_order(g) for g in gens]
    candidates = [
        [t for t in tgt_elems if gen_orders[k] % parent_tgt.element_order(t) == 0]
        for k in range(len(gens))
    ]

    def descend(k: int, picked: list[int]):
        if k == len(gens):
            mapping = _partial_extend(src, gens, picked, tgt)
            if mapping is not None and len(mapping) == len(elems):
                images = tuple(mapping[a] for a in elems)
                gm = GroupMap(src, tgt, images)
                ok, _ = check_group_hom(gm)
                if ok:
                    found.append(gm)
            return
        for t in candidates[k]:
            if _partial_extend(src, gens[: k + 1], picked + [t], tgt) is not None:
                descend(k + 1, picked + [t])

    if not gens:
        found.append(GroupMap(src, tgt, tuple([domain_identity(tgt)] * len(elems))))
    else:
        descend(0, [])
    found.sort(key=lambda gm: gm.images)
    return found


def find_isomorphism(a: GroupTable, b: GroupTable, cap: int = DEFAULT_ORDER_CAP) -> GroupMap | None:
    """A bijective homomorphism a -> b when one exists, else None.

    Backtracks over generator images; gated by the order cap because the
    search may be exponential.
    """
    if a.order > cap or b.order > cap:
        raise OrderCapExceeded(max(a.order, b.order), cap)
    if a.order != b.order:
        return None
    if a.is_abelian != b.is_abelian:
        return None
    if sorted(a.element_orders()) != sorted(b.element_orders()):
        return None

    gens = _greedy_generators(a)
    by_order: dict[int, list[int]] = {}
    for t in b.elements():
        by_order.setdefault(b.element_order(t), []).append(t)

    def descend(k: int, picked: list[int]) -> dict[int, int] | None:
        mapping = _partial_extend(a, gens[:k], picked, b)
        if mapping is None or len(set(mapping.values())) != len(mapping):
            return None
        if k == len(gens):
            return mapping if len(mapping) == a.order else None
        for t in by_order.get(a.element_order(gens[k]), []):
            result = descend(k + 1, picked + [t])
            if result is not None:
                return result
        return None

    if not gens:
        return GroupMap(a, b, (b.identity,))
    mapping = descend(0, [])
    if mapping is None:
        return None
    images = tuple(mapping[x] for x in a.elements())
    gm = GroupMap(a, b, images)
    ok, _ = check_group_hom(gm)
    if not ok or len(set(images)) != a.order:
        return None
    return gm


def product_set(parent: GroupTable, left, right) -> tuple[int, ...]:
    """Sorted elementwise product {x*y : x in left, y in right}."""
    return tuple(sorted({parent.mul(x, y) for x in left for y in right}))


def intersect_sets(*sets) -> tuple[int, ...]:
    return tuple(sorted(reduce(lambda s, t: set(s) & set(t), sets)))
