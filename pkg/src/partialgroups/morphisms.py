"""Homomorphisms of partial groups: recognition, anatomy, and enumeration.

A homomorphism must carry support into support and defect into defect, and
satisfy f(a.b).e = f(a).f(b) on every carrier pair; all three conditions are
validated, and enumeration backtracks over images under exactly those
constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._kernels import enum_hom_images
from .errors import AlgebraError, BudgetExceeded, HypothesisUnmet, NotInCarrier
from .partial import PartialGroup, dot_identity, inv_set, partial_mul

DEFAULT_CARRIER_BUDGET = 8
DEFAULT_MAX_HOMS = 100_000


@dataclass(frozen=True)
class PartialHom:
    """A validated homomorphism, stored as images over the source carrier."""

    source: PartialGroup
    target: PartialGroup
    images: tuple[int, ...]

    def apply(self, a: int) -> int:
        return self.images[self.source.local_index(a)]

    @property
    def flags(self) -> tuple[bool, bool, bool]:
        # (support_preserving, defect_preserving, law_preserving): all hold by
        # construction, recognition rejects maps where any fails.
        return (True, True, True)

    def is_bijective(self) -> bool:
        return len(set(self.images)) == len(self.target.carrier)

    def __repr__(self):
        return f"PartialHom({self.images})"


@dataclass(frozen=True)
class HomViolation:
    """Which homomorphism condition failed first, and where."""

    flag: str
    witness: object


@dataclass(frozen=True)
class HomAnatomy:
    """Kernel, default kernel (preimage of the target defect), and image."""

    hom: PartialHom
    kernel: tuple[int, ...]
    default_kernel: tuple[int, ...]
    image: tuple[int, ...]


class Mm3Report(NamedTuple):
    """The four structural facts every homomorphism satisfies."""

    support_hom: bool
    identity_to_identity: bool
    inverses_to_inverses: bool
    defect_shift: bool
    witnesses: dict

    @property
    def ok(self) -> bool:
        return self.support_hom and self.identity_to_identity and self.inverses_to_inverses and self.defect_shift


class InverseHomReport(NamedTuple):
    ok: bool
    violation: HomViolation | None
    inverse: PartialHom | None


def _resolve_mapping(mapping, source: PartialGroup) -> tuple[int, ...]:
    if isinstance(mapping, dict):
        try:
            return tuple(int(mapping[a]) for a in source.carrier)
        except KeyError as missing:
            raise NotInCarrier(missing.args[0]) from None
    images = tuple(int(x) for x in mapping)
    if len(images) != len(source.carrier):
        raise ValueError("image sequence length does not match the carrier")
    return images


def is_partial_hom(mapping, source: PartialGroup, target: PartialGroup):
    """PartialHom when the map preserves support, defect, and the law; else the violation."""
    images = _resolve_mapping(mapping, source)
    for b in images:
        if b not in target:
            raise NotInCarrier(b)
    image_of = dict(zip(source.carrier, images))
    for x in source.support.elements:
        if image_of[x] not in target.support:
            return HomViolation("support_preserving", x)
    dset = set(target.defect)
    for d in source.defect:
        if image_of[d] not in dset:
            return HomViolation("defect_preserving", d)
    for a in source.carrier:
        for b in source.carrier:
            lhs = dot_identity(target, image_of[partial_mul(source, a, b)])
            rhs = partial_mul(target, image_of[a], image_of[b])
            if lhs != rhs:
                return HomViolation("law_preserving", (a, b))
    return PartialHom(source, target, images)


def hom_anatomy(f: PartialHom) -> HomAnatomy:
    """Kernel, default kernel, and image of a validated homomorphism.

    The default kernel is checked to be a normal partial subgroup of the
    source and the image a partial subgroup of the target; failures would be
    implementation bugs, so they raise rather than report.
    """
    from .substructures import decompose_partial_subgroup, is_normal_partial

    src, tgt = f.source, f.target
    e2 = tgt.identity
    kernel = tuple(a for a in src.carrier if f.apply(a) == e2)
    d2 = set(tgt.defect)
    default_kernel = tuple(a for a in src.carrier if f.apply(a) in d2)
    image = tuple(sorted(set(f.images)))
    if not set(kernel) <= set(default_kernel):
        raise AlgebraError("kernel escapes the default kernel")
    dk = decompose_partial_subgroup(src, default_kernel)
    if not is_normal_partial(src, dk).normal:
        raise AlgebraError("default kernel is not a normal partial subgroup")
    decompose_partial_subgroup(tgt, image)
    return HomAnatomy(f, kernel, default_kernel, image)


def check_mm3_properties(f: PartialHom) -> Mm3Report:
    """Check the restriction-to-support, identity, inverse, and defect-shift facts."""
    from .groups import GroupMap, check_group_hom

    src, tgt = f.source, f.target
    witnesses: dict[str, object] = {}

    restriction = GroupMap(src.support, tgt.support, tuple(f.apply(x) for x in src.support.elements))
    support_hom, pair = check_group_hom(restriction)
    if not support_hom:
        witnesses["support_hom"] = pair

    identity_ok = f.apply(src.identity) == tgt.identity
    if not identity_ok:
        witnesses["identity_to_identity"] = src.identity

    inverses_ok = True
    for a in src.carrier:
        targets = set(inv_set(tgt, f.apply(a)))
        for astar in inv_set(src, a):
            if f.apply(astar) not in targets:
                inverses_ok = False
                witnesses["inverses_to_inverses"] = (a, astar)
                break
        if not inverses_ok:
            break

    defect_shift = True
    d2 = tgt.defect
    for a in src.carrier:
        x = dot_identity(src, a)
        fa = f.apply(a)
        if not any(tgt.parent.mul(f.apply(x), d) == fa for d in d2):
            defect_shift = False
            witnesses["defect_shift"] = a
            break

    return Mm3Report(support_hom, identity_ok, inverses_ok, defect_shift, witnesses)


def check_inverse_hom(f: PartialHom) -> InverseHomReport:
    """Whether the inverse of a bijective homomorphism is again a homomorphism.

    Hypotheses (bijectivity, preimage of support inside the source support,
    preimage of defect inside the source defect) raise HypothesisUnmet when
    they fail; the conclusion itself is reported, not raised.
    """
    src, tgt = f.source, f.target
    if len(set(f.images)) != len(tgt.carrier):
        raise HypothesisUnmet("bijective")
    preimage = {b: a for a, b in zip(src.carrier, f.images)}
    for b in tgt.support.elements:
        if preimage[b] not in src.support:
            raise HypothesisUnmet("support-preimage", b)
    dset = set(src.defect)
    for b in tgt.defect:
        if preimage[b] not in dset:
            raise HypothesisUnmet("defect-preimage", b)
    outcome = is_partial_hom(preimage, tgt, src)
    if isinstance(outcome, HomViolation):
        return InverseHomReport(False, outcome, None)
    return InverseHomReport(True, None, outcome)


# ---------------------------------------------------------------------------
# enumeration


def _deferred_pairs(pl1: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pair lists per position: (i, j) is checked once i, j, and i.j are assigned."""
    m1 = pl1.shape[0]
    buckets: list[list[tuple[int, int]]] = [[] for _ in range(m1)]
    for i in range(m1):
        for j in range(m1):
            buckets[max(i, j, int(pl1[i, j]))].append((i, j))
    pair_i = np.array([i for bucket in buckets for i, _ in bucket], np.int64)
    pair_j = np.array([j for bucket in buckets for _, j in bucket], np.int64)
    off = np.zeros(m1 + 1, np.int64)
    for p, bucket in enumerate(buckets):
        off[p + 1] = off[p] + len(bucket)
    return pair_i, pair_j, off


def enumerate_partial_homs(
    source: PartialGroup,
    target: PartialGroup,
    carrier_budget: int = DEFAULT_CARRIER_BUDGET,
    max_homs: int = DEFAULT_MAX_HOMS,
) -> list[PartialHom]:
    """All homomorphisms source -> target, ordered by image tuple.

    Backtracks over carrier images constrained by f(E1) in E2 and f(D1) in D2,
    with the law checked incrementally.  Enumeration refuses carriers above
    the budget and more than max_homs results.
    """
    m1, m2 = len(source.carrier), len(target.carrier)
    if m1 > carrier_budget or m2 > carrier_budget:
        raise BudgetExceeded(
            f"carrier sizes ({m1}, {m2}) exceed the homomorphism budget {carrier_budget}"
        )
    cand = np.zeros((m1, m2), np.bool_)
    tgt_in_e = np.array([b in target.support for b in target.carrier], np.bool_)
    tgt_in_d = np.array([b in set(target.defect) for b in target.carrier], np.bool_)
    for p, a in enumerate(source.carrier):
        allowed = np.ones(m2, np.bool_)
        if a in source.support:
            allowed &= tgt_in_e
        if a in set(source.defect):
            allowed &= tgt_in_d
        cand[p] = allowed
    pair_i, pair_j, pair_off = _deferred_pairs(source.pl_local)
    rows = enum_hom_images(
        source.pl_local, target.pl_local, target.e_local, cand,
        pair_i, pair_j, pair_off, max_homs,
    )
    if rows is None:
        raise BudgetExceeded(f"more than {max_homs} homomorphisms")
    return [
        PartialHom(source, target, tuple(target.carrier[int(q)] for q in row))
        for row in rows
    ]


def identity_hom(pg: PartialGroup) -> PartialHom:
    return PartialHom(pg, pg, pg.carrier)


def support_projection(pg: PartialGroup) -> PartialHom:
    """The homomorphism a -> a.e collapsing every element to its support part."""
    return PartialHom(pg, pg, tuple(dot_identity(pg, a) for a in pg.carrier))
