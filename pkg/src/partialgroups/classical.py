"""Classical isomorphism-theorem verifiers built purely on the group layer.

These deliberately avoid the partial-group machinery so they can serve as an
independent reference when the partial-group theorem checkers degenerate to
plain groups (trivial defect).
"""

from __future__ import annotations

from .groups import (
    GroupMap,
    GroupTable,
    SubgroupSet,
    check_group_hom,
    domain_elements,
    group_quotient,
    is_normal_subgroup,
    product_set,
    subgroup,
)


def classical_first_iso(f: GroupMap) -> bool:
    """G / ker(f) is isomorphic to im(f) via the induced map."""
    src, tgt = f.source, f.target
    elems = domain_elements(src)
    image_of = dict(zip(elems, f.images))
    ok, _ = check_group_hom(f)
    if not ok:
        return False
    parent_src = src if isinstance(src, GroupTable) else src.parent
    e2 = tgt.identity if isinstance(tgt, GroupTable) else tgt.parent.identity
    kernel = subgroup(parent_src, [a for a in elems if image_of[a] == e2])
    quotient = group_quotient(src, kernel)
    image = sorted(set(image_of.values()))

    induced: dict[int, int] = {}
    for k, block in enumerate(quotient.cosets):
        values = {image_of[quotient.labels[i]] for i in block}
        if len(values) != 1:
            return False
        induced[k] = values.pop()
    if sorted(set(induced.values())) != image:
        return False
    if len(set(induced.values())) != len(induced):
        return False
    tgt_mul = tgt.mul
    qt = quotient.quotient_table
    for i in range(qt.order):
        for j in range(qt.order):
            if induced[qt.mul(i, j)] != tgt_mul(induced[i], induced[j]):
                return False
    return True


def classical_second_iso(parent: GroupTable, h: SubgroupSet, n: SubgroupSet) -> bool:
    """HN / N is isomorphic to H / (H meet N) when N is normal in the parent."""
    if is_normal_subgroup(parent, n) is not None:
        return False
    hn = subgroup(parent, product_set(parent, h.elements, n.elements))
    q_left = group_quotient(hn, SubgroupSet(parent, n.elements))
    meet = subgroup(parent, set(h.elements) & set(n.elements))
    q_right = group_quotient(h, meet)

    # x (H meet N) -> x N must be a well-defined bijective homomorphism
    left_class = {label: int(q_left.projection[k]) for k, label in enumerate(q_left.labels)}
    mapping: dict[int, int] = {}
    for k, block in enumerate(q_right.cosets):
        values = {left_class[q_right.labels[i]] for i in block}
        if len(values) != 1:
            return False
        mapping[k] = values.pop()
    if len(set(mapping.values())) != q_left.quotient_table.order:
        return False
    for i in range(q_right.quotient_table.order):
        for j in range(q_right.quotient_table.order):
            if mapping[q_right.quotient_table.mul(i, j)] != q_left.quotient_table.mul(mapping[i], mapping[j]):
                return False
    return True


def classical_third_iso(parent: GroupTable, k: SubgroupSet, n: SubgroupSet) -> bool:
    """(G/N) / (K/N) is isomorphic to G/K for normal N <= K, both normal in G."""
    if is_normal_subgroup(parent, k) is not None or is_normal_subgroup(parent, n) is not None:
        return False
    if not set(n.elements) <= set(k.elements):
        return False
    q_n = group_quotient(parent, n)
    k_over_n = subgroup(q_n.quotient_table, {int(q_n.projection[a]) for a in k.elements})
    q_big = group_quotient(q_n.quotient_table, k_over_n)
    q_k = group_quotient(parent, k)

    mapping: dict[int, int] = {}
    for x in parent.elements():
        big = int(q_big.projection[int(q_n.projection[x])])
        small = int(q_k.projection[x])
        if big in mapping:
            if mapping[big] != small:
                return False
        else:
            mapping[big] = small
    if len(mapping) != q_big.quotient_table.order or len(set(mapping.values())) != q_k.quotient_table.order:
        return False
    for i in range(q_big.quotient_table.order):
        for j in range(q_big.quotient_table.order):
            if mapping[q_big.quotient_table.mul(i, j)] != q_k.quotient_table.mul(mapping[i], mapping[j]):
                return False
    return True
