"""Independent brute-force oracles.

Everything here works on raw tables and plain element sets, never on the
package's precomputed structures, so expected values frozen in the tests stay
independent of the code paths they check.
"""

from __future__ import annotations

import itertools


def find_identity(table) -> int | None:
    n = len(table)
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            return e
    return None


def table_axioms_ok(table) -> bool:
    n = len(table)
    if any(not (0 <= table[a][b] < n) for a in range(n) for b in range(n)):
        return False
    e = find_identity(table)
    if e is None:
        return False
    for a in range(n):
        if not any(table[a][b] == e and table[b][a] == e for b in range(n)):
            return False
    return all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a in range(n) for b in range(n) for c in range(n)
    )


def brute_subgroups(table) -> list[tuple[int, ...]]:
    """Every subset containing the identity closed under product and inverse."""
    n = len(table)
    e = find_identity(table)
    inv = [next(b for b in range(n) if table[a][b] == e and table[b][a] == e) for a in range(n)]
    out = []
    rest = [a for a in range(n) if a != e]
    for mask in range(1 << len(rest)):
        subset = {e} | {rest[i] for i in range(len(rest)) if (mask >> i) & 1}
        if all(inv[a] in subset for a in subset) and all(
            table[a][b] in subset for a in subset for b in subset
        ):
            out.append(tuple(sorted(subset)))
    return sorted(out, key=lambda t: (len(t), t))


def minimal_subgroup_containing(table, seed) -> tuple[int, ...]:
    candidates = [s for s in brute_subgroups(table) if set(seed) <= set(s)]
    best = min(candidates, key=len)
    assert all(set(best) <= set(c) for c in candidates if len(c) == len(best))
    return best


def brute_factorizations(table, support, defect, a) -> list[tuple[int, int]]:
    return [(x, d) for x in support for d in defect if table[x][d] == a]


def carrier_of(table, support, defect) -> tuple[int, ...]:
    return tuple(sorted({table[x][d] for x in support for d in defect}))


def oracle_partial_mul(table, support, defect, a, b) -> int:
    xa = brute_factorizations(table, support, defect, a)[0][0]
    xb = brute_factorizations(table, support, defect, b)[0][0]
    return table[xa][xb]


def oracle_inv_set(table, support, defect, a) -> tuple[int, ...]:
    e = find_identity(table)
    carrier = carrier_of(table, support, defect)
    return tuple(sorted(b for b in carrier if oracle_partial_mul(table, support, defect, a, b) == e))


def brute_group_hom_count(table_a, elems_a, table_b, elems_b) -> int:
    """Count homomorphisms by checking every map; keep the domains tiny."""
    count = 0
    for images in itertools.product(elems_b, repeat=len(elems_a)):
        image_of = dict(zip(elems_a, images))
        if all(
            image_of[table_a[x][y]] == table_b[image_of[x]][image_of[y]]
            for x in elems_a for y in elems_a
        ):
            count += 1
    return count
