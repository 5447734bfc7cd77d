"""Named constructions of small finite groups and the default catalog.

Catalog names are case-insensitive; direct products use an ``x`` separator
(``Z2xZ4``).  ``file:<path>`` resolves through the .cayley loader.
"""

from __future__ import annotations

import itertools
import re
from math import prod

import numpy as np

from .errors import ParseError
from .groups import GroupTable, validate_group

CATALOG_NAMES = (
    "Z2", "Z3", "Z4", "Z2xZ2", "Z5", "Z6", "S3", "Z7", "Z8", "Z2xZ4",
    "Z2xZ2xZ2", "D4", "Q8", "Z9", "Z3xZ3", "D5", "Z12", "A4", "D6",
)

_cache: dict[str, GroupTable] = {}


def cyclic(n: int) -> GroupTable:
    """Additive group of integers mod n."""
    if n < 1:
        raise ValueError("cyclic order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return validate_group(table, [str(i) for i in range(n)])


def dihedral(n: int) -> GroupTable:
    """Dihedral group of order 2n: rotations r0..r{n-1}, reflections s0..s{n-1}."""
    if n < 1:
        raise ValueError("dihedral parameter must be positive")
    size = 2 * n
    table = np.empty((size, size), np.int64)
    for i in range(n):
        for j in range(n):
            table[i, j] = (i + j) % n
            table[i, j + n] = (i + j) % n + n
            table[i + n, j] = (i - j) % n + n
            table[i + n, j + n] = (i - j) % n
    names = [f"r{i}" for i in range(n)] + [f"s{i}" for i in range(n)]
    return validate_group(table, names)


def _perm_compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    # (p o q)(x) = p(q(x)): right factor acts first
    return tuple(p[q[x]] for x in range(len(p)))


def _perm_parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity

def _perm_name(p: tuple[int, ...]) -> str:
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            seen[start] = True
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = p[x]
        cycles.append("(" + "".join(str(v) for v in cycle) + ")")
    return "".join(cycles) if cycles else "e"


def _permutation_group(perms: list[tuple[int, ...]]) -> GroupTable:
    perms = sorted(perms)
    pos = {p: k for k, p in enumerate(perms)}
    table = [[pos[_perm_compose(a, b)] for b in perms] for a in perms]
    return validate_group(table, [_perm_name(p) for p in perms])


def symmetric(n: int) -> GroupTable:
    """Symmetric group on n points, elements sorted lexicographically."""
    return _permutation_group(list(itertools.permutations(range(n))))


def alternating(n: int) -> GroupTable:
    """Alternating group on n points."""
    return _permutation_group([p for p in itertools.permutations(range(n)) if _perm_parity(p) == 0])


def quaternion() -> GroupTable:
    """The quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    cyc = {(1, 2): (1, 3), (2, 3): (1, 1), (3, 1): (1, 2),
           (2, 1): (-1, 3), (3, 2): (-1, 1), (1, 3): (-1, 2)}

    def mul(a, b):
        (s1, u1), (s2, u2) = a, b
        if u1 == 0:
            return (s1 * s2, u2)
        if u2 == 0:
            return (s1 * s2, u1)
        if u1 == u2:
            return (-s1 * s2, 0)
        sign, u = cyc[(u1, u2)]
        return (s1 * s2 * sign, u)

    units = [(s, u) for u in range(4) for s in (1, -1)]
    pos = {e: k for k, e in enumerate(units)}
    table = [[pos[mul(a, b)] for b in units] for a in units]
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    return validate_group(table, names)


def direct_product(*groups: GroupTable) -> GroupTable:
    """Direct product with mixed-radix element indices (leftmost most significant)."""
    if not groups:
        raise ValueError("direct_product needs at least one factor")
    orders = [g.order for g in groups]
    n = prod(orders)

    def decode(x):
        parts = []
        for size in reversed(orders):
            x, r = divmod(x, size)
            parts.append(r)
        return tuple(reversed(parts))

    def encode(parts):
        x = 0
        for p, size in zip(parts, orders):
            x = x * size + p
        return x

    table = np.empty((n, n), np.int64)
    decoded = [decode(x) for x in range(n)]
    for a in range(n):
        for b in range(n):
            table[a, b] = encode([g.mul(pa, pb) for g, pa, pb in zip(groups, decoded[a], decoded[b])])
    names = ["(" + ",".join(g.name_of(p) for g, p in zip(groups, decode(x))) + ")" for x in range(n)]
    return validate_group(table, names)


_BUILDERS = {
    "S3": lambda: symmetric(3),
    "A4": lambda: alternating(4),
    "Q8": quaternion,
}


def _build_single(token: str) -> GroupTable:
    upper = token.upper()
    if upper in _BUILDERS:
        return _BUILDERS[upper]()
    match = re.fullmatch(r"Z(\d+)", upper)
    if match:
        return cyclic(int(match.group(1)))
    match = re.fullmatch(r"D(\d+)", upper)
    if match:
        return dihedral(int(match.group(1)))
    raise ParseError(f"unknown group name {token!r}")


def canonical_spec(spec: str) -> str:
    """Normalise a catalog spec to its canonical spelling (Z2xZ4, S3, ...)."""
    if spec.lower().startswith("file:"):
        return spec
    parts = re.split(r"[xX](?=[zZdDsSqQaA])", spec.strip())
    return "x".join(p.upper() for p in parts)


def group_by_spec(spec: str) -> GroupTable:
    """Resolve a GroupSpecString: a catalog/pattern name or ``file:<path>``."""
    spec = spec.strip()
    if not spec:
        raise ParseError("empty group spec")
    if spec.lower().startswith("file:"):
        from .formats import load_cayley

        return load_cayley(spec[5:])
    key = canonical_spec(spec)
    if key in _cache:
        return _cache[key]
    parts = key.split("x")
    tables = [_build_single(p) for p in parts]
    built = tables[0] if len(tables) == 1 else direct_product(*tables)
    _cache[key] = built
    return built


def catalog() -> list[tuple[str, GroupTable]]:
    """The default catalog in canonical order."""
    return [(name, group_by_spec(name)) for name in CATALOG_NAMES]
