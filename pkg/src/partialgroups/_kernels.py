"""Hot integer-table kernels, numba-jitted with pure-numpy fallbacks.

Every kernel ships in two interchangeable flavours:

* ``*_numba`` -- a scalar loop compiled with ``@njit`` (``None`` when numba
  is unavailable or disabled),
* ``*_numpy`` -- a vectorised (or plain-interpreted, for the search kernels)
  implementation on numpy arrays.

The public dispatchers pick the numba path when it is enabled.  Set the
environment variable ``PARTIALGROUPS_NUMBA=0`` before import to force the
numpy path; ``benchmarks/bench_kernels.py`` times both.

All tables use dtype int64.  Subset kernels encode subsets as int64 bitmasks,
so carriers are limited to 62 elements (far above the desk-scale caps).
"""

from __future__ import annotations

import os

import numpy as np


def _env_wants_numba() -> bool:
    value = os.environ.get("PARTIALGROUPS_NUMBA", "").strip().lower()
    return value not in {"0", "false", "off", "no"}


NUMBA_ENABLED = False
if _env_wants_numba():
    try:
        from numba import njit

        NUMBA_ENABLED = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        NUMBA_ENABLED = False


# ---------------------------------------------------------------------------
# associativity scan


def _first_nonassoc_scan(table):
    n = table.shape[0]
    for a in range(n):
        for b in range(n):
            ab = table[a, b]
            for c in range(n):
                if table[ab, c] != table[a, table[b, c]]:
                    return a * n * n + b * n + c
    return -1


def first_nonassoc_numpy(table: np.ndarray) -> int:
    # lhs[a,b,c] = (a*b)*c, rhs[a,b,c] = a*(b*c); ravel order is lex (a,b,c)
    lhs = table[table, :]
    rhs = table[:, table]
    bad = np.flatnonzero((lhs != rhs).ravel())
    return int(bad[0]) if bad.size else -1


first_nonassoc_numba = njit(cache=True)(_first_nonassoc_scan) if NUMBA_ENABLED else None


def first_nonassoc(table: np.ndarray) -> int:
    """Flat index a*n*n + b*n + c of the first associativity violation, or -1."""
    if first_nonassoc_numba is not None:
        return int(first_nonassoc_numba(table))
    return first_nonassoc_numpy(table)


# ---------------------------------------------------------------------------
# closure of a seed set under products and inverses


def _closure_scan(table, inverse, seed):
    n = table.shape[0]
    member = np.zeros(n, np.bool_)
    elems = np.empty(n, np.int64)
    cnt = 0
    for i in range(n):
        if seed[i]:
            member[i] = True
            elems[cnt] = i
            cnt += 1
    while True:
        added = False
        limit = cnt
        for ii in range(limit):
            b = inverse[elems[ii]]
            if not member[b]:
                member[b] = True
                elems[cnt] = b
                cnt += 1
                added = True
        limit = cnt
        for ii in range(limit):
            for jj in range(limit):
                p = table[elems[ii], elems[jj]]
                if not member[p]:
                    member[p] = True
                    elems[cnt] = p
                    cnt += 1
                    added = True
        if not added:
            return member


def closure_mask_numpy(table: np.ndarray, inverse: np.ndarray, seed: np.ndarray) -> np.ndarray:
    member = seed.copy()
    while True:
        idx = np.flatnonzero(member)
        new = member.copy()
        new[table[np.ix_(idx, idx)].ravel()] = True
        new[inverse[idx]] = True
        if bool((new == member).all()):
            return member
        member = new


closure_mask_numba = njit(cache=True)(_closure_scan) if NUMBA_ENABLED else None


def closure_mask(table: np.ndarray, inverse: np.ndarray, seed: np.ndarray) -> np.ndarray:
    """Boolean membership mask of the subgroup generated by the seed mask.

    The seed must be nonempty (callers add the identity for empty seeds).
    """
    if closure_mask_numba is not None:
        return closure_mask_numba(table, inverse, seed)
    return closure_mask_numpy(table, inverse, seed)


# ---------------------------------------------------------------------------
# exhaustive partial-subgroup sweep over subset bitmasks


def _psg_masks_scan(pl, inv_words, e_idx):
    m = pl.shape[0]
    total = np.int64(1) << m
    out = np.empty(total, np.int64)
    cnt = 0
    for mask in range(total):
        if (mask >> e_idx) & 1 == 0:
            continue
        ok = True
        for i in range(m):
            if (mask >> i) & 1 == 0:
                continue
            if inv_words[i] & mask == 0:
                ok = False
                break
            for j in range(m):
                if (mask >> j) & 1 == 0:
                    continue
                if (mask >> pl[i, j]) & 1 == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out[cnt] = mask
            cnt += 1
    return out[:cnt].copy()


def psg_masks_numpy(pl: np.ndarray, inv_words: np.ndarray, e_idx: int) -> np.ndarray:
    m = pl.shape[0]
    masks = np.arange(np.int64(1) << m, dtype=np.int64)
    has = ((masks[:, None] >> np.arange(m)) & 1).astype(bool)
    ok = has[:, e_idx].copy()
    for i in range(m):
        for j in range(m):
            ok &= ~(has[:, i] & has[:, j] & ~has[:, pl[i, j]])
    for i in range(m):
        ok &= ~(has[:, i] & ((masks & inv_words[i]) == 0))
    return masks[ok]


psg_masks_numba = njit(cache=True)(_psg_masks_scan) if NUMBA_ENABLED else None


def psg_masks(pl: np.ndarray, inv_words: np.ndarray, e_idx: int) -> np.ndarray:
    """All subset bitmasks over the carrier that form a partial subgroup.

    ``pl`` is the local product table (values are local indices), ``inv_words``
    holds the inverse-set bitmask of each element.  Masks return in ascending
    order, which is the canonical enumeration order.  Requires m <= 20.
    """
    m = pl.shape[0]
    if m > 20:
        raise ValueError(f"subset sweep limited to 20 carrier elements, got {m}")
    if psg_masks_numba is not None:
        return psg_masks_numba(pl, inv_words, np.int64(e_idx))
    return psg_masks_numpy(pl, inv_words, e_idx)


# ---------------------------------------------------------------------------
# backtracking enumeration of partial-group homomorphisms


def _enum_homs_scan(pl1, pl2, e2, cand, pair_i, pair_j, pair_off, out):
    m1 = pl1.shape[0]
    m2 = pl2.shape[0]
    max_out = out.shape[0]
    img = np.full(m1, -1, np.int64)
    choice = np.zeros(m1, np.int64)
    cnt = 0
    pos = 0
    while pos >= 0:
        if pos == m1:
            if cnt < max_out:
                for t in range(m1):
                    out[cnt, t] = img[t]
            cnt += 1
            if cnt > max_out:
                return cnt
            pos -= 1
            continue
        c = choice[pos]
        advanced = False
        while c < m2:
            if cand[pos, c]:
                img[pos] = c
                ok = True
                for t in range(pair_off[pos], pair_off[pos + 1]):
                    i = pair_i[t]
                    j = pair_j[t]
                    k = pl1[i, j]
                    if pl2[img[k], e2] != pl2[img[i], img[j]]:
                        ok = False
                        break
                if ok:
                    advanced = True
                    c += 1
                    break
            c += 1
        if advanced:
            choice[pos] = c
            pos += 1
            if pos < m1:
                choice[pos] = 0
        else:
            img[pos] = -1
            choice[pos] = 0
            pos -= 1
    return cnt


enum_homs_numba = njit(cache=True)(_enum_homs_scan) if NUMBA_ENABLED else None
enum_homs_numpy = _enum_homs_scan


def enum_hom_images(
    pl1: np.ndarray,
    pl2: np.ndarray,
    e2: int,
    cand: np.ndarray,
    pair_i: np.ndarray,
    pair_j: np.ndarray,
    pair_off: np.ndarray,
    max_homs: int,
) -> np.ndarray | None:
    """Enumerate image rows of all structure-preserving maps, lexicographically.

    The deferred pair lists check f(i.j).e == f(i).f(j) as soon as all three
    positions are assigned.  Returns None when more than ``max_homs`` maps
    exist (the caller turns that into a budget error).
    """
    out = np.empty((max_homs, pl1.shape[0]), np.int64)
    if enum_homs_numba is not None:
        cnt = int(enum_homs_numba(pl1, pl2, np.int64(e2), cand, pair_i, pair_j, pair_off, out))
    else:
        cnt = int(enum_homs_numpy(pl1, pl2, np.int64(e2), cand, pair_i, pair_j, pair_off, out))
    if cnt > max_homs:
        return None
    return out[:cnt].copy()
