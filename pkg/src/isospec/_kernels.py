"""Integer kernels over Cayley tables.

Finite groups are handled as ``int32`` multiplication tables
(``table[a, b]`` is the index of ``a*b``); subgroups are boolean masks.
Each kernel exists twice: a scalar-loop version compiled with numba and a
vectorised numpy version.  Set ``ISOSPEC_DISABLE_NUMBA=1`` to force numpy.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("ISOSPEC_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")

try:  # pragma: no cover - import guard
    if _DISABLED:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover
    njit = None

USING_NUMBA = njit is not None


# -- numba path ---------------------------------------------------------------

def _closure_loop(table, seed_mask, gens, limit):
    # seed_mask must already be a subgroup: only products involving a new
    # element can leave it
    n = table.shape[0]
    mask = seed_mask.copy()
    mask[0] = True  # the identity is table-index 0 by convention
    members = np.empty(n, dtype=np.int32)
    count = 0
    for x in range(n):
        if mask[x]:
            members[count] = x
            count += 1
    stack = np.empty(n, dtype=np.int32)
    top = 0
    for g in gens:
        if not mask[g]:
            mask[g] = True
            members[count] = g
            count += 1
            stack[top] = g
            top += 1
    while top > 0:
        if count > limit:
            break
        top -= 1
        x = stack[top]
        i = 0
        while i < count:
            y = members[i]
            i += 1
            p = table[x, y]
            if not mask[p]:
                mask[p] = True
                members[count] = p
                count += 1
                stack[top] = p
                top += 1
            p = table[y, x]
            if not mask[p]:
                mask[p] = True
                members[count] = p
                count += 1
                stack[top] = p
                top += 1
    return mask


def _class_labels_loop(table, inv):
    n = table.shape[0]
    labels = np.full(n, -1, dtype=np.int32)
    nxt = 0
    for x in range(n):
        if labels[x] >= 0:
            continue
        for g in range(n):
            labels[table[table[g, x], inv[g]]] = nxt
        nxt += 1
    return labels


# -- numpy path ---------------------------------------------------------------

def _closure_numpy(table, seed_mask, gens, limit):
    mask = seed_mask.copy()
    mask[0] = True
    gens = np.asarray(gens, dtype=np.int64)
    new = np.zeros_like(mask)
    new[gens[~mask[gens]]] = True
    while new.any():
        mask |= new
        if mask.sum() > limit:
            break
        fresh, members = np.flatnonzero(new), np.flatnonzero(mask)
        prods = np.concatenate((table[np.ix_(fresh, members)].ravel(), table[np.ix_(members, fresh)].ravel()))
        new = np.zeros_like(mask)
        new[prods] = True
        new &= ~mask
    return mask


def _class_labels_numpy(table, inv):
    n = table.shape[0]
    # conj[g, x] = g x g^-1
    conj = table[table, inv[:, None]]
    labels = np.full(n, -1, dtype=np.int32)
    nxt = 0
    for x in range(n):
        if labels[x] < 0:
            labels[conj[:, x]] = nxt
            nxt += 1
    return labels


if USING_NUMBA:
    _closure_impl = njit(cache=True)(_closure_loop)
    _class_labels_impl = njit(cache=True)(_class_labels_loop)
else:
    _closure_impl = _closure_numpy
    _class_labels_impl = _class_labels_numpy


def closure(table: np.ndarray, gens, seed: np.ndarray | None = None, limit: int | None = None) -> np.ndarray:
    """Boolean mask of the subgroup generated by ``seed`` and ``gens``.

    ``seed`` must be the mask of a subgroup (default: the trivial group).
    With ``limit`` set, growth stops as soon as more than ``limit`` elements
    are found; the returned mask is then a partial set larger than ``limit``.
    """
    n = table.shape[0]
    seed_mask = np.zeros(n, dtype=np.bool_) if seed is None else np.asarray(seed, dtype=np.bool_)
    cap = n if limit is None else int(limit)
    return _closure_impl(table, seed_mask, np.asarray(list(gens), dtype=np.int32), cap)


def class_labels(table: np.ndarray, inv: np.ndarray) -> np.ndarray:
    """Conjugacy-class label of every element, labels in first-seen order."""
    return _class_labels_impl(table, np.asarray(inv, dtype=np.int32))


def inverse_indices(table: np.ndarray) -> np.ndarray:
    rows, cols = np.nonzero(table == 0)
    inv = np.empty(table.shape[0], dtype=np.int32)
    inv[rows] = cols
    return inv


def _is_prime_power(k: int) -> bool:
    if k < 2:
        return False
    p = 2
    while k % p:
        p += 1
    while k % p == 0:
        k //= p
    return k == 1


def subgroups_up_to(table: np.ndarray, max_order: int) -> list[np.ndarray]:
    """Every subgroup of order <= ``max_order``, as masks, deduplicated.

    A subgroup is generated by its cyclic subgroups of prime-power order, and
    adding them one at a time gives a chain of subgroups no larger than the
    target, so repeated joins starting from those cyclic groups miss nothing.
    A join <H, C> has at least |H| |C| / |H n C| elements; joins whose bound
    already exceeds ``max_order`` are skipped without computing the closure.
    """
    n = table.shape[0]
    cyclic: dict[bytes, int] = {}
    for g in range(n):
        m = closure(table, [g])
        cyclic.setdefault(m.tobytes(), g)
    masks = [np.frombuffer(k, dtype=np.bool_).copy() for k in cyclic]
    gens_all = list(cyclic.values())
    sel = [i for i, m in enumerate(masks) if _is_prime_power(int(m.sum()))]
    gens = np.array([gens_all[i] for i in sel], dtype=np.int64)
    cyc = np.array([masks[i] for i in sel], dtype=np.int64).reshape(len(sel), n)
    cyc_orders = cyc.sum(axis=1)

    seen: dict[bytes, np.ndarray] = {}
    trivial = np.zeros(n, dtype=np.bool_)
    trivial[0] = True
    frontier = [trivial]
    seen[trivial.tobytes()] = trivial
    for m in masks:
        if m.sum() <= max_order and m.tobytes() not in seen:
            seen[m.tobytes()] = m
            frontier.append(m)
    while frontier:
        nxt = []
        for h in frontier:
            order_h = int(h.sum())
            if 2 * order_h > max_order:
                continue
            inter = cyc @ h.astype(np.int64)
            bound = order_h * cyc_orders // inter
            for idx in np.flatnonzero((bound <= max_order) & ~h[gens]):
                m = closure(table, [gens[idx]], h, max_order)
                if m.sum() > max_order:
                    continue
                key = m.tobytes()
                if key not in seen:
                    seen[key] = m
                    nxt.append(m)
        frontier = nxt
    return sorted(seen.values(), key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
