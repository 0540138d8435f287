"""Discrete Frechet distances for open and closed curves.

The closed-curve algorithms all share one primitive: walk cell entries of the
doubled diagram in descending key order, deleting as they go, and report the
key whose deletion empties the diagram.  ``frechet_closed_sort`` pays for a
full sort; the epoch-based variants only chunk-sort the narrowing segment that
still contains the answer, so their sorting cost shrinks every epoch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chunk_sort import chunk_boundaries
from .diagram import Diagram, find_cyclic_path
from .errors import DeltaBelowDistance, InputError, InvariantError
from .metric_core import PointSeq, build_distance_grid

__all__ = [
    "iterated_log",
    "frechet_open",
    "frechet_closed_oracle",
    "frechet_closed_sort",
    "frechet_closed_logstar",
    "frechet_closed_two_epoch",
    "CyclicCoupling",
    "witness_coupling",
    "validate_cyclic_coupling",
]


def iterated_log(x) -> int:
    """Number of times log2 must be applied to x before the value drops to <= 1."""
    if isinstance(x, bool) or not isinstance(x, (int, float, np.integer, np.floating)):
        raise InputError(f"iterated_log expects a number, got {type(x).__name__}")
    if x < 0 or (isinstance(x, float) and not math.isfinite(x)):
        raise InputError(f"iterated_log expects a finite non-negative number, got {x!r}")
    count = 0
    x = float(x)
    while x > 1.0:
        x = math.log2(x)
        count += 1
    return count


def _open_value(g: list[list[float]], rows, cols) -> float:
    """Max-over-path / min-over-choices dynamic program on a grid view.

    ``rows`` and ``cols`` translate view positions to grid indices, which lets
    the caller evaluate any cyclic rotation without copying the grid.
    """
    n = len(cols)
    g0 = g[rows[0]]
    prev = [0.0] * n
    acc = g0[cols[0]]
    prev[0] = acc
    for j in range(1, n):
        v = g0[cols[j]]
        if v > acc:
            acc = v
        prev[j] = acc
    for ri in rows[1:]:
        row = g[ri]
        cur = [0.0] * n
        diag_min = prev[0]
        cur[0] = diag_min if diag_min > row[cols[0]] else row[cols[0]]
        for j in range(1, n):
            best = prev[j]
            if prev[j - 1] < best:
                best = prev[j - 1]
            if cur[j - 1] < best:
                best = cur[j - 1]
            v = row[cols[j]]
            cur[j] = best if best > v else v
        prev = cur
    return prev[n - 1]


def frechet_open(u, v, metric="euclidean") -> float:
    """Discrete Frechet distance between two open polygonal curves."""
    grid = build_distance_grid(u, v, metric)
    g = grid.values.tolist()
    return float(_open_value(g, range(grid.m), range(grid.n)))


def frechet_closed_oracle(u, v, metric="euclidean") -> float:
    """Closed-curve distance by direct definition: minimum of the open
    distance over every cyclic rotation of both inputs.

    Quadratic in the number of rotations times the open computation; meant as
    the reference the fast algorithms are checked against, not for large runs.
    """
    grid = build_distance_grid(u, v, metric)
    m, n = grid.m, grid.n
    g = grid.values.tolist()
    best = math.inf
    for su in range(m + 1):
        rows = [(i + su) % m for i in range(m)]
        for sv in range(n + 1):
            cols = [(j + sv) % n for j in range(n)]
            val = _open_value(g, rows, cols)
            if val < best:
                best = val
    return float(best)


def _fresh_slots(counters):
    return counters.slots if counters is not None else np.zeros(3, dtype=np.int64)


def frechet_closed_sort(u, v, metric="euclidean", counters=None) -> float:
    """Closed-curve distance via one full descending sort of all cell keys."""
    grid = build_distance_grid(u, v, metric)
    slots = _fresh_slots(counters)
    keys = grid.doubled_keys()
    order = np.ascontiguousarray(np.argsort(keys, kind="stable")[::-1])
    diag = Diagram(grid.m, grid.n, counter_slots=slots)
    idx = diag.run_deletes(order, 0, diag.size)
    if diag.c != 0 or idx >= diag.size:
        raise InvariantError("deleting every cell failed to empty the diagram")
    return float(keys[order[idx]])


def _logstar_schedule(epoch: int, prev_k, b_size: int, size: int):
    if epoch == 1:
        return 2
    # growing past 2**65536 could never matter: such a k already exceeds any
    # feasible segment, so that epoch fully sorts and returns
    return 2 ** prev_k if prev_k <= 65536 else prev_k


def _two_epoch_schedule(epoch: int, prev_k, b_size: int, size: int):
    if epoch == 1:
        return max(1, (size - 1).bit_length())
    if epoch == 2:
        return b_size
    raise InvariantError("two-epoch run did not resolve within two epochs")


def _closed_epochs(grid, schedule, counters=None, epoch_hook=None) -> float:
    """Shared epoch engine for the chunk-sorting closed-curve algorithms.

    Each epoch re-deletes the already-settled prefix, chunk-sorts the candidate
    segment, and walks its chunks in order.  When the diagram empties inside a
    single-entry chunk that entry's key is the answer; inside a larger chunk,
    the segment narrows to that chunk.  If the diagram still has allowed cells
    after the whole segment was deleted, the answer ties the untouched suffix
    and must sit in the last (smallest-key) chunk, so the segment narrows
    there instead.
    """
    m, n = grid.m, grid.n
    size = 2 * m * n
    slots = _fresh_slots(counters)
    keys = grid.doubled_keys()
    cells = np.arange(size, dtype=np.int64)
    diag = Diagram(m, n, counter_slots=slots)
    blo, bhi = 0, size
    epoch = 0
    k = None
    budget = iterated_log(size) + 8
    while True:
        epoch += 1
        if epoch > budget:
            raise InvariantError("epoch budget exceeded")
        k = schedule(epoch, k, bhi - blo, size)
        if epoch_hook is not None:
            epoch_hook(epoch, k, keys[blo:bhi].copy())
        deletes_before = int(slots[0])
        diag.reset()
        boundaries = chunk_boundaries(keys, cells, blo, bhi, k, slots)
        if counters is not None:
            counters.chunk_sort_elements += bhi - blo
        diag.run_deletes(cells, 0, blo)
        if diag.c == 0:
            raise InvariantError("diagram emptied while replaying the settled prefix")
        result = None
        lo = blo
        for hi in boundaries:
            idx = diag.run_deletes(cells, lo, hi)
            if diag.c == 0:
                if hi - lo == 1:
                    result = float(keys[idx])
                else:
                    blo, bhi = lo, hi
                break
            lo = hi
        else:
            lo = boundaries[-2] if len(boundaries) >= 2 else blo
            hi = boundaries[-1]
            if hi - lo == 1:
                result = float(keys[lo])
            else:
                blo, bhi = lo, hi
        if counters is not None:
            counters.epochs += 1
            counters.per_epoch_delete_calls.append(int(slots[0]) - deletes_before)
        if result is not None:
            return result


def frechet_closed_logstar(u, v, metric="euclidean", counters=None, epoch_hook=None) -> float:
    """Closed-curve distance with tower-growing chunk counts per epoch.

    The chunk parameter starts at 2 and jumps to 2**k between epochs, so the
    number of epochs is bounded by the iterated logarithm of the diagram size.
    """
    grid = build_distance_grid(u, v, metric)
    return _closed_epochs(grid, _logstar_schedule, counters, epoch_hook)


def frechet_closed_two_epoch(u, v, metric="euclidean", counters=None, epoch_hook=None) -> float:
    """Closed-curve distance in two epochs: a logarithmic chunk count first,
    then a full sort of the one surviving chunk."""
    grid = build_distance_grid(u, v, metric)
    return _closed_epochs(grid, _two_epoch_schedule, counters, epoch_hook)


@dataclass
class CyclicCoupling:
    """A cyclic traversal witness: 1-based (u index, v index) pairs, in order,
    covering one full cycle of both curves; ``length`` is the largest pairwise
    distance along it."""

    pairs: list[tuple[int, int]]
    length: float


def validate_cyclic_coupling(coupling: CyclicCoupling, m: int, n: int) -> None:
    """Structural checks; raises InvariantError on the first violation."""
    pairs = coupling.pairs
    if not pairs:
        raise InvariantError("coupling has no pairs")
    if len(set(pairs)) != len(pairs):
        raise InvariantError("coupling pairs are not distinct")
    if not max(m, n) <= len(pairs) <= m + n:
        raise InvariantError(f"coupling of {len(pairs)} pairs impossible for m={m}, n={n}")
    adv_u = adv_v = 0
    for t, (a, b) in enumerate(pairs):
        if not (1 <= a <= m and 1 <= b <= n):
            raise InvariantError(f"pair ({a}, {b}) out of range")
        a2, b2 = pairs[(t + 1) % len(pairs)]
        da = (a2 - a) % m
        db = (b2 - b) % n
        if da > 1 or db > 1:
            raise InvariantError(f"step ({a},{b}) -> ({a2},{b2}) jumps more than one index")
        adv_u += da
        adv_v += db
    if m > 1 and adv_u != m:
        raise InvariantError(f"coupling advances the first curve {adv_u} times, expected {m}")
    if n > 1 and adv_v != n:
        raise InvariantError(f"coupling advances the second curve {adv_v} times, expected {n}")


def witness_coupling(u, v, delta, metric="euclidean") -> CyclicCoupling:
    """A cyclic coupling whose length is at most ``delta``.

    Deletes every cell keyed above the threshold; if nothing survives the
    threshold lies below the closed distance and DeltaBelowDistance is raised.
    Otherwise a monotone cycle through surviving cells is folded back onto
    original indices.  At ``delta`` equal to the closed distance the returned
    length equals the distance exactly.
    """
    u = PointSeq.ensure(u)
    v = PointSeq.ensure(v)
    try:
        delta = float(delta)
    except (TypeError, ValueError):
        raise InputError(f"threshold must be a number, got {delta!r}") from None
    if not math.isfinite(delta):
        raise InputError(f"threshold must be finite, got {delta!r}")
    grid = build_distance_grid(u, v, metric)
    keys = grid.doubled_keys()
    diag = Diagram(grid.m, grid.n)
    over = np.flatnonzero(keys > delta).astype(np.int64)
    diag.run_deletes(over, 0, len(over))
    if diag.c == 0:
        raise DeltaBelowDistance(f"no cyclic coupling of length <= {delta!r} exists")
    path = find_cyclic_path(diag)
    m = grid.m
    pairs: list[tuple[int, int]] = []
    seen = set()
    dropped = 0
    for i, j in path.cells:
        pair = (i - m if i > m else i, j)
        if pair in seen:
            # the fold can revisit exactly one pair, where the cycle leaves
            # its first column and enters the doubled copy of that column
            dropped += 1
            continue
        seen.add(pair)
        pairs.append(pair)
    if dropped > 1:
        raise InvariantError("cycle folded onto more than one duplicate pair")
    length = max(grid.at(a, b) for a, b in pairs)
    if length > delta:
        raise InvariantError("witness length exceeds the requested threshold")
    coupling = CyclicCoupling(pairs=pairs, length=length)
    validate_cyclic_coupling(coupling, grid.m, grid.n)
    return coupling
