"""Compiled kernels: move tables, the dead-end delete cascade, and selection.

Cells of the doubled diagram are flattened row-major: cell (i, j), with
1 <= i <= 2m and 1 <= j <= n, lives at index (i-1)*n + (j-1).  Move tables
hold the flat index of each move's target, or -1 where the move is undefined.
Counter slot layout: [0] delete calls, [1] test calls, [2] key comparisons.
"""

import numpy as np
from numba import njit

__all__ = [
    "build_move_tables",
    "cascade",
    "run_deletes",
    "select_desc",
]


@njit(cache=True)
def build_move_tables(m, n):
    size = 2 * m * n
    tn = np.full(size, -1, dtype=np.int64)
    te = np.full(size, -1, dtype=np.int64)
    tne = np.full(size, -1, dtype=np.int64)
    tw = np.full(size, -1, dtype=np.int64)
    ts = np.full(size, -1, dtype=np.int64)
    tsw = np.full(size, -1, dtype=np.int64)
    for f in range(size):
        i = f // n + 1
        j = f - (i - 1) * n + 1
        # forward moves
        if j < n:
            tn[f] = f + 1
        elif i > m:
            tn[f] = (i - m - 1) * n
        if i < 2 * m:
            te[f] = f + n
        if i < 2 * m and j < n:
            tne[f] = f + n + 1
        elif i >= m and j == n:
            tne[f] = (i - m) * n
        # inverse moves
        if i > 1:
            tw[f] = f - n
        if j > 1:
            ts[f] = f - 1
        elif i <= m:
            ts[f] = (i + m - 1) * n + (n - 1)
        if i > 1 and j > 1:
            tsw[f] = f - n - 1
        elif j == 1 and i <= m + 1:
            tsw[f] = (i + m - 2) * n + (n - 1)
        # a move may not target its own source (arises only when m = n = 1)
        if tne[f] == f:
            tne[f] = -1
        if tsw[f] == f:
            tsw[f] = -1
    return tn, te, tne, tw, ts, tsw


@njit(cache=True)
def cascade(f, q, tn, te, tne, tw, ts, tsw, c, stack, counters):
    """Delete allowed cell ``f`` and every cell that becomes a dead end.

    A cell is a dead end when all of its defined forward moves target
    forbidden cells.  Assumes ``q[f] == 1``.  Returns the updated count of
    allowed cells.
    """
    q[f] = 0
    top = 0
    stack[top] = f
    top += 1
    while top > 0:
        top -= 1
        x = stack[top]
        c -= 1
        counters[0] += 1
        for t in range(3):
            if t == 0:
                y = tw[x]
            elif t == 1:
                y = ts[x]
            else:
                y = tsw[x]
            if y >= 0:
                counters[1] += 1
                if q[y] == 1:
                    ny = tn[y]
                    ey = te[y]
                    ney = tne[y]
                    if ((ny < 0 or q[ny] == 0)
                            and (ey < 0 or q[ey] == 0)
                            and (ney < 0 or q[ney] == 0)):
                        q[y] = 0
                        stack[top] = y
                        top += 1
    return c


@njit(cache=True)
def run_deletes(cells, start, stop, q, tn, te, tne, tw, ts, tsw, c, stack, counters):
    """Guarded deletes over ``cells[start:stop]``.

    Already-forbidden cells are skipped.  Stops as soon as no allowed cell
    remains and returns ``(index_processed_when_empty, 0)``; otherwise
    returns ``(stop, c)``.
    """
    for idx in range(start, stop):
        f = cells[idx]
        if q[f] == 1:
            c = cascade(f, q, tn, te, tne, tw, ts, tsw, c, stack, counters)
            if c == 0:
                return idx, 0
    return stop, c


@njit(cache=True)
def _insertion_desc(keys, payload, lo, hi):
    comps = 0
    for i in range(lo + 1, hi):
        kv = keys[i]
        pv = payload[i]
        j = i - 1
        while j >= lo:
            comps += 1
            if keys[j] < kv:
                keys[j + 1] = keys[j]
                payload[j + 1] = payload[j]
                j -= 1
            else:
                break
        keys[j + 1] = kv
        payload[j + 1] = pv
    return comps


@njit(cache=True)
def select_desc(keys, payload, lo, hi, pos):
    """Positional selection in descending order, worst-case linear time.

    Rearranges ``keys[lo:hi]`` (and ``payload`` alongside) so that
    ``keys[lo:pos] >= keys[pos] >= keys[pos+1:hi]``.  The pivot at each round
    is the median of the medians of groups of five, so no input order can
    force quadratic work.  Returns the number of key comparisons performed.
    """
    comps = 0
    while True:
        size = hi - lo
        if size <= 5:
            comps += _insertion_desc(keys, payload, lo, hi)
            return comps
        g = 0
        i = lo
        while i < hi:
            j = min(i + 5, hi)
            comps += _insertion_desc(keys, payload, i, j)
            mid = i + (j - i - 1) // 2
            t = lo + g
            keys[t], keys[mid] = keys[mid], keys[t]
            payload[t], payload[mid] = payload[mid], payload[t]
            g += 1
            i += 5
        comps += select_desc(keys, payload, lo, lo + g, lo + (g - 1) // 2)
        pivot = keys[lo + (g - 1) // 2]
        # three-way partition: keys > pivot, then == pivot, then < pivot
        lt = lo
        it = lo
        gt = hi
        while it < gt:
            kv = keys[it]
            comps += 1
            if kv > pivot:
                keys[it], keys[lt] = keys[lt], keys[it]
                payload[it], payload[lt] = payload[lt], payload[it]
                lt += 1
                it += 1
            else:
                comps += 1
                if kv < pivot:
                    gt -= 1
                    keys[it], keys[gt] = keys[gt], keys[it]
                    payload[it], payload[gt] = payload[gt], payload[it]
                else:
                    it += 1
        if pos < lt:
            hi = lt
        elif pos < gt:
            return comps
        else:
            lo = gt
