"""Partial descending sort into ordered chunks.

A k-chunk plan partitions an array into consecutive chunks such that every
key in an earlier chunk is >= every key in a later chunk, each chunk holds
at most ceil(N/k) entries, and entries inside a chunk stay unordered.  The
plan is built by recursive halving: a worst-case linear positional selection
places the median position, then both halves are split for ceil(k/2) chunks,
giving O(N log k) comparisons overall.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import select_desc
from .errors import InputError

__all__ = ["Entry", "ChunkPlan", "select_partition", "chunk_sort"]


@dataclass(frozen=True)
class Entry:
    """A diagram cell (i, j) tagged with its grid distance as the sort key."""

    key: float
    i: int
    j: int


@dataclass
class ChunkPlan:
    """Entries permuted into chunk order plus the end index of every chunk.

    ``boundaries`` is ascending and its last element equals ``len(entries)``;
    chunk ``t`` occupies ``entries[boundaries[t-1]:boundaries[t]]`` (with an
    implicit leading 0).
    """

    entries: list[Entry]
    boundaries: list[int]

    def chunks(self) -> list[list[Entry]]:
        out, lo = [], 0
        for hi in self.boundaries:
            out.append(self.entries[lo:hi])
            lo = hi
        return out


def chunk_boundaries(keys: np.ndarray, payload: np.ndarray, lo: int, hi: int,
                     k: int, slots: np.ndarray) -> list[int]:
    """In-place chunk plan over ``keys[lo:hi]`` (payload permuted alongside).

    Returns the ascending absolute end index of every chunk; the last entry
    equals ``hi``.  Key comparisons made by the selection are added to
    ``slots[2]``.
    """
    if k < 1:
        raise InputError(f"chunk count must be >= 1, got {k}")
    k = min(k, hi - lo) if hi > lo else 1
    out: list[int] = []
    _split(keys, payload, lo, hi, k, slots, out)
    return out


def _split(keys, payload, lo, hi, k, slots, out):
    size = hi - lo
    if size == 0:
        return
    if k <= 1 or size == 1:
        out.append(hi)
        return
    mid = lo + (size + 1) // 2
    slots[2] += select_desc(keys, payload, lo, hi, mid - 1)
    half = (k + 1) // 2
    _split(keys, payload, lo, mid, half, slots, out)
    _split(keys, payload, mid, hi, half, slots, out)


def _to_arrays(entries):
    keys = np.array([e.key for e in entries], dtype=np.float64)
    payload = np.arange(len(entries), dtype=np.int64)
    return keys, payload


def select_partition(entries: list[Entry], pos: int, counters=None) -> list[Entry]:
    """Rearrange so the pos-th largest key (1-based) sits at position pos,
    preceded only by keys >= it and followed only by keys <= it.

    Mutates ``entries`` in place and returns it.  Runs in worst-case linear
    time; duplicate keys are handled positionally.
    """
    size = len(entries)
    if not 1 <= pos <= size:
        raise InputError(f"position must be in [1, {size}], got {pos}")
    keys, payload = _to_arrays(entries)
    comps = select_desc(keys, payload, 0, size, pos - 1)
    if counters is not None:
        counters.slots[2] += comps
    entries[:] = [entries[int(p)] for p in payload]
    return entries


def chunk_sort(entries: list[Entry], k: int, counters=None) -> ChunkPlan:
    """Build a k-chunk plan for ``entries`` (k clamped to the array length)."""
    if k < 1:
        raise InputError(f"chunk count must be >= 1, got {k}")
    if len(entries) == 0:
        return ChunkPlan(entries=[], boundaries=[])
    keys, payload = _to_arrays(entries)
    slots = counters.slots if counters is not None else np.zeros(3, dtype=np.int64)
    boundaries = chunk_boundaries(keys, payload, 0, len(entries), k, slots)
    if counters is not None:
        counters.chunk_sort_elements += len(entries)
    return ChunkPlan(entries=[entries[int(p)] for p in payload], boundaries=boundaries)
