"""Point sequences, metrics, and the doubled distance grid.

A closed polygonal curve is handled as the cyclic sequence of its vertices.
All distance computations in the package go through :func:`build_distance_grid`
so that every algorithm sees bitwise-identical pairwise values.
"""

from __future__ import annotations

import numpy as np
from scipy.spatial.distance import cdist

from .errors import InputError

__all__ = [
    "NAMED_METRICS",
    "PointSeq",
    "DistanceGrid",
    "metric_eval",
    "cyclic_shift",
    "build_distance_grid",
]

# public name -> scipy cdist name
NAMED_METRICS = {
    "euclidean": "euclidean",
    "manhattan": "cityblock",
    "chebyshev": "chebyshev",
}


class PointSeq:
    """A non-empty sequence of points in R^d, stored as an (m, d) float64 array."""

    def __init__(self, points):
        try:
            arr = np.asarray(points, dtype=np.float64)
        except (TypeError, ValueError) as exc:
            raise InputError(f"point sequence is not numeric: {exc}") from None
        if arr.ndim == 1:
            # a single flat point is ambiguous; require explicit 2-D shape
            arr = arr.reshape(1, -1) if arr.size else arr
        if arr.ndim != 2 or arr.shape[0] < 1 or arr.shape[1] < 1:
            raise InputError(f"point sequence must be a non-empty (m, d) array, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise InputError("point coordinates must be finite")
        self.coords = arr

    @classmethod
    def ensure(cls, obj) -> "PointSeq":
        return obj if isinstance(obj, PointSeq) else cls(obj)

    def __len__(self) -> int:
        return self.coords.shape[0]

    @property
    def dimension(self) -> int:
        return self.coords.shape[1]

    def __getitem__(self, idx):
        return self.coords[idx]

    def __repr__(self) -> str:
        return f"PointSeq({len(self)} points, dim={self.dimension})"


def cyclic_shift(seq: PointSeq, s: int) -> PointSeq:
    """Rotate a sequence left by ``s``: element ``i`` of the result is element
    ``i + s`` of the input, wrapping past the end.  Requires ``0 <= s <= len(seq)``.
    """
    seq = PointSeq.ensure(seq)
    m = len(seq)
    if not isinstance(s, (int, np.integer)) or isinstance(s, bool):
        raise InputError(f"shift must be an integer, got {s!r}")
    if not 0 <= s <= m:
        raise InputError(f"shift must be in [0, {m}], got {s}")
    if s == 0 or s == m:
        return PointSeq(seq.coords.copy())
    return PointSeq(np.concatenate([seq.coords[s:], seq.coords[:s]]))


def _resolve_metric(metric):
    if callable(metric):
        return None, metric
    if isinstance(metric, str):
        name = NAMED_METRICS.get(metric)
        if name is None:
            raise InputError(f"unknown metric {metric!r}; expected one of {sorted(NAMED_METRICS)} or a callable")
        return name, None
    raise InputError(f"metric must be a name or a callable, got {type(metric).__name__}")


def metric_eval(metric, p, q) -> float:
    """Distance between two points under a named metric or a callable.

    Named metrics share a code path with :func:`build_distance_grid`, so the
    scalar value is bitwise-identical to the corresponding grid entry.
    """
    p = np.atleast_2d(np.asarray(p, dtype=np.float64))
    q = np.atleast_2d(np.asarray(q, dtype=np.float64))
    if p.shape != q.shape or p.shape[0] != 1:
        raise InputError(f"metric_eval expects two single points of equal dimension, got shapes {p.shape} and {q.shape}")
    if not (np.isfinite(p).all() and np.isfinite(q).all()):
        raise InputError("point coordinates must be finite")
    cdist_name, func = _resolve_metric(metric)
    if func is not None:
        value = float(func(p[0], q[0]))
    else:
        value = float(cdist(p, q, metric=cdist_name)[0, 0])
    if not (np.isfinite(value) and value >= 0.0):
        raise InputError(f"metric returned an invalid distance {value!r}")
    return value


class DistanceGrid:
    """Pairwise distances d(u_i, v_j), with a doubled row accessor.

    ``values`` has shape (m, n).  :meth:`at` accepts 1-based ``i`` in
    ``[1, 2m]`` and ``j`` in ``[1, n]``; rows beyond ``m`` repeat the first
    copy, so ``at(i, j) == at(i - m, j)`` for ``i > m``.
    """

    def __init__(self, values: np.ndarray):
        values = np.asarray(values, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] < 1 or values.shape[1] < 1:
            raise InputError(f"grid must be a non-empty 2-D array, got shape {values.shape}")
        if not np.isfinite(values).all() or (values < 0.0).any():
            raise InputError("grid distances must be finite and non-negative")
        self.values = values
        self.m, self.n = values.shape

    def at(self, i: int, j: int) -> float:
        if not (1 <= i <= 2 * self.m and 1 <= j <= self.n):
            raise InputError(f"cell ({i}, {j}) outside doubled grid of shape ({2 * self.m}, {self.n})")
        return float(self.values[(i - 1) % self.m, j - 1])

    def doubled_keys(self) -> np.ndarray:
        """All 2mn cell values as a flat array, cell (i, j) at index (i-1)*n + (j-1)."""
        flat = self.values.ravel()
        return np.concatenate([flat, flat])


def build_distance_grid(u, v, metric="euclidean") -> DistanceGrid:
    """Pairwise distance grid between two point sequences of equal dimension."""
    u = PointSeq.ensure(u)
    v = PointSeq.ensure(v)
    if u.dimension != v.dimension:
        raise InputError(f"dimension mismatch: {u.dimension} vs {v.dimension}")
    cdist_name, func = _resolve_metric(metric)
    if func is not None:
        values = np.empty((len(u), len(v)))
        for i in range(len(u)):
            ui = u.coords[i]
            for j in range(len(v)):
                values[i, j] = func(ui, v.coords[j])
    else:
        values = cdist(u.coords, v.coords, metric=cdist_name)
    return DistanceGrid(values)
