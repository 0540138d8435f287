"""Instrumentation counters, reproducible curve generation, benchmark runner.

Curve generation uses a hand-rolled SplitMix64 stream rather than numpy's
Generator so that the same (kind, count, seed) triple yields bit-identical
curves on any platform or numpy version.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .algorithms import (
    frechet_closed_logstar,
    frechet_closed_sort,
    frechet_closed_two_epoch,
)
from .errors import InputError, InvariantError

__all__ = [
    "Counters",
    "SplitMix64",
    "CURVE_KINDS",
    "gen_curve",
    "CLOSED_ALGORITHMS",
    "BenchRow",
    "BenchReport",
    "run_bench",
    "CSV_HEADER",
]

CLOSED_ALGORITHMS = {
    "sort": frechet_closed_sort,
    "logstar": frechet_closed_logstar,
    "two-epoch": frechet_closed_two_epoch,
}

CSV_HEADER = "algorithm,m,n,seed,rep,wall_ns,delete_calls,test_calls,key_comparisons,epochs,result"


class Counters:
    """Operation counts collected while a closed-curve algorithm runs.

    ``slots`` is shared with the compiled kernels: index 0 counts delete
    calls, 1 counts test calls, 2 counts key comparisons made by selection.
    The full-sort algorithm delegates its sort to numpy, so it reports zero
    key comparisons by construction.
    """

    def __init__(self):
        self.slots = np.zeros(3, dtype=np.int64)
        self.epochs = 0
        self.chunk_sort_elements = 0
        self.per_epoch_delete_calls: list[int] = []

    @property
    def delete_calls(self) -> int:
        return int(self.slots[0])

    @property
    def test_calls(self) -> int:
        return int(self.slots[1])

    @property
    def key_comparisons(self) -> int:
        return int(self.slots[2])

    def reset(self) -> None:
        self.slots[:] = 0
        self.epochs = 0
        self.chunk_sort_elements = 0
        self.per_epoch_delete_calls = []

    def as_dict(self) -> dict:
        return {
            "delete_calls": self.delete_calls,
            "test_calls": self.test_calls,
            "key_comparisons": self.key_comparisons,
            "epochs": self.epochs,
            "chunk_sort_elements": self.chunk_sort_elements,
            "per_epoch_delete_calls": list(self.per_epoch_delete_calls),
        }


_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 pseudo-random stream (Steele, Lea, Flood 2014).

    Tiny, full-period, and trivially portable; good enough for generating
    test curves and infinitely easier to reproduce in another language than
    any library generator.
    """

    def __init__(self, seed: int):
        if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
            raise InputError(f"seed must be an integer, got {seed!r}")
        self.state = int(seed) & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_float(self) -> float:
        # top 53 bits -> [0, 1)
        return (self.next_u64() >> 11) * 2.0**-53


CURVE_KINDS = ("circle", "random-walk", "noisy-polygon")


def gen_curve(kind: str, count: int, seed: int = 0) -> np.ndarray:
    """Deterministic 2D test curve of ``count`` vertices as a (count, 2) array.

    circle         evenly spaced points on the unit circle, seed unused
    random-walk    unit steps in SplitMix64-chosen directions, starting at 0
    noisy-polygon  circle vertices with radius jitter in [-0.1, 0.1]
    """
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)):
        raise InputError(f"count must be an integer, got {count!r}")
    if count < 1:
        raise InputError(f"count must be at least 1, got {count}")
    count = int(count)
    if isinstance(kind, str):
        kind = kind.replace("_", "-")
    if kind == "circle":
        t = np.arange(count, dtype=np.float64)
        ang = 2.0 * np.pi * t / count
        return np.column_stack([np.cos(ang), np.sin(ang)])
    rng = SplitMix64(seed)
    if kind == "random-walk":
        pts = np.empty((count, 2), dtype=np.float64)
        x = y = 0.0
        pts[0] = (0.0, 0.0)
        for i in range(1, count):
            ang = 2.0 * np.pi * rng.next_float()
            x += np.cos(ang)
            y += np.sin(ang)
            pts[i] = (x, y)
        return pts
    if kind == "noisy-polygon":
        pts = np.empty((count, 2), dtype=np.float64)
        for i in range(count):
            ang = 2.0 * np.pi * i / count
            r = 1.0 + (rng.next_float() - 0.5) * 0.2
            pts[i] = (r * np.cos(ang), r * np.sin(ang))
        return pts
    raise InputError(f"unknown curve kind {kind!r}, expected one of {CURVE_KINDS}")


@dataclass
class BenchRow:
    algorithm: str
    m: int
    n: int
    seed: int
    rep: int
    wall_ns: int
    delete_calls: int
    test_calls: int
    key_comparisons: int
    epochs: int
    result: float

    def to_csv_line(self) -> str:
        return (
            f"{self.algorithm},{self.m},{self.n},{self.seed},{self.rep},"
            f"{self.wall_ns},{self.delete_calls},{self.test_calls},"
            f"{self.key_comparisons},{self.epochs},{self.result:.17g}"
        )


@dataclass
class BenchReport:
    rows: list[BenchRow] = field(default_factory=list)

    def to_csv(self) -> str:
        return "\n".join([CSV_HEADER] + [r.to_csv_line() for r in self.rows]) + "\n"


def _warmup() -> None:
    """Trigger kernel compilation outside the timed region."""
    u = gen_curve("noisy-polygon", 4, seed=1)
    v = gen_curve("noisy-polygon", 3, seed=2)
    for fn in CLOSED_ALGORITHMS.values():
        fn(u, v)


def run_bench(
    sizes,
    algorithms=("sort", "logstar", "two-epoch"),
    reps: int = 3,
    seed: int = 0,
    kind: str = "noisy-polygon",
    metric: str = "euclidean",
) -> BenchReport:
    """Time each algorithm on shared generated instances, one row per run.

    Every rep generates a fresh pair of curves of the given size; all
    requested algorithms run on that same pair and must agree on the result
    bit for bit, otherwise the run aborts.
    """
    sizes = list(sizes)
    algorithms = list(algorithms)
    if not sizes:
        raise InputError("sizes must not be empty")
    if not algorithms:
        raise InputError("algorithms must not be empty")
    for name in algorithms:
        if name not in CLOSED_ALGORITHMS:
            raise InputError(
                f"unknown algorithm {name!r}, expected one of {sorted(CLOSED_ALGORITHMS)}"
            )
    if isinstance(reps, bool) or not isinstance(reps, (int, np.integer)) or reps < 1:
        raise InputError(f"reps must be a positive integer, got {reps!r}")
    _warmup()
    seeder = SplitMix64(seed)
    report = BenchReport()
    for size in sizes:
        if isinstance(size, bool) or not isinstance(size, (int, np.integer)) or size < 1:
            raise InputError(f"sizes must be positive integers, got {size!r}")
        size = int(size)
        for rep in range(int(reps)):
            u = gen_curve(kind, size, seed=seeder.next_u64())
            v = gen_curve(kind, size, seed=seeder.next_u64())
            results = {}
            for name in algorithms:
                counters = Counters()
                start = time.perf_counter_ns()
                value = CLOSED_ALGORITHMS[name](u, v, metric=metric, counters=counters)
                elapsed = time.perf_counter_ns() - start
                results[name] = value
                report.rows.append(
                    BenchRow(
                        algorithm=name,
                        m=size,
                        n=size,
                        seed=int(seed),
                        rep=rep,
                        wall_ns=elapsed,
                        delete_calls=counters.delete_calls,
                        test_calls=counters.test_calls,
                        key_comparisons=counters.key_comparisons,
                        epochs=counters.epochs,
                        result=value,
                    )
                )
            if len(set(results.values())) > 1:
                raise InvariantError(f"algorithms disagree on size {size} rep {rep}: {results}")
    return report
