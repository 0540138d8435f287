"""End-to-end consistency checks runnable from the command line.

Random small instances are thrown at every algorithm and the results are
required to agree bit for bit with the rotation-enumerating reference.
Integer coordinates are used on purpose: they maximize tied distances, which
is where ordering bugs hide.
"""

from __future__ import annotations

import sys

import numpy as np

from .algorithms import (
    frechet_closed_logstar,
    frechet_closed_oracle,
    frechet_closed_sort,
    frechet_closed_two_epoch,
    validate_cyclic_coupling,
    witness_coupling,
)
from .bench import SplitMix64
from .errors import DeltaBelowDistance, InputError
from .metric_core import NAMED_METRICS, build_distance_grid, cyclic_shift

__all__ = ["run_selftest"]

_ALGOS = {
    "sort": frechet_closed_sort,
    "logstar": frechet_closed_logstar,
    "two-epoch": frechet_closed_two_epoch,
}


def _rand_points(rng: SplitMix64, count: int) -> np.ndarray:
    pts = np.empty((count, 2), dtype=np.float64)
    for i in range(count):
        pts[i, 0] = float(rng.next_u64() % 4)
        pts[i, 1] = float(rng.next_u64() % 4)
    return pts


def run_selftest(max_size: int = 8, cases: int = 1000, seed: int = 0, out=None) -> bool:
    """Run the consistency suite; print one line per check; return overall pass."""
    if out is None:
        out = sys.stdout
    if isinstance(max_size, bool) or not isinstance(max_size, (int, np.integer)) or max_size < 1:
        raise InputError(f"max_size must be a positive integer, got {max_size!r}")
    if isinstance(cases, bool) or not isinstance(cases, (int, np.integer)) or cases < 1:
        raise InputError(f"cases must be a positive integer, got {cases!r}")
    rng = SplitMix64(seed)
    metrics = sorted(NAMED_METRICS)
    instances = []
    for idx in range(int(cases)):
        m = 1 + rng.next_u64() % max_size
        n = 1 + rng.next_u64() % max_size
        u = _rand_points(rng, int(m))
        v = _rand_points(rng, int(n))
        instances.append((u, v, metrics[idx % len(metrics)]))

    failures: list[str] = []

    def check(name: str, fn) -> None:
        try:
            fn()
        except Exception as exc:  # noqa: BLE001 - selftest reports, never hides
            failures.append(name)
            print(f"selftest: {name} ... FAIL ({exc!r})", file=out)
        else:
            print(f"selftest: {name} ... ok", file=out)

    def agreement() -> None:
        for u, v, metric in instances:
            want = frechet_closed_oracle(u, v, metric=metric)
            for name, fn in _ALGOS.items():
                got = fn(u, v, metric=metric)
                if got != want:
                    raise AssertionError(
                        f"{name} returned {got!r}, reference says {want!r} "
                        f"(m={len(u)}, n={len(v)}, metric={metric})"
                    )

    def witnesses() -> None:
        for u, v, metric in instances:
            dist = frechet_closed_sort(u, v, metric=metric)
            coupling = witness_coupling(u, v, dist, metric=metric)
            validate_cyclic_coupling(coupling, len(u), len(v))
            if coupling.length != dist:
                raise AssertionError(f"witness length {coupling.length!r} != distance {dist!r}")
            grid = build_distance_grid(u, v, metric)
            smaller = grid.values[grid.values < dist]
            if smaller.size:
                try:
                    witness_coupling(u, v, float(smaller.max()), metric=metric)
                except DeltaBelowDistance:
                    pass
                else:
                    raise AssertionError("threshold below the distance produced a witness")

    def rotations() -> None:
        for u, v, metric in instances:
            want = frechet_closed_logstar(u, v, metric=metric)
            su = rng.next_u64() % (len(u) + 1)
            sv = rng.next_u64() % (len(v) + 1)
            got = frechet_closed_logstar(
                cyclic_shift(u, int(su)), cyclic_shift(v, int(sv)), metric=metric
            )
            if got != want:
                raise AssertionError(f"rotation by ({su}, {sv}) changed the result")

    def swaps() -> None:
        for u, v, metric in instances:
            if frechet_closed_two_epoch(v, u, metric=metric) != frechet_closed_two_epoch(
                u, v, metric=metric
            ):
                raise AssertionError("swapping the curves changed the result")

    check(f"algorithm agreement vs reference ({len(instances)} cases)", agreement)
    check("witness validity and threshold errors", witnesses)
    check("rotation invariance", rotations)
    check("swap invariance", swaps)
    print(
        f"selftest: {'PASS' if not failures else 'FAIL'} "
        f"({4 - len(failures)}/4 checks)",
        file=out,
    )
    return not failures
