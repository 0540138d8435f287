"""Discrete Frechet distance for open and closed polygonal curves.

Closed-curve distances are computed on a doubled grid of vertex pairs with a
delete-and-cascade sweep; three interchangeable strategies (full sort, tower
epochs, two epochs) trade sorting effort for extra sweeps.  A witness
extractor turns any feasible threshold into an explicit cyclic coupling.
"""

from .algorithms import (
    CyclicCoupling,
    frechet_closed_logstar,
    frechet_closed_oracle,
    frechet_closed_sort,
    frechet_closed_two_epoch,
    frechet_open,
    iterated_log,
    validate_cyclic_coupling,
    witness_coupling,
)
from .bench import (
    CLOSED_ALGORITHMS,
    CURVE_KINDS,
    BenchReport,
    Counters,
    SplitMix64,
    gen_curve,
    run_bench,
)
from .chunk_sort import ChunkPlan, Entry, chunk_sort, select_partition
from .diagram import (
    Diagram,
    MonotoneCyclePath,
    find_cyclic_path,
    forward_moves,
    inverse_moves,
    new_diagram,
)
from .errors import DeltaBelowDistance, InputError, InvariantError
from .metric_core import (
    NAMED_METRICS,
    DistanceGrid,
    PointSeq,
    build_distance_grid,
    cyclic_shift,
    metric_eval,
)
from .selftest import run_selftest

__version__ = "0.1.0"

__all__ = [
    "frechet_open",
    "frechet_closed_oracle",
    "frechet_closed_sort",
    "frechet_closed_logstar",
    "frechet_closed_two_epoch",
    "witness_coupling",
    "validate_cyclic_coupling",
    "CyclicCoupling",
    "iterated_log",
    "Diagram",
    "new_diagram",
    "forward_moves",
    "inverse_moves",
    "find_cyclic_path",
    "MonotoneCyclePath",
    "Entry",
    "ChunkPlan",
    "chunk_sort",
    "select_partition",
    "PointSeq",
    "DistanceGrid",
    "build_distance_grid",
    "cyclic_shift",
    "metric_eval",
    "NAMED_METRICS",
    "Counters",
    "SplitMix64",
    "gen_curve",
    "run_bench",
    "BenchReport",
    "CLOSED_ALGORITHMS",
    "CURVE_KINDS",
    "run_selftest",
    "InputError",
    "InvariantError",
    "DeltaBelowDistance",
]
