"""Deterministic generation, counters, and the benchmark report."""

import numpy as np
import pytest

from frechet import (
    Counters,
    InputError,
    SplitMix64,
    gen_curve,
    run_bench,
)
from frechet.bench import CLOSED_ALGORITHMS, CSV_HEADER

# published reference outputs for a zero-seeded SplitMix64 stream
SPLITMIX_SEED0 = [0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix_reference_vector():
    g = SplitMix64(0)
    assert [g.next_u64() for _ in range(3)] == SPLITMIX_SEED0


def test_splitmix_determinism_and_floats():
    a = SplitMix64(987654321)
    b = SplitMix64(987654321)
    xs = [a.next_float() for _ in range(200)]
    assert xs == [b.next_float() for _ in range(200)]
    assert all(0.0 <= x < 1.0 for x in xs)
    assert SplitMix64(1).next_u64() != SplitMix64(2).next_u64()
    with pytest.raises(InputError):
        SplitMix64(1.5)
    with pytest.raises(InputError):
        SplitMix64(True)


def test_circle_curve():
    pts = gen_curve("circle", 4)
    want = np.array([[1, 0], [0, 1], [-1, 0], [0, -1]], dtype=float)
    assert np.allclose(pts, want, atol=1e-12)
    assert np.array_equal(gen_curve("circle", 1), [[1.0, 0.0]])
    pts = gen_curve("circle", 360, seed=123)
    assert np.allclose(np.linalg.norm(pts, axis=1), 1.0)


def test_curve_kind_underscore_alias():
    a = gen_curve("random_walk", 20, seed=9)
    b = gen_curve("random-walk", 20, seed=9)
    assert np.array_equal(a, b)
    assert np.array_equal(gen_curve("noisy_polygon", 6, seed=2), gen_curve("noisy-polygon", 6, seed=2))


def test_random_walk_curve():
    pts = gen_curve("random-walk", 50, seed=7)
    assert pts.shape == (50, 2)
    assert np.array_equal(pts[0], [0.0, 0.0])
    steps = np.diff(pts, axis=0)
    assert np.allclose(np.linalg.norm(steps, axis=1), 1.0)
    assert np.array_equal(pts, gen_curve("random-walk", 50, seed=7))
    assert not np.array_equal(pts, gen_curve("random-walk", 50, seed=8))


def test_noisy_polygon_curve():
    pts = gen_curve("noisy-polygon", 100, seed=3)
    radii = np.linalg.norm(pts, axis=1)
    assert np.all(radii >= 0.9 - 1e-12) and np.all(radii <= 1.1 + 1e-12)
    assert np.array_equal(pts, gen_curve("noisy-polygon", 100, seed=3))


def test_gen_curve_validation():
    with pytest.raises(InputError):
        gen_curve("spiral", 5)
    with pytest.raises(InputError):
        gen_curve("circle", 0)
    with pytest.raises(InputError):
        gen_curve("circle", 2.5)


def test_counters_reset_and_dict():
    c = Counters()
    c.slots[:] = (5, 12, 7)
    c.epochs = 2
    c.chunk_sort_elements = 11
    c.per_epoch_delete_calls = [3, 2]
    d = c.as_dict()
    assert d["delete_calls"] == 5 and d["test_calls"] == 12 and d["key_comparisons"] == 7
    assert d["epochs"] == 2 and d["per_epoch_delete_calls"] == [3, 2]
    c.reset()
    assert c.delete_calls == c.test_calls == c.key_comparisons == 0
    assert c.epochs == 0 and c.per_epoch_delete_calls == []


def test_run_bench_report():
    report = run_bench([4, 6], reps=2, seed=5)
    assert len(report.rows) == 2 * 2 * 3
    csv = report.to_csv()
    lines = csv.strip().split("\n")
    assert lines[0] == CSV_HEADER
    assert (
        CSV_HEADER
        == "algorithm,m,n,seed,rep,wall_ns,delete_calls,test_calls,key_comparisons,epochs,result"
    )
    by_instance = {}
    for line in lines[1:]:
        fields = line.split(",")
        assert len(fields) == 11
        algo, m, n, seed, rep = fields[0], int(fields[1]), int(fields[2]), int(fields[3]), int(fields[4])
        assert algo in CLOSED_ALGORITHMS
        assert seed == 5
        wall, dels, tests, comps, epochs = (int(f) for f in fields[5:10])
        assert wall > 0
        assert dels >= 2 * m * n and dels % (2 * m * n) == 0
        assert tests <= 3 * dels
        assert comps >= 0
        assert epochs == 0 if algo == "sort" else epochs >= 1
        result = float(fields[10])
        by_instance.setdefault((m, rep), set()).add(result)
    # all algorithms agreed per instance and the text round-trips exactly
    assert all(len(vals) == 1 for vals in by_instance.values())


def test_run_bench_validation():
    with pytest.raises(InputError):
        run_bench([4], algorithms=["quantum"], reps=1)
    with pytest.raises(InputError):
        run_bench([0], reps=1)
    with pytest.raises(InputError):
        run_bench([4], reps=0)
    with pytest.raises(InputError):
        run_bench([4], reps=1, kind="spline")
    with pytest.raises(InputError):
        run_bench([], reps=1)
    with pytest.raises(InputError):
        run_bench([4], algorithms=[], reps=1)
