"""Doubled diagram moves, delete cascade, and monotone cycle extraction.

The reference implementations here are deliberately written from the raw
definitions (identify column n+1 with column 1 shifted down by m; remove dead
ends until stable) rather than mirroring the library's incremental code.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frechet import (
    Diagram,
    InputError,
    InvariantError,
    SplitMix64,
    find_cyclic_path,
    forward_moves,
    inverse_moves,
    new_diagram,
)

# ---------------------------------------------------------------- references


def ref_forward(cell, m, n):
    """Forward moves derived from the column-identification rule."""
    i, j = cell
    out = {}
    for tag, (ti, tj) in {"N": (i, j + 1), "E": (i + 1, j), "NE": (i + 1, j + 1)}.items():
        if tj == n + 1:
            ti, tj = ti - m, 1
        if not (1 <= ti <= 2 * m) or not (1 <= tj <= n) or (ti, tj) == (i, j):
            out[tag] = None
        else:
            out[tag] = (ti, tj)
    return out


def ref_survivors(m, n, explicit):
    """Dead-end elimination fixed point computed from scratch with sets."""
    alive = {(i, j) for i in range(1, 2 * m + 1) for j in range(1, n + 1)}
    alive -= set(explicit)
    while True:
        dead = {
            cell
            for cell in alive
            if not any(t in alive for t in ref_forward(cell, m, n).values() if t)
        }
        if not dead:
            return alive
        alive -= dead


def all_cells(m, n):
    return [(i, j) for i in range(1, 2 * m + 1) for j in range(1, n + 1)]


# --------------------------------------------------------------------- moves


def test_frozen_move_examples():
    assert forward_moves((6, 2), 3, 2) == {"N": (3, 1), "E": None, "NE": (4, 1)}
    assert forward_moves((2, 2), 3, 2) == {"N": None, "E": (3, 2), "NE": None}
    assert inverse_moves((1, 1), 3, 2) == {"W": None, "S": (4, 2), "SW": (3, 2)}
    # single-cell curves: the only defined moves walk the two copies
    assert forward_moves((1, 1), 1, 1) == {"N": None, "E": (2, 1), "NE": None}
    assert forward_moves((2, 1), 1, 1) == {"N": (1, 1), "E": None, "NE": None}
    assert inverse_moves((1, 1), 1, 1) == {"W": None, "S": (2, 1), "SW": None}


def test_moves_match_reference_exhaustively():
    for m in range(1, 5):
        for n in range(1, 5):
            for cell in all_cells(m, n):
                assert forward_moves(cell, m, n) == ref_forward(cell, m, n), (cell, m, n)


def test_forward_inverse_duality():
    dual = {"N": "S", "E": "W", "NE": "SW"}
    for m in range(1, 5):
        for n in range(1, 5):
            cells = all_cells(m, n)
            fwd = {
                (x, tag, t)
                for x in cells
                for tag, t in forward_moves(x, m, n).items()
                if t is not None
            }
            inv = {
                (y, tag, s)
                for y in cells
                for tag, s in inverse_moves(y, m, n).items()
                if s is not None
            }
            # every forward edge x -tag-> t shows up as t -dual-> x, and only those
            assert {(t, dual[tag], x) for (x, tag, t) in fwd} == inv


def test_kernel_tables_match_pure_python():
    # the compiled move tables must encode exactly the reference moves
    for m in (1, 2, 3, 5):
        for n in (1, 2, 4):
            diag = Diagram(m, n)
            tn, te, tne, tw, ts, tsw = diag.tables
            for cell in all_cells(m, n):
                f = diag.flat(cell)
                ref = ref_forward(cell, m, n)
                for tag, tab in (("N", tn), ("E", te), ("NE", tne)):
                    got = None if tab[f] < 0 else diag.unflat(int(tab[f]))
                    assert got == ref[tag], (cell, tag, m, n)
                inv = inverse_moves(cell, m, n)
                for tag, tab in (("W", tw), ("S", ts), ("SW", tsw)):
                    got = None if tab[f] < 0 else diag.unflat(int(tab[f]))
                    assert got == inv[tag], (cell, tag, m, n)


# ----------------------------------------------------------------- cascading


def test_frozen_cascade_example():
    # deleting (1,1) on a 2x2 diagram kills nothing else: (3,2) and (2,2)
    # both keep a live forward move, so exactly one cell goes
    diag = new_diagram(2, 2)
    assert diag.c == 8
    diag.delete((1, 1))
    assert diag.c == 7
    assert set(diag.allowed_cells()) == ref_survivors(2, 2, [(1, 1)])
    assert diag.counter_slots[0] == 1


def test_delete_forbidden_cell_raises():
    diag = new_diagram(2, 2)
    diag.delete((1, 1))
    with pytest.raises(InvariantError):
        diag.delete((1, 1))


def test_full_drain_accounting():
    rng = SplitMix64(17)
    for m, n in [(1, 1), (1, 4), (3, 3), (5, 2), (6, 6)]:
        diag = new_diagram(m, n)
        cells = np.arange(diag.size, dtype=np.int64)
        # shuffle deterministically
        for t in range(diag.size - 1, 0, -1):
            s = rng.next_u64() % (t + 1)
            cells[t], cells[s] = cells[s], cells[t]
        idx = diag.run_deletes(cells, 0, diag.size)
        assert diag.c == 0
        assert idx < diag.size
        assert diag.counter_slots[0] == 2 * m * n, "every cell deleted exactly once"
        assert diag.counter_slots[1] <= 3 * diag.counter_slots[0]


def test_reset_restores_everything():
    diag = new_diagram(3, 2)
    diag.delete((1, 1))
    diag.delete((2, 2))
    diag.reset()
    assert diag.c == diag.size
    assert all(diag.allowed(cell) for cell in all_cells(3, 2))


def _cascade_matches_fixpoint(m, n, seq):
    diag = new_diagram(m, n)
    explicit = []
    for cell in seq:
        if not diag.allowed(cell):
            continue
        diag.delete(cell)
        explicit.append(cell)
        assert set(diag.allowed_cells()) == ref_survivors(m, n, explicit), (
            m,
            n,
            explicit,
        )


def test_cascade_equals_fixpoint_seeded():
    rng = SplitMix64(99)
    for _ in range(60):
        m = 1 + rng.next_u64() % 4
        n = 1 + rng.next_u64() % 4
        cells = all_cells(m, n)
        seq = [cells[rng.next_u64() % len(cells)] for _ in range(len(cells))]
        _cascade_matches_fixpoint(m, n, seq)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_cascade_equals_fixpoint_property(data):
    m = data.draw(st.integers(1, 3), label="m")
    n = data.draw(st.integers(1, 3), label="n")
    cells = all_cells(m, n)
    seq = data.draw(
        st.lists(st.sampled_from(cells), max_size=len(cells)), label="deletes"
    )
    _cascade_matches_fixpoint(m, n, seq)


# -------------------------------------------------------------- cycle search


def _check_cycle(diag, path):
    m, n = diag.m, diag.n
    cells = path.cells
    assert cells[0] == (path.anchor, 1)
    assert 1 <= path.anchor <= m
    for cur, nxt in zip(cells, cells[1:]):
        assert diag.allowed(cur)
        assert nxt in ref_forward(cur, m, n).values(), (cur, nxt)
    last = cells[-1]
    assert diag.allowed(last)
    # closing move wraps back onto the anchor cell
    closing = ref_forward(last, m, n)
    assert (path.anchor, 1) in (closing["N"], closing["NE"]), (last, path.anchor)
    assert len(set(cells)) == len(cells)


def test_cycle_on_full_diagram():
    for m, n in [(1, 1), (1, 3), (4, 1), (3, 5), (6, 4)]:
        diag = new_diagram(m, n)
        path = find_cyclic_path(diag)
        _check_cycle(diag, path)


def test_cycle_after_threshold_deletes():
    rng = SplitMix64(3)
    for _ in range(40):
        m = 1 + rng.next_u64() % 5
        n = 1 + rng.next_u64() % 5
        diag = new_diagram(m, n)
        # threshold-style deletes: remove a symmetric random subset, both copies
        for i in range(1, m + 1):
            for j in range(1, n + 1):
                if rng.next_u64() % 3 == 0:
                    for cell in ((i, j), (i + m, j)):
                        if diag.allowed(cell):
                            diag.delete(cell)
        if diag.c == 0:
            with pytest.raises(InputError):
                find_cyclic_path(diag)
            continue
        path = find_cyclic_path(diag)
        _check_cycle(diag, path)


def test_cycle_requires_nonempty_diagram():
    diag = new_diagram(1, 1)
    diag.delete((1, 1))
    assert diag.c == 0
    with pytest.raises(InputError):
        find_cyclic_path(diag)
