"""The doubled reachability diagram and its dead-end-preserving delete.

The diagram covers cells (i, j) with 1 <= i <= 2m and 1 <= j <= n.  Rows
beyond m are a second copy of the point sequence, which lets a cyclic
traversal of both curves appear as an ordinary monotone path.  Deleting a
cell cascades: any cell left with no allowed forward move is deleted too,
so the set of allowed cells never contains a dead end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InputError, InvariantError

__all__ = [
    "forward_moves",
    "inverse_moves",
    "Diagram",
    "new_diagram",
    "MonotoneCyclePath",
    "find_cyclic_path",
]

Cell = tuple[int, int]


def _check_cell(cell, m: int, n: int) -> Cell:
    try:
        i, j = cell
    except (TypeError, ValueError):
        raise InputError(f"cell must be an (i, j) pair, got {cell!r}") from None
    i, j = int(i), int(j)
    if not (1 <= i <= 2 * m and 1 <= j <= n):
        raise InputError(f"cell ({i}, {j}) outside doubled diagram for m={m}, n={n}")
    return i, j


def forward_moves(cell: Cell, m: int, n: int) -> dict[str, Cell | None]:
    """Targets of the N, E and NE moves from a cell; None where undefined.

    N climbs within a column, wrapping from the top edge back to the bottom
    on the undoubled side; E advances a column; NE does both.  A move whose
    target would equal its source is undefined (only possible when m=n=1).
    """
    i, j = _check_cell(cell, m, n)
    out: dict[str, Cell | None] = {"N": None, "E": None, "NE": None}
    if j < n:
        out["N"] = (i, j + 1)
    elif i > m:
        out["N"] = (i - m, 1)
    if i < 2 * m:
        out["E"] = (i + 1, j)
    if i < 2 * m and j < n:
        out["NE"] = (i + 1, j + 1)
    elif i >= m and j == n:
        out["NE"] = (i - m + 1, 1)
    for tag, target in out.items():
        if target == (i, j):
            out[tag] = None
    return out


def inverse_moves(cell: Cell, m: int, n: int) -> dict[str, Cell | None]:
    """Exact preimages of the forward moves: cells whose N/E/NE lands here.

    W is the E-preimage, S the N-preimage, SW the NE-preimage, including the
    wrap cases that re-enter through the bottom edge.
    """
    i, j = _check_cell(cell, m, n)
    out: dict[str, Cell | None] = {"W": None, "S": None, "SW": None}
    if i > 1:
        out["W"] = (i - 1, j)
    if j > 1:
        out["S"] = (i, j - 1)
    elif i <= m:
        out["S"] = (i + m, n)
    if i > 1 and j > 1:
        out["SW"] = (i - 1, j - 1)
    elif j == 1 and i <= m + 1:
        out["SW"] = (i + m - 1, n)
    for tag, target in out.items():
        if target == (i, j):
            out[tag] = None
    return out


class Diagram:
    """Mutable allowed/forbidden state over the doubled diagram.

    ``q`` holds one int8 flag per flat cell (1 allowed, 0 forbidden) and ``c``
    counts allowed cells.  ``delete`` requires an allowed cell; deleting
    through the cascade is the only way state changes.
    """

    def __init__(self, m: int, n: int, counter_slots: np.ndarray | None = None):
        if not (isinstance(m, (int, np.integer)) and isinstance(n, (int, np.integer))):
            raise InputError(f"diagram dimensions must be integers, got {m!r}, {n!r}")
        if m < 1 or n < 1:
            raise InputError(f"diagram dimensions must be positive, got m={m}, n={n}")
        self.m = int(m)
        self.n = int(n)
        self.size = 2 * self.m * self.n
        self.tables = _kernels.build_move_tables(self.m, self.n)
        self.q = np.ones(self.size, dtype=np.int8)
        self.c = self.size
        self._stack = np.empty(self.size, dtype=np.int64)
        if counter_slots is None:
            counter_slots = np.zeros(3, dtype=np.int64)
        self.counter_slots = counter_slots

    def flat(self, cell: Cell) -> int:
        i, j = _check_cell(cell, self.m, self.n)
        return (i - 1) * self.n + (j - 1)

    def unflat(self, f: int) -> Cell:
        return f // self.n + 1, f % self.n + 1

    def allowed(self, cell: Cell) -> bool:
        return bool(self.q[self.flat(cell)])

    def allowed_cells(self) -> set[Cell]:
        return {self.unflat(int(f)) for f in np.flatnonzero(self.q)}

    def delete(self, cell: Cell) -> None:
        """Delete an allowed cell and cascade away any resulting dead ends."""
        f = self.flat(cell)
        if not self.q[f]:
            raise InvariantError(f"delete called on forbidden cell {cell}")
        self.c = _kernels.cascade(f, self.q, *self.tables, self.c,
                                  self._stack, self.counter_slots)

    def run_deletes(self, flat_cells: np.ndarray, start: int, stop: int) -> int:
        """Guarded deletes over ``flat_cells[start:stop]``; skips forbidden cells.

        Returns the index at which ``c`` reached 0, or ``stop`` if cells remain.
        """
        idx, self.c = _kernels.run_deletes(flat_cells, start, stop, self.q,
                                           *self.tables, self.c, self._stack,
                                           self.counter_slots)
        return idx

    def reset(self) -> None:
        self.q[:] = 1
        self.c = self.size


def new_diagram(m: int, n: int) -> Diagram:
    return Diagram(m, n)


@dataclass
class MonotoneCyclePath:
    """A monotone lattice cycle: cells from (anchor, 1) up to the cell whose
    wrapping move returns to (anchor, 1)."""

    anchor: int
    cells: list[Cell]


def _greedy_walk(diag: Diagram, i0: int):
    """Walk forward from (i0, 1) picking NE, then N, then E, until a wrap.

    Returns the visited cells and the bottom-row column the wrap lands on.
    Every visited cell and the wrap target are allowed.
    """
    tn, te, tne = diag.tables[0], diag.tables[1], diag.tables[2]
    q = diag.q
    n = diag.n
    f = (i0 - 1) * n
    cells = [diag.unflat(f)]
    for _ in range(2 * diag.m + n + 2):
        j = f % n + 1
        target = -1
        wrapped = False
        for tab in (tne, tn, te):
            t = tab[f]
            if t >= 0 and q[t]:
                target = t
                wrapped = j == n and tab is not te
                break
        if target < 0:
            raise InvariantError(f"allowed cell {diag.unflat(f)} has no allowed forward move")
        if wrapped:
            return cells, target // n + 1
        f = target
        cells.append(diag.unflat(f))
    raise InvariantError("forward walk failed to wrap within its step budget")


def _close_cycle(diag: Diagram, anchor: int, cells: list[Cell]) -> MonotoneCyclePath:
    if anchor == diag.m + 1:
        # a cycle living entirely in the doubled half; shift it down one copy
        folded = [(i - diag.m, j) for i, j in cells]
        if not all(diag.allowed(cell) for cell in folded):
            raise InvariantError("cycle found only in the doubled half of the diagram")
        anchor, cells = 1, folded
    if not 1 <= anchor <= diag.m:
        raise InvariantError(f"cycle anchor {anchor} outside [1, {diag.m}]")
    return MonotoneCyclePath(anchor=anchor, cells=cells)


def find_cyclic_path(diag: Diagram) -> MonotoneCyclePath:
    """Extract a monotone cycle through allowed cells.

    Walks greedily from an allowed bottom cell; each walk ends by wrapping to
    a new bottom anchor.  The first walk that wraps to its own anchor closes
    a cycle; otherwise two successive walks must share a cell, and splicing
    the second walk's prefix onto the first walk's suffix closes one.
    """
    if diag.c == 0:
        raise InputError("diagram has no allowed cells")
    m, n = diag.m, diag.n
    anchor = next((i for i in range(1, m + 1) if diag.q[(i - 1) * n]), None)
    if anchor is None:
        raise InvariantError("no allowed cell on the bottom row of the first copy")
    prev_cells: list[Cell] | None = None
    prev_index: dict[Cell, int] = {}
    for _ in range(m + 2):
        cells, landing = _greedy_walk(diag, anchor)
        if landing == anchor:
            return _close_cycle(diag, anchor, cells)
        if prev_cells is not None:
            shared = next((t for t, cell in enumerate(cells) if cell in prev_index), None)
            if shared is not None:
                spliced = cells[:shared] + prev_cells[prev_index[cells[shared]]:]
                return _close_cycle(diag, anchor, spliced)
        prev_cells = cells
        prev_index = {cell: t for t, cell in enumerate(cells)}
        anchor = landing
    raise InvariantError("no cycle found within the anchor iteration budget")
