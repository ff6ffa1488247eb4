"""Conway's Life on the unbounded integer plane.

A state is the finite set of live cells, so patterns roam freely over
Z x Z; there is no wraparound and no grid edge. Pattern text uses '.'
for dead cells and 'O' for live ones, one row per line, top row first.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator

Cell = tuple[int, int]
"""Lattice position as (x, y): x grows rightward, y downward (text rows)."""

_OFFSETS: tuple[Cell, ...] = tuple(
    (dx, dy) for dx in (-1, 0, 1) for dy in (-1, 0, 1) if (dx, dy) != (0, 0)
)


class PatternError(ValueError):
    """Pattern text contained a character other than '.', 'O' or a newline."""

    def __init__(self, line: int, column: int, found: str):
        super().__init__(f"line {line}, column {column}: unexpected character {found!r}")
        self.line = line
        self.column = column
        self.found = found


@dataclass(frozen=True)
class CAState:
    """One automaton state: the finite set of cells holding value 1."""

    live: frozenset[Cell] = frozenset()

    @classmethod
    def from_cells(cls, cells: Iterable[Cell]) -> "CAState":
        return cls(frozenset(cells))

    def is_live(self, cell: Cell) -> bool:
        return cell in self.live

    @property
    def population(self) -> int:
        return len(self.live)

    def translate(self, dx: int, dy: int) -> "CAState":
        return CAState(frozenset((x + dx, y + dy) for x, y in self.live))

    def union(self, other: "CAState") -> "CAState":
        return CAState(self.live | other.live)

    def bounding_box(self) -> tuple[int, int, int, int] | None:
        """(x0, y0, x1, y1) inclusive, or None for the empty state."""
        if not self.live:
            return None
        xs = [x for x, _ in self.live]
        ys = [y for _, y in self.live]
        return min(xs), min(ys), max(xs), max(ys)


@dataclass(frozen=True)
class Trace:
    """States 0..T of one evolution; states[k + 1] = life_step(states[k])."""

    states: tuple[CAState, ...]

    def __len__(self) -> int:
        return len(self.states)

    def __getitem__(self, k: int) -> CAState:
        return self.states[k]

    def __iter__(self) -> Iterator[CAState]:
        return iter(self.states)


def parse_pattern(text: str) -> CAState:
    """Read '.'/'O' pattern text; the top-left character is cell (0, 0).

    Rows may differ in length (short rows are padded with dead cells,
    conceptually). The empty string parses to the empty state. Any
    character outside '.', 'O' and line breaks raises PatternError with
    the offending 1-based line and column.
    """
    cells = set()
    for row, line in enumerate(text.splitlines()):
        for col, ch in enumerate(line):
            if ch == "O":
                cells.add((col, row))
            elif ch != ".":
                raise PatternError(row + 1, col + 1, ch)
    return CAState(frozenset(cells))


def render_pattern(state: CAState, viewport: tuple[int, int, int, int] | None = None) -> str:
    """Write a state in the same '.'/'O' format parse_pattern reads.

    viewport is (x0, y0, width, height); by default the state's bounding
    box is used. Live cells outside the viewport are not shown. The empty
    state renders to the empty string when no viewport is given.
    """
    if viewport is None:
        box = state.bounding_box()
        if box is None:
            return ""
        x0, y0, x1, y1 = box
        width, height = x1 - x0 + 1, y1 - y0 + 1
    else:
        x0, y0, width, height = viewport
        if width < 0 or height < 0:
            raise ValueError("viewport width and height must be non-negative")
    live = state.live
    rows = []
    for y in range(y0, y0 + height):
        rows.append("".join("O" if (x, y) in live else "." for x in range(x0, x0 + width)))
    return "\n".join(rows)


def life_step(s: CAState) -> CAState:
    """One synchronous update of the whole plane.

    A cell with exactly 3 live neighbors is live next step; with exactly
    2 it keeps its current value; any other count leaves it dead.
    """
    counts: Counter[Cell] = Counter()
    for x, y in s.live:
        for dx, dy in _OFFSETS:
            counts[(x + dx, y + dy)] += 1
    live = s.live
    return CAState(frozenset(
        cell for cell, n in counts.items() if n == 3 or (n == 2 and cell in live)
    ))


def run(initial: CAState, steps: int) -> Trace:
    """Evolve `initial` for `steps` updates, keeping every state."""
    if steps < 0:
        raise ValueError(f"steps must be non-negative, got {steps}")
    states = [initial]
    for _ in range(steps):
        states.append(life_step(states[-1]))
    return Trace(tuple(states))


GLIDER = parse_pattern(".O.\n..O\nOOO")
BLOCK = parse_pattern("OO\nOO")

# Glider aimed at a block, tuned so the glider stays cleanly detectable
# (no other live cell adjacent to it) for exactly states 0..14, after
# which the collision annihilates every cell.  Found by scanning block
# placements; the tests assert the detection timeline.
_SCENE_TEXT = """\
.O.......
..O......
OOO......
.........
.........
.........
.........
.......OO
.......OO
"""


def glider_block_scene() -> CAState:
    """A 9-cell scene: a glider that flies for 15 states, then dies.

    The glider (5 cells) is detectable in states 0..14; from state 15 on
    the collision with the block (4 cells) has destroyed it and no later
    state contains a glider-shaped, isolated pattern (the two patterns
    annihilate completely).
    """
    return parse_pattern(_SCENE_TEXT)
