"""Sparse-grid ant automaton.

Coordinates are integer cell indices with E = +x and N = +y. The ant's pose is
the cell it is about to enter plus its heading; home is cell (0, 0) entered
heading West, i.e. the ant sits on the edge between (1, 0) and (0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .rules import RuleString, parse_rule

Cell = tuple[int, int]

N, E, S, W = 0, 1, 2, 3
HEADING_NAMES = "NESW"
DX = (0, 1, 0, -1)
DY = (1, 0, -1, 0)

HOME: Cell = (0, 0)
HOME_HEADING = W


def left(h: int) -> int:
    return (h + 3) & 3


def right(h: int) -> int:
    return (h + 1) & 3


def opposite(h: int) -> int:
    return (h + 2) & 3


def heading_from_name(name: str) -> int:
    try:
        return HEADING_NAMES.index(name)
    except ValueError:
        raise ValueError(f"unknown heading {name!r}") from None


def neighbor(cell: Cell, h: int) -> Cell:
    return (cell[0] + DX[h], cell[1] + DY[h])


def is_h_cell(cell: Cell) -> bool:
    """H-cells are entered horizontally; the home cell is one."""
    return (cell[0] + cell[1]) % 2 == 0


@dataclass(frozen=True)
class AntPose:
    target: Cell
    heading: int

    def __str__(self) -> str:
        return f"{self.target[0]} {self.target[1]} {HEADING_NAMES[self.heading]}"


HOME_POSE = AntPose(HOME, HOME_HEADING)


@dataclass
class Universe:
    rule: RuleString
    cells: dict[Cell, int] = field(default_factory=dict)
    visited: set[Cell] = field(default_factory=set)
    pose: AntPose = HOME_POSE
    time: int = 0

    def state(self, cell: Cell) -> int:
        return self.cells.get(cell, 1)

    def set_state(self, cell: Cell, state: int) -> None:
        if not 1 <= state <= self.rule.n:
            raise ValueError(f"state {state} outside 1..{self.rule.n}")
        if state == 1 and cell not in self.visited:
            self.cells.pop(cell, None)
        else:
            self.cells[cell] = state

    def letter(self, cell: Cell) -> str:
        return self.rule.letters[self.cells.get(cell, 1) - 1]

    @property
    def at_home(self) -> bool:
        return self.pose == HOME_POSE

    def copy(self) -> Universe:
        return Universe(self.rule, dict(self.cells), set(self.visited), self.pose, self.time)

    def step(self, count: int = 1) -> Universe:
        """Advance ``count`` steps in place and return self."""
        _run(self, count)
        return self

    def run_until(self, t: int) -> Universe:
        if t < self.time:
            raise ValueError(f"cannot run backwards from {self.time} to {t}")
        return self.step(t - self.time)

    def run_to_next_home(self, max_steps: int) -> int | None:
        """Step until the ant is next at home; return the time, or None past the cap."""
        found = _run(self, max_steps, stop_at_home=True)
        return self.time if found else None

    def bounding_box(self) -> tuple[int, int, int, int]:
        """(xmin, xmax, ymin, ymax) over the visited cells."""
        if not self.visited:
            raise ValueError("empty track has no bounding box")
        xs = [c[0] for c in self.visited]
        ys = [c[1] for c in self.visited]
        return min(xs), max(xs), min(ys), max(ys)

    def nondefault_cells(self) -> Iterator[tuple[Cell, int]]:
        """Cells that must be stored: state != 1 or visited."""
        for c in sorted(set(self.cells) | self.visited):
            yield c, self.cells.get(c, 1)


def new_universe(rule: RuleString | str) -> Universe:
    if isinstance(rule, str):
        rule = parse_rule(rule)
    return Universe(rule)


def _run(u: Universe, count: int, stop_at_home: bool = False) -> bool:
    """Hot loop. Returns True if it stopped on a home return."""
    rule = u.rule
    n = rule.n
    turn = [0] + [3 if ch == "L" else 1 for ch in rule.letters]
    nxt = [0] + list(range(2, n + 1)) + [1]
    cells = u.cells
    get = cells.get
    add = u.visited.add
    (x, y), h = u.pose.target, u.pose.heading
    hx, hy = HOME
    t = u.time
    found = False
    for _ in range(count):
        p = (x, y)
        s = get(p, 1)
        h = (h + turn[s]) & 3
        cells[p] = nxt[s]
        add(p)
        x += DX[h]
        y += DY[h]
        t += 1
        if stop_at_home and h == HOME_HEADING and x == hx and y == hy:
            found = True
            break
    u.pose = AntPose((x, y), h)
    u.time = t
    return found


def home_return_times(u: Universe, horizon: int) -> list[int]:
    """Times t <= horizon at which the ant is back in its home pose. Steps ``u``."""
    times = []
    while u.time < horizon:
        t = u.run_to_next_home(horizon - u.time)
        if t is None:
            break
        times.append(t)
    return times


def iter_home_returns(u: Universe, max_steps: int) -> Iterator[Universe]:
    """Yield ``u`` each time it comes home, giving up after ``max_steps`` without one."""
    while u.run_to_next_home(max_steps) is not None:
        yield u


# --- snapshot files -------------------------------------------------------

SNAPSHOT_MAGIC = "ANTSNAP 1"


class SnapshotError(ValueError):
    pass


def dumps_snapshot(u: Universe) -> str:
    lines = [SNAPSHOT_MAGIC, u.rule.letters, str(u.time), str(u.pose)]
    for (x, y), s in u.nondefault_cells():
        lines.append(f"{x} {y} {s} {int((x, y) in u.visited)}")
    return "\n".join(lines) + "\n"


def loads_snapshot(text: str) -> Universe:
    lines = text.splitlines()
    if len(lines) < 4 or lines[0].strip() != SNAPSHOT_MAGIC:
        raise SnapshotError("not an ANTSNAP 1 snapshot")
    try:
        rule = parse_rule(lines[1].strip())
        time = int(lines[2])
        px, py, ph = lines[3].split()
        u = Universe(rule, pose=AntPose((int(px), int(py)), heading_from_name(ph)), time=time)
        for lineno, line in enumerate(lines[4:], start=5):
            if not line.strip():
                continue
            x, y, s, v = (int(tok) for tok in line.split())
            if v not in (0, 1):
                raise SnapshotError(f"line {lineno}: visited flag must be 0 or 1")
            if v:
                u.visited.add((x, y))
            u.set_state((x, y), s)
    except SnapshotError:
        raise
    except ValueError as exc:
        raise SnapshotError(str(exc)) from exc
    return u


def save_snapshot(u: Universe, path: str | Path) -> None:
    Path(path).write_text(dumps_snapshot(u))


def load_snapshot(path: str | Path) -> Universe:
    return loads_snapshot(Path(path).read_text())


def universe_from_states(
    rule: RuleString | str, states: dict[Cell, int], visited: Iterable[Cell] | None = None
) -> Universe:
    """Build a synthetic universe; cells listed in ``states`` count as visited by default."""
    u = new_universe(rule)
    u.visited.update(states if visited is None else visited)
    for c, s in states.items():
        u.set_state(c, s)
    return u
