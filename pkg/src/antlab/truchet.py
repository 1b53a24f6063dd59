"""Truchet-tile picture of a universe: arcs, contours and the diagonals graph.

Every cell carries two quarter-circle arcs joining midpoints of adjacent
edges. Which pair of corners the arcs wrap depends only on whether the cell
is an H-cell and on the turn letter of its current state:

    type A (H-L, V-R): arcs W-N and E-S, diagonal NE-SW
    type B (H-R, V-L): arcs W-S and E-N, diagonal NW-SE

Edges are named by the heading pointing out of the cell through them, so an
ant heading ``h`` enters a cell through edge ``opposite(h)`` and leaves
through the exit edge with heading equal to that edge.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from .config import DEFAULTS
from .engine import (
    DX,
    DY,
    E,
    HEADING_NAMES,
    HOME_POSE,
    N,
    S,
    W,
    AntPose,
    Cell,
    Universe,
    is_h_cell,
    neighbor,
    opposite,
)
from .rules import RuleError

Corner = tuple[int, int]

# exit edge indexed by entry edge
_PAIRING_A = {W: N, N: W, E: S, S: E}
_PAIRING_B = {W: S, S: W, E: N, N: E}


class ContourError(RuntimeError):
    pass


@dataclass(frozen=True)
class TileOrientation:
    h_cell: bool
    letter: str

    @property
    def type_a(self) -> bool:
        return self.h_cell == (self.letter == "L")

    def __str__(self) -> str:
        return f"{'H' if self.h_cell else 'V'}-{self.letter}"


def tile_orientation(u: Universe, cell: Cell) -> TileOrientation:
    return TileOrientation(is_h_cell(cell), u.letter(cell))


def tile_geometry(o: TileOrientation) -> tuple[tuple[tuple[str, str], ...], tuple[str, str]]:
    """Arc pair and diagonal of a tile, named by edge and corner compass points."""
    if o.type_a:
        return (("W", "N"), ("E", "S")), ("NE", "SW")
    return (("W", "S"), ("E", "N")), ("NW", "SE")


def exit_edge(o: TileOrientation, entry: int) -> int:
    return (_PAIRING_A if o.type_a else _PAIRING_B)[entry]


def _is_type_a(u: Universe, cell: Cell) -> bool:
    return ((cell[0] + cell[1]) % 2 == 0) == (u.letter(cell) == "L")


def diagonal(cell: Cell, type_a: bool) -> tuple[Corner, Corner]:
    """Corner coordinates of the tile diagonal; cell (x, y) spans [x, x+1] x [y, y+1]."""
    x, y = cell
    if type_a:
        return (x, y), (x + 1, y + 1)
    return (x, y + 1), (x + 1, y)


def cell_corners(cell: Cell) -> tuple[Corner, Corner, Corner, Corner]:
    x, y = cell
    return (x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)


@dataclass(frozen=True)
class Arc:
    cell: Cell
    entry: int
    exit: int

    def __str__(self) -> str:
        x, y = self.cell
        return f"{x} {y} {HEADING_NAMES[self.entry]} {HEADING_NAMES[self.exit]}"

    def reversed(self) -> Arc:
        return Arc(self.cell, self.exit, self.entry)


@dataclass(frozen=True)
class Contour:
    arcs: tuple[Arc, ...]

    def __len__(self) -> int:
        return len(self.arcs)

    def __iter__(self) -> Iterator[Arc]:
        return iter(self.arcs)

    @property
    def cells(self) -> Counter:
        return Counter(a.cell for a in self.arcs)

    def is_closed(self) -> bool:
        for a, b in zip(self.arcs, self.arcs[1:] + self.arcs[:1]):
            if neighbor(a.cell, a.exit) != b.cell or b.entry != opposite(a.exit):
                return False
        return True

    def is_simple(self) -> bool:
        return len(set(self.arcs)) == len(self.arcs)

    def reversed(self) -> Contour:
        return Contour(tuple(a.reversed() for a in reversed(self.arcs)))

    def polygon(self) -> list[tuple[float, float]]:
        """Entry-edge midpoints in corner coordinates, one per arc."""
        return [_edge_midpoint(a.cell, a.entry) for a in self.arcs]

    def dumps(self) -> str:
        return "".join(f"{a}\n" for a in self.arcs)


def _edge_midpoint(cell: Cell, edge: int) -> tuple[float, float]:
    x, y = cell
    return (x + 0.5 + DX[edge] * 0.5, y + 0.5 + DY[edge] * 0.5)


def trace_contour(
    u: Universe,
    start: AntPose,
    *,
    flipped: Iterable[Cell] = (),
    max_arcs: int | None = None,
) -> Contour:
    """Follow arcs from ``start`` without touching any state until it recurs.

    ``flipped`` cells are traced with their other orientation.
    """
    cap = DEFAULTS.trace_cap if max_arcs is None else max_arcs
    flipped = frozenset(flipped)
    cell, h = start.target, start.heading
    arcs = []
    for _ in range(cap):
        entry = opposite(h)
        type_a = _is_type_a(u, cell) != (cell in flipped)
        h = (_PAIRING_A if type_a else _PAIRING_B)[entry]
        arcs.append(Arc(cell, entry, h))
        cell = (cell[0] + DX[h], cell[1] + DY[h])
        if h == start.heading and cell == start.target:
            return Contour(tuple(arcs))
    raise ContourError(f"contour from {start} did not close within {cap} arcs")


def principal_contour(u: Universe) -> Contour:
    if not u.at_home:
        raise ContourError(f"ant is not home (pose {u.pose}, t={u.time})")
    return trace_contour(u, HOME_POSE)


def twice_visited_cells(c: Contour) -> list[Cell]:
    return sorted(cell for cell, k in c.cells.items() if k >= 2)


def region(u: Universe) -> set[Cell]:
    return u.visited | set(u.cells)


def all_contours(u: Universe, cells: Iterable[Cell] | None = None) -> list[Contour]:
    """Partition every arc of ``cells`` (default: the visited region) into contours.

    Each contour is traced in the ant-consistent direction: H-cells entered
    through E/W, V-cells through N/S.
    """
    cells = region(u) if cells is None else set(cells)
    seen: set[tuple[Cell, int]] = set()
    out = []
    for cell in sorted(cells):
        for entry in (E, W) if is_h_cell(cell) else (N, S):
            if (cell, entry) in seen:
                continue
            c = trace_contour(u, AntPose(cell, opposite(entry)))
            seen.update((a.cell, a.entry) for a in c)
            out.append(c)
    return out


# --- diagonals graph -------------------------------------------------------


@dataclass
class DiagonalsGraph:
    """Diagonals of hot tiles, keyed by the tile they belong to.

    When state 1 is itself hot the unvisited plane is covered in diagonals;
    the graph then also holds the ring of unvisited cells around the region,
    and corners of that ring which touch no region cell are ``truncated``:
    their degree here is not their degree in the whole plane.
    """

    edges: dict[Cell, tuple[Corner, Corner]] = field(default_factory=dict)
    truncated: set[Corner] = field(default_factory=set)

    def degrees(self) -> Counter:
        deg: Counter = Counter()
        for a, b in self.edges.values():
            deg[a] += 1
            deg[b] += 1
        return deg

    @property
    def vertices(self) -> set[Corner]:
        return {v for e in self.edges.values() for v in e}

    def to_networkx(self, without: Iterable[Cell] = ()) -> nx.MultiGraph:
        skip = set(without)
        g = nx.MultiGraph()
        g.add_edges_from(e for cell, e in self.edges.items() if cell not in skip)
        return g

    def components(self) -> list[set[Corner]]:
        """Connected components of the edge-induced subgraph."""
        return [set(c) for c in nx.connected_components(self.to_networkx())]

    def odd_vertex_counts(self) -> list[int]:
        """Number of odd-degree vertices in each component."""
        deg = self.degrees()
        return [sum(deg[v] % 2 for v in comp) for comp in self.components()]

    def dumps(self) -> str:
        lines = []
        for cell in sorted(self.edges):
            (x1, y1), (x2, y2) = self.edges[cell]
            lines.append(f"{x1} {y1} {x2} {y2}\n")
        return "".join(lines)


def diagonals_graph(u: Universe) -> DiagonalsGraph:
    rule = u.rule
    if not rule.runs.even_run_length:
        raise RuleError(f"diagonals graph needs the even run-length property; {rule} lacks it")
    cells = region(u)
    g = DiagonalsGraph()
    if rule.is_hot(1):
        ring = {(x + dx, y + dy) for x, y in cells for dx in (-1, 0, 1) for dy in (-1, 0, 1)}
        ring -= cells
        inner = {v for c in cells for v in cell_corners(c)}
        g.truncated = {v for c in ring for v in cell_corners(c)} - inner
        cells = cells | ring
    hot = [False] + [rule.is_hot(s) for s in range(1, rule.n + 1)]
    for cell in cells:
        if hot[u.state(cell)]:
            g.edges[cell] = diagonal(cell, _is_type_a(u, cell))
    return g


def even_degree_holds(g: DiagonalsGraph) -> bool:
    return all(k % 2 == 0 for v, k in g.degrees().items() if v not in g.truncated)


def corner_degree(u: Universe, v: Corner) -> int:
    """Number of hot-tile diagonals touching corner ``v``, read straight off the universe."""
    x, y = v
    k = 0
    for cell in ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y)):
        if u.rule.is_hot(u.state(cell)) and v in diagonal(cell, _is_type_a(u, cell)):
            k += 1
    return k


# --- the split check -------------------------------------------------------


@dataclass(frozen=True)
class SplitResult:
    contour_a: Contour
    contour_b: Contour | None
    disjoint_components: bool

    @property
    def split(self) -> bool:
        return self.contour_b is not None

    @property
    def nested(self) -> bool:
        """True when one of the two split contours encloses the other."""
        if self.contour_b is None:
            return False
        pa, pb = self.contour_a.polygon(), self.contour_b.polygon()
        return point_in_polygon(pa[0], pb) or point_in_polygon(pb[0], pa)


def split_check(u: Universe, c: Contour, t: Cell, graph: DiagonalsGraph | None = None) -> SplitResult:
    """Flip tile ``t`` (visited twice by ``c``), retrace, and test the diagonal's ends.

    The diagonal ``d`` of ``t`` is removed from the diagonals graph and the
    result records whether its two endpoints are left in different components.
    Pass ``graph`` to reuse a diagonals graph already built for ``u``.
    """
    entries = [a for a in c if a.cell == t]
    if len(entries) != 2:
        raise ContourError(f"cell {t} is visited {len(entries)} times by the contour, need 2")
    starts = [AntPose(t, opposite(a.entry)) for a in entries]
    a_contour = trace_contour(u, starts[0], flipped=[t])
    if any(arc.cell == t and arc.entry == entries[1].entry for arc in a_contour):
        b_contour = None
    else:
        b_contour = trace_contour(u, starts[1], flipped=[t])
    g = diagonals_graph(u) if graph is None else graph
    p, q = diagonal(t, _is_type_a(u, t))
    return SplitResult(a_contour, b_contour, not _joined(g, p, q, skip=t))


def _joined(g: DiagonalsGraph, p: Corner, q: Corner, skip: Cell) -> bool:
    adj: dict[Corner, list[Corner]] = {}
    for cell, (a, b) in g.edges.items():
        if cell != skip:
            adj.setdefault(a, []).append(b)
            adj.setdefault(b, []).append(a)
    seen = {p}
    todo = [p]
    while todo:
        v = todo.pop()
        if v == q:
            return True
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return False


def point_in_polygon(pt: tuple[float, float], poly: list[tuple[float, float]]) -> bool:
    """Even-odd rule with half-open edge crossing."""
    px, py = pt
    inside = False
    j = len(poly) - 1
    for i in range(len(poly)):
        xi, yi = poly[i]
        xj, yj = poly[j]
        if (yi > py) != (yj > py):
            xcross = xi + (py - yi) * (xj - xi) / (yj - yi)
            if px < xcross:
                inside = not inside
        j = i
    return inside


# --- tours ------------------------------------------------------------------


@dataclass
class TourReport:
    start_time: int
    return_time: int
    lemma1: bool
    even_before: bool
    even_after: bool
    twice_visited: list[Cell]
    property1: bool

    @property
    def lemma2(self) -> bool:
        return not self.even_before or self.even_after

    @property
    def ok(self) -> bool:
        return self.even_before and self.lemma1 and self.even_after and self.property1


def ant_path(u: Universe, max_steps: int) -> list[Arc]:
    """Step ``u`` in place until it is home again, returning the arcs it traversed."""
    rule = u.rule
    turn = [0] + [3 if ch == "L" else 1 for ch in rule.letters]
    nxt = [0] + list(range(2, rule.n + 1)) + [1]
    cells, add = u.cells, u.visited.add
    (x, y), h = u.pose.target, u.pose.heading
    hx, hy = HOME_POSE.target
    arcs = []
    for _ in range(max_steps):
        p = (x, y)
        s = cells.get(p, 1)
        entry = (h + 2) & 3
        h = (h + turn[s]) & 3
        cells[p] = nxt[s]
        add(p)
        arcs.append(Arc(p, entry, h))
        x += DX[h]
        y += DY[h]
        if h == HOME_POSE.heading and x == hx and y == hy:
            break
    else:
        u.pose, u.time = AntPose((x, y), h), u.time + len(arcs)
        raise ContourError(f"no home return within {max_steps} steps")
    u.pose, u.time = AntPose((x, y), h), u.time + len(arcs)
    return arcs


def tour(u: Universe, max_steps: int | None = None) -> TourReport:
    """Run one tour of ``u`` (in place) from home to home, checking the contour invariants."""
    if not u.at_home:
        raise ContourError(f"ant is not home (pose {u.pose}, t={u.time})")
    cap = DEFAULTS.tour_cap if max_steps is None else max_steps
    start = u.time
    contour = trace_contour(u, HOME_POSE, max_arcs=cap)
    twice = twice_visited_cells(contour)
    property1 = all(u.rule.is_cold(u.state(c)) for c in twice)
    even_before = even_degree_holds(diagonals_graph(u))
    path = ant_path(u, cap)
    return TourReport(
        start_time=start,
        return_time=u.time,
        lemma1=tuple(path) == contour.arcs,
        even_before=even_before,
        even_after=even_degree_holds(diagonals_graph(u)),
        twice_visited=twice,
        property1=property1,
    )


def verify_lemma1(u: Universe, max_steps: int | None = None) -> bool:
    """Does the ant, from home, walk exactly its principal contour?"""
    if not even_degree_holds(diagonals_graph(u)):
        raise ContourError("even diagonal-degree property fails; precondition violated")
    return tour(u.copy(), max_steps).lemma1


def verify_lemma2(u: Universe, max_steps: int | None = None) -> bool:
    """Does the even diagonal-degree property survive one full tour?"""
    report = tour(u.copy(), max_steps)
    if not report.even_before:
        raise ContourError("even diagonal-degree property fails; precondition violated")
    return report.even_after


def transit_parity_violations(u: Universe, max_steps: int | None = None) -> list[tuple[Corner, int, int]]:
    """Run one tour of ``u`` in place, checking every transit of a corner neighbourhood.

    A transit of corner v is a maximal run of consecutive steps whose cells
    all have v as a corner. Returns (v, start_time, end_time) for every
    completed transit that changed the parity of v's diagonal count.
    Transits still open at either end of the tour are ignored.
    """
    cap = DEFAULTS.tour_cap if max_steps is None else max_steps
    active: dict[Corner, tuple[int, int]] = {}
    opened_at_start = set(cell_corners(u.pose.target))
    bad = []
    for _ in range(cap):
        cell = u.pose.target
        corners = set(cell_corners(cell))
        for v in list(active):
            if v not in corners:
                t0, d0 = active.pop(v)
                if v not in opened_at_start and (corner_degree(u, v) - d0) % 2:
                    bad.append((v, t0, u.time))
                opened_at_start.discard(v)
        for v in corners:
            if v not in active:
                active[v] = (u.time, corner_degree(u, v))
        u.step()
        if u.at_home:
            return bad
    raise ContourError(f"no home return within {cap} steps")
