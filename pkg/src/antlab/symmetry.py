"""Central and bilateral symmetry of the track.

A configuration is symmetric under an isometry when the isometry maps the
visited set onto itself and every cell onto a cell of the same state. Any
such isometry must fix the bounding box, which pins its anchor to the box
centre or midlines; only those candidates are tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .engine import Cell, Universe, new_universe
from .rules import RuleString

POINT = "pointReflection"
MIRROR_V = "mirrorVertical"
MIRROR_H = "mirrorHorizontal"
MIRROR_DIAG = "mirrorDiagonal"
MIRROR_ANTI = "mirrorAntiDiagonal"
MIRRORS = (MIRROR_V, MIRROR_H, MIRROR_DIAG, MIRROR_ANTI)


@dataclass(frozen=True)
class Isometry:
    """A reflection of cell indices.

    ``anchor2`` holds twice the anchor so half-integer anchors stay exact:
    mirrorVertical maps x to anchor2[0] - x about the line x = anchor2[0] / 2,
    pointReflection reflects through the point anchor2 / 2.
    """

    kind: str
    anchor2: tuple[int, int]

    @property
    def anchor(self) -> tuple[float, float]:
        return self.anchor2[0] / 2, self.anchor2[1] / 2

    def __call__(self, c: Cell) -> Cell | None:
        x, y = c
        ax, ay = self.anchor2
        if self.kind == POINT:
            return ax - x, ay - y
        if self.kind == MIRROR_V:
            return ax - x, y
        if self.kind == MIRROR_H:
            return x, ay - y
        # diagonal axes through the anchor only map cells to cells when the
        # anchor's coordinates differ by an integer
        if (ax - ay) % 2:
            return None
        if self.kind == MIRROR_DIAG:
            return (ax - ay) // 2 + y, (ay - ax) // 2 + x
        if self.kind == MIRROR_ANTI:
            return (ax + ay) // 2 - y, (ax + ay) // 2 - x
        raise ValueError(f"unknown isometry kind {self.kind!r}")

    @property
    def is_mirror(self) -> bool:
        return self.kind in MIRRORS

    def __str__(self) -> str:
        ax, ay = self.anchor
        return f"{self.kind} {ax:g} {ay:g}"


@dataclass(frozen=True)
class SymmetryReport:
    time: int
    found: tuple[Isometry, ...]

    @property
    def mirror(self) -> bool:
        return any(iso.is_mirror for iso in self.found)

    @property
    def central(self) -> bool:
        return any(iso.kind == POINT for iso in self.found)

    def lines(self) -> Iterator[str]:
        for iso in self.found:
            yield f"{self.time} {iso}"


def check_isometry(u: Universe, iso: Isometry) -> bool:
    visited = u.visited
    state = u.cells.get
    for c in visited:
        m = iso(c)
        if m is None or m not in visited or state(m, 1) != state(c, 1):
            return False
    return True


def candidates(
    box: tuple[int, int, int, int], diagonals: bool = False
) -> list[Isometry]:
    xmin, xmax, ymin, ymax = box
    cx, cy = xmin + xmax, ymin + ymax
    out = [Isometry(POINT, (cx, cy)), Isometry(MIRROR_V, (cx, cy)), Isometry(MIRROR_H, (cx, cy))]
    if diagonals and xmax - xmin == ymax - ymin:
        out += [Isometry(MIRROR_DIAG, (cx, cy)), Isometry(MIRROR_ANTI, (cx, cy))]
    return out


def detect_symmetries(u: Universe, diagonals: bool = False) -> SymmetryReport:
    if not u.visited:
        raise ValueError("symmetry of an empty track is undefined")
    found = tuple(iso for iso in candidates(u.bounding_box(), diagonals) if check_isometry(u, iso))
    return SymmetryReport(u.time, found)


def symmetry_scan(
    rule: RuleString | str,
    horizon: int,
    on_return: bool = False,
    diagonals: bool = False,
) -> list[SymmetryReport]:
    """Reports for every sampled time up to ``horizon`` with some symmetry.

    Samples every step, or only home returns when ``on_return`` is set.
    """
    if horizon < 1:
        raise ValueError("horizon must be >= 1")
    u = new_universe(rule)
    out = []
    if on_return:
        while u.run_to_next_home(horizon - u.time) is not None:
            rep = detect_symmetries(u, diagonals)
            if rep.found:
                out.append(rep)
        return out
    xmin = ymin = 1 << 62
    xmax = ymax = -(1 << 62)
    while u.time < horizon:
        x, y = u.pose.target
        u.step()
        xmin, xmax, ymin, ymax = min(xmin, x), max(xmax, x), min(ymin, y), max(ymax, y)
        found = tuple(
            iso for iso in candidates((xmin, xmax, ymin, ymax), diagonals) if check_isometry(u, iso)
        )
        if found:
            out.append(SymmetryReport(u.time, found))
    return out
