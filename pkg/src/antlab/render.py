"""Plain-text pixmaps of cell states and vector drawings of the Truchet picture.

Model space has y pointing up; both emitters flip to screen rows/coordinates.
"""

from __future__ import annotations

from .config import DEFAULTS
from .engine import Cell, HEADING_NAMES, Universe
from .truchet import (
    ContourError,
    _edge_midpoint,
    _is_type_a,
    _PAIRING_A,
    _PAIRING_B,
    diagonals_graph,
    principal_contour,
)

BACKGROUND = (222, 235, 255)

Box = tuple[int, int, int, int]


def default_palette(n: int) -> dict[int, int]:
    """Evenly spaced greys, state 1 white down to state n black."""
    if n == 1:
        return {1: 255}
    return {k: round(255 * (n - k) / (n - 1)) for k in range(1, n + 1)}


def _box(u: Universe, box: Box | None) -> Box:
    if box is not None:
        return box
    if not u.visited:
        return (-2, 3, -3, 2)
    return u.bounding_box()


def render_states(
    u: Universe, palette: dict[int, int] | None = None, scale: int | None = None
) -> str:
    """P3 pixmap of the track: one ``scale`` x ``scale`` block per cell of the bounding box."""
    if not u.visited:
        raise ValueError("empty track: nothing to render")
    palette = default_palette(u.rule.n) if palette is None else palette
    if len(set(palette.values())) != len(palette):
        raise ValueError("palette must give each state its own grey")
    scale = DEFAULTS.cell_pixels if scale is None else scale
    xmin, xmax, ymin, ymax = u.bounding_box()
    w, h = (xmax - xmin + 1) * scale, (ymax - ymin + 1) * scale
    out = [f"P3\n{w} {h}\n255\n"]
    for y in range(ymax, ymin - 1, -1):
        row = []
        for x in range(xmin, xmax + 1):
            if (x, y) in u.visited:
                g = palette[u.state((x, y))]
                px = f"{g} {g} {g}"
            else:
                px = "%d %d %d" % BACKGROUND
            row.extend([px] * scale)
        line = " ".join(row) + "\n"
        out.extend([line] * scale)
    return "".join(out)


def _arc_path(cell: Cell, entry: int, exit: int) -> str:
    """SVG path for the quarter circle about the corner shared by two edges."""
    x0, y0 = _edge_midpoint(cell, entry)
    x1, y1 = _edge_midpoint(cell, exit)
    cx, cy = x0 if x0 in (cell[0], cell[0] + 1) else x1, y0 if y0 in (cell[1], cell[1] + 1) else y1
    sx0, sy0, sx1, sy1, scx, scy = x0, -y0, x1, -y1, cx, -cy
    cross = (sx0 - scx) * (sy1 - scy) - (sy0 - scy) * (sx1 - scx)
    sweep = 1 if cross > 0 else 0
    return f"M {sx0:g} {sy0:g} A 0.5 0.5 0 0 {sweep} {sx1:g} {sy1:g}"


def render_truchet(
    u: Universe,
    diagonals: bool = False,
    highlight_principal: bool = False,
    box: Box | None = None,
) -> str:
    """SVG of every tile in the box: two arcs per cell, optional hot diagonals and principal contour.

    The box defaults to the track's bounding box, grown to hold the principal
    contour when it is highlighted.
    """
    if highlight_principal and not u.at_home:
        raise ContourError(f"cannot highlight the principal contour: ant not home at t={u.time}")
    xmin, xmax, ymin, ymax = _box(u, box)
    principal = set()
    if highlight_principal:
        contour = principal_contour(u)
        principal = {(a.cell, frozenset((a.entry, a.exit))) for a in contour}
        if box is None:
            # the contour can wander through unvisited cells just outside the track
            xs = [a.cell[0] for a in contour] + [xmin, xmax]
            ys = [a.cell[1] for a in contour] + [ymin, ymax]
            xmin, xmax, ymin, ymax = min(xs), max(xs), min(ys), max(ys)
    w, h = xmax - xmin + 1, ymax - ymin + 1
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{xmin} {-(ymax + 1)} {w} {h}">',
        f"<!-- rule {u.rule.letters} t={u.time} pose {u.pose} -->",
        '<g fill="none" stroke-linecap="round">',
    ]
    for y in range(ymax, ymin - 1, -1):
        for x in range(xmin, xmax + 1):
            cell = (x, y)
            pairing = _PAIRING_A if _is_type_a(u, cell) else _PAIRING_B
            for entry in sorted({min(e, pairing[e]) for e in pairing}):
                exit = pairing[entry]
                on_principal = (cell, frozenset((entry, exit))) in principal
                style = 'stroke="#c00000" stroke-width="0.12"' if on_principal else 'stroke="black" stroke-width="0.05"'
                lines.append(
                    f'<path class="arc{" principal" if on_principal else ""}" '
                    f'data-cell="{x} {y}" data-edges="{HEADING_NAMES[entry]}{HEADING_NAMES[exit]}" '
                    f'd="{_arc_path(cell, entry, exit)}" {style}/>'
                )
    lines.append("</g>")
    if diagonals:
        g = diagonals_graph(u)
        lines.append('<g stroke="#1f5fbf" stroke-width="0.04">')
        for cell in sorted(g.edges):
            if not (xmin <= cell[0] <= xmax and ymin <= cell[1] <= ymax):
                continue
            (x1, y1), (x2, y2) = g.edges[cell]
            lines.append(f'<line class="diagonal" x1="{x1}" y1="{-y1}" x2="{x2}" y2="{-y2}"/>')
        lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
