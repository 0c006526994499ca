"""Render graded group tables as SVG charts.

Classes sit on an integer grid, one glyph per cyclic summand. Structure lines come from
multiplication in a point ring or from a product table read from disk.
"""

from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from trigraded.algebra.groups import GroupPresentation, Order, Summand
from trigraded.algebra.point import ring_multiplier
from trigraded.data.schemas import ProductEdgeRecord, degree_tuple
from trigraded.errors import EmptyRange
from trigraded.ui.models import ChartSpec, Glyph
from trigraded.ui.svg import SVG

logger = logging.getLogger(__name__)

AXIS_INDEX = {"p": 0, "q": 1, "w": 2}
TWICE_COLOR = "red"

Cell = Tuple[int, int]
Edge = Tuple[str, Tuple[int, ...], str, Tuple[int, ...], str, int]


def glyph_for(order: Order, spec: ChartSpec) -> Glyph:
    if str(order) in spec.glyphs:
        return spec.glyphs[str(order)]
    if order.is_free:
        return Glyph.SQUARE
    if order.modulus == 2:
        return Glyph.DOT
    return Glyph.RING


def _slice(table: Mapping, spec: ChartSpec) -> Dict[Tuple[int, ...], Tuple[Cell, GroupPresentation]]:
    """Degrees of the table that land in the plotted window, with their grid cell."""
    x_axis, y_axis = spec.axes()
    (x_lo, x_hi), (y_lo, y_hi) = spec.x_range, spec.y_range
    plotted: Dict[Tuple[int, ...], Tuple[Cell, GroupPresentation]] = {}
    for key, group in table.items():
        if not group:
            continue
        d = degree_tuple(key)
        if len(d) == 3 and spec.plane.value != "ro":
            hidden = ({"p", "q", "w"} - {x_axis, y_axis}).pop()
            if d[AXIS_INDEX[hidden]] != spec.fixed.get(hidden, 0):
                continue
        x, y = d[AXIS_INDEX[x_axis]], d[AXIS_INDEX[y_axis]]
        if x_lo <= x <= x_hi and y_lo <= y <= y_hi:
            plotted[d] = ((x, y), group)
    return plotted


def _multiplication_edges(plotted, spec: ChartSpec, ring: str) -> List[Edge]:
    edges: List[Edge] = []
    for style in spec.edges:
        multiply = ring_multiplier(ring, style.element)
        for d, (_, group) in plotted.items():
            for summand in group:
                for target, label, coefficient in multiply(d, summand.label):
                    edges.append((style.element, d, summand.label, tuple(target), label, coefficient))
    return edges


def _record_edges(products: Iterable[ProductEdgeRecord], spec: ChartSpec) -> List[Edge]:
    wanted = {style.element for style in spec.edges}
    return [
        (r.element, tuple(r.source[0]), r.source[1], tuple(r.target[0]), r.target[1], r.coefficient)
        for r in products
        if r.element in wanted
    ]


def render(
    table: Mapping,
    spec: ChartSpec,
    ring: Optional[str] = None,
    products: Optional[Iterable[ProductEdgeRecord]] = None,
) -> str:
    """Draw ``table`` as an SVG document.

    ``ring`` names the point ring (uF2, uZ2, MF2, MZ2) whose multiplication supplies the edges;
    ``products`` supplies them from a product table instead. An edge is drawn only when both of
    its ends are plotted summands.
    """
    (x_lo, x_hi), (y_lo, y_hi) = spec.x_range, spec.y_range
    if x_lo > x_hi or y_lo > y_hi:
        raise EmptyRange(f"empty chart range x={spec.x_range} y={spec.y_range}")

    size = spec.cell_size
    margin = size
    width = (x_hi - x_lo + 1) * size + 2 * margin
    height = (y_hi - y_lo + 1) * size + 2 * margin
    step = size / 5
    radius = size / 10

    def centre(cell: Cell) -> Tuple[float, float]:
        x, y = cell
        return margin + (x - x_lo + 0.5) * size, margin + (y_hi - y + 0.5) * size

    plotted = _slice(table, spec)
    positions: Dict[Tuple[Tuple[int, ...], int], Tuple[float, float]] = {}
    # Edge ends are named by label; a repeated label resolves to its first summand.
    by_label: Dict[Tuple[Tuple[int, ...], str], Tuple[float, float]] = {}
    for d, (cell, group) in plotted.items():
        cx, cy = centre(cell)
        n = len(group)
        for i, summand in enumerate(group):
            positions[(d, i)] = (cx + (i - (n - 1) / 2) * step, cy)
            by_label.setdefault((d, summand.label), positions[(d, i)])

    svg = SVG()
    svg.header(width, height)
    svg.style(
        ".grid { stroke: #ddd; stroke-width: 1 }\n"
        ".axis { font-family: sans-serif; font-size: 10px; fill: #555 }\n"
        ".order { font-family: sans-serif; font-size: 8px }"
    )
    if spec.title:
        svg.text(width / 2, margin / 2, spec.title, text_anchor="middle", **{"class": "title"})

    x_axis, y_axis = spec.axes()
    svg.group_start({"id": "grid", "title": f"{x_axis} horizontal, {y_axis} vertical"})
    for x in range(x_lo, x_hi + 1):
        gx, _ = centre((x, y_lo))
        svg.line(gx, margin, gx, height - margin, **{"class": "grid"})
        svg.text(gx, height - margin / 2, str(x), text_anchor="middle", **{"class": "axis"})
    for y in range(y_lo, y_hi + 1):
        _, gy = centre((x_lo, y))
        svg.line(margin, gy, width - margin, gy, **{"class": "grid"})
        svg.text(margin / 2, gy + 3, str(y), text_anchor="middle", **{"class": "axis"})
    svg.group_end()

    edges: List[Edge] = []
    if ring is not None and spec.edges:
        edges = _multiplication_edges(plotted, spec, ring)
    elif products is not None:
        edges = _record_edges(products, spec)

    drawn = 0
    svg.group_start({"id": "edges"})
    for element, source, s_label, target, t_label, coefficient in sorted(set(edges)):
        if coefficient == 0:
            continue
        start = by_label.get((source, s_label))
        end = by_label.get((target, t_label))
        if start is None or end is None:
            continue
        style = spec.style_for(element)
        extra = {"stroke": TWICE_COLOR if abs(coefficient) != 1 else style.color, "stroke_width": 1.5}
        if style.dash:
            extra["stroke_dasharray"] = style.dash
        svg.line(*start, *end, **extra)
        drawn += 1
    svg.group_end()

    glyphs = 0
    svg.group_start({"id": "classes"})
    for d in sorted(plotted):
        _, group = plotted[d]
        for i, summand in enumerate(group):
            _glyph(svg, summand, positions[(d, i)], radius, spec, d)
            glyphs += 1
    svg.group_end()

    logger.debug(f"chart: {len(plotted)} cells, {glyphs} glyphs, {drawn} edges")
    return svg.get_svg()


def _glyph(svg: SVG, summand: Summand, at: Tuple[float, float], radius: float, spec: ChartSpec, d) -> None:
    cx, cy = at
    where = ",".join(str(x) for x in d)
    svg.group_start({"class": "summand", "title": f"{summand.label} ({summand.order}) in degree ({where})"})
    glyph = glyph_for(summand.order, spec)
    if glyph is Glyph.SQUARE:
        svg.rectangle(cx - radius, cy - radius, cx + radius, cy + radius, fill="white", stroke="black")
    elif glyph is Glyph.DOT:
        svg.circle(cx, cy, radius, fill="black")
    else:
        svg.circle(cx, cy, radius, fill="white", stroke="black")
        svg.text(cx, cy - radius - 2, str(summand.order), text_anchor="middle", **{"class": "order"})
    svg.group_end()


def count_glyphs(document: str) -> int:
    return document.count('<g class="summand">')
