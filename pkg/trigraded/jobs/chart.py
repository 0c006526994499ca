"""Render a table file as an SVG chart."""

from __future__ import annotations

import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, TextIO

from trigraded.config import settings
from trigraded.data.schemas import degree_tuple
from trigraded.data.tables import parse_box, read_product_edges, read_table
from trigraded.errors import InputError, UsageError
from trigraded.ui.charts import render
from trigraded.ui.models import ChartSpec, EdgeStyle, Plane

logger = logging.getLogger(__name__)

EDGE_COLORS = ("black", "blue", "green", "purple", "orange")


def parse_fixed(items: Optional[List[str]]) -> Dict[str, int]:
    """``["w=0"]`` -> ``{"w": 0}``."""
    fixed = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or name.strip() not in ("p", "q", "w"):
            raise InputError(f"--fix expects p=N, q=N or w=N, got {item!r}")
        try:
            fixed[name.strip()] = int(value)
        except ValueError:
            raise InputError(f"--fix value must be an integer, got {item!r}") from None
    return fixed


def _default_ranges(table, spec_axes) -> tuple:
    x_axis, y_axis = spec_axes
    index = {"p": 0, "q": 1, "w": 2}
    coords = [degree_tuple(d) for d in table]
    if not coords:
        return (0, 0), (0, 0)
    xs = [c[index[x_axis]] for c in coords]
    ys = [c[index[y_axis]] for c in coords]
    return (min(xs), max(xs)), (min(ys), max(ys))


def run(
    table_path: str,
    plane: str = "pq",
    fixed: Optional[List[str]] = None,
    edges: Optional[str] = None,
    ring: Optional[str] = None,
    products_path: Optional[str] = None,
    box: Optional[str] = None,
    title: str = "",
    out_path: Optional[str] = None,
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    table = read_table(table_path)
    styles = [
        EdgeStyle(element=name.strip(), color=EDGE_COLORS[i % len(EDGE_COLORS)])
        for i, name in enumerate((edges or "").split(","))
        if name.strip()
    ]
    if styles and ring is None and products_path is None:
        raise UsageError("--edges needs --ring or --products to know the multiplication")
    plane = Plane(plane)
    axes = ChartSpec(plane=plane, x_range=(0, 0), y_range=(0, 0)).axes()
    if box:
        x_range, y_range = parse_box(box, 2)
    else:
        x_range, y_range = _default_ranges(table, axes)
    spec = ChartSpec(
        plane=plane,
        fixed=parse_fixed(fixed),
        x_range=x_range,
        y_range=y_range,
        edges=styles,
        cell_size=settings.chart_cell_size,
        title=title,
    )
    products = read_product_edges(products_path) if products_path else None
    document = render(table, spec, ring=ring, products=products)
    if out_path:
        Path(out_path).write_text(document, encoding="utf-8")
        logger.info(f"Chart job {job_id}: wrote {out_path}")
    else:
        (out or sys.stdout).write(document)
    return 0
