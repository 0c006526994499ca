"""Tables of the point rings uF2, uZ2, MF2, MZ2 and MFp."""

from __future__ import annotations

import logging
from typing import Optional, TextIO

from trigraded.algebra.grading import RODegree, TriDegree, iter_box
from trigraded.algebra.point import point_table
from trigraded.config import settings
from trigraded.data.tables import parse_box
from trigraded.jobs.output import emit_table

logger = logging.getLogger(__name__)

EQUIVARIANT_RINGS = ("uF2", "uZ2")


def compute(ring: str, box: str, prime: int = 3) -> dict:
    """Nonzero groups of ``ring`` keyed by RODegree or TriDegree."""
    dims = 2 if ring in EQUIVARIANT_RINGS else 3
    if dims == 3 and len(box.split(",")) == 2:
        box = f"{box},0:0"
    ranges = parse_box(box, dims)
    raw = point_table(ring, iter_box(*ranges), prime=prime)
    make = RODegree if dims == 2 else TriDegree
    return {make(*d): g for d, g in raw.items()}


def run(
    ring: str,
    box: Optional[str] = None,
    prime: int = 3,
    fmt: str = "jsonl",
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    box = box or settings.point_box
    logger.info(f"Point table job {job_id}: ring={ring} box={box}")
    table = compute(ring, box, prime)
    count = emit_table(table, fmt, out)
    logger.info(f"Point table job {job_id} complete: {count} nonzero degrees")
    return 0
