"""Homotopy of Cta, Ca(x)Cta and Cta[a^-1] over a box of tri-degrees."""

from __future__ import annotations

import logging
from typing import Dict, Optional, TextIO

from trigraded.algebra.cta import CtaObject, cta_summands, object_group
from trigraded.algebra.grading import TriDegree, iter_box, parse_tridegree
from trigraded.algebra.groups import GroupPresentation
from trigraded.config import settings
from trigraded.data.schemas import CtaSummandRecord
from trigraded.data.tables import parse_box
from trigraded.jobs.ext import load_ext_tables
from trigraded.jobs.output import emit, emit_table

logger = logging.getLogger(__name__)


def ext_bounds(box: str, degree: Optional[int] = None) -> tuple:
    """(D, s_max) large enough for every nonzero Ext entry a box can touch.

    Entries are read in internal degree 2w and vanish for s > w.
    """
    (_, _), (_, _), (_, w_hi) = parse_box(box, 3)
    D = degree if degree is not None else max(2 * w_hi, 2)
    return D, max(w_hi, 1)


def compute(
    obj: CtaObject, box: str, degree: Optional[int] = None, use_cache: bool = True
) -> Dict[TriDegree, GroupPresentation]:
    D, s_max = ext_bounds(box, degree)
    tables = load_ext_tables(D, s_max, use_cache=use_cache)
    table = {}
    for d in iter_box(*parse_box(box, 3)):
        d = TriDegree(*d)
        group = object_group(obj, d, tables)
        if group:
            table[d] = group
    return table


def run(
    obj: str,
    box: Optional[str] = None,
    degree: Optional[int] = None,
    explain: Optional[str] = None,
    use_cache: bool = True,
    fmt: str = "jsonl",
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    box = box or settings.cta_box
    obj = CtaObject(obj)
    logger.info(f"Cta job {job_id}: object={obj.value} box={box}")
    if explain is not None:
        d = parse_tridegree(explain)
        D, s_max = ext_bounds(f"{d.p}:{d.p},{d.q}:{d.q},{d.w}:{d.w}", degree)
        tables = load_ext_tables(D, s_max, use_cache=use_cache)
        for summand in cta_summands(d, tables):
            emit(CtaSummandRecord(degree=list(d.as_tuple()), **summand.to_dict()), out)
        return 0
    table = compute(obj, box, degree, use_cache)
    count = emit_table(table, fmt, out)
    logger.info(f"Cta job {job_id} complete: {count} nonzero degrees")
    return 0
