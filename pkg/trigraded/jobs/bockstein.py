"""Run or check a ta-Bockstein spectral sequence described by a JSON input file."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional, TextIO

from pydantic import ValidationError

from trigraded.algebra import bockstein
from trigraded.algebra.bockstein import BocksteinInput, BocksteinResult
from trigraded.algebra.grading import TriDegree
from trigraded.algebra.groups import GroupPresentation, direct_sum
from trigraded.config import settings
from trigraded.data.schemas import BocksteinCheckRecord, BocksteinInputModel, EInfinityRecord, PageRecord
from trigraded.data.tables import parse_box
from trigraded.errors import InputError
from trigraded.jobs.output import emit
from trigraded.ui.charts import render
from trigraded.ui.models import ChartSpec, Plane

logger = logging.getLogger(__name__)

DATASETS = Path(__file__).resolve().parents[1] / "datasets"


def load_input(path: str) -> BocksteinInput:
    """Read and validate an input file; bare names resolve against the bundled datasets."""
    candidate = Path(path)
    if not candidate.exists() and (DATASETS / f"{path}.json").exists():
        candidate = DATASETS / f"{path}.json"
    try:
        text = candidate.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"Bockstein input not found: {path}") from None
    try:
        model = BocksteinInputModel.model_validate_json(text)
    except ValidationError as exc:
        first = exc.errors()[0]
        where = ".".join(str(x) for x in first["loc"])
        raise InputError(f"{candidate.name}: {where}: {first['msg']}") from None
    return model.to_input()


def e_infinity_table(result: BocksteinResult) -> Dict[TriDegree, GroupPresentation]:
    table = {}
    for d, cell in result.e_infinity().items():
        group = direct_sum([cell.free, *(cell.torsion[r] for r in sorted(cell.torsion))])
        if group:
            table[d] = group
    return table


def chart(result: BocksteinResult, path: str) -> None:
    """E_infinity in the (q, w) plane at the smallest p of the box."""
    cells = result.reported()
    if result.box is not None:
        (p_lo, _), (q_lo, q_hi), (w_lo, w_hi) = result.box
    elif not cells:
        (p_lo, q_lo, q_hi, w_lo, w_hi) = (0, 0, 0, 0, 0)
    else:
        p_lo = min(d.p for d in cells)
        q_lo, q_hi = min(d.q for d in cells), max(d.q for d in cells)
        w_lo, w_hi = min(d.w for d in cells), max(d.w for d in cells)
    spec = ChartSpec(
        plane=Plane.QW,
        fixed={"p": p_lo},
        x_range=(q_lo, q_hi),
        y_range=(w_lo, w_hi),
        cell_size=settings.chart_cell_size,
        title=f"{result.input.name}: E_inf at p = {p_lo}",
    )
    Path(path).write_text(render(e_infinity_table(result), spec), encoding="utf-8")
    logger.info(f"Wrote E_inf chart to {path}")


def run(
    input_path: str,
    pages: Optional[int] = None,
    box: Optional[str] = None,
    chart_path: Optional[str] = None,
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    inp = load_input(input_path)
    ranges = parse_box(box, 3) if box else None
    logger.info(f"Bockstein job {job_id}: input={inp.name} pages={pages} box={ranges or inp.box}")
    result = bockstein.run(inp, r_max=pages, box=ranges, max_exponent=settings.bockstein_max_exponent)
    for page in result.pages():
        for d, group in page.nonzero():
            emit(PageRecord(page=page.r, degree=list(d.as_tuple()), summands=group.to_pairs()), out)
    nonzero = 0
    for d, cell in sorted(result.e_infinity().items()):
        if cell.is_zero:
            continue
        nonzero += 1
        emit(
            EInfinityRecord(
                degree=list(d.as_tuple()),
                free=cell.free.to_pairs(),
                torsion={str(r): g.to_pairs() for r, g in sorted(cell.torsion.items())},
            ),
            out,
        )
    if chart_path:
        chart(result, chart_path)
    logger.info(f"Bockstein job {job_id} complete: {result.r_max} pages, {nonzero} nonzero E_inf cells")
    return 0


def check(input_path: str, out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    """Load the file, check differential degrees and Leibniz closure of the relations."""
    inp = load_input(input_path)
    closed = bockstein.leibniz_close(inp, inp.box, settings.bockstein_max_exponent)
    logger.info(f"Bockstein check {job_id}: {inp.name} is consistent")
    emit(
        BocksteinCheckRecord(
            name=inp.name,
            generators=len(inp.generators),
            cells=len(closed.cells),
            pages=closed.pages,
            truncated=closed.truncated,
        ),
        out,
    )
    return 0
