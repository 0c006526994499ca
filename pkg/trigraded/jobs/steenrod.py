"""Ranks, bases and products in the tri-graded dual Steenrod algebra."""

from __future__ import annotations

import logging
from typing import Optional, TextIO

from trigraded.algebra.grading import TriDegree, iter_box, parse_tridegree
from trigraded.algebra.steenrod import (
    format_element,
    format_monomial,
    parse_expression,
    steenrod_basis,
    steenrod_multiply,
    steenrod_rank,
)
from trigraded.data.schemas import ProductRecord, RankRecord
from trigraded.data.tables import parse_box
from trigraded.errors import UsageError
from trigraded.jobs.output import emit

logger = logging.getLogger(__name__)


def rank(
    degree: Optional[str] = None,
    box: Optional[str] = None,
    with_basis: bool = False,
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    if (degree is None) == (box is None):
        raise UsageError("steenrod rank needs exactly one of --degree or --box")
    degrees = [parse_tridegree(degree)] if degree else [TriDegree(*d) for d in iter_box(*parse_box(box, 3))]
    logger.info(f"Steenrod rank job {job_id}: {len(degrees)} degrees")
    for d in degrees:
        n = steenrod_rank(d)
        if box and not n:
            continue
        basis = [format_monomial(m) for m in steenrod_basis(d)] if with_basis else None
        emit(RankRecord(degree=list(d.as_tuple()), rank=n, basis=basis), out)
    return 0


def basis(degree: str, out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    d = parse_tridegree(degree)
    monomials = steenrod_basis(d)
    logger.debug(f"Steenrod basis job {job_id}: {d} has {len(monomials)} basis elements")
    emit(RankRecord(degree=list(d.as_tuple()), rank=len(monomials),
                    basis=[format_monomial(m) for m in monomials]), out)
    return 0


def mul(x: str, y: str, out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    product = steenrod_multiply(parse_expression(x), parse_expression(y))
    degrees = sorted({m.degree for m in product})
    logger.debug(f"Steenrod product job {job_id}: {len(product)} terms")
    emit(
        ProductRecord(
            x=x,
            y=y,
            product=format_element(product),
            degrees=[list(d.as_tuple()) for d in degrees],
        ),
        out,
    )
    return 0
