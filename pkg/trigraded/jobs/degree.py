"""Degree conversions and the registry of named elements."""

from __future__ import annotations

import logging
from typing import Optional, TextIO

from trigraded.algebra.grading import (
    RODegree,
    TriDegree,
    artin_embed,
    base_change_degree,
    betti_degree,
    geometric_fixed_degree,
    list_elements,
    named_element,
    parse_degree,
    underlying_degree,
)
from trigraded.data.schemas import ConversionRecord, ElementRecord
from trigraded.errors import UsageError
from trigraded.jobs.output import emit

logger = logging.getLogger(__name__)


def convert(text: str) -> ConversionRecord:
    """Every realization of a degree given as ``p,q,w`` or ``p,q``."""
    d = parse_degree(text)
    if isinstance(d, TriDegree):
        r = betti_degree(d)
        s, w = base_change_degree(d)
        return ConversionRecord(
            degree=list(d.as_tuple()),
            betti=list(r.as_tuple()),
            base_change=[s, w],
            underlying=underlying_degree(r),
            geometric_fixed=geometric_fixed_degree(r),
        )
    assert isinstance(d, RODegree)
    return ConversionRecord(
        degree=list(d.as_tuple()),
        artin_tate=list(artin_embed(d).as_tuple()),
        underlying=underlying_degree(d),
        geometric_fixed=geometric_fixed_degree(d),
    )


def run(
    element: Optional[str] = None,
    convert_text: Optional[str] = None,
    list_all: bool = False,
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    logger.debug(f"degree job {job_id}: element={element} convert={convert_text} list={list_all}")
    if not (element or convert_text or list_all):
        raise UsageError("degree needs an element name, --convert or --list")
    if list_all:
        for entry in list_elements():
            emit(ElementRecord(**entry.to_dict()), out)
    if element:
        emit(ElementRecord(**named_element(element).to_dict()), out)
    if convert_text:
        emit(convert(convert_text), out)
    return 0
