"""Check tables against the vanishing regions."""

from __future__ import annotations

import logging
from typing import Optional, TextIO

from trigraded.algebra.grading import TriDegree, parse_tridegree
from trigraded.algebra.regions import list_regions, region_by_name, region_member, region_spec, validate
from trigraded.data.schemas import MembershipRecord, RegionRecord, RegionViolationRecord, degree_tuple
from trigraded.data.tables import read_table
from trigraded.errors import InputError, ValidationFailed
from trigraded.jobs.output import emit

logger = logging.getLogger(__name__)


def check(obj: str, table_path: str, out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    """Emit every nonzero degree outside the region; exit 2 when there is one."""
    object_id = region_by_name(obj)
    table = {}
    for key, group in read_table(table_path).items():
        coords = degree_tuple(key)
        if len(coords) != 3:
            raise InputError(f"regions check needs tri-degrees, got {list(coords)}")
        table[TriDegree(*coords)] = group
    violations = validate(table, object_id)
    for d in violations:
        emit(RegionViolationRecord(object=object_id, degree=list(d.as_tuple()), summands=table[d].to_pairs()), out)
    logger.info(f"Regions check {job_id}: object {object_id}, {len(table)} degrees, {len(violations)} violations")
    if violations:
        raise ValidationFailed(
            f"{len(violations)} nonzero degrees lie outside region {object_id} ({region_spec(object_id).name})"
        )
    return 0


def member(obj: str, degree: str, out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    object_id = region_by_name(obj)
    d = parse_tridegree(degree)
    emit(MembershipRecord(object=object_id, degree=list(d.as_tuple()), member=region_member(object_id, d)), out)
    return 0


def show(out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    for spec in list_regions():
        emit(RegionRecord(object=spec.object_id, name=spec.name, region=spec.describe()), out)
    return 0
