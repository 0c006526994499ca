"""Vanishing regions of tri-graded homotopy rings, as unions of integral half-space systems."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Tuple

from trigraded.algebra.grading import TriDegree
from trigraded.algebra.groups import GroupPresentation
from trigraded.errors import UnknownObject

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalfSpace:
    """a*p + b*q + c*w + constant >= 0."""

    normal: Tuple[int, int, int]
    constant: int = 0

    def holds(self, d: TriDegree) -> bool:
        a, b, c = self.normal
        return a * d.p + b * d.q + c * d.w + self.constant >= 0

    def invariant_under(self, period: Tuple[int, int, int]) -> bool:
        return sum(x * y for x, y in zip(self.normal, period)) == 0

    def __str__(self) -> str:
        terms = []
        for coeff, name in zip(self.normal, "pqw"):
            if coeff:
                terms.append(f"{coeff}{name}" if abs(coeff) != 1 else ("-" if coeff < 0 else "") + name)
        body = " + ".join(terms).replace("+ -", "- ")
        if self.constant:
            body += f" {'+' if self.constant > 0 else '-'} {abs(self.constant)}"
        return f"{body} >= 0"


Clause = Tuple[HalfSpace, ...]


def _hs(a: int, b: int, c: int, k: int = 0) -> HalfSpace:
    return HalfSpace((a, b, c), k)


@dataclass(frozen=True)
class RegionSpec:
    object_id: int
    name: str
    clauses: Tuple[Clause, ...]
    periods: Tuple[Tuple[int, int, int], ...] = field(default=())

    def __post_init__(self) -> None:
        for clause in self.clauses:
            for half in clause:
                for period in self.periods:
                    if not half.invariant_under(period):
                        raise ValueError(f"{self.name}: {half} is not invariant under {period}")

    def contains(self, d: TriDegree) -> bool:
        return any(all(half.holds(d) for half in clause) for clause in self.clauses)

    def describe(self) -> str:
        parts = ["{" + ", ".join(str(h) for h in clause) + "}" for clause in self.clauses]
        return " U ".join(parts)


_W = (0, 0, 1)
_Q = (0, 1, 0)
_DIAGONAL = (1, -1, 0)

REGIONS: Dict[int, RegionSpec] = {
    spec.object_id: spec
    for spec in (
        RegionSpec(1, "S2", (
            (_hs(1, 1, -1), _hs(0, 0, 1)),
            (_hs(1, 1, 0), _hs(0, 0, -1)),
            (_hs(1, 0, 0),),
        )),
        RegionSpec(2, "Cta", (
            (_hs(1, 0, 0), _hs(-1, -1, 2), _hs(0, 0, 1)),
            (_hs(1, 1, -1), _hs(-1, 0, 1, -2), _hs(0, 0, 1)),
        )),
        RegionSpec(3, "S2[ta^-1]", (
            (_hs(1, 0, 0),),
            (_hs(1, 1, 0),),
        ), periods=(_W,)),
        RegionSpec(4, "Ca", (
            (_hs(0, 0, 1), _hs(1, 1, -1)),
            (_hs(1, 1, 0), _hs(0, 0, -1)),
        ), periods=(_DIAGONAL,)),
        RegionSpec(5, "CaCta", (
            (_hs(1, 1, -1), _hs(-1, -1, 2)),
        ), periods=(_DIAGONAL,)),
        RegionSpec(6, "Ca[ta^-1]", (
            (_hs(1, 1, 0),),
        ), periods=(_W, _DIAGONAL)),
        RegionSpec(7, "S2[a^-1]", (
            (_hs(1, 0, 0),),
        ), periods=(_Q,)),
        RegionSpec(8, "CtaAinv", (
            (_hs(1, 0, 0), _hs(0, 0, 1)),
        ), periods=(_Q,)),
        RegionSpec(9, "S2[a^-1,ta^-1]", (
            (_hs(1, 0, 0),),
        ), periods=(_Q, _W)),
    )
}

_BY_NAME = {spec.name.lower(): spec.object_id for spec in REGIONS.values()}


def region_spec(object_id: int) -> RegionSpec:
    try:
        return REGIONS[int(object_id)]
    except (KeyError, ValueError):
        raise UnknownObject(f"no vanishing region for object {object_id!r}; expected 1..9") from None


def region_by_name(name: str) -> int:
    key = str(name).strip().lower()
    if key.isdigit():
        return region_spec(int(key)).object_id
    try:
        return _BY_NAME[key]
    except KeyError:
        raise UnknownObject(f"unknown object {name!r}; known: {', '.join(s.name for s in REGIONS.values())}") from None


def region_member(object_id: int, d: TriDegree) -> bool:
    return region_spec(object_id).contains(d)


def validate(table: Mapping[TriDegree, GroupPresentation], object_id: int) -> List[TriDegree]:
    """Degrees carrying a nonzero group outside the object's region."""
    spec = region_spec(object_id)
    violations = [d for d, group in sorted(table.items()) if group and not spec.contains(d)]
    if violations:
        logger.debug(f"{spec.name}: {len(violations)} classes outside the region")
    return violations


def list_regions() -> Iterable[RegionSpec]:
    return REGIONS.values()
