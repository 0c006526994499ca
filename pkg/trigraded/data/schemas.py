"""Pydantic models for the line-delimited record formats and the Bockstein input file."""

from __future__ import annotations

import json
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator

from trigraded.algebra.bockstein import (
    BocksteinGenerator,
    BocksteinInput,
    StatedDifferential,
    Torsion,
)
from trigraded.algebra.cobar import Coefficients
from trigraded.algebra.grading import Degree, RODegree, TriDegree
from trigraded.algebra.groups import GroupPresentation

__all__ = [
    "Coefficients",
    "Torsion",
    "GroupTableRecord",
    "ExtRecord",
    "RankRecord",
    "ProductEdgeRecord",
    "ElementRecord",
    "ConversionRecord",
    "ProductRecord",
    "CtaSummandRecord",
    "PageRecord",
    "EInfinityRecord",
    "BocksteinCheckRecord",
    "RegionViolationRecord",
    "MembershipRecord",
    "RegionRecord",
    "GeneratorSpec",
    "DifferentialSpec",
    "BocksteinInputModel",
]


def degree_tuple(degree) -> Tuple[int, ...]:
    """Plain coordinates of a TriDegree, RODegree or tuple key."""
    return degree.as_tuple() if hasattr(degree, "as_tuple") else tuple(int(x) for x in degree)


def degree_from_list(values: List[int]) -> Degree:
    if len(values) == 3:
        return TriDegree(*values)
    return RODegree(*values)


# ============================================================================
# Table records
# ============================================================================

class GroupTableRecord(BaseModel):
    """One cell of a graded group table."""
    degree: List[int] = Field(..., description="[p, q] or [p, q, w]")
    summands: List[List[str]] = Field(default_factory=list, description="[order, generator label] pairs")

    @field_validator("degree")
    @classmethod
    def _degree_length(cls, v: List[int]) -> List[int]:
        if len(v) not in (2, 3):
            raise ValueError("degree must have 2 or 3 coordinates")
        return v

    @field_validator("summands")
    @classmethod
    def _pairs(cls, v: List[List[str]]) -> List[List[str]]:
        for pair in v:
            if len(pair) != 2:
                raise ValueError(f"summand {pair!r} is not an [order, label] pair")
        return v

    @classmethod
    def from_group(cls, degree: Degree, group: GroupPresentation) -> "GroupTableRecord":
        return cls(degree=list(degree_tuple(degree)), summands=group.to_pairs())

    def degree_key(self) -> Degree:
        return degree_from_list(self.degree)

    def group(self) -> GroupPresentation:
        return GroupPresentation.from_pairs(self.summands)

    def to_line(self) -> str:
        return json.dumps(self.model_dump(), separators=(",", ":"))


class ExtRecord(BaseModel):
    """Ext^{s,t}(BP_*, M) in one bidegree."""
    coeffs: Coefficients
    s: int = Field(..., ge=0)
    t: int = Field(..., ge=0)
    summands: List[List[str]] = Field(default_factory=list)
    cocycles: Optional[Dict[str, str]] = None

    def to_line(self) -> str:
        return json.dumps(self.model_dump(mode="json", exclude_none=True), separators=(",", ":"))


class RankRecord(BaseModel):
    """Rank of the Steenrod algebra in one tri-degree."""
    degree: List[int]
    rank: int = Field(..., ge=0)
    basis: Optional[List[str]] = None

    def to_line(self) -> str:
        return json.dumps(self.model_dump(exclude_none=True), separators=(",", ":"))


class ProductEdgeRecord(BaseModel):
    """x * source = coefficient * target, for drawing structure lines."""
    element: str
    source: Tuple[List[int], str]
    target: Tuple[List[int], str]
    coefficient: int = 1


# ============================================================================
# Subcommand output records
# ============================================================================

class OutputRecord(BaseModel):
    """Base for records that only a subcommand writes; unknown fields are rejected."""
    model_config = ConfigDict(extra="forbid")

    def to_line(self) -> str:
        return json.dumps(self.model_dump(mode="json", exclude_none=True), separators=(",", ":"))


class ElementRecord(OutputRecord):
    name: str
    degree: List[int]
    home: str
    description: str = ""


class ConversionRecord(OutputRecord):
    """Realizations of one degree; tri-degrees carry betti/base_change, RO-degrees artin_tate."""
    degree: List[int]
    betti: Optional[List[int]] = None
    base_change: Optional[List[int]] = None
    artin_tate: Optional[List[int]] = None
    underlying: int
    geometric_fixed: int


class ProductRecord(OutputRecord):
    x: str
    y: str
    product: str
    degrees: List[List[int]] = Field(default_factory=list)


class CtaSummandRecord(OutputRecord):
    """One Ext contribution to a Cta degree (``cta --explain``)."""
    degree: List[int]
    a: int
    s: int = Field(..., ge=0)
    coefficient_kind: str
    coefficient: str
    group: List[List[str]]


class PageRecord(OutputRecord):
    page: int = Field(..., ge=1)
    degree: List[int]
    summands: List[List[str]]


class EInfinityRecord(OutputRecord):
    page: Literal["inf"] = "inf"
    degree: List[int]
    free: List[List[str]] = Field(default_factory=list)
    torsion: Dict[str, List[List[str]]] = Field(default_factory=dict, description="ta-torsion order to summands")


class BocksteinCheckRecord(OutputRecord):
    name: str
    generators: int = Field(..., ge=0)
    cells: int = Field(..., ge=0)
    pages: List[int]
    truncated: int = Field(..., ge=0)
    ok: bool = True


class RegionViolationRecord(OutputRecord):
    object: int = Field(..., ge=1, le=9)
    degree: List[int]
    summands: List[List[str]]


class MembershipRecord(OutputRecord):
    object: int = Field(..., ge=1, le=9)
    degree: List[int]
    member: bool


class RegionRecord(OutputRecord):
    object: int = Field(..., ge=1, le=9)
    name: str
    region: str


# ============================================================================
# Bockstein input
# ============================================================================

class GeneratorSpec(BaseModel):
    label: str = Field(..., min_length=1, pattern=r"^[A-Za-z][A-Za-z0-9_]*$")
    degree: List[int]
    torsion: Torsion = Torsion.F2

    @field_validator("degree")
    @classmethod
    def _tri(cls, v: List[int]) -> List[int]:
        if len(v) != 3:
            raise ValueError("generator degrees are tri-degrees [p, q, w]")
        return v


class DifferentialSpec(BaseModel):
    page: int = Field(..., ge=1)
    source: str
    target: str = Field(..., description="polynomial in the generators, e.g. 'a^2 u h1'")


class BocksteinInputModel(BaseModel):
    name: str
    description: str = ""
    generators: List[GeneratorSpec]
    relations: List[str] = Field(default_factory=list)
    basis: Optional[List[str]] = None
    differentials: List[DifferentialSpec] = Field(default_factory=list)
    box: Optional[List[List[int]]] = None

    @field_validator("box")
    @classmethod
    def _box(cls, v: Optional[List[List[int]]]) -> Optional[List[List[int]]]:
        if v is None:
            return v
        if len(v) != 3 or any(len(r) != 2 or r[0] > r[1] for r in v):
            raise ValueError("box is three [min, max] ranges")
        return v

    def to_input(self) -> BocksteinInput:
        generators = [
            BocksteinGenerator(g.label, TriDegree(*g.degree), g.torsion) for g in self.generators
        ]
        inp = BocksteinInput(name=self.name, generators=generators, description=self.description)
        inp.relations = [inp.parse_monomial(text)[1] for text in self.relations]
        if self.basis is not None:
            inp.basis = [inp.parse_monomial(text)[1] for text in self.basis]
        for spec in self.differentials:
            inp.index(spec.source)
            target = inp.parse_polynomial(spec.target)
            inp.differentials.append(
                StatedDifferential(spec.page, spec.source, tuple(sorted(target.items())))
            )
        if self.box is not None:
            inp.box = tuple(tuple(r) for r in self.box)
        return inp
