"""Pydantic models describing a chart."""

from __future__ import annotations

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

from trigraded.algebra.grading import named_element


# ============================================================================
# Enums
# ============================================================================

class Plane(str, Enum):
    """Which coordinates are plotted (x first, y second)."""
    PQ = "pq"
    QW = "qw"
    PW = "pw"
    RO = "ro"


class Glyph(str, Enum):
    SQUARE = "square"
    DOT = "dot"
    RING = "ring"


# ============================================================================
# Chart description
# ============================================================================

class EdgeStyle(BaseModel):
    """How structure lines for multiplication by one element are drawn."""
    element: str
    color: str = "black"
    dash: Optional[str] = None

    @field_validator("element")
    @classmethod
    def _registered(cls, v: str) -> str:
        named_element(v)
        return v


class ChartSpec(BaseModel):
    plane: Plane = Plane.PQ
    fixed: Dict[str, int] = Field(default_factory=dict, description="values of the coordinate not plotted")
    x_range: Tuple[int, int]
    y_range: Tuple[int, int]
    edges: List[EdgeStyle] = Field(default_factory=list)
    glyphs: Dict[str, Glyph] = Field(default_factory=dict, description="order string (e.g. 'Z/4') to glyph override")
    cell_size: int = Field(40, ge=8)
    title: str = ""

    def axes(self) -> Tuple[str, str]:
        return {"pq": ("p", "q"), "qw": ("q", "w"), "pw": ("p", "w"), "ro": ("p", "q")}[self.plane.value]

    def style_for(self, element: str) -> Optional[EdgeStyle]:
        for style in self.edges:
            if style.element == element:
                return style
        return None
