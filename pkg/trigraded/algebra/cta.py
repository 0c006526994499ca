"""Tri-graded homotopy of Cta and its Ext-reducible relatives, assembled from Ext tables.

    pi_{p,q,w} Cta       = sum_{w+a-s=p} Ext^{s,2w}(BP_*, BP_* (x) pi^{C2}_{a+(q-w)sigma} Z_2)
    pi_{p,q,w} Ca(x)Cta  = Ext^{2w-p-q,2w}(BP_*, BP_*)
    pi_{p,q,w} Cta[a^-1] = sum_{w+2a-s=p} F2{u^{2a}} (x) Ext^{s,2w}(BP_*, BP_*/2)

The coefficient groups are cyclic and BP_* is torsion free, so each tensor product is taken after Ext.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List

from trigraded.algebra.cobar import Coefficients, ExtTables
from trigraded.algebra.grading import TriDegree
from trigraded.algebra.groups import GroupPresentation, direct_sum
from trigraded.algebra.point import uz2_group

logger = logging.getLogger(__name__)


class CoefficientKind(str, Enum):
    Z2ADIC = "Z2adic"
    F2 = "F2"
    ZERO = "Zero"


class CtaObject(str, Enum):
    CTA = "Cta"
    CA_CTA = "CaCta"
    CTA_A_INVERTED = "CtaAinv"


@dataclass(frozen=True)
class CtaSummand:
    a: int
    s: int
    coefficient_kind: CoefficientKind
    coefficient: str
    group: GroupPresentation

    def to_dict(self) -> dict:
        return {
            "a": self.a,
            "s": self.s,
            "coefficient_kind": self.coefficient_kind.value,
            "coefficient": self.coefficient,
            "group": self.group.to_pairs(),
        }


def _product_label(coefficient: str, ext_label: str) -> str:
    return ext_label if coefficient == "1" else f"{coefficient}*{ext_label}"


def cta_summands(d: TriDegree, tables: ExtTables) -> List[CtaSummand]:
    """One entry per index a with 0 <= s = w + a - p <= 2w, including zero coefficients."""
    p, q, w = d.p, d.q, d.w
    out: List[CtaSummand] = []
    for a in range(p - w, p + w + 1):
        s = w + a - p
        coefficient = uz2_group(a, q - w)
        if coefficient.is_zero:
            out.append(CtaSummand(a, s, CoefficientKind.ZERO, "", GroupPresentation.zero()))
            continue
        (gen,) = coefficient.summands
        if gen.order.is_free:
            kind, ext_group = CoefficientKind.Z2ADIC, tables.table(Coefficients.Z).entry(s, 2 * w)
        else:
            kind, ext_group = CoefficientKind.F2, tables.table(Coefficients.F2).entry(s, 2 * w)
        group = ext_group.map_labels(lambda label, c=gen.label: _product_label(c, label))
        out.append(CtaSummand(a, s, kind, gen.label, group))
    return out


def cta_group(d: TriDegree, tables: ExtTables) -> GroupPresentation:
    if d.w < 0:
        return GroupPresentation.zero()
    return direct_sum(summand.group for summand in cta_summands(d, tables))


def ca_cta_group(d: TriDegree, tables: ExtTables) -> GroupPresentation:
    return tables.table(Coefficients.Z).entry(2 * d.w - d.p - d.q, 2 * d.w)


def cta_a_inverted_group(d: TriDegree, tables: ExtTables) -> GroupPresentation:
    """Independent of q; the sum runs over a >= 0 only."""
    p, w = d.p, d.w
    if w < 0:
        return GroupPresentation.zero()
    mod_two = tables.table(Coefficients.F2)
    parts = []
    a = max(0, -((w - p) // 2))
    while w + 2 * a - p <= 2 * w:
        s = w + 2 * a - p
        if s >= 0:
            coefficient = "1" if a == 0 else f"u^{2 * a}"
            parts.append(
                mod_two.entry(s, 2 * w).map_labels(lambda label, c=coefficient: _product_label(c, label))
            )
        a += 1
    return direct_sum(parts)


_GROUPS = {
    CtaObject.CTA: cta_group,
    CtaObject.CA_CTA: ca_cta_group,
    CtaObject.CTA_A_INVERTED: cta_a_inverted_group,
}


def object_group(obj: CtaObject, d: TriDegree, tables: ExtTables) -> GroupPresentation:
    return _GROUPS[CtaObject(obj)](d, tables)
