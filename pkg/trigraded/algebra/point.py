"""Coefficient rings of a point.

C2-equivariant rings (RO(C2)-graded)::

    uF2 = pi_{p+q sigma} of the constant Mackey functor F2
        = F2[a_sigma, u_sigma]  +  F2{theta / (a_sigma^k u_sigma^n)}
    uZ2 = pi_{p+q sigma} of the constant Mackey functor Z2
        = Z2[a_sigma, u_2sigma]/(2 a_sigma)  +  Z2{2 / u_2sigma^n}  +  F2{theta / (a_sigma^k u_2sigma^n)}

The tri-graded rings pi_{***} MF2 and MZ2 are the equivariant rings with ta adjoined,
concentrated in weights w <= 0. At an odd prime the point ring is F_p[u_2sigma^{+-1}, ta].

Labels use ``a`` for a_sigma and ``u`` for the orientation class of the ring (u_sigma in uF2,
u_2sigma in uZ2).
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from sympy import isprime

from trigraded.algebra.grading import RODegree, TriDegree
from trigraded.algebra.groups import F2, FREE, GroupPresentation, Order, Summand
from trigraded.errors import EvenPrime, InputError, InvalidPrime, MixedRings, UnknownName

logger = logging.getLogger(__name__)


class PointRing(str, Enum):
    UF2 = "uF2"
    UZ2 = "uZ2"


class Cone(str, Enum):
    POSITIVE = "Positive"
    TWO_TOWER = "TwoTower"
    THETA = "Theta"


@dataclass(frozen=True, order=True)
class PointBasisElement:
    """Monomial basis element.

    ``exponents`` is (i, j) for a^i u^j in the positive cone, the divisor exponents (k, n) of
    theta/(a^k u^n) in the theta cone, and (0, n) for 2/u^n in the 2-tower.
    """

    ring: PointRing
    cone: Cone
    exponents: Tuple[int, int]

    def __post_init__(self) -> None:
        first, second = self.exponents
        if first < 0 or second < 0:
            raise ValueError(f"negative exponents in {self.exponents}")
        if self.cone is Cone.TWO_TOWER:
            if self.ring is PointRing.UF2:
                raise ValueError("uF2 has no 2-tower")
            if first != 0 or second < 1:
                raise ValueError("2-tower elements are 2/u^n with n >= 1")

    @property
    def degree(self) -> RODegree:
        first, second = self.exponents
        if self.ring is PointRing.UF2:
            if self.cone is Cone.POSITIVE:
                i, j = first, second
                return RODegree(j, -i - j)
            k, n = first, second
            return RODegree(-2 - n, 2 + k + n)
        if self.cone is Cone.POSITIVE:
            i, j = first, second
            return RODegree(2 * j, -i - 2 * j)
        if self.cone is Cone.TWO_TOWER:
            n = second
            return RODegree(-2 * n, 2 * n)
        k, n = first, second
        return RODegree(-3 - 2 * n, 3 + k + 2 * n)

    @property
    def order(self) -> Order:
        if self.ring is PointRing.UF2 or self.cone is Cone.THETA:
            return F2
        if self.cone is Cone.POSITIVE and self.exponents[0] >= 1:
            return F2
        return FREE

    @property
    def label(self) -> str:
        return element_label(self)

    def __str__(self) -> str:
        return self.label


PointSum = Dict[PointBasisElement, int]


def _power(symbol: str, exponent: int) -> str:
    if exponent == 1:
        return symbol
    return f"{symbol}^{exponent}"


def _monomial(i: int, j: int) -> str:
    factors = [_power(s, e) for s, e in (("a", i), ("u", j)) if e]
    return " ".join(factors)


def element_label(x: PointBasisElement) -> str:
    first, second = x.exponents
    if x.cone is Cone.POSITIVE:
        return _monomial(first, second) or "1"
    if x.cone is Cone.TWO_TOWER:
        return f"2/{_power('u', second)}"
    divisor = _monomial(first, second)
    if not divisor:
        return "theta"
    if " " in divisor:
        return f"theta/({divisor})"
    return f"theta/{divisor}"


_MONOMIAL_RE = re.compile(r"^(?:a(?:\^(\d+))?)?\s*(?:u(?:\^(\d+))?)?$")


def _parse_monomial(text: str) -> Tuple[int, int]:
    text = text.strip()
    match = _MONOMIAL_RE.match(text)
    if not text or not match:
        raise InputError(f"cannot parse point monomial {text!r}")
    i = 0 if "a" not in text else int(match.group(1) or 1)
    j = 0 if "u" not in text else int(match.group(2) or 1)
    return i, j


def element_from_label(ring: PointRing, label: str) -> PointBasisElement:
    """Inverse of :func:`element_label`."""
    ring = PointRing(ring)
    label = label.strip()
    if label == "1":
        return PointBasisElement(ring, Cone.POSITIVE, (0, 0))
    if label == "theta":
        return PointBasisElement(ring, Cone.THETA, (0, 0))
    if label.startswith("theta/"):
        divisor = label[len("theta/"):].strip("()")
        return PointBasisElement(ring, Cone.THETA, _parse_monomial(divisor))
    if label.startswith("2/"):
        i, n = _parse_monomial(label[2:])
        if ring is not PointRing.UZ2 or i != 0 or n < 1:
            raise InputError(f"{label!r} is not a 2-tower element of {ring.value}")
        return PointBasisElement(ring, Cone.TWO_TOWER, (0, n))
    return PointBasisElement(ring, Cone.POSITIVE, _parse_monomial(label))


def uf2_element(p: int, q: int) -> Optional[PointBasisElement]:
    """The unique basis element of uF2 in degree p + q*sigma, if any."""
    if p >= 0 and p + q <= 0:
        return PointBasisElement(PointRing.UF2, Cone.POSITIVE, (-(p + q), p))
    if p <= -2 and p + q >= 0:
        return PointBasisElement(PointRing.UF2, Cone.THETA, (p + q, -2 - p))
    return None


def uz2_element(p: int, q: int) -> Optional[PointBasisElement]:
    """The unique basis element of uZ2 in degree p + q*sigma, if any."""
    if p >= 0 and p % 2 == 0 and p + q <= 0:
        return PointBasisElement(PointRing.UZ2, Cone.POSITIVE, (-(p + q), p // 2))
    if p < 0 and p % 2 == 0 and p + q == 0:
        return PointBasisElement(PointRing.UZ2, Cone.TWO_TOWER, (0, -p // 2))
    if p <= -3 and p % 2 == 1 and p + q >= 0:
        return PointBasisElement(PointRing.UZ2, Cone.THETA, (p + q, (-3 - p) // 2))
    return None


def _group_of(x: Optional[PointBasisElement]) -> GroupPresentation:
    if x is None:
        return GroupPresentation.zero()
    return GroupPresentation((Summand(x.order, x.label),))


def uf2_group(p: int, q: int) -> GroupPresentation:
    return _group_of(uf2_element(p, q))


def uz2_group(p: int, q: int) -> GroupPresentation:
    return _group_of(uz2_element(p, q))


def point_element(ring: PointRing, p: int, q: int) -> Optional[PointBasisElement]:
    ring = PointRing(ring)
    return uf2_element(p, q) if ring is PointRing.UF2 else uz2_element(p, q)


def point_basis(
    ring: PointRing, p_range: Tuple[int, int], q_range: Tuple[int, int]
) -> List[PointBasisElement]:
    """All basis elements with degree in the inclusive box, ordered by (p, q)."""
    basis = []
    for p in range(p_range[0], p_range[1] + 1):
        for q in range(q_range[0], q_range[1] + 1):
            x = point_element(ring, p, q)
            if x is not None:
                basis.append(x)
    return basis


def _clean(ring: PointRing, terms: PointSum) -> PointSum:
    """Drop zero coefficients; coefficients on order-2 classes are read mod 2."""
    result: PointSum = {}
    for x, c in terms.items():
        if ring is PointRing.UF2 or x.order == F2:
            c %= 2
        if c:
            result[x] = c
    return result


def point_multiply(ring: PointRing, x: PointBasisElement, y: PointBasisElement) -> PointSum:
    """Product of two basis elements as a formal sum with integer coefficients."""
    ring = PointRing(ring)
    if x.ring is not ring or y.ring is not ring:
        raise MixedRings(f"cannot multiply {x.ring.value} by {y.ring.value} in {ring.value}")

    # Canonical order: Positive < TwoTower < Theta.
    rank = {Cone.POSITIVE: 0, Cone.TWO_TOWER: 1, Cone.THETA: 2}
    if rank[x.cone] > rank[y.cone]:
        x, y = y, x

    if x.cone is Cone.POSITIVE and y.cone is Cone.POSITIVE:
        (i1, j1), (i2, j2) = x.exponents, y.exponents
        z = PointBasisElement(ring, Cone.POSITIVE, (i1 + i2, j1 + j2))
        return _clean(ring, {z: 1})

    if x.cone is Cone.POSITIVE and y.cone is Cone.THETA:
        (i, j), (k, n) = x.exponents, y.exponents
        if k - i < 0 or n - j < 0:
            return {}
        return _clean(ring, {PointBasisElement(ring, Cone.THETA, (k - i, n - j)): 1})

    if x.cone is Cone.POSITIVE and y.cone is Cone.TWO_TOWER:
        (i, j), n = x.exponents, y.exponents[1]
        if i >= 1:
            # a * (2/u^n) = 0: no class in that degree.
            return {}
        if j < n:
            return {PointBasisElement(ring, Cone.TWO_TOWER, (0, n - j)): 1}
        # u^n * (2/u^n) = 2 * 1, the multiplication that hits twice.
        return {PointBasisElement(ring, Cone.POSITIVE, (0, j - n)): 2}

    if x.cone is Cone.TWO_TOWER and y.cone is Cone.TWO_TOWER:
        # Forced by u-injectivity on the tower: u^{m+n} (2/u^m)(2/u^n) = 4.
        m, n = x.exponents[1], y.exponents[1]
        return {PointBasisElement(ring, Cone.TWO_TOWER, (0, m + n)): 2}

    # TwoTower * Theta and Theta * Theta vanish.
    return {}


def multiply_sums(ring: PointRing, xs: PointSum, ys: PointSum) -> PointSum:
    total: PointSum = {}
    for x, cx in xs.items():
        for y, cy in ys.items():
            for z, cz in point_multiply(ring, x, y).items():
                total[z] = total.get(z, 0) + cx * cy * cz
    return _clean(PointRing(ring), total)


# ============================================================================
# Tri-graded rings
# ============================================================================

def ta_tag(label: str, e: int) -> str:
    """Attach ta^e to a label: ``a`` becomes ``a*ta``, ``1`` becomes ``ta^2``."""
    if e == 0:
        return label
    power = _power("ta", e)
    if label == "1":
        return power
    return f"{label}*{power}"


def split_ta_tag(label: str) -> Tuple[str, int]:
    """Inverse of :func:`ta_tag`."""
    if label == "ta" or label.startswith("ta^"):
        return "1", 1 if label == "ta" else int(label[3:])
    if "*ta" in label:
        base, _, power = label.rpartition("*")
        e = 1 if power == "ta" else int(power[3:])
        return base, e
    return label, 0


def _tri_graded(group: GroupPresentation, w: int) -> GroupPresentation:
    if w > 0:
        return GroupPresentation.zero()
    return group.map_labels(lambda label: ta_tag(label, -w))


def mf2_group(d: TriDegree) -> GroupPresentation:
    return _tri_graded(uf2_group(d.p, d.q), d.w)


def mz2_group(d: TriDegree) -> GroupPresentation:
    return _tri_graded(uz2_group(d.p, d.q), d.w)


def _check_odd_prime(prime: int) -> None:
    if prime % 2 == 0:
        raise EvenPrime(f"expected an odd prime, got {prime}")
    if not isprime(prime):
        raise InvalidPrime(f"{prime} is not prime")


def mfp_group(prime: int, d: TriDegree) -> GroupPresentation:
    """pi_{p,q,w} MF_p = F_p[u_2sigma^{+-1}, ta]."""
    _check_odd_prime(prime)
    if d.p % 2 != 0 or d.q != -d.p or d.w > 0:
        return GroupPresentation.zero()
    k = d.p // 2
    base = "1" if k == 0 else _power("u", k)
    return GroupPresentation((Summand(Order(prime), ta_tag(base, -d.w)),))


# ============================================================================
# Named multipliers used for chart edges
# ============================================================================

_RING_ELEMENTS: Dict[str, Tuple[PointRing, Tuple[Cone, Tuple[int, int]], int]] = {
    "a_sigma": (PointRing.UF2, (Cone.POSITIVE, (1, 0)), 0),
    "u_sigma": (PointRing.UF2, (Cone.POSITIVE, (0, 1)), 0),
    "theta": (PointRing.UF2, (Cone.THETA, (0, 0)), 0),
    "u_2sigma": (PointRing.UZ2, (Cone.POSITIVE, (0, 1)), 0),
    "theta_Z": (PointRing.UZ2, (Cone.THETA, (0, 0)), 0),
    "a": (PointRing.UF2, (Cone.POSITIVE, (1, 0)), 0),
    "u": (PointRing.UF2, (Cone.POSITIVE, (0, 1)), 0),
    "ta": (PointRing.UF2, (Cone.POSITIVE, (0, 0)), 1),
    "rho": (PointRing.UF2, (Cone.POSITIVE, (1, 0)), 1),
    "tau": (PointRing.UF2, (Cone.POSITIVE, (0, 1)), 1),
}

TABLE_RINGS = ("uF2", "uZ2", "MF2", "MZ2")

Multiplier = Callable[[Tuple[int, ...], str], List[Tuple[Tuple[int, ...], str, int]]]


def ring_multiplier(table_ring: str, element_name: str) -> Multiplier:
    """Multiplication by a named element on the labelled classes of a point table.

    The returned callable maps ``(degree, label)`` to a list of ``(degree, label, coefficient)``.
    On the tri-graded rings ``a``, ``rho`` and ``ta`` act on both MF2 and MZ2, while ``u`` and
    ``tau`` act on MF2 only.
    """
    if table_ring not in TABLE_RINGS:
        raise InputError(f"unknown point ring {table_ring!r}; expected one of {TABLE_RINGS}")
    if element_name not in _RING_ELEMENTS:
        raise UnknownName(f"{element_name!r} does not act on point tables")
    home, (cone, exponents), ta_power = _RING_ELEMENTS[element_name]
    equivariant = PointRing.UZ2 if table_ring in ("uZ2", "MZ2") else PointRing.UF2
    tri_graded = table_ring in ("MF2", "MZ2")
    if ta_power and not tri_graded:
        raise UnknownName(f"{element_name!r} needs a tri-graded ring, not {table_ring}")
    if element_name == "ta":
        factor = PointBasisElement(equivariant, Cone.POSITIVE, (0, 0))
    elif home is equivariant or element_name in ("a", "rho"):
        factor = PointBasisElement(equivariant, cone, exponents)
    else:
        raise MixedRings(f"{element_name!r} is not an element of {table_ring}")

    def multiply(degree: Tuple[int, ...], label: str) -> List[Tuple[Tuple[int, ...], str, int]]:
        base, e = split_ta_tag(label) if tri_graded else (label, 0)
        x = element_from_label(equivariant, base)
        out = []
        for z, c in point_multiply(equivariant, factor, x).items():
            e_new = e + ta_power
            r = z.degree
            target = (r.p, r.q, -e_new) if tri_graded else (r.p, r.q)
            out.append((target, ta_tag(z.label, e_new) if tri_graded else z.label, c))
        return out

    return multiply


def point_table(
    ring: str,
    box: Iterable[Tuple[int, ...]],
    prime: int = 3,
) -> Dict[Tuple[int, ...], GroupPresentation]:
    """Nonzero groups of a point ring over the given degrees."""
    table: Dict[Tuple[int, ...], GroupPresentation] = {}
    for degree in box:
        if ring == "uF2":
            group = uf2_group(*degree[:2])
        elif ring == "uZ2":
            group = uz2_group(*degree[:2])
        elif ring == "MF2":
            group = mf2_group(TriDegree(*degree))
        elif ring == "MZ2":
            group = mz2_group(TriDegree(*degree))
        elif ring == "MFp":
            group = mfp_group(prime, TriDegree(*degree))
        else:
            raise InputError(f"unknown point ring {ring!r}")
        if group:
            table[tuple(degree)] = group
    logger.debug(f"point table {ring}: {len(table)} nonzero degrees")
    return table
