"""Tri-graded R-motivic dual Steenrod algebra.

As an algebra over pi_{***} MF2 it is generated by

    tau_i  in degree (2^i, 2^i - 1, 2^i - 1),   i >= 0
    xi_i   in degree (2^i - 1, 2^i - 1, 2^i - 1), i >= 1

subject to tau_i^2 = ta a tau_{i+1} + ta u xi_{i+1} + ta a tau_0 xi_{i+1}. Admissible monomials
(every tau exponent at most 1) form a basis over the point.

Rewriting always acts on the lowest index carrying a tau exponent of at least 2. Each rewrite
removes two tau factors and creates at most one, so the total tau exponent strictly decreases.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

import numpy as np

from trigraded.algebra.grading import TriDegree, tau_degree, xi_degree
from trigraded.algebra.point import (
    Cone,
    PointBasisElement,
    PointRing,
    element_from_label,
    point_multiply,
    uf2_element,
)
from trigraded.errors import InputError

logger = logging.getLogger(__name__)

Exponents = Tuple[Tuple[int, int], ...]

_ONE = PointBasisElement(PointRing.UF2, Cone.POSITIVE, (0, 0))
_A = PointBasisElement(PointRing.UF2, Cone.POSITIVE, (1, 0))
_U = PointBasisElement(PointRing.UF2, Cone.POSITIVE, (0, 1))


def _get(exps: Exponents, i: int) -> int:
    for index, e in exps:
        if index == i:
            return e
    return 0


def _set(exps: Exponents, i: int, value: int) -> Exponents:
    data = dict(exps)
    if value:
        data[i] = value
    else:
        data.pop(i, None)
    return tuple(sorted(data.items()))


def _merge(x: Exponents, y: Exponents) -> Exponents:
    data = dict(x)
    for i, e in y:
        data[i] = data.get(i, 0) + e
    return tuple(sorted((i, e) for i, e in data.items() if e))


@dataclass(frozen=True, order=True)
class SteenrodMonomial:
    """coefficient * prod tau_i^eps_i * prod xi_i^n_i, coefficient = ta^ta_power * (uF2 basis element)."""

    ta_power: int = 0
    coeff: PointBasisElement = _ONE
    eps: Exponents = ()
    xs: Exponents = ()

    @property
    def degree(self) -> TriDegree:
        r = self.coeff.degree
        total = TriDegree(r.p, r.q, -self.ta_power)
        for i, e in self.eps:
            total = total + tau_degree(i).scale(e)
        for i, n in self.xs:
            total = total + xi_degree(i).scale(n)
        return total

    @property
    def is_admissible(self) -> bool:
        return all(e <= 1 for _, e in self.eps)

    def generator_part(self) -> "SteenrodMonomial":
        return SteenrodMonomial(eps=self.eps, xs=self.xs)

    def __str__(self) -> str:
        return format_monomial(self)


SteenrodSum = Dict[SteenrodMonomial, int]


def _add_term(total: SteenrodSum, m: SteenrodMonomial) -> None:
    if total.get(m):
        del total[m]
    else:
        total[m] = 1


def _times_coefficient(
    m: SteenrodMonomial, ta_power: int, factor: PointBasisElement
) -> Optional[SteenrodMonomial]:
    product = point_multiply(PointRing.UF2, factor, m.coeff)
    if not product:
        return None
    (coeff,) = product
    return SteenrodMonomial(m.ta_power + ta_power, coeff, m.eps, m.xs)


def _rewrite(m: SteenrodMonomial, i: int) -> List[SteenrodMonomial]:
    """Apply tau_i^2 = ta a tau_{i+1} + ta u xi_{i+1} + ta a tau_0 xi_{i+1} once at index i."""
    eps = _set(m.eps, i, _get(m.eps, i) - 2)
    xs_up = _set(m.xs, i + 1, _get(m.xs, i + 1) + 1)
    candidates = [
        (_A, _set(eps, i + 1, _get(eps, i + 1) + 1), m.xs),
        (_U, eps, xs_up),
        (_A, _set(eps, 0, _get(eps, 0) + 1), xs_up),
    ]
    out = []
    for factor, new_eps, new_xs in candidates:
        term = _times_coefficient(SteenrodMonomial(m.ta_power, m.coeff, new_eps, new_xs), 1, factor)
        if term is not None:
            out.append(term)
    return out


def normal_form(m: SteenrodMonomial) -> SteenrodSum:
    """Sum of admissible monomials equal to ``m``."""
    result: SteenrodSum = {}
    pending: List[SteenrodMonomial] = [m]
    steps = 0
    while pending:
        current = pending.pop()
        squared = [i for i, e in current.eps if e >= 2]
        if not squared:
            _add_term(result, current)
            continue
        pending.extend(_rewrite(current, squared[0]))
        steps += 1
    logger.debug(f"normal form of {format_monomial(m)} after {steps} rewrites: {len(result)} terms")
    return result


def multiply_monomials(x: SteenrodMonomial, y: SteenrodMonomial) -> SteenrodSum:
    product = point_multiply(PointRing.UF2, x.coeff, y.coeff)
    if not product:
        return {}
    (coeff,) = product
    raw = SteenrodMonomial(
        x.ta_power + y.ta_power,
        coeff,
        _merge(x.eps, y.eps),
        _merge(x.xs, y.xs),
    )
    return normal_form(raw)


def steenrod_multiply(x: SteenrodSum, y: SteenrodSum) -> SteenrodSum:
    total: SteenrodSum = {}
    for mx in x:
        for my in y:
            for term in multiply_monomials(mx, my):
                _add_term(total, term)
    return total


def add_sums(*sums: SteenrodSum) -> SteenrodSum:
    total: SteenrodSum = {}
    for s in sums:
        for m in s:
            _add_term(total, m)
    return total


def tau(i: int) -> SteenrodMonomial:
    return SteenrodMonomial(eps=((i, 1),))


def xi(i: int) -> SteenrodMonomial:
    return SteenrodMonomial(xs=((i, 1),))


# ============================================================================
# Ranks and bases
# ============================================================================

def _generators_up_to(p_max: int) -> Tuple[List[int], List[int]]:
    taus, xis = [], []
    i = 0
    while tau_degree(i).p <= p_max:
        taus.append(i)
        i += 1
    i = 1
    while xi_degree(i).p <= p_max:
        xis.append(i)
        i += 1
    return taus, xis


def _p_bound(d: TriDegree) -> int:
    # A nonzero coefficient needs p - P >= 0 (positive cone) or P + Q <= p + q (theta cone).
    return max(d.p, d.p + d.q, 0)


def monomial_degree_counts(p_max: int) -> np.ndarray:
    """counts[P, Q] = number of admissible generator monomials of degree (P, Q, Q)."""
    counts = np.zeros((p_max + 1, p_max + 1), dtype=np.int64)
    counts[0, 0] = 1
    taus, xis = _generators_up_to(p_max)
    for i in taus:
        dp, dq = tau_degree(i).p, tau_degree(i).q
        shifted = np.zeros_like(counts)
        shifted[dp:, dq:] = counts[: p_max + 1 - dp, : p_max + 1 - dq]
        counts = counts + shifted
    for i in xis:
        k = xi_degree(i).p
        for P in range(k, p_max + 1):
            counts[P, k:] += counts[P - k, : p_max + 1 - k]
    return counts


def steenrod_rank(d: TriDegree) -> int:
    """Dimension over F2 of the dual Steenrod algebra in tri-degree ``d``."""
    p_max = _p_bound(d)
    counts = monomial_degree_counts(p_max)
    total = 0
    for P, Q in zip(*np.nonzero(counts)):
        P, Q = int(P), int(Q)
        if d.w - Q > 0:
            continue
        if uf2_element(d.p - P, d.q - Q) is not None:
            total += int(counts[P, Q])
    return total


def _admissible_monomials(p_max: int) -> Iterator[SteenrodMonomial]:
    taus, xis = _generators_up_to(p_max)

    def walk_xi(index: int, p_used: int, xs: Exponents) -> Iterator[Exponents]:
        if index == len(xis):
            yield xs
            return
        k = xi_degree(xis[index]).p
        n = 0
        while p_used + n * k <= p_max:
            yield from walk_xi(index + 1, p_used + n * k, xs + (((xis[index], n),) if n else ()))
            n += 1

    def walk_tau(index: int, p_used: int, eps: Exponents) -> Iterator[Tuple[Exponents, int]]:
        if index == len(taus):
            yield eps, p_used
            return
        yield from walk_tau(index + 1, p_used, eps)
        k = tau_degree(taus[index]).p
        if p_used + k <= p_max:
            yield from walk_tau(index + 1, p_used + k, eps + ((taus[index], 1),))

    for eps, p_used in walk_tau(0, 0, ()):
        for xs in walk_xi(0, p_used, ()):
            yield SteenrodMonomial(eps=eps, xs=xs)


def steenrod_basis(d: TriDegree) -> List[SteenrodMonomial]:
    """Admissible monomials, with their point coefficient, spanning tri-degree ``d``."""
    basis = []
    for gen in _admissible_monomials(_p_bound(d)):
        g = gen.degree
        if d.w - g.w > 0:
            continue
        coeff = uf2_element(d.p - g.p, d.q - g.q)
        if coeff is None:
            continue
        basis.append(SteenrodMonomial(g.w - d.w, coeff, gen.eps, gen.xs))
    return sorted(basis)


# ============================================================================
# Expression grammar
# ============================================================================

_TOKEN_RE = re.compile(
    r"theta/\([^)]*\)|theta/[au](?:\^\d+)?|theta|ta(?:\^\d+)?|[tx]\d+(?:\^\d+)?|[au](?:\^\d+)?|1"
)


def _split_power(token: str) -> Tuple[str, int]:
    if "^" in token and not token.startswith("theta"):
        base, _, exp = token.partition("^")
        return base, int(exp)
    return token, 1


def parse_monomial(text: str) -> Optional[SteenrodMonomial]:
    """Parse one product such as ``ta^2 a u t0 x1^2``; returns None when the coefficient vanishes."""
    body = text.replace("*", " ")
    tokens = _TOKEN_RE.findall(body)
    if re.sub(r"\s+", "", "".join(tokens)) != re.sub(r"\s+", "", body):
        raise InputError(f"cannot parse Steenrod monomial {text!r}")
    m: Optional[SteenrodMonomial] = SteenrodMonomial()
    eps: Exponents = ()
    xs: Exponents = ()
    for token in tokens:
        if token == "1":
            continue
        if token.startswith("theta"):
            factor, power, ta = element_from_label(PointRing.UF2, token), 1, 0
        else:
            base, power = _split_power(token)
            if base == "ta":
                factor, ta = _ONE, power
                power = 1
            elif base in ("a", "u"):
                factor, ta = (_A if base == "a" else _U), 0
            elif base[0] == "t":
                eps = _merge(eps, ((int(base[1:]), power),))
                continue
            else:
                index = int(base[1:])
                if index < 1:
                    raise InputError("xi generators start at x1")
                xs = _merge(xs, ((index, power),))
                continue
        for _ in range(power):
            if m is None:
                break
            m = _times_coefficient(m, ta, factor)
    if m is None:
        return None
    return SteenrodMonomial(m.ta_power, m.coeff, eps, xs)


def parse_expression(text: str) -> SteenrodSum:
    """Parse a sum of monomials and bring it to normal form."""
    total: SteenrodSum = {}
    if not text.strip():
        raise InputError("empty Steenrod expression")
    for part in text.split("+"):
        m = parse_monomial(part)
        if m is None:
            continue
        for term in normal_form(m):
            _add_term(total, term)
    return total


def format_monomial(m: SteenrodMonomial) -> str:
    factors = []
    if m.ta_power:
        factors.append("ta" if m.ta_power == 1 else f"ta^{m.ta_power}")
    if m.coeff.label != "1":
        factors.append(m.coeff.label)
    for i, e in m.eps:
        factors.append(f"t{i}" if e == 1 else f"t{i}^{e}")
    for i, n in m.xs:
        factors.append(f"x{i}" if n == 1 else f"x{i}^{n}")
    return " ".join(factors) or "1"


def format_element(x: Iterable[SteenrodMonomial]) -> str:
    terms = sorted(x, key=lambda m: (m.degree, m))
    if not terms:
        return "0"
    return " + ".join(format_monomial(m) for m in terms)
