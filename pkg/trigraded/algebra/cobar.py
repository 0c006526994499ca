"""Reduced cobar complex of (BP_*, BP_*BP) and its cohomology in a finite box.

A basis element of C^s in internal degree t is ``v^alpha [g_1 | ... | g_s]`` with every ``g_i`` a
nonconstant t-monomial and the coefficient on the left. Its differential is

    d(v^a [g_1|...|g_s]) = (eta_R(v^a) - v^a)[g_1|...|g_s]
                           + sum_i (-1)^i v^a [g_1|...|Dbar(g_i)|...|g_s]

where coefficients produced in the middle of a tensor are moved to the left through
``g (x) c X = g eta_R(c) (x) X``.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from trigraded.algebra.groups import F2, GroupPresentation, Order, Summand
from trigraded.algebra.hopf import (
    BPPresentation,
    Exps,
    build_presentation,
    format_monomial,
    generators_for,
)
from trigraded.algebra.linalg import (
    as_int_matrix,
    compose_is_zero,
    f2_homology_representatives,
    f2_rank,
    homology_group,
    homology_representatives,
)
from trigraded.errors import BoxExceeded, CapTooSmall, NotAComplex

logger = logging.getLogger(__name__)


class Coefficients(str, Enum):
    Z = "Z"
    F2 = "F2"


# (v exponents, tensor factors)
CobarKey = Tuple[Exps, Tuple[Exps, ...]]


def _add(a: Exps, b: Exps) -> Exps:
    return tuple(x + y for x, y in zip(a, b))


def _is_zero(a: Exps) -> bool:
    return not any(a)


def monomials_of_half_degree(N: int, half: int) -> List[Exps]:
    """Exponent vectors e with sum e_i (2^i - 1) == half, i.e. monomials of degree 2*half."""
    weights = [2 ** i - 1 for i in range(1, N + 1)]
    out: List[Exps] = []

    def walk(i: int, remaining: int, prefix: List[int]) -> None:
        if i < 0:
            if remaining == 0:
                out.append(tuple(reversed(prefix)))
            return
        for e in range(remaining // weights[i] + 1):
            walk(i - 1, remaining - e * weights[i], prefix + [e])

    walk(N - 1, half, [])
    return sorted(out)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class CobarComplex:
    """Degreewise bases and differentials of the reduced cobar complex, built lazily."""

    def __init__(self, pres: BPPresentation, s_max: int, D: int):
        if D > pres.cap:
            raise CapTooSmall(f"degree {D} exceeds the presentation cap {pres.cap}")
        self.pres = pres
        self.N = pres.N
        self.s_max = s_max
        self.D = D
        self._zero = (0,) * self.N
        self._monomials: Dict[int, List[Exps]] = {}
        self._bases: Dict[Tuple[int, int], List[CobarKey]] = {}
        self._matrices: Dict[Tuple[int, int], np.ndarray] = {}
        self._eta: Dict[Exps, Dict[Tuple[Exps, Exps], int]] = {}
        self._delta: Dict[Exps, Dict[Tuple[Exps, Exps, Exps], int]] = {}
        self._push: Dict[Tuple[Exps, Tuple[Exps, ...]], Dict[CobarKey, int]] = {}

    # ------------------------------------------------------------------
    # Bases
    # ------------------------------------------------------------------

    def _monomials_at(self, half: int) -> List[Exps]:
        if half not in self._monomials:
            self._monomials[half] = monomials_of_half_degree(self.N, half)
        return self._monomials[half]

    def basis(self, s: int, t: int) -> List[CobarKey]:
        if s < 0 or t < 0 or t % 2:
            return []
        key = (s, t)
        if key not in self._bases:
            half = t // 2
            elements: List[CobarKey] = []
            for v_half in range(half + 1):
                for alpha in self._monomials_at(v_half):
                    for parts in _compositions(half - v_half, s):
                        for factors in _product([self._monomials_at(k) for k in parts]):
                            elements.append((alpha, factors))
            elements.sort(key=lambda e: (e[1], e[0]))
            self._bases[key] = elements
        return self._bases[key]

    def dimension(self, s: int, t: int) -> int:
        return len(self.basis(s, t))

    # ------------------------------------------------------------------
    # Structure maps on monomials
    # ------------------------------------------------------------------

    def eta_right(self, alpha: Exps) -> Dict[Tuple[Exps, Exps], int]:
        """eta_R(v^alpha) as {(v exponents, t exponents): coefficient}."""
        if alpha in self._eta:
            return self._eta[alpha]
        if _is_zero(alpha):
            result = {(self._zero, self._zero): 1}
        else:
            k = next(i for i, e in enumerate(alpha) if e)
            rest = alpha[:k] + (alpha[k] - 1,) + alpha[k + 1:]
            result: Dict[Tuple[Exps, Exps], int] = defaultdict(int)
            for (a1, d1), c1 in self.pres.eta_right[k + 1].items():
                for (a2, d2), c2 in self.eta_right(rest).items():
                    result[(_add(a1, a2), _add(d1, d2))] += c1 * c2
            result = {m: c for m, c in result.items() if c}
        self._eta[alpha] = result
        return result

    def coproduct(self, gamma: Exps) -> Dict[Tuple[Exps, Exps, Exps], int]:
        """Delta(t^gamma) with all coefficients on the left factor."""
        if gamma in self._delta:
            return self._delta[gamma]
        if _is_zero(gamma):
            result = {(self._zero, self._zero, self._zero): 1}
        else:
            k = next(i for i, e in enumerate(gamma) if e)
            rest = gamma[:k] + (gamma[k] - 1,) + gamma[k + 1:]
            result = defaultdict(int)
            for (a1, x1, y1), c1 in self.pres.coproduct[k + 1].items():
                for (a2, x2, y2), c2 in self.coproduct(rest).items():
                    result[(_add(a1, a2), _add(x1, x2), _add(y1, y2))] += c1 * c2
            result = {m: c for m, c in result.items() if c}
        self._delta[gamma] = result
        return result

    def _push_left(self, alpha: Exps, prefix: Tuple[Exps, ...]) -> Dict[CobarKey, int]:
        """Move the coefficient v^alpha standing right of ``prefix`` to the far left."""
        if not prefix or _is_zero(alpha):
            return {(alpha, prefix): 1}
        memo = (alpha, prefix)
        if memo in self._push:
            return self._push[memo]
        last = prefix[-1]
        out: Dict[CobarKey, int] = defaultdict(int)
        for (a1, delta), c1 in self.eta_right(alpha).items():
            moved = _add(last, delta)
            for (beta, head), c2 in self._push_left(a1, prefix[:-1]).items():
                out[(beta, head + (moved,))] += c1 * c2
        result = {k: c for k, c in out.items() if c}
        self._push[memo] = result
        return result

    def differential_of(self, alpha: Exps, factors: Tuple[Exps, ...]) -> Dict[CobarKey, int]:
        out: Dict[CobarKey, int] = defaultdict(int)
        for (a1, delta), c in self.eta_right(alpha).items():
            if not _is_zero(delta):
                out[(a1, (delta,) + factors)] += c
        for i, gamma in enumerate(factors, start=1):
            sign = -1 if i % 2 else 1
            head, tail = factors[: i - 1], factors[i:]
            for (a1, x, y), c in self.coproduct(gamma).items():
                if _is_zero(x) or _is_zero(y):
                    continue
                for (beta, new_head), c2 in self._push_left(a1, head).items():
                    out[(_add(alpha, beta), new_head + (x, y) + tail)] += sign * c * c2
        return {k: c for k, c in out.items() if c}

    # ------------------------------------------------------------------
    # Matrices
    # ------------------------------------------------------------------

    def matrix(self, s: int, t: int) -> np.ndarray:
        """d^s in internal degree t, shape (dim C^{s+1}, dim C^s)."""
        key = (s, t)
        if key in self._matrices:
            return self._matrices[key]
        source = self.basis(s, t)
        target = self.basis(s + 1, t)
        index = {k: i for i, k in enumerate(target)}
        m = np.zeros((len(target), len(source)), dtype=object)
        for j, (alpha, factors) in enumerate(source):
            for k, c in self.differential_of(alpha, factors).items():
                m[index[k], j] += c
        m = as_int_matrix(m) if m.size else np.zeros(m.shape, dtype=np.int64)
        if s >= 1 and m.size:
            previous = self.matrix(s - 1, t)
            if previous.size and not compose_is_zero(m, previous):
                raise NotAComplex(f"d^{s} d^{s - 1} != 0 in internal degree {t}")
        self._matrices[key] = m
        logger.debug(f"cobar d^{s} at t={t}: {m.shape[0]}x{m.shape[1]}")
        return m

    def format_cochain(self, s: int, t: int, vector) -> str:
        terms = []
        for coeff, (alpha, factors) in zip(vector, self.basis(s, t)):
            coeff = int(coeff)
            if not coeff:
                continue
            v = format_monomial(alpha, "v")
            bar = "|".join(format_monomial(g, "t") for g in factors)
            body = f"{v}[{bar}]" if s else (v or "1")
            if coeff == 1:
                terms.append(body)
            elif coeff == -1:
                terms.append(f"-{body}")
            else:
                terms.append(f"{coeff} {body}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


def _product(lists: List[List[Exps]]) -> Iterator[Tuple[Exps, ...]]:
    if not lists:
        yield ()
        return
    for head in lists[0]:
        for rest in _product(lists[1:]):
            yield (head,) + rest


# ============================================================================
# Ext tables
# ============================================================================

def ext_label(s: int, t: int, index: int, count: int) -> str:
    return f"x{s}_{t}" if count == 1 else f"x{s}_{t}_{index}"


@dataclass
class ExtTable:
    """Ext^{s,t}(BP_*, M) for 0 <= s <= s_max and 0 <= t <= D."""

    coeffs: Coefficients
    generators: int
    s_max: int
    degree_cap: int
    entries: Dict[Tuple[int, int], GroupPresentation] = field(default_factory=dict)
    cocycles: Dict[str, str] = field(default_factory=dict)

    @staticmethod
    def structurally_zero(s: int, t: int) -> bool:
        return t < 0 or t % 2 == 1 or s < 0 or 2 * s > t

    def entry(self, s: int, t: int) -> GroupPresentation:
        if self.structurally_zero(s, t):
            return GroupPresentation.zero()
        if s > self.s_max or t > self.degree_cap:
            raise BoxExceeded(
                f"Ext^{{{s},{t}}} lies outside the computed box s <= {self.s_max}, t <= {self.degree_cap}"
            )
        return self.entries.get((s, t), GroupPresentation.zero())

    def nonzero(self) -> List[Tuple[Tuple[int, int], GroupPresentation]]:
        return [(k, g) for k, g in sorted(self.entries.items()) if g]

    def to_payload(self) -> dict:
        return {
            "coeffs": self.coeffs.value,
            "generators": self.generators,
            "s_max": self.s_max,
            "degree_cap": self.degree_cap,
            "entries": [[s, t, g.to_pairs()] for (s, t), g in sorted(self.entries.items())],
            "cocycles": dict(sorted(self.cocycles.items())),
        }

    @classmethod
    def from_payload(cls, payload: dict) -> "ExtTable":
        entries = {
            (int(s), int(t)): GroupPresentation.from_pairs(pairs) for s, t, pairs in payload["entries"]
        }
        return cls(
            coeffs=Coefficients(payload["coeffs"]),
            generators=int(payload["generators"]),
            s_max=int(payload["s_max"]),
            degree_cap=int(payload["degree_cap"]),
            entries=entries,
            cocycles=dict(payload.get("cocycles", {})),
        )


def _labelled(s: int, t: int, orders: List[Order]) -> List[Summand]:
    return [Summand(o, ext_label(s, t, i, len(orders))) for i, o in enumerate(orders)]


def ext(
    pres: BPPresentation,
    coeffs: Coefficients,
    s_max: int,
    D: int,
    cocycles: bool = False,
    complex_: Optional[CobarComplex] = None,
) -> ExtTable:
    """Cohomology of the cobar complex with coefficients BP_* (Z) or BP_*/2 (F2)."""
    coeffs = Coefficients(coeffs)
    cobar = complex_ or CobarComplex(pres, s_max, D)
    table = ExtTable(coeffs=coeffs, generators=pres.N, s_max=s_max, degree_cap=D)
    for t in range(0, D + 1, 2):
        for s in range(0, min(s_max, t // 2) + 1):
            n = cobar.dimension(s, t)
            if n == 0:
                continue
            d_in = cobar.matrix(s - 1, t) if s else np.zeros((n, 0), dtype=np.int64)
            d_out = cobar.matrix(s, t)
            vectors: List = []
            if coeffs is Coefficients.Z:
                if cocycles:
                    reps = sorted(homology_representatives(d_in, d_out, n), key=lambda r: r[0].sort_key())
                    orders = [order for order, _ in reps]
                    vectors = [vector for _, vector in reps]
                else:
                    orders = [x.order for x in homology_group(d_in, d_out, n)]
            else:
                dim = n - f2_rank(d_out) - (f2_rank(d_in) if s else 0)
                orders = [F2] * dim
                if cocycles and dim:
                    vectors = f2_homology_representatives(d_in, d_out, n)
            summands = _labelled(s, t, orders)
            if cocycles:
                for summand, vector in zip(summands, vectors):
                    table.cocycles[summand.label] = cobar.format_cochain(s, t, vector)
            if summands:
                table.entries[(s, t)] = GroupPresentation(tuple(summands))
        logger.debug(f"Ext({coeffs.value}) done through t={t}")
    return table


@dataclass
class ExtTables:
    integral: ExtTable
    mod_two: ExtTable

    def table(self, coeffs: Coefficients) -> ExtTable:
        return self.integral if Coefficients(coeffs) is Coefficients.Z else self.mod_two


def ext_tables_for(D: int, s_max: int, cocycles: bool = False) -> ExtTables:
    """Integral and mod-2 tables on the smallest presentation that is exact through degree D."""
    D = max(D, 2)
    N = generators_for(D)
    pres = build_presentation(N, D)
    cobar = CobarComplex(pres, s_max, D)
    logger.info(f"Computing Ext with N={N}, s_max={s_max}, D={D}")
    return ExtTables(
        integral=ext(pres, Coefficients.Z, s_max, D, cocycles, cobar),
        mod_two=ext(pres, Coefficients.F2, s_max, D, cocycles, cobar),
    )


def bockstein_imbalance(integral: ExtTable, mod_two: ExtTable) -> List[Tuple[int, int]]:
    """Degrees where dim Ext(BP_*/2) != dim Ext(BP_*) / 2 + dim Ext^{s+1}(BP_*)[2].

    Both terms come from the long exact sequence of 0 -> BP_* -2-> BP_* -> BP_*/2 -> 0.
    The top row s == s_max is skipped because it needs Ext^{s_max+1}.
    """
    bad = []
    s_top = min(integral.s_max, mod_two.s_max)
    d_top = min(integral.degree_cap, mod_two.degree_cap)
    for t in range(0, d_top + 1, 2):
        for s in range(0, min(s_top - 1, t // 2) + 1):
            expected = len(integral.entry(s, t)) + len(integral.entry(s + 1, t).torsion_orders)
            if mod_two.entry(s, t).dim_f2() != expected:
                bad.append((s, t))
    return bad
