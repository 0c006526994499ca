"""ta-Bockstein spectral sequences over tri-graded F2 / Z_2 pages.

The E_1 page is a polynomial algebra (or an explicit basis) of Cta-classes, extended by ta.
Differentials are input data, stated on generators and propagated by the Leibniz rule. Page
d_r sends the Cta-class x in degree c to ta^r y with y in degree c + (-1, 0, r).

Each Cta-degree cell is a quotient of Z^n (one coordinate per monomial, 2 e_j divided out for
F2 monomials). Pages are tracked as lattices Z_r >= B_r:

    Z_{r+1}(c) = {z in Z_r(c) : d_r z in B_r(c + (-1, 0, r))}
    B_{r+1}(c) = B_r(c) + d_r(Z_r(c + (1, 0, -r)))
"""

from __future__ import annotations

import logging
import re
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from trigraded.algebra.grading import TriDegree
from trigraded.algebra.groups import FREE, GroupPresentation, Order, Summand
from trigraded.algebra.linalg import (
    f2_kernel_basis,
    f2_rank,
    f2_row_reduce,
    lattice_basis,
    lattice_contains,
    quotient_group,
    int_kernel_basis,
    vectors_to_rows,
)
from trigraded.errors import (
    InhomogeneousDifferential,
    InputError,
    LeibnizContradiction,
    NotAComplex,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]
Polynomial = Dict[Monomial, int]
Box = Tuple[Tuple[int, int], Tuple[int, int], Tuple[int, int]]


class Torsion(str, Enum):
    F2 = "F2"
    Z2ADIC = "Z2adic"


@dataclass(frozen=True)
class BocksteinGenerator:
    label: str
    degree: TriDegree
    torsion: Torsion = Torsion.F2


@dataclass(frozen=True)
class StatedDifferential:
    page: int
    source: str
    target: Tuple[Tuple[Monomial, int], ...]

    def target_polynomial(self) -> Polynomial:
        return dict(self.target)


def target_degree(source: TriDegree, r: int) -> TriDegree:
    return source + TriDegree(-1, 0, r)


@dataclass
class BocksteinInput:
    name: str
    generators: List[BocksteinGenerator]
    relations: List[Monomial] = field(default_factory=list)
    differentials: List[StatedDifferential] = field(default_factory=list)
    basis: Optional[List[Monomial]] = None
    box: Optional[Box] = None
    description: str = ""

    def __post_init__(self) -> None:
        labels = [g.label for g in self.generators]
        if len(set(labels)) != len(labels):
            raise InputError(f"duplicate generator labels in {self.name}")
        self._index = {label: i for i, label in enumerate(labels)}

    @property
    def arity(self) -> int:
        return len(self.generators)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise InputError(f"unknown generator {label!r} in {self.name}") from None

    def unit(self) -> Monomial:
        return (0,) * self.arity

    def generator_monomial(self, label: str) -> Monomial:
        exps = [0] * self.arity
        exps[self.index(label)] = 1
        return tuple(exps)

    def degree(self, m: Monomial) -> TriDegree:
        p = q = w = 0
        for e, g in zip(m, self.generators):
            p += e * g.degree.p
            q += e * g.degree.q
            w += e * g.degree.w
        return TriDegree(p, q, w)

    def is_torsion(self, m: Monomial) -> bool:
        return any(e and g.torsion is Torsion.F2 for e, g in zip(m, self.generators))

    def vanishes(self, m: Monomial) -> bool:
        return any(all(e >= r for e, r in zip(m, rel)) for rel in self.relations)

    def reduce(self, poly: Polynomial) -> Polynomial:
        out: Polynomial = {}
        for m, c in poly.items():
            if self.vanishes(m):
                continue
            if self.is_torsion(m):
                c %= 2
            if c:
                out[m] = c
        return out

    # ------------------------------------------------------------------
    # Text forms
    # ------------------------------------------------------------------

    def parse_monomial(self, text: str) -> Tuple[int, Monomial]:
        coeff = 1
        exps = [0] * self.arity
        tokens = [t for t in re.split(r"[\s*]+", text.strip()) if t]
        if not tokens:
            raise InputError("empty monomial")
        for token in tokens:
            if token.startswith("-"):
                coeff = -coeff
                token = token[1:]
                if not token:
                    continue
            if token.isdigit():
                coeff *= int(token)
                continue
            label, _, power = token.partition("^")
            if power and not power.isdigit():
                raise InputError(f"bad exponent in {token!r}")
            exps[self.index(label)] += int(power) if power else 1
        return coeff, tuple(exps)

    def parse_polynomial(self, text: str) -> Polynomial:
        poly: Polynomial = defaultdict(int)
        for term in text.replace("-", "+-").split("+"):
            if term.strip():
                coeff, m = self.parse_monomial(term)
                poly[m] += coeff
        return {m: c for m, c in poly.items() if c}

    def format_monomial(self, m: Monomial) -> str:
        factors = [
            g.label if e == 1 else f"{g.label}^{e}" for e, g in zip(m, self.generators) if e
        ]
        return " ".join(factors) or "1"

    def format_vector(self, monomials: Sequence[Monomial], vector: Iterable[int]) -> str:
        terms = []
        for m, c in zip(monomials, vector):
            c = int(c)
            if not c:
                continue
            body = self.format_monomial(m)
            terms.append(body if c == 1 else f"-{body}" if c == -1 else f"{c} {body}")
        return " + ".join(terms).replace("+ -", "- ") or "0"


# ============================================================================
# Leibniz closure
# ============================================================================

@dataclass
class ClosedDifferentials:
    """Full differentials on every enumerated monomial, page by page."""

    input: BocksteinInput
    cells: Dict[TriDegree, List[Monomial]]
    values: Dict[int, Dict[Monomial, Polynomial]]
    truncated: int = 0

    @property
    def pages(self) -> List[int]:
        return sorted(self.values)

    def matrix(self, r: int, source: TriDegree) -> np.ndarray:
        """d_r from cell ``source`` to cell ``source + (-1, 0, r)``."""
        rows = self.cells.get(target_degree(source, r), [])
        cols = self.cells.get(source, [])
        index = {m: i for i, m in enumerate(rows)}
        out = np.zeros((len(rows), len(cols)), dtype=object)
        page = self.values.get(r, {})
        for j, m in enumerate(cols):
            for t, c in page.get(m, {}).items():
                if t in index:
                    out[index[t], j] += c
        return out


def _enumerate_monomials(inp: BocksteinInput, max_exponent: int) -> List[Monomial]:
    out: List[Monomial] = []

    def walk(i: int, remaining: int, prefix: List[int]) -> None:
        if i == inp.arity:
            m = tuple(prefix)
            if not inp.vanishes(m):
                out.append(m)
            return
        for e in range(remaining + 1):
            walk(i + 1, remaining - e, prefix + [e])

    walk(0, max_exponent, [])
    return out


def _in_box(d: TriDegree, box: Optional[Box]) -> bool:
    if box is None:
        return True
    return all(lo <= x <= hi for x, (lo, hi) in zip(d.as_tuple(), box))


def _multiply(inp: BocksteinInput, x: Polynomial, y: Polynomial) -> Polynomial:
    out: Polynomial = defaultdict(int)
    for m1, c1 in x.items():
        for m2, c2 in y.items():
            out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
    return inp.reduce(out)


def _generator_values(inp: BocksteinInput, r: int) -> Dict[int, Polynomial]:
    out: Dict[int, Polynomial] = {}
    for stated in inp.differentials:
        if stated.page != r:
            continue
        i = inp.index(stated.source)
        source_degree = inp.generators[i].degree
        expected = target_degree(source_degree, r)
        for m in stated.target_polynomial():
            if inp.degree(m) != expected:
                raise InhomogeneousDifferential(
                    f"d{r}({stated.source}) contains {inp.format_monomial(m)} in degree "
                    f"{inp.degree(m)}, expected {expected}"
                )
        if i in out:
            raise InputError(f"d{r}({stated.source}) is stated twice")
        out[i] = inp.reduce(stated.target_polynomial())
    return out


def _leibniz(inp: BocksteinInput, m: Monomial, generator_values: Dict[int, Polynomial]) -> Polynomial:
    """d(m) = sum_i e_i g^(e - e_i) d(g_i), no signs."""
    out: Polynomial = defaultdict(int)
    for i, e in enumerate(m):
        if not e or i not in generator_values:
            continue
        rest = list(m)
        rest[i] -= 1
        for t, c in _multiply(inp, {tuple(rest): e}, generator_values[i]).items():
            out[t] += c
    return inp.reduce(out)


def leibniz_close(
    inp: BocksteinInput,
    box: Optional[Box] = None,
    max_exponent: int = 24,
) -> ClosedDifferentials:
    """Propagate the stated differentials to all monomials in the box."""
    pages = sorted({d.page for d in inp.differentials})
    if any(r < 1 for r in pages):
        raise InputError("differential pages start at 1")
    if inp.basis is not None:
        monomials = [m for m in inp.basis if not inp.vanishes(m)]
    else:
        monomials = _enumerate_monomials(inp, max_exponent)
    cells: Dict[TriDegree, List[Monomial]] = defaultdict(list)
    for m in monomials:
        d = inp.degree(m)
        if _in_box(d, box):
            cells[d].append(m)
    cells = {d: sorted(ms) for d, ms in sorted(cells.items())}
    known = {m for ms in cells.values() for m in ms}

    values: Dict[int, Dict[Monomial, Polynomial]] = {}
    truncated = 0
    for r in pages:
        generator_values = _generator_values(inp, r)
        for rel in inp.relations:
            image = _leibniz(inp, rel, generator_values)
            if image:
                raise LeibnizContradiction(
                    f"relation {inp.format_monomial(rel)} is not d{r}-closed: "
                    f"d{r} = {' + '.join(inp.format_monomial(t) for t in image)}"
                )
        page: Dict[Monomial, Polynomial] = {}
        for m in known:
            image = _leibniz(inp, m, generator_values)
            kept = {t: c for t, c in image.items() if t in known}
            truncated += len(image) - len(kept)
            if kept:
                page[m] = kept
        values[r] = page
    if truncated:
        logger.debug(f"{inp.name}: {truncated} differential terms fall outside the enumerated basis")
    return ClosedDifferentials(input=inp, cells=cells, values=values, truncated=truncated)


# ============================================================================
# Pages
# ============================================================================

@dataclass
class SpectralSequencePage:
    r: int
    cells: Dict[TriDegree, GroupPresentation]

    def nonzero(self) -> List[Tuple[TriDegree, GroupPresentation]]:
        return [(d, g) for d, g in sorted(self.cells.items()) if g]


@dataclass
class EInfinityCell:
    free: GroupPresentation
    torsion: Dict[int, GroupPresentation]

    @property
    def is_zero(self) -> bool:
        return self.free.is_zero and not any(self.torsion.values())


def _summands(
    inp: BocksteinInput, monomials: Sequence[Monomial], parts, tag: str = ""
) -> GroupPresentation:
    summands = []
    for part in parts:
        if part.order == 0:
            order = FREE
        else:
            order = Order(part.order)
        label = inp.format_vector(monomials, part.vector) + tag
        summands.append(Summand(order, label, part.vector))
    return GroupPresentation(tuple(summands))


def _zero_rows(n: int) -> np.ndarray:
    return np.zeros((0, n), dtype=object)


@dataclass
class BocksteinResult:
    closed: ClosedDifferentials
    r_max: int
    box: Optional[Box]
    cycles: List[Dict[TriDegree, np.ndarray]]
    boundaries: List[Dict[TriDegree, np.ndarray]]

    @property
    def input(self) -> BocksteinInput:
        return self.closed.input

    def reported(self) -> List[TriDegree]:
        return [d for d in self.closed.cells if _in_box(d, self.box)]

    def page(self, r: int) -> SpectralSequencePage:
        """E_r for 1 <= r <= r_max + 1; r_max + 1 is E_infinity."""
        cycles, boundaries = self.cycles[r - 1], self.boundaries[r - 1]
        cells = {}
        for d in self.reported():
            monos = self.closed.cells[d]
            cells[d] = _summands(self.input, monos, quotient_group(cycles[d], boundaries[d]))
        return SpectralSequencePage(r, cells)

    def pages(self) -> List[SpectralSequencePage]:
        return [self.page(r) for r in range(1, self.r_max + 1)]

    def e_infinity(self) -> Dict[TriDegree, EInfinityCell]:
        last = self.r_max
        out = {}
        for d in self.reported():
            monos = self.closed.cells[d]
            free = _summands(
                self.input, monos, quotient_group(self.cycles[last][d], self.boundaries[last][d])
            )
            torsion = {}
            for r in range(1, last + 1):
                numerator, denominator = self.boundaries[r][d], self.boundaries[r - 1][d]
                if numerator.shape[0] == denominator.shape[0] and lattice_contains(denominator, numerator):
                    continue
                group = _summands(self.input, monos, quotient_group(numerator, denominator))
                if group:
                    torsion[r] = group
            out[d] = EInfinityCell(free=free, torsion=torsion)
        return out

    def associated_graded(self, total: TriDegree, k: int) -> GroupPresentation:
        """gr_k of pi_total: Z_inf(c) / B_{k+1}(c) with c = total + (0, 0, k)."""
        c = total + TriDegree(0, 0, k)
        if c not in self.closed.cells:
            return GroupPresentation.zero()
        level = min(k, self.r_max)
        monos = self.closed.cells[c]
        parts = quotient_group(self.cycles[self.r_max][c], self.boundaries[level][c])
        return _summands(self.input, monos, parts, tag=f"*ta^{k}" if k else "")

    def filtration_jumps(self, total: TriDegree, k_max: int) -> List[int]:
        return [k for k in range(k_max + 1) if self.associated_graded(total, k)]


def _lift_kernel(z: np.ndarray, images: np.ndarray, target_b: np.ndarray) -> np.ndarray:
    """Rows of span(z) whose images (rows of ``images``) lie in span(target_b)."""
    k = z.shape[0]
    if k == 0:
        return z
    stacked = np.vstack([images, -target_b]) if target_b.shape[0] else images
    if not np.any(stacked != 0):
        return z
    kernel = int_kernel_basis(np.asarray(stacked, dtype=object).T)
    coefficients = kernel[:, :k]
    return lattice_basis(coefficients.dot(z), z.shape[1])


def _check_page(
    closed: ClosedDifferentials,
    r: int,
    cycles: Dict[TriDegree, np.ndarray],
    boundaries: Dict[TriDegree, np.ndarray],
    d: TriDegree,
    matrix: np.ndarray,
) -> None:
    inp = closed.input
    target = target_degree(d, r)
    if target not in closed.cells:
        return
    image_z = cycles[d].dot(matrix.T)
    if not lattice_contains(cycles[target], image_z):
        raise LeibnizContradiction(f"d{r} does not map cycles of {d} to cycles of {target}")
    image_b = boundaries[d].dot(matrix.T) if boundaries[d].shape[0] else _zero_rows(matrix.shape[0])
    if not lattice_contains(boundaries[target], image_b):
        raise LeibnizContradiction(f"d{r} does not map boundaries of {d} into boundaries of {target}")
    second = target_degree(target, r)
    if second in closed.cells:
        twice = image_z.dot(closed.matrix(r, target).T)
        if not lattice_contains(boundaries[second], twice):
            raise LeibnizContradiction(
                f"d{r} o d{r} is nonzero on {d} in {inp.name}"
            )


def run(
    inp: BocksteinInput,
    r_max: Optional[int] = None,
    box: Optional[Box] = None,
    max_exponent: int = 24,
) -> BocksteinResult:
    """Compute E_1 .. E_{r_max} and E_infinity = E_{r_max + 1}."""
    stated = max((d.page for d in inp.differentials), default=1)
    r_max = max(r_max or stated, 1)
    box = box if box is not None else inp.box
    working = None
    if box is not None:
        (p0, p1), (q0, q1), (w0, w1) = box
        working = ((p0 - 1, p1 + 1), (q0, q1), (w0 - r_max, w1 + r_max))
    closed = leibniz_close(inp, working, max_exponent)

    cycles0: Dict[TriDegree, np.ndarray] = {}
    boundaries0: Dict[TriDegree, np.ndarray] = {}
    for d, monos in closed.cells.items():
        n = len(monos)
        cycles0[d] = np.identity(n, dtype=np.int64).astype(object)
        rows = [[2 if j == i else 0 for j in range(n)] for i, m in enumerate(monos) if inp.is_torsion(m)]
        boundaries0[d] = vectors_to_rows(rows, n)
    cycles, boundaries = [cycles0], [boundaries0]

    for r in range(1, r_max + 1):
        z_r, b_r = cycles[-1], boundaries[-1]
        z_next, b_next = {}, {}
        for d, monos in closed.cells.items():
            n = len(monos)
            target = target_degree(d, r)
            matrix = closed.matrix(r, d)
            if target in closed.cells and np.any(matrix != 0):
                if _in_box(d, box):
                    _check_page(closed, r, z_r, b_r, d, matrix)
                images = z_r[d].dot(matrix.T)
                z_next[d] = _lift_kernel(z_r[d], images, b_r[target])
            else:
                z_next[d] = z_r[d]
            source = d - TriDegree(-1, 0, r)
            incoming = []
            if source in closed.cells:
                into = closed.matrix(r, source)
                if np.any(into != 0) and z_r[source].shape[0]:
                    incoming = list(z_r[source].dot(into.T))
            if incoming:
                stacked = np.asarray(incoming, dtype=object)
                if b_r[d].shape[0]:
                    stacked = np.vstack([b_r[d], stacked])
                b_next[d] = lattice_basis(stacked, n)
            else:
                b_next[d] = b_r[d]
        cycles.append(z_next)
        boundaries.append(b_next)
        logger.debug(f"{inp.name}: page {r + 1} computed over {len(closed.cells)} cells")
    return BocksteinResult(closed=closed, r_max=r_max, box=box, cycles=cycles, boundaries=boundaries)


# ============================================================================
# Oracle: explicit filtered complexes over F2[ta]
# ============================================================================

@dataclass
class FilteredComplex:
    """Free F2[ta]-complex on generators g with d g = sum ta^r h.

    ``differentials`` maps a generator to a list of (r, target generator). Degrees are Cta-degrees;
    ta^k g has total degree deg(g) - (0, 0, k).
    """

    name: str
    degrees: Dict[str, TriDegree]
    differentials: Dict[str, List[Tuple[int, str]]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for g, terms in self.differentials.items():
            for r, h in terms:
                if r < 1:
                    raise InputError(f"{self.name}: d({g}) must be divisible by ta")
                if self.degrees[h] != target_degree(self.degrees[g], r):
                    raise InhomogeneousDifferential(f"{self.name}: ta^{r} {h} has the wrong degree for d({g})")
        for total in self.total_degrees():
            d_out = self._matrix(total)
            d_in = self._matrix(total + TriDegree(1, 0, 0))
            if d_out.size and d_in.size and np.any((d_out.dot(d_in)) % 2):
                raise NotAComplex(f"{self.name}: d o d != 0 in total degree {total}")

    def _k_span(self) -> int:
        ws = [d.w for d in self.degrees.values()]
        longest = max((r for terms in self.differentials.values() for r, _ in terms), default=0)
        return (max(ws) - min(ws)) + longest + 2 if ws else 0

    def total_degrees(self) -> List[TriDegree]:
        span = self._k_span()
        out = set()
        for d in self.degrees.values():
            for k in range(span + 1):
                out.add(d - TriDegree(0, 0, k))
        return sorted(out)

    def basis(self, total: TriDegree) -> List[Tuple[str, int]]:
        """(generator, ta exponent) pairs in a total degree."""
        out = []
        for g, d in sorted(self.degrees.items()):
            if d.p == total.p and d.q == total.q and d.w >= total.w:
                out.append((g, d.w - total.w))
        return out

    def _matrix(self, total: TriDegree) -> np.ndarray:
        source = self.basis(total)
        target = self.basis(total - TriDegree(1, 0, 0))
        index = {b: i for i, b in enumerate(target)}
        m = np.zeros((len(target), len(source)), dtype=np.int64)
        for j, (g, k) in enumerate(source):
            for r, h in self.differentials.get(g, []):
                m[index[(h, k + r)], j] ^= 1
        return m

    def _cycles(self, total: TriDegree) -> np.ndarray:
        n = len(self.basis(total))
        d_out = self._matrix(total)
        if d_out.shape[0] == 0:
            return np.identity(n, dtype=np.uint8)
        return f2_kernel_basis(d_out).to_dense()

    def _boundaries(self, total: TriDegree) -> np.ndarray:
        return self._matrix(total + TriDegree(1, 0, 0)).T

    def filtration_dimension(self, total: TriDegree, k: int) -> int:
        """dim of ta^k H_{total + (0,0,k)} inside H_total."""
        target = self.basis(total)
        index = {b: i for i, b in enumerate(target)}
        higher = total + TriDegree(0, 0, k)
        cycles = self._cycles(higher)
        moved = np.zeros((cycles.shape[0], len(target)), dtype=np.uint8)
        for row, vector in enumerate(cycles):
            for (g, j), bit in zip(self.basis(higher), vector):
                if bit:
                    moved[row, index[(g, j + k)]] = 1
        boundaries = self._boundaries(total)
        b_rank = f2_rank(boundaries) if boundaries.size else 0
        stacked = np.vstack([moved, boundaries]) if boundaries.size else moved
        return (f2_rank(stacked) if stacked.size else 0) - b_rank

    def graded_dimension(self, total: TriDegree, k: int) -> int:
        return self.filtration_dimension(total, k) - self.filtration_dimension(total, k + 1)

    def page_differential(self, cell: TriDegree, r: int) -> Dict[str, List[str]]:
        """d_r on the generators of ``cell``, read off lifts through the total complex.

        A class z lifts to x = z + ta x_1 + ... + ta^{r-1} x_{r-1} with d x divisible by ta^r;
        d_r z is the ta^r coefficient of d x. Generators outside Z_r(cell) are sent to zero.
        """
        sources = [g for g in sorted(self.degrees) if self.degrees[g] == cell]
        targets = [h for h in sorted(self.degrees) if self.degrees[h] == target_degree(cell, r)]
        if not sources or not targets:
            return {}
        source_basis = self.basis(cell)
        target_basis = self.basis(cell - TriDegree(1, 0, 0))
        matrix = self._matrix(cell)
        columns = [j for j, (_, k) in enumerate(source_basis) if k < r]
        low = [i for i, (_, k) in enumerate(target_basis) if k < r]
        exact = [target_basis.index((h, r)) for h in targets]
        if low:
            lifts = f2_kernel_basis(matrix[np.ix_(low, columns)]).to_dense().astype(np.int64)
        else:
            lifts = np.identity(len(columns), dtype=np.int64)
        leading = [columns.index(source_basis.index((g, 0))) for g in sources]
        images = lifts.dot(matrix[np.ix_(exact, columns)].T) % 2 if lifts.shape[0] else lifts

        n = len(sources)
        chosen: List[np.ndarray] = []
        values: List[np.ndarray] = []
        for lift, image in zip(lifts, images):
            z = lift[leading]
            if f2_rank(np.array(chosen + [z])) > len(chosen):
                chosen.append(z)
                values.append(image)
        for j in range(n):
            e = np.zeros(n, dtype=np.int64)
            e[j] = 1
            if f2_rank(np.array(chosen + [e])) > len(chosen):
                chosen.append(e)
                values.append(np.zeros(len(targets), dtype=np.int64))
        if not any(v.any() for v in values):
            return {}
        # [B | V] reduces to [I | B^-1 V]: row j is d_r of the j-th source generator.
        reduced = f2_row_reduce(np.hstack([np.array(chosen), np.array(values)])).matrix.to_dense()
        out = {}
        for j, g in enumerate(sources):
            hit = [h for h, bit in zip(targets, reduced[j, n:]) if bit]
            if hit:
                out[g] = hit
        return out

    def bockstein_input(self) -> BocksteinInput:
        """The E_1 data of this complex, with the true d_r of every page stated on generators."""
        labels = sorted(self.degrees)
        generators = [BocksteinGenerator(g, self.degrees[g], Torsion.F2) for g in labels]
        inp = BocksteinInput(name=self.name, generators=generators, basis=[])
        inp.basis = [inp.generator_monomial(g) for g in labels]
        ws = [d.w for d in self.degrees.values()]
        longest = max(ws) - min(ws) if ws else 0
        stated = []
        for r in range(1, longest + 1):
            for cell in sorted(set(self.degrees.values())):
                for g, hit in sorted(self.page_differential(cell, r).items()):
                    target = tuple(sorted((inp.generator_monomial(h), 1) for h in hit))
                    stated.append(StatedDifferential(r, g, target))
        inp.differentials = stated
        return inp


def abutment_check(result: BocksteinResult, oracle: FilteredComplex) -> bool:
    """True when E_infinity's associated graded matches the oracle's filtered homology."""
    span = oracle._k_span()
    for total in oracle.total_degrees():
        for k in range(span + 1):
            expected = oracle.graded_dimension(total, k)
            found = len(result.associated_graded(total, k))
            if expected != found:
                logger.debug(f"{oracle.name}: gr_{k} at {total} is {found}, expected {expected}")
                return False
    return True
