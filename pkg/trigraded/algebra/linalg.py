"""Exact linear algebra over F2 and Z.

* F2 matrices are bit-packed, 64 columns per ``uint64`` word, and reduced with word-parallel XOR.
* Integer matrices use a minimal-absolute-value Smith normal form on Python integers.
  Large sparse matrices first lose their unit pivots in a cheap int64 pass.
* Homology is read 2-locally: free summands are Z2, torsion is the 2-part of each
  elementary divisor.

Matrices act on column vectors: ``d_in`` has shape (dim C, dim C_prev) and ``d_out`` has shape
(dim C_next, dim C).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from trigraded.algebra.groups import FREE, GroupPresentation, Order, Summand
from trigraded.errors import NotAComplex

logger = logging.getLogger(__name__)

WORD = 64
_ONE = np.uint64(1)
# int64 elimination switches to Python integers before a single update could overflow.
_PROMOTE_AT = 2 ** 31
# float64 products are exact while every partial sum stays below 2**53.
_FLOAT_EXACT = 2 ** 53


# ============================================================================
# F2
# ============================================================================

class F2Matrix:
    """Bit-packed matrix over F2; trailing pad bits of every row are zero."""

    def __init__(self, rows: int, cols: int, words: Optional[np.ndarray] = None):
        self.rows = rows
        self.cols = cols
        self.nwords = max(1, (cols + WORD - 1) // WORD)
        if words is None:
            words = np.zeros((rows, self.nwords), dtype=np.uint64)
        self.words = words

    @classmethod
    def from_dense(cls, matrix) -> "F2Matrix":
        dense = np.asarray(matrix)
        if dense.ndim != 2:
            raise ValueError("expected a 2-dimensional matrix")
        rows, cols = dense.shape
        bits = (dense % 2).astype(np.uint8)
        padded_cols = max(1, (cols + WORD - 1) // WORD) * WORD
        padded = np.zeros((rows, padded_cols), dtype=np.uint8)
        padded[:, :cols] = bits
        packed = np.packbits(padded, axis=1, bitorder="little")
        words = np.ascontiguousarray(packed).view(np.uint64).reshape(rows, padded_cols // WORD).copy()
        return cls(rows, cols, words)

    @classmethod
    def identity(cls, n: int) -> "F2Matrix":
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    def to_dense(self) -> np.ndarray:
        if self.rows == 0:
            return np.zeros((0, self.cols), dtype=np.uint8)
        as_bytes = np.ascontiguousarray(self.words).view(np.uint8).reshape(self.rows, self.nwords * 8)
        bits = np.unpackbits(as_bytes, axis=1, bitorder="little")
        return bits[:, : self.cols].copy()

    def bit(self, i: int, j: int) -> int:
        word, offset = divmod(j, WORD)
        return int((self.words[i, word] >> np.uint64(offset)) & _ONE)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, F2Matrix):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.words, other.words)

    def __repr__(self) -> str:
        return f"<F2Matrix {self.rows}x{self.cols}>"


@dataclass(frozen=True)
class RowReduceResult:
    matrix: F2Matrix
    rank: int
    pivots: Tuple[int, ...]


def _as_f2(m) -> F2Matrix:
    return m if isinstance(m, F2Matrix) else F2Matrix.from_dense(m)


def f2_row_reduce(m) -> RowReduceResult:
    """Reduced row echelon form over F2."""
    m = _as_f2(m)
    w = m.words.copy()
    pivots: List[int] = []
    r = 0
    for col in range(m.cols):
        if r == m.rows:
            break
        word, offset = divmod(col, WORD)
        shift = np.uint64(offset)
        hits = np.flatnonzero((w[r:, word] >> shift) & _ONE)
        if hits.size == 0:
            continue
        p = r + int(hits[0])
        if p != r:
            w[[r, p]] = w[[p, r]]
        mask = ((w[:, word] >> shift) & _ONE).astype(bool)
        mask[r] = False
        if mask.any():
            w[mask] ^= w[r]
        pivots.append(col)
        r += 1
    return RowReduceResult(F2Matrix(m.rows, m.cols, w), len(pivots), tuple(pivots))


def f2_rank(m) -> int:
    m = _as_f2(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    # Eliminate along the shorter side.
    if m.rows > m.cols:
        m = F2Matrix.from_dense(m.to_dense().T)
    return f2_row_reduce(m).rank


def f2_kernel_basis(m) -> F2Matrix:
    """Rows spanning {x : m x = 0}; there are cols - rank of them."""
    m = _as_f2(m)
    reduced = f2_row_reduce(m)
    dense = reduced.matrix.to_dense()
    pivot_set = set(reduced.pivots)
    free_cols = [c for c in range(m.cols) if c not in pivot_set]
    basis = np.zeros((len(free_cols), m.cols), dtype=np.uint8)
    for k, free in enumerate(free_cols):
        basis[k, free] = 1
        for row, col in enumerate(reduced.pivots):
            if dense[row, free]:
                basis[k, col] = 1
    return F2Matrix.from_dense(basis)


class F2Echelon:
    """Incrementally grown echelon basis of a row space over F2."""

    def __init__(self, cols: int):
        self.cols = cols
        self.nwords = max(1, (cols + WORD - 1) // WORD)
        self.rows: List[np.ndarray] = []
        self.pivots: List[int] = []

    def _lead(self, row: np.ndarray) -> Optional[int]:
        nonzero = np.flatnonzero(row)
        if nonzero.size == 0:
            return None
        word = int(nonzero[0])
        value = int(row[word])
        return word * WORD + ((value & -value).bit_length() - 1)

    def reduce(self, row: np.ndarray) -> np.ndarray:
        row = row.copy()
        for basis_row, pivot in zip(self.rows, self.pivots):
            word, offset = divmod(pivot, WORD)
            if (int(row[word]) >> offset) & 1:
                row ^= basis_row
        return row

    def add(self, row: np.ndarray) -> bool:
        """Add a packed row; returns True when it enlarged the span."""
        reduced = self.reduce(row)
        lead = self._lead(reduced)
        if lead is None:
            return False
        self.rows.append(reduced)
        self.pivots.append(lead)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def f2_homology_dimension(d_in, d_out, n: int) -> int:
    return n - f2_rank(d_out) - f2_rank(d_in)


def f2_homology_representatives(d_in, d_out, n: int) -> List[np.ndarray]:
    """Cycles of ``d_out`` that project to a basis of ker(d_out)/im(d_in), as 0/1 vectors."""
    kernel = f2_kernel_basis(d_out)
    echelon = F2Echelon(n)
    image = _as_f2(d_in)
    if image.cols:
        image_rows = F2Matrix.from_dense(image.to_dense().T)
        for row in image_rows.words:
            echelon.add(row)
    dense_kernel = kernel.to_dense()
    reps = []
    for row, packed in zip(dense_kernel, kernel.words):
        if echelon.add(packed):
            reps.append(row)
    return reps


# ============================================================================
# Z
# ============================================================================

def as_int_matrix(m) -> np.ndarray:
    """Copy into int64 when entries are small, Python-integer object array otherwise."""
    arr = np.asarray(m)
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.dtype == object:
        if arr.size and max(abs(int(x)) for x in arr.flat) < _PROMOTE_AT:
            return arr.astype(np.int64)
        return arr.copy()
    arr = arr.astype(np.int64)
    return arr


def _to_object(a: np.ndarray) -> np.ndarray:
    """Python-integer copy (int64 entries become int)."""
    return np.asarray(a).astype(object)


def compose_is_zero(d_out, d_in) -> bool:
    """Exact check that d_out @ d_in == 0."""
    a, b = as_int_matrix(d_out), as_int_matrix(d_in)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"shapes {a.shape} and {b.shape} do not compose")
    if a.size == 0 or b.size == 0:
        return True
    max_a = int(np.max(np.abs(a)))
    max_b = int(np.max(np.abs(b)))
    if max_a * max_b * a.shape[1] < _FLOAT_EXACT:
        product = a.astype(np.float64) @ b.astype(np.float64)
        return not np.any(product)
    product = _to_object(a).dot(_to_object(b))
    return not any(x != 0 for x in product.flat)


@dataclass
class SNFResult:
    """U m V = diag(diagonal); the inverses satisfy U U_inv = V V_inv = I."""

    diagonal: List[int]
    left: Optional[np.ndarray] = None
    right: Optional[np.ndarray] = None
    left_inverse: Optional[np.ndarray] = None
    right_inverse: Optional[np.ndarray] = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


class SmithNormalForm:
    """Smith normal form by minimal-absolute-value pivoting on Python integers."""

    def __init__(self, m, transforms: bool = True):
        arr = as_int_matrix(m)
        self.A = _to_object(arr) if arr.dtype != object else arr.copy()
        rows, cols = self.A.shape
        self.transforms = transforms
        if transforms:
            self.left = _identity(rows)
            self.left_inv = _identity(rows)
            self.right = _identity(cols)
            self.right_inv = _identity(cols)

    @property
    def num_row(self) -> int:
        return self.A.shape[0]

    @property
    def num_column(self) -> int:
        return self.A.shape[1]

    def _swap_rows(self, i: int, k: int) -> None:
        if i == k:
            return
        self.A[[i, k]] = self.A[[k, i]]
        if self.transforms:
            self.left[[i, k]] = self.left[[k, i]]
            self.left_inv[:, [i, k]] = self.left_inv[:, [k, i]]

    def _swap_columns(self, j: int, k: int) -> None:
        if j == k:
            return
        self.A[:, [j, k]] = self.A[:, [k, j]]
        if self.transforms:
            self.right[:, [j, k]] = self.right[:, [k, j]]
            self.right_inv[[j, k]] = self.right_inv[[k, j]]

    def _negate_row(self, i: int) -> None:
        self.A[i] *= -1
        if self.transforms:
            self.left[i] *= -1
            self.left_inv[:, i] *= -1

    def _add_row(self, target: int, source: int, k: int) -> None:
        """row[target] += k * row[source]"""
        self.A[target] += k * self.A[source]
        if self.transforms:
            self.left[target] += k * self.left[source]
            self.left_inv[:, source] -= k * self.left_inv[:, target]

    def _clear_column(self, s: int) -> None:
        pivot = self.A[s, s]
        q = self.A[s + 1:, s] // pivot
        rows = np.flatnonzero(q != 0)
        if rows.size == 0:
            return
        q = q[rows]
        idx = rows + s + 1
        self.A[idx] -= np.outer(q, self.A[s])
        if self.transforms:
            self.left[idx] -= np.outer(q, self.left[s])
            self.left_inv[:, s] += self.left_inv[:, idx].dot(q)

    def _clear_row(self, s: int) -> None:
        pivot = self.A[s, s]
        q = self.A[s, s + 1:] // pivot
        cols = np.flatnonzero(q != 0)
        if cols.size == 0:
            return
        q = q[cols]
        idx = cols + s + 1
        self.A[:, idx] -= np.outer(self.A[:, s], q)
        if self.transforms:
            self.right[:, idx] -= np.outer(self.right[:, s], q)
            self.right_inv[s] += q.dot(self.right_inv[idx])

    def _min_pivot(self, s: int) -> Optional[Tuple[int, int]]:
        block = self.A[s:, s:]
        nonzero = np.argwhere(block != 0)
        if nonzero.size == 0:
            return None
        values = [abs(int(x)) for x in block[nonzero[:, 0], nonzero[:, 1]]]
        best = nonzero[min(range(len(values)), key=values.__getitem__)]
        return s + int(best[0]), s + int(best[1])

    def _min_in_cross(self, s: int) -> Optional[Tuple[int, int]]:
        """Smallest nonzero entry in column s below the pivot or row s right of it."""
        best, where = None, None
        for i in np.flatnonzero(self.A[s + 1:, s] != 0):
            value = abs(self.A[s + 1 + i, s])
            if best is None or value < best:
                best, where = value, (s + 1 + int(i), s)
        for j in np.flatnonzero(self.A[s, s + 1:] != 0):
            value = abs(self.A[s, s + 1 + j])
            if best is None or value < best:
                best, where = value, (s, s + 1 + int(j))
        return where

    def compute(self) -> SNFResult:
        limit = min(self.num_row, self.num_column)
        s = 0
        while s < limit:
            pivot = self._min_pivot(s)
            if pivot is None:
                break
            self._swap_rows(s, pivot[0])
            self._swap_columns(s, pivot[1])
            while True:
                self._clear_column(s)
                self._clear_row(s)
                cross = self._min_in_cross(s)
                if cross is not None:
                    self._swap_rows(s, cross[0])
                    self._swap_columns(s, cross[1])
                    continue
                rest = self.A[s + 1:, s + 1:]
                if rest.size:
                    bad = np.argwhere(rest % self.A[s, s] != 0)
                    if bad.size:
                        self._add_row(s, s + 1 + int(bad[0][0]), 1)
                        continue
                break
            if self.A[s, s] < 0:
                self._negate_row(s)
            s += 1
        diagonal = [int(self.A[i, i]) for i in range(limit)]
        if not self.transforms:
            return SNFResult(diagonal)
        return SNFResult(diagonal, self.left, self.right, self.left_inv, self.right_inv)


def _identity(n: int) -> np.ndarray:
    eye = np.zeros((n, n), dtype=object)
    for i in range(n):
        eye[i, i] = 1
    return eye


def smith_normal_form(m, transforms: bool = True) -> SNFResult:
    return SmithNormalForm(m, transforms=transforms).compute()


def _eliminate_unit_pivots(a: np.ndarray) -> Tuple[int, np.ndarray]:
    """Strip unit pivots: SNF(a) = [1] * count + SNF(core)."""
    count = 0
    if a.dtype != object and a.size and int(np.max(np.abs(a))) > _PROMOTE_AT:
        a = _to_object(a)
    progress = True
    while progress and a.shape[0] and a.shape[1]:
        progress = False
        j = 0
        while j < a.shape[1] and a.shape[0]:
            column = a[:, j]
            candidates = np.flatnonzero(np.abs(column) == 1)
            if candidates.size == 0:
                j += 1
                continue
            weights = np.count_nonzero(a[candidates], axis=1)
            i = int(candidates[int(np.argmin(weights))])
            pivot_row = a[i] * a[i, j]
            hit = np.flatnonzero(column)
            a[hit] -= np.outer(column[hit], pivot_row)
            if a.dtype != object and int(np.max(np.abs(a[hit]))) > _PROMOTE_AT:
                a = _to_object(a)
            a = np.delete(np.delete(a, i, axis=0), j, axis=1)
            count += 1
            progress = True
    return count, a


def elementary_divisors(m) -> List[int]:
    """Nonzero elementary divisors of an integer matrix, in divisibility order."""
    a = as_int_matrix(m)
    if a.size == 0:
        return []
    a = a[np.any(a != 0, axis=1)][:, np.any(a != 0, axis=0)]
    units, core = _eliminate_unit_pivots(a)
    if core.size:
        core = core[np.any(core != 0, axis=1)][:, np.any(core != 0, axis=0)]
    logger.debug(f"elementary divisors: {units} unit pivots, core {core.shape}")
    rest = [d for d in smith_normal_form(core, transforms=False).diagonal if d] if core.size else []
    return [1] * units + rest


def int_rank(m) -> int:
    return len(elementary_divisors(m))


def two_adic_valuation(n: int) -> int:
    n = abs(n)
    if n == 0:
        raise ValueError("0 has infinite valuation")
    return (n & -n).bit_length() - 1


def _two_local_order(d: int) -> Optional[Order]:
    """Order of the 2-primary part of Z/d; None when it is trivial."""
    if d == 0:
        return FREE
    v = two_adic_valuation(d)
    return Order.two_power(v) if v else None


def _check_complex(d_in, d_out, n: int) -> Tuple[np.ndarray, np.ndarray]:
    a_in = as_int_matrix(d_in) if np.size(d_in) else np.zeros((n, 0), dtype=np.int64)
    a_out = as_int_matrix(d_out) if np.size(d_out) else np.zeros((0, n), dtype=np.int64)
    if a_in.shape[0] != n or a_out.shape[1] != n:
        raise ValueError(f"d_in {a_in.shape} and d_out {a_out.shape} do not meet in rank {n}")
    if not compose_is_zero(a_out, a_in):
        raise NotAComplex("d_out @ d_in is not zero")
    return a_in, a_out


def homology_group(d_in, d_out, n: Optional[int] = None, label_prefix: str = "h") -> GroupPresentation:
    """ker(d_out) / im(d_in), 2-locally.

    Args:
        d_in: incoming differential, shape (n, dim C_prev)
        d_out: outgoing differential, shape (dim C_next, n)
        n: rank of the middle group, needed when both matrices are empty
        label_prefix: summands are labelled ``<prefix><index>``
    """
    if n is None:
        n = np.shape(d_in)[0] if np.size(d_in) else np.shape(d_out)[1]
    a_in, a_out = _check_complex(d_in, d_out, n)
    divisors_in = elementary_divisors(a_in)
    rank_out = int_rank(a_out)
    free = n - rank_out - len(divisors_in)
    orders: List[Order] = [FREE] * free
    for d in divisors_in:
        order = _two_local_order(d)
        if order is not None:
            orders.append(order)
    return GroupPresentation(tuple(Summand(o, f"{label_prefix}{k}") for k, o in enumerate(orders)))


# ============================================================================
# Lattices (row vectors)
# ============================================================================

def int_kernel_basis(m) -> np.ndarray:
    """Rows spanning the saturated lattice {x in Z^n : m x = 0}."""
    a = as_int_matrix(m)
    n = a.shape[1]
    if a.shape[0] == 0:
        return _identity(n)
    snf = smith_normal_form(a)
    r = snf.rank
    return snf.right[:, r:].T.copy()


def lattice_basis(rows, n: int) -> np.ndarray:
    """A basis (as rows) of the lattice spanned by ``rows`` in Z^n."""
    a = as_int_matrix(rows) if np.size(rows) else np.zeros((0, n), dtype=object)
    if a.shape[0] == 0 or not np.any(a != 0):
        return np.zeros((0, n), dtype=object)
    snf = smith_normal_form(a)
    r = snf.rank
    basis = np.empty((r, n), dtype=object)
    for i in range(r):
        basis[i] = snf.diagonal[i] * snf.right_inverse[i]
    return basis


def lattice_coordinates(basis: np.ndarray, vectors) -> Optional[np.ndarray]:
    """Integer c with c @ basis == vectors (row-wise), or None when some vector is outside."""
    v = as_int_matrix(vectors)
    v = _to_object(v) if v.dtype != object else v
    k = basis.shape[0]
    if k == 0:
        return np.zeros((v.shape[0], 0), dtype=object) if not np.any(v != 0) else None
    snf = smith_normal_form(basis)
    r = snf.rank
    transformed = v.dot(snf.right)
    coords = np.zeros((v.shape[0], k), dtype=object)
    for i in range(r):
        column = transformed[:, i]
        if any(x % snf.diagonal[i] for x in column):
            return None
        coords[:, i] = column // snf.diagonal[i]
    if r < transformed.shape[1] and np.any(transformed[:, r:] != 0):
        return None
    return coords.dot(snf.left)


def lattice_contains(basis: np.ndarray, vectors) -> bool:
    if np.size(vectors) == 0:
        return True
    return lattice_coordinates(basis, vectors) is not None


@dataclass(frozen=True)
class QuotientSummand:
    order: int  # 0 for a free summand
    vector: Tuple[int, ...]


def quotient_group(numerator: np.ndarray, denominator: np.ndarray) -> List[QuotientSummand]:
    """Cyclic decomposition of span(numerator) / span(denominator).

    ``numerator`` must be a basis (independent rows) containing the span of ``denominator``.
    Unit summands are dropped; each summand carries a representative in ambient coordinates.
    """
    k = numerator.shape[0]
    if k == 0:
        return []
    numer = _to_object(numerator) if numerator.dtype != object else numerator
    if np.size(denominator) and np.any(np.asarray(denominator) != 0):
        coords = lattice_coordinates(numer, denominator)
        if coords is None:
            raise ValueError("denominator is not contained in the numerator")
    else:
        coords = np.zeros((0, k), dtype=object)
    if coords.shape[0] == 0:
        return [QuotientSummand(0, tuple(int(x) for x in row)) for row in numer]
    snf = smith_normal_form(coords)
    out = []
    for i in range(k):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        if d == 1:
            continue
        rep = snf.right_inverse[i].dot(numer)
        out.append(QuotientSummand(abs(int(d)), tuple(int(x) for x in rep)))
    return out


def homology_representatives(d_in, d_out, n: Optional[int] = None) -> List[Tuple[Order, Tuple[int, ...]]]:
    """2-local cyclic summands of ker(d_out)/im(d_in) with representative cycles."""
    if n is None:
        n = np.shape(d_in)[0] if np.size(d_in) else np.shape(d_out)[1]
    a_in, a_out = _check_complex(d_in, d_out, n)
    kernel = int_kernel_basis(a_out) if a_out.shape[0] else _identity(n)
    image = a_in.T
    out = []
    for summand in quotient_group(kernel, image):
        order = _two_local_order(summand.order)
        if order is not None:
            out.append((order, summand.vector))
    return out


def vectors_to_rows(vectors: Sequence[Sequence[int]], n: int) -> np.ndarray:
    if not vectors:
        return np.zeros((0, n), dtype=object)
    return _to_object(np.asarray(vectors, dtype=object).reshape(len(vectors), n))
