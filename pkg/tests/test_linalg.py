"""Exact linear algebra against independent oracles."""

import numpy as np
import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_smith_normal_form

from trigraded.algebra.groups import FREE, Order
from trigraded.algebra.linalg import (
    F2Matrix,
    compose_is_zero,
    elementary_divisors,
    f2_homology_dimension,
    f2_homology_representatives,
    f2_kernel_basis,
    f2_rank,
    homology_group,
    homology_representatives,
    int_kernel_basis,
    lattice_basis,
    lattice_contains,
    quotient_group,
    smith_normal_form,
)
from trigraded.errors import NotAComplex


def dense_f2_rank(m):
    a = np.array(m, dtype=np.uint8) % 2
    rank = 0
    rows, cols = a.shape
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r, c]), None)
        if pivot is None:
            continue
        a[[rank, pivot]] = a[[pivot, rank]]
        for r in range(rows):
            if r != rank and a[r, c]:
                a[r] ^= a[rank]
        rank += 1
    return rank


def sympy_divisors(m):
    diagonal = sympy_smith_normal_form(Matrix(m.tolist()), domain=ZZ)
    k = min(diagonal.shape)
    return sorted(abs(int(diagonal[i, i])) for i in range(k) if diagonal[i, i] != 0)


@pytest.mark.parametrize("shape", [(5, 7), (40, 70), (130, 90), (3, 200)])
def test_f2_rank_matches_dense_elimination(shape):
    rng = np.random.default_rng(sum(shape))
    for density in (0.1, 0.5):
        m = (rng.random(shape) < density).astype(np.uint8)
        assert f2_rank(m) == dense_f2_rank(m)


def test_f2_pack_round_trip_across_word_boundary():
    rng = np.random.default_rng(7)
    m = rng.integers(0, 2, size=(4, 129), dtype=np.uint8)
    packed = F2Matrix.from_dense(m)
    assert np.array_equal(packed.to_dense(), m)
    assert packed.bit(2, 128) == m[2, 128]


def test_f2_kernel_basis():
    rng = np.random.default_rng(3)
    m = rng.integers(0, 2, size=(20, 75), dtype=np.uint8)
    kernel = f2_kernel_basis(m).to_dense()
    assert kernel.shape[0] == 75 - dense_f2_rank(m)
    assert not np.any((m.astype(int) @ kernel.T.astype(int)) % 2)
    assert dense_f2_rank(kernel) == kernel.shape[0]


def test_f2_homology_representatives_count():
    # C0 <- C1 <- C2 with d2 d1 = 0 over F2.
    d_in = np.array([[1, 0], [1, 0], [0, 1], [0, 1]])
    d_out = np.array([[1, 1, 0, 0]])
    assert not np.any((d_out @ d_in) % 2)
    reps = f2_homology_representatives(d_in, d_out, 4)
    assert len(reps) == f2_homology_dimension(d_in, d_out, 4) == 1


def test_elementary_divisors_match_sympy():
    rng = np.random.default_rng(11)
    for _ in range(30):
        rows, cols = rng.integers(1, 7, size=2)
        m = rng.integers(-6, 7, size=(rows, cols))
        assert sorted(abs(d) for d in elementary_divisors(m)) == sympy_divisors(m)


def test_elementary_divisors_with_large_entries():
    m = np.array([[2 ** 40, 6, 0], [4, 2 ** 35, 2], [0, 8, 2 ** 33]], dtype=object)
    assert sorted(abs(d) for d in elementary_divisors(m)) == sympy_divisors(m)


def test_smith_transforms():
    m = np.array([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    result = smith_normal_form(m)
    diagonal = result.left.dot(m.astype(object)).dot(result.right)
    expected = np.zeros_like(diagonal)
    for i, d in enumerate(result.diagonal):
        expected[i, i] = d
    assert np.array_equal(diagonal, expected)
    assert np.array_equal(result.left.dot(result.left_inverse), np.identity(3, dtype=object))
    assert np.array_equal(result.right.dot(result.right_inverse), np.identity(3, dtype=object))
    assert [abs(d) for d in result.diagonal] == [2, 6, 12]


def test_homology_is_two_local():
    assert homology_group([[2]], np.zeros((0, 1)), 1).shape() == ("Z/2",)
    assert homology_group([[12]], np.zeros((0, 1)), 1).shape() == ("Z/2^2",)
    assert homology_group([[3]], np.zeros((0, 1)), 1).is_zero
    assert homology_group([[0]], np.zeros((0, 1)), 1).shape() == ("Z2",)
    assert homology_group(np.zeros((2, 0)), [[1, 1]], 2).shape() == ("Z2",)


def test_not_a_complex():
    with pytest.raises(NotAComplex):
        homology_group([[1]], [[1]], 1)


def test_compose_is_zero_with_big_entries():
    big = 2 ** 60
    assert compose_is_zero(np.array([[big, big]], dtype=object), np.array([[1], [-1]], dtype=object))
    assert not compose_is_zero(np.array([[big, big]], dtype=object), np.array([[1], [1]], dtype=object))


def test_homology_representatives_are_cycles():
    # Z^3 with d_out = [1, -1, 0] and image spanned by (2, 2, 0) and (0, 0, 4).
    d_out = np.array([[1, -1, 0]])
    d_in = np.array([[2, 0], [2, 0], [0, 4]])
    reps = homology_representatives(d_in, d_out, 3)
    assert sorted(o.modulus for o, _ in reps) == [2, 4]
    for _, v in reps:
        assert int(d_out.dot(np.array(v))[0]) == 0


def test_lattices():
    basis = lattice_basis([[2, 0], [0, 4], [2, 4]], 2)
    assert basis.shape[0] == 2
    assert lattice_contains(basis, [[4, 8]])
    assert not lattice_contains(basis, [[1, 0]])
    parts = quotient_group(np.identity(2, dtype=object), basis)
    assert sorted(p.order for p in parts) == [2, 4]
    kernel = int_kernel_basis([[2, 4]])
    assert kernel.shape == (1, 2)
    assert 2 * int(kernel[0, 0]) + 4 * int(kernel[0, 1]) == 0
    assert abs(int(kernel[0, 0])) == 2 and abs(int(kernel[0, 1])) == 1


def test_order_parsing():
    assert Order.parse("Z2") == FREE
    assert Order.parse("Z/2^3") == Order(8)
    assert str(Order(8)) == "Z/2^3"


def test_smith_reconstruction_on_random_matrices():
    rng = np.random.default_rng(20)
    for index in range(100):
        rows, cols = (int(x) for x in rng.integers(1, 21, size=2))
        m = rng.integers(-9, 10, size=(rows, cols))
        m[rng.random((rows, cols)) < 0.4] = 0
        if index % 3 == 0:
            # even entries in [-8, 8], so every divisor is at least 2
            m = 2 * rng.integers(-4, 5, size=(rows, cols))
        result = smith_normal_form(m)
        expected = np.zeros((rows, cols), dtype=object)
        for i, d in enumerate(result.diagonal):
            expected[i, i] = d
        assert np.array_equal(result.left.dot(m.astype(object)).dot(result.right), expected)
        assert np.array_equal(result.left.dot(result.left_inverse), np.identity(rows, dtype=object))
        assert np.array_equal(result.right.dot(result.right_inverse), np.identity(cols, dtype=object))
        nonzero = [d for d in result.diagonal if d]
        assert result.diagonal[: len(nonzero)] == nonzero
        assert all(d > 0 for d in nonzero)
        for a, b in zip(nonzero, nonzero[1:]):
            assert b % a == 0


def test_dual_complex_has_same_free_rank():
    rng = np.random.default_rng(5)
    for _ in range(40):
        c0, c1, c2 = (int(x) for x in rng.integers(1, 6, size=3))
        d1 = rng.integers(-3, 4, size=(c0, c1)).astype(object)
        kernel = int_kernel_basis(d1)
        if kernel.shape[0]:
            mix = rng.integers(-2, 3, size=(kernel.shape[0], c2)) * rng.choice([1, 2], size=c2)
            d2 = kernel.T.dot(mix.astype(object))
        else:
            d2 = np.zeros((c1, c2), dtype=object)
        homology = homology_group(d2, d1, c1)
        cohomology = homology_group(d1.T, d2.T, c1)
        assert homology.free_rank == cohomology.free_rank
        # Ext(H_0, Z) is the torsion of the dual in the next degree up.
        h0 = homology_group(d1, np.zeros((0, c0)), c0)
        assert sorted(o.modulus for o in cohomology.torsion_orders) == sorted(
            o.modulus for o in h0.torsion_orders
        )
