"""Coefficient rings of a point."""

import itertools

import pytest

from trigraded.algebra.grading import RODegree, TriDegree, iter_box
from trigraded.algebra.groups import F2, FREE, Order
from trigraded.algebra.point import (
    Cone,
    PointBasisElement,
    PointRing,
    element_from_label,
    mf2_group,
    mfp_group,
    multiply_sums,
    mz2_group,
    point_basis,
    point_multiply,
    point_table,
    ring_multiplier,
    uf2_element,
    uf2_group,
    uz2_element,
    uz2_group,
)
from trigraded.errors import EvenPrime, InvalidPrime, MixedRings, UnknownName

UF2_RANGE = ((-6, 4), (-4, 6))
UZ2_RANGE = ((-9, 6), (-5, 9))


def _uf2_nonzero(p, q):
    return (p >= 0 and p + q <= 0) or (p <= -2 and p + q >= 0)


def test_uf2_matches_closed_form_over_figure_range():
    for p, q in iter_box(*UF2_RANGE):
        group = uf2_group(p, q)
        if not _uf2_nonzero(p, q):
            assert group.is_zero, (p, q)
        else:
            assert group.shape() == ("Z/2",), (p, q)
    assert len(point_table("uF2", iter_box(*UF2_RANGE))) == 30


def test_uf2_labels():
    assert uf2_group(0, 0).labels() == ["1"]
    assert uf2_group(0, -1).labels() == ["a"]
    assert uf2_group(1, -1).labels() == ["u"]
    assert uf2_group(2, -5).labels() == ["a^3 u^2"]
    assert uf2_group(-2, 2).labels() == ["theta"]
    assert uf2_group(-2, 3).labels() == ["theta/a"]
    assert uf2_group(-4, 5).labels() == ["theta/(a u^2)"]


def test_uz2_matches_closed_form_over_figure_range():
    for p, q in iter_box(*UZ2_RANGE):
        group = uz2_group(p, q)
        if p >= 0 and p % 2 == 0 and p + q == 0:
            assert group.shape() == ("Z2",)
        elif p >= 0 and p % 2 == 0 and p + q < 0:
            assert group.shape() == ("Z/2",)
        elif p < 0 and p % 2 == 0 and p + q == 0:
            assert group.shape() == ("Z2",)
            assert group.labels() == [f"2/u" if p == -2 else f"2/u^{-p // 2}"]
        elif p <= -3 and p % 2 == 1 and p + q >= 0:
            assert group.shape() == ("Z/2",)
        else:
            assert group.is_zero, (p, q)


def test_hits_twice():
    u = element_from_label(PointRing.UZ2, "u")
    two_over_u = element_from_label(PointRing.UZ2, "2/u")
    one = element_from_label(PointRing.UZ2, "1")
    assert point_multiply(PointRing.UZ2, u, two_over_u) == {one: 2}
    a = element_from_label(PointRing.UZ2, "a")
    assert point_multiply(PointRing.UZ2, a, two_over_u) == {}


def test_theta_is_divisible_by_a_and_u():
    a = element_from_label(PointRing.UF2, "a")
    u = element_from_label(PointRing.UF2, "u")
    theta = element_from_label(PointRing.UF2, "theta")
    assert point_multiply(PointRing.UF2, a, theta) == {}
    assert point_multiply(PointRing.UF2, a, element_from_label(PointRing.UF2, "theta/a")) == {theta: 1}
    assert point_multiply(PointRing.UF2, u, element_from_label(PointRing.UF2, "theta/(a u)")) == {
        element_from_label(PointRing.UF2, "theta/a"): 1
    }
    assert point_multiply(PointRing.UF2, theta, theta) == {}


def test_products_land_in_the_sum_degree():
    for ring in (PointRing.UF2, PointRing.UZ2):
        basis = point_basis(ring, (-5, 4), (-5, 5))
        for x, y in itertools.product(basis, repeat=2):
            for z in point_multiply(ring, x, y):
                assert z.degree == x.degree + y.degree


def test_product_is_commutative_and_associative():
    for ring in (PointRing.UF2, PointRing.UZ2):
        basis = point_basis(ring, (-4, 4), (-4, 4))
        for x, y in itertools.product(basis, repeat=2):
            assert point_multiply(ring, x, y) == point_multiply(ring, y, x)
        small = basis[::3]
        for x, y, z in itertools.product(small, repeat=3):
            left = multiply_sums(ring, point_multiply(ring, x, y), {z: 1})
            right = multiply_sums(ring, {x: 1}, point_multiply(ring, y, z))
            assert left == right


def test_mixed_rings():
    x = PointBasisElement(PointRing.UF2, Cone.POSITIVE, (1, 0))
    y = PointBasisElement(PointRing.UZ2, Cone.POSITIVE, (1, 0))
    with pytest.raises(MixedRings):
        point_multiply(PointRing.UF2, x, y)


def test_labels_round_trip():
    for ring in (PointRing.UF2, PointRing.UZ2):
        for x in point_basis(ring, (-9, 6), (-5, 9)):
            assert element_from_label(ring, x.label) == x


def test_point_element_orders():
    assert uz2_element(4, -4).order == FREE
    assert uz2_element(4, -5).order == F2
    assert uf2_element(0, 0).order == F2


def test_tri_graded_point_vanishes_for_positive_weight():
    for p, q, w in iter_box((-12, 12), (-12, 12), (1, 6)):
        assert mf2_group(TriDegree(p, q, w)).is_zero
        assert mz2_group(TriDegree(p, q, w)).is_zero


def test_tri_graded_point_is_weight_independent():
    for p, q in iter_box((-12, 12), (-12, 12)):
        base_f, base_z = uf2_group(p, q), uz2_group(p, q)
        for w in range(-6, 1):
            assert mf2_group(TriDegree(p, q, w)).shape() == base_f.shape()
            assert mz2_group(TriDegree(p, q, w)).shape() == base_z.shape()


def test_tau_lives_in_mf2():
    group = mf2_group(TriDegree(1, -1, -1))
    assert group.shape() == ("Z/2",)
    assert group.labels() == ["u*ta"]
    assert mf2_group(TriDegree(0, 0, -2)).labels() == ["ta^2"]


def test_odd_primary_point():
    assert mfp_group(3, TriDegree(2, -2, -1)).to_pairs() == [["Z/3", "u*ta"]]
    assert mfp_group(5, TriDegree(-4, 4, 0)).shape() == ("Z/5",)
    assert mfp_group(3, TriDegree(1, -1, 0)).is_zero
    assert mfp_group(3, TriDegree(0, 0, 1)).is_zero
    with pytest.raises(EvenPrime):
        mfp_group(2, TriDegree(0, 0, 0))
    with pytest.raises(InvalidPrime):
        mfp_group(9, TriDegree(0, 0, 0))


def test_ring_multiplier_on_tables():
    times_ta = ring_multiplier("MF2", "ta")
    assert times_ta((0, 0, 0), "1") == [((0, 0, -1), "ta", 1)]
    times_a = ring_multiplier("MZ2", "a")
    assert times_a((2, -2, -1), "u*ta") == [((2, -3, -1), "a u*ta", 1)]
    times_u = ring_multiplier("uZ2", "u_2sigma")
    assert times_u((-2, 2), "2/u") == [((0, 0), "1", 2)]
    with pytest.raises(MixedRings):
        ring_multiplier("uF2", "u_2sigma")
    with pytest.raises(UnknownName):
        ring_multiplier("uF2", "ta")


def test_point_table_keys_are_plain_tuples():
    table = point_table("MF2", iter_box((0, 1), (-1, 0), (-1, 0)))
    assert (1, -1, -1) in table
    assert Order(2) in [s.order for s in table[(0, 0, 0)]]
    assert all(isinstance(k, tuple) for k in table)
    assert RODegree(0, 0).as_tuple() in point_table("uF2", [(0, 0)])
