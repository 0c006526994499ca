"""Degree conventions and the named-element registry."""

import pytest

from trigraded.algebra.grading import (
    RODegree,
    TriDegree,
    artin_embed,
    base_change_degree,
    betti_degree,
    geometric_fixed_degree,
    iter_box,
    list_elements,
    named_element,
    parse_degree,
    parse_tridegree,
    tau_degree,
    underlying_degree,
    xi_degree,
)
from trigraded.errors import InputError, UnknownName


def test_rho_and_tau_are_ta_multiples():
    ta = named_element("ta").degree
    assert named_element("rho").degree == ta + named_element("a").degree
    assert named_element("tau").degree == ta + named_element("u").degree


def test_realizations():
    d = TriDegree(3, -2, 5)
    assert betti_degree(d) == RODegree(3, -2)
    assert base_change_degree(d) == (1, 5)
    assert artin_embed(RODegree(1, -1)) == TriDegree(1, -1, 0)


@pytest.mark.parametrize("r, underlying, fixed", [
    (RODegree(1, 1), 2, 1),
    (RODegree(0, -1), -1, 0),
    (RODegree(2, -2), 0, 2),
])
def test_underlying_and_geometric_fixed_points(r, underlying, fixed):
    assert underlying_degree(r) == underlying
    assert geometric_fixed_degree(r) == fixed


def test_underlying_agrees_with_base_change():
    for p, q, w in iter_box((-3, 3), (-3, 3), (-2, 2)):
        d = TriDegree(p, q, w)
        assert underlying_degree(betti_degree(d)) == base_change_degree(d)[0]


def test_steenrod_generator_degrees():
    assert tau_degree(0) == TriDegree(1, 0, 0)
    assert tau_degree(2) == TriDegree(4, 3, 3)
    assert xi_degree(1) == TriDegree(1, 1, 1)
    assert named_element("xi_3").degree == TriDegree(7, 7, 7)


def test_registry_is_unique_and_complete():
    names = [e.name for e in list_elements()]
    assert len(names) == len(set(names))
    for name in ("ta", "a", "u", "rho", "tau", "eta", "a_sigma", "u_sigma", "theta",
                 "u_2sigma", "theta_Z", "tau_7", "xi_7"):
        assert name in names


def test_unknown_name():
    with pytest.raises(UnknownName):
        named_element("nu")


def test_parse_degree():
    assert parse_degree("1, -2, 3") == TriDegree(1, -2, 3)
    assert parse_degree("2,-2") == RODegree(2, -2)
    with pytest.raises(InputError):
        parse_degree("1,2,3,4")
    with pytest.raises(InputError):
        parse_tridegree("1,2")
    with pytest.raises(InputError):
        parse_degree("a,b")


def test_iter_box_order():
    assert list(iter_box((0, 1), (5, 6))) == [(0, 5), (0, 6), (1, 5), (1, 6)]
