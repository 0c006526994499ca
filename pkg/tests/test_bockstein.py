"""ta-Bockstein spectral sequences against hand computations and direct homology."""

from collections import Counter

import numpy as np
import pytest
from sympy import Matrix

from trigraded.algebra import bockstein
from trigraded.algebra.bockstein import FilteredComplex, abutment_check, leibniz_close
from trigraded.algebra.grading import TriDegree
from trigraded.algebra.linalg import f2_rank
from trigraded.data.schemas import BocksteinInputModel
from trigraded.errors import InhomogeneousDifferential, InputError, LeibnizContradiction, NotAComplex
from trigraded.jobs.bockstein import load_input


def _input(generators, differentials, relations=(), box=None):
    return BocksteinInputModel(
        name="test",
        generators=[{"label": g, "degree": d, "torsion": t} for g, d, t in generators],
        relations=list(relations),
        differentials=[{"page": r, "source": s, "target": t} for r, s, t in differentials],
        box=box,
    ).to_input()


# ta-linear maps between free F2[ta]-modules: generator -> [(ta exponent, generator), ...].

def _compose(f, g):
    out = {}
    for x, terms in g.items():
        acc = Counter()
        for j, y in terms:
            for i, z in f.get(y, ()):
                acc[(i + j, z)] += 1
        out[x] = sorted(t for t, c in acc.items() if c % 2)
    return out


def _add(f, g):
    return {x: sorted(set(f.get(x, ())) ^ set(g.get(x, ()))) for x in set(f) | set(g)}


def _random_complex(rng, index):
    """Pieces g -> ta^r h plus free generators, conjugated by a random filtered automorphism.

    The automorphism mixes generators inside a cell and adds ta^j multiples of generators j steps
    up in weight, so one source picks up differentials of several ta-orders. Weights stay in 0..3.
    """
    degrees, pieces = {}, {}
    size = int(rng.integers(2, 7))
    n = 0
    while len(degrees) < size:
        p, q = int(rng.integers(1, 3)), int(rng.integers(0, 2))
        if rng.random() < 0.25 or len(degrees) == size - 1:
            degrees[f"f{n}"] = TriDegree(p, q, int(rng.integers(0, 4)))
        else:
            w = int(rng.integers(0, 3))
            r = int(rng.integers(1, 4 - w))
            degrees[f"s{n}"] = TriDegree(p, q, w)
            degrees[f"t{n}"] = bockstein.target_degree(degrees[f"s{n}"], r)
            pieces[f"s{n}"] = [(r, f"t{n}")]
        n += 1
    d = {g: pieces.get(g, []) for g in degrees}

    identity = {g: [(0, g)] for g in degrees}
    change, change_inverse = {}, {}
    cells = {}
    for g, c in sorted(degrees.items()):
        cells.setdefault(c, []).append(g)
    for old in cells.values():
        m = len(old)
        while True:
            a = rng.integers(0, 2, size=(m, m))
            if f2_rank(a) == m:
                break
        inverse = Matrix(a.tolist()).inv_mod(2)
        for j, g in enumerate(old):
            change[g] = [(0, old[i]) for i in range(m) if a[i, j]]
            change_inverse[g] = [(0, old[i]) for i in range(m) if int(inverse[i, j]) % 2]

    raise_weight = {g: [] for g in degrees}
    for g, c in degrees.items():
        for h, e in sorted(degrees.items()):
            if (e.p, e.q) == (c.p, c.q) and e.w > c.w and rng.random() < 0.4:
                raise_weight[g].append((e.w - c.w, h))
    unipotent_inverse, power = identity, identity
    for _ in range(4):
        power = _compose(raise_weight, power)
        unipotent_inverse = _add(unipotent_inverse, power)

    phi = _compose(change, _add(identity, raise_weight))
    phi_inverse = _compose(unipotent_inverse, change_inverse)
    twisted = _compose(phi, _compose(d, phi_inverse))
    return FilteredComplex(f"random{index}", degrees, {g: t for g, t in twisted.items() if t})


def test_single_differential():
    inp = _input([("x", [1, 0, 0], "F2"), ("y", [0, 0, 1], "F2")], [(1, "x", "y")])
    result = bockstein.run(inp)
    assert result.page(1).cells[TriDegree(0, 0, 1)].shape() == ("Z/2",)
    assert result.page(2).cells[TriDegree(0, 0, 1)].is_zero
    assert result.page(2).cells[TriDegree(1, 0, 0)].is_zero
    cell = result.e_infinity()[TriDegree(0, 0, 1)]
    assert cell.free.is_zero
    assert cell.torsion[1].labels() == ["y"]
    assert result.associated_graded(TriDegree(0, 0, 1), 0).shape() == ("Z/2",)
    assert result.associated_graded(TriDegree(0, 0, 0), 1).is_zero


def test_cone_of_ta_squared():
    inp = _input([("x", [1, 0, 0], "F2"), ("y", [0, 0, 2], "F2")], [(2, "x", "y")])
    result = bockstein.run(inp)
    assert result.r_max == 2
    assert result.page(2).cells[TriDegree(0, 0, 2)].shape() == ("Z/2",)
    assert result.page(3).cells[TriDegree(0, 0, 2)].is_zero
    assert set(result.e_infinity()[TriDegree(0, 0, 2)].torsion) == {2}
    assert result.associated_graded(TriDegree(0, 0, 1), 1).labels() == ["y*ta^1"]
    assert result.filtration_jumps(TriDegree(0, 0, 2), 3) == [0]
    assert result.filtration_jumps(TriDegree(0, 0, 1), 3) == [1]
    assert result.filtration_jumps(TriDegree(0, 0, 3), 3) == [1]


def test_integral_generators():
    inp = _input([("x", [1, 0, 0], "Z2adic"), ("y", [0, 0, 1], "Z2adic")], [(1, "x", "2 y")])
    result = bockstein.run(inp)
    assert result.page(1).cells[TriDegree(0, 0, 1)].shape() == ("Z2",)
    assert result.page(2).cells[TriDegree(0, 0, 1)].shape() == ("Z/2",)
    cell = result.e_infinity()[TriDegree(0, 0, 1)]
    assert cell.free.shape() == ("Z/2",)
    assert cell.torsion[1].shape() == ("Z2",)
    assert result.e_infinity()[TriDegree(1, 0, 0)].is_zero


def test_leibniz_closure_on_products():
    inp = _input(
        [("x", [1, 0, 0], "F2"), ("y", [0, 0, 1], "F2")],
        [(1, "x", "y")],
        relations=["x^2", "y^3"],
    )
    closed = leibniz_close(inp)
    xy = (1, 1)
    assert closed.values[1][xy] == {(0, 2): 1}
    assert (2, 0) not in closed.values[1]


def test_relation_that_is_not_closed():
    with pytest.raises(LeibnizContradiction):
        leibniz_close(_input(
            [("x", [1, 0, 0], "F2"), ("y", [0, 0, 1], "F2")],
            [(1, "x", "y")],
            relations=["x y"],
        ))


def test_inhomogeneous_differential():
    with pytest.raises(InhomogeneousDifferential):
        leibniz_close(_input([("x", [1, 0, 0], "F2"), ("y", [0, 0, 2], "F2")], [(1, "x", "y")]))


def test_d_squared_is_checked():
    inp = _input(
        [("x", [2, 0, 0], "F2"), ("y", [1, 0, 1], "F2"), ("z", [0, 0, 2], "F2")],
        [(1, "x", "y"), (1, "y", "z")],
    )
    with pytest.raises(LeibnizContradiction):
        bockstein.run(inp)


def test_unknown_generator_in_differential():
    with pytest.raises(InputError):
        _input([("x", [1, 0, 0], "F2")], [(1, "z", "x")])


def test_oracle_rejects_non_complex():
    with pytest.raises(NotAComplex):
        FilteredComplex(
            "bad",
            {"x": TriDegree(2, 0, 0), "y": TriDegree(1, 0, 1), "z": TriDegree(0, 0, 2)},
            {"x": [(1, "y")], "y": [(1, "z")]},
        )


def test_abutment_on_random_complexes():
    rng = np.random.default_rng(20261018)
    for index in range(20):
        oracle = _random_complex(rng, index)
        result = bockstein.run(oracle.bockstein_input())
        assert abutment_check(result, oracle), oracle


def test_zigzag_lifts_to_longer_differential():
    # d z = ta^2 y and d x = ta y + ta^3 w, so d(z + ta x) = ta^4 w.
    oracle = FilteredComplex(
        "zigzag",
        {"z": TriDegree(1, 0, 0), "y": TriDegree(0, 0, 2), "x": TriDegree(1, 0, 1), "w": TriDegree(0, 0, 4)},
        {"z": [(2, "y")], "x": [(1, "y"), (3, "w")]},
    )
    assert oracle.page_differential(TriDegree(1, 0, 0), 4) == {"z": ["w"]}
    assert oracle.page_differential(TriDegree(1, 0, 1), 3) == {}
    inp = oracle.bockstein_input()
    assert [(d.page, d.source) for d in inp.differentials] == [(1, "x"), (2, "z"), (4, "z")]

    result = bockstein.run(inp)
    assert result.r_max == 4
    assert abutment_check(result, oracle)
    e_inf = result.e_infinity()
    assert set(e_inf[TriDegree(0, 0, 2)].torsion) == {1}
    assert set(e_inf[TriDegree(0, 0, 4)].torsion) == {4}
    assert e_inf[TriDegree(1, 0, 0)].is_zero
    assert e_inf[TriDegree(1, 0, 1)].is_zero


def test_kq_dataset():
    inp = load_input("kq")
    assert [g.label for g in inp.generators] == ["a", "u", "u2", "h1", "v1sq"]
    closed = leibniz_close(inp, inp.box)
    assert closed.pages == [1]
    result = bockstein.run(inp)
    assert result.page(1).cells[TriDegree(2, -2, 0)].labels() == ["u2"]
    assert result.page(2).cells[TriDegree(2, -2, 0)].is_zero
    assert result.page(1).cells[TriDegree(1, -2, 1)].labels() == ["a^2 u h1"]
    assert result.page(2).cells[TriDegree(1, -2, 1)].is_zero
    for d in result.reported():
        sizes = [len(result.page(r).cells[d]) for r in range(1, result.r_max + 2)]
        assert sizes == sorted(sizes, reverse=True)
