import io
import random
from pathlib import Path

import pytest

from trigraded.algebra.grading import iter_box
from trigraded.algebra.groups import F2, FREE, GroupPresentation, Order
from trigraded.algebra.point import point_table
from trigraded.data.tables import table_to_records, write_records
from trigraded.errors import EmptyRange, InputError, UnknownName, UsageError
from trigraded.jobs import chart as chart_job
from trigraded.ui.charts import count_glyphs, glyph_for, render
from trigraded.ui.models import ChartSpec, EdgeStyle, Glyph

SNAPSHOTS = Path(__file__).parent / "snapshots"

UF2_SPEC = dict(
    x_range=(-5, 3),
    y_range=(-3, 6),
    edges=[EdgeStyle(element="a_sigma"), EdgeStyle(element="u_sigma", color="blue")],
    title="uF2",
)
UZ2_SPEC = dict(
    x_range=(-9, 6),
    y_range=(-5, 9),
    edges=[EdgeStyle(element="u_2sigma")],
    title="uZ2",
)


def _table(ring, spec):
    return point_table(ring, iter_box(spec["x_range"], spec["y_range"]))


def _match_snapshot(name, document):
    path = SNAPSHOTS / name
    assert path.exists(), f"missing golden chart {path}"
    assert document == path.read_text(encoding="utf-8")


def test_render_is_deterministic():
    table = _table("uF2", UF2_SPEC)
    spec = ChartSpec(**UF2_SPEC)
    assert render(table, spec, ring="uF2") == render(dict(reversed(list(table.items()))), spec, ring="uF2")


def test_empty_table_draws_grid_only():
    document = render({}, ChartSpec(x_range=(0, 2), y_range=(0, 1)))
    assert count_glyphs(document) == 0
    assert '<g id="grid">' in document
    assert document.endswith("</svg>\n")


def test_empty_range():
    with pytest.raises(EmptyRange):
        render({}, ChartSpec(x_range=(3, 1), y_range=(0, 0)))


def test_glyph_count_matches_summands():
    rng = random.Random(7)
    orders = [FREE, F2, Order(4), Order(8)]
    for _ in range(100):
        table = {}
        for _ in range(rng.randint(0, 12)):
            d = (rng.randint(-3, 3), rng.randint(-3, 3))
            n = rng.randint(0, 3)
            table[d] = GroupPresentation.of(*((rng.choice(orders), f"g{i}") for i in range(n)))
        document = render(table, ChartSpec(x_range=(-3, 3), y_range=(-3, 3)))
        assert count_glyphs(document) == sum(len(g) for g in table.values())


def test_hidden_coordinate_filters_tri_degrees():
    table = {
        (0, 0, 0): GroupPresentation.of((F2, "1")),
        (0, 0, -1): GroupPresentation.of((F2, "1*ta^1")),
    }
    spec = ChartSpec(x_range=(0, 0), y_range=(0, 0))
    assert count_glyphs(render(table, spec)) == 1
    spec = ChartSpec(x_range=(0, 0), y_range=(0, 0), fixed={"w": -1})
    assert "1*ta^1" in render(table, spec)


def test_glyph_choice():
    spec = ChartSpec(x_range=(0, 0), y_range=(0, 0))
    assert glyph_for(FREE, spec) is Glyph.SQUARE
    assert glyph_for(F2, spec) is Glyph.DOT
    assert glyph_for(Order(4), spec) is Glyph.RING
    spec = ChartSpec(x_range=(0, 0), y_range=(0, 0), glyphs={"Z/2": "ring"})
    assert glyph_for(F2, spec) is Glyph.RING


def test_repeated_labels_are_offset():
    table = {(0, 0): GroupPresentation.of((F2, "x"), (F2, "x"), (FREE, "x"))}
    document = render(table, ChartSpec(x_range=(0, 0), y_range=(0, 0)))
    assert count_glyphs(document) == 3
    assert '<rect x="48.0" y="56.0"' in document
    assert '<circle cx="60.0" cy="60.0"' in document
    assert '<circle cx="68.0" cy="60.0"' in document


def test_twice_edge_is_red():
    table = _table("uZ2", UZ2_SPEC)
    document = render(table, ChartSpec(**UZ2_SPEC), ring="uZ2")
    assert 'stroke="red"' in document
    assert "<rect" in document
    uf2 = render(_table("uF2", UF2_SPEC), ChartSpec(**UF2_SPEC), ring="uF2")
    assert 'stroke="red"' not in uf2
    assert 'stroke="blue"' in uf2


def test_edges_from_product_records():
    from trigraded.data.schemas import ProductEdgeRecord

    table = {(0, 0): GroupPresentation.of((FREE, "1")), (0, -1): GroupPresentation.of((F2, "a"))}
    spec = ChartSpec(x_range=(0, 0), y_range=(-1, 0), edges=[EdgeStyle(element="a_sigma", color="green")])
    edge = ProductEdgeRecord(element="a_sigma", source=([0, 0], "1"), target=([0, -1], "a"))
    outside = ProductEdgeRecord(element="a_sigma", source=([0, 0], "1"), target=([5, 5], "x"))
    document = render(table, spec, products=[edge, outside])
    assert document.count('stroke="green"') == 1


def test_chart_models_validate():
    with pytest.raises(UnknownName):
        EdgeStyle(element="not_an_element")
    with pytest.raises(ValueError):
        ChartSpec(x_range=(0, 1), y_range=(0, 1), cell_size=4)


def test_uf2_snapshot():
    document = render(_table("uF2", UF2_SPEC), ChartSpec(**UF2_SPEC), ring="uF2")
    _match_snapshot("uF2.svg", document)


def test_uz2_snapshot():
    document = render(_table("uZ2", UZ2_SPEC), ChartSpec(**UZ2_SPEC), ring="uZ2")
    _match_snapshot("uZ2.svg", document)


def test_chart_job(tmp_path):
    path = tmp_path / "uf2.jsonl"
    with open(path, "w", encoding="utf-8") as handle:
        write_records(table_to_records(_table("uF2", UF2_SPEC)), handle)
    out = io.StringIO()
    assert chart_job.run(str(path), edges="a_sigma", ring="uF2", box="-5:3,-3:6", out=out) == 0
    assert count_glyphs(out.getvalue()) == sum(len(g) for g in _table("uF2", UF2_SPEC).values())

    target = tmp_path / "chart.svg"
    chart_job.run(str(path), out_path=str(target), title="uF2")
    assert target.read_text(encoding="utf-8").startswith("<?xml")

    with pytest.raises(UsageError):
        chart_job.run(str(path), edges="a_sigma")
    with pytest.raises(InputError):
        chart_job.parse_fixed(["x=1"])
    assert chart_job.parse_fixed(["w=-2"]) == {"w": -2}
