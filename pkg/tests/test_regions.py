import io
import json

import pytest

from trigraded.algebra.grading import TriDegree, iter_box
from trigraded.algebra.groups import F2, FREE, GroupPresentation
from trigraded.algebra.regions import (
    REGIONS,
    HalfSpace,
    RegionSpec,
    list_regions,
    region_by_name,
    region_member,
    validate,
)
from trigraded.data.tables import table_to_records, write_records
from trigraded.errors import InputError, UnknownObject, ValidationFailed
from trigraded.jobs import regions as regions_job

BOX = ((-6, 10), (-8, 8), (-4, 8))


def test_nine_regions():
    assert sorted(REGIONS) == list(range(1, 10))
    assert [spec.object_id for spec in list_regions()] == list(range(1, 10))


@pytest.mark.parametrize(
    "object_id, degree, expected",
    [
        (1, (0, 0, 0), True),
        (1, (-1, 5, -3), True),
        (1, (-1, 0, 0), False),
        (2, (0, 0, 0), True),
        (2, (1, -1, 1), True),
        (2, (-1, 3, 2), True),
        (2, (0, 0, -1), False),
        (2, (3, 0, 1), False),
        (5, (0, 0, 0), True),
        (5, (2, 0, 1), True),
        (5, (1, 0, 0), False),
        (8, (0, 5, 0), True),
        (8, (-1, 0, 0), False),
        (8, (0, 0, -1), False),
    ],
)
def test_membership(object_id, degree, expected):
    assert region_member(object_id, TriDegree(*degree)) is expected


def test_periods_preserve_membership():
    for spec in list_regions():
        for period in spec.periods:
            shift = TriDegree(*period)
            for coords in iter_box(*BOX):
                d = TriDegree(*coords)
                assert spec.contains(d) == spec.contains(d + shift), (spec.name, d, period)


def test_clause_must_respect_period():
    with pytest.raises(ValueError):
        RegionSpec(10, "bad", ((HalfSpace((1, 0, 0)),),), periods=((1, 0, 0),))


def test_describe():
    assert REGIONS[8].describe() == "{p >= 0, w >= 0}"
    assert str(HalfSpace((-1, 0, 1), -2)) == "-p + w - 2 >= 0"
    assert str(HalfSpace((1, 1, -1))) == "p + q - w >= 0"


def test_lookup_by_name_or_number():
    assert region_by_name("Cta") == 2
    assert region_by_name("cacta") == 5
    assert region_by_name(" 8 ") == 8
    assert region_by_name("S2[a^-1,ta^-1]") == 9
    for bad in ("0", "10", "kq"):
        with pytest.raises(UnknownObject):
            region_by_name(bad)


def test_validate_reports_outside_degrees():
    table = {
        TriDegree(0, 0, 0): GroupPresentation.of((FREE, "1")),
        TriDegree(0, 0, -1): GroupPresentation.of((F2, "x")),
        TriDegree(-2, 0, -1): GroupPresentation.zero(),
    }
    assert validate(table, 2) == [TriDegree(0, 0, -1)]
    assert validate({TriDegree(0, 0, 0): table[TriDegree(0, 0, 0)]}, 2) == []


def _write_table(path, table):
    with open(path, "w", encoding="utf-8") as handle:
        write_records(table_to_records(table), handle)
    return str(path)


def test_check_job(tmp_path):
    good = _write_table(tmp_path / "good.jsonl", {TriDegree(1, -1, 1): GroupPresentation.of((F2, "x"))})
    out = io.StringIO()
    assert regions_job.check("2", good, out=out) == 0
    assert out.getvalue() == ""

    bad = _write_table(tmp_path / "bad.jsonl", {TriDegree(-1, 0, 0): GroupPresentation.of((F2, "y"))})
    out = io.StringIO()
    with pytest.raises(ValidationFailed):
        regions_job.check("Cta", bad, out=out)
    record = json.loads(out.getvalue())
    assert record == {"object": 2, "degree": [-1, 0, 0], "summands": [["Z/2", "y"]]}


def test_check_needs_tri_degrees(tmp_path):
    from trigraded.algebra.grading import RODegree

    path = _write_table(tmp_path / "ro.jsonl", {RODegree(0, 0): GroupPresentation.of((F2, "1"))})
    with pytest.raises(InputError):
        regions_job.check("1", path)


def test_member_and_show():
    out = io.StringIO()
    regions_job.member("CtaAinv", "3,-7,0", out=out)
    assert json.loads(out.getvalue()) == {"object": 8, "degree": [3, -7, 0], "member": True}
    out = io.StringIO()
    regions_job.show(out=out)
    lines = [json.loads(line) for line in out.getvalue().splitlines()]
    assert [line["object"] for line in lines] == list(range(1, 10))
    assert lines[1]["name"] == "Cta"
