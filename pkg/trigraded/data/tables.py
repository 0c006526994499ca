"""Reading and writing group tables as JSON lines or TSV."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, TextIO, Tuple, Union

from pydantic import ValidationError

from trigraded.algebra.grading import Degree
from trigraded.algebra.groups import GroupPresentation
from trigraded.data.schemas import (
    BocksteinCheckRecord,
    ConversionRecord,
    CtaSummandRecord,
    EInfinityRecord,
    ElementRecord,
    ExtRecord,
    GroupTableRecord,
    MembershipRecord,
    PageRecord,
    ProductEdgeRecord,
    ProductRecord,
    RankRecord,
    RegionRecord,
    RegionViolationRecord,
)
from trigraded.errors import InputError

logger = logging.getLogger(__name__)

GroupTable = Dict[Degree, GroupPresentation]
Range = Tuple[int, int]

# Record models each subcommand may write, tried in order.
OUTPUT_MODELS = {
    "degree": (ElementRecord, ConversionRecord),
    "point": (GroupTableRecord,),
    "steenrod rank": (RankRecord,),
    "steenrod basis": (RankRecord,),
    "steenrod mul": (ProductRecord,),
    "ext": (ExtRecord, GroupTableRecord),
    "cta": (CtaSummandRecord, GroupTableRecord),
    "bockstein run": (PageRecord, EInfinityRecord),
    "bockstein check": (BocksteinCheckRecord,),
    "regions check": (RegionViolationRecord,),
    "regions member": (MembershipRecord,),
    "regions list": (RegionRecord,),
}


def parse_box(text: str, dims: Optional[int] = None) -> Tuple[Range, ...]:
    """Parse ``pmin:pmax,qmin:qmax[,wmin:wmax]`` into inclusive ranges."""
    ranges = []
    for part in text.split(","):
        lo, sep, hi = part.strip().partition(":")
        try:
            if not sep:
                lo = hi = int(lo)
            ranges.append((int(lo), int(hi)))
        except ValueError:
            raise InputError(f"bad range {part!r} in box {text!r}") from None
    if dims is not None and len(ranges) != dims:
        raise InputError(f"box {text!r} needs {dims} ranges, got {len(ranges)}")
    for lo, hi in ranges:
        if lo > hi:
            raise InputError(f"empty range {lo}:{hi} in box {text!r}")
    return tuple(ranges)


def parse_record(line: str, lineno: int = 0) -> GroupTableRecord:
    try:
        return GroupTableRecord.model_validate_json(line)
    except ValidationError as exc:
        raise InputError(f"line {lineno}: {exc.errors()[0]['msg']}") from None


def parse_output(command: str, line: str):
    """Validate one line written by ``command`` (e.g. ``"steenrod mul"``) against its record models."""
    try:
        models = OUTPUT_MODELS[command]
    except KeyError:
        raise InputError(f"no JSON records for command {command!r}") from None
    messages = []
    for model in models:
        try:
            return model.model_validate_json(line)
        except ValidationError as exc:
            messages.append(f"{model.__name__}: {exc.errors()[0]['msg']}")
    raise InputError(f"{command} wrote an unrecognized record ({'; '.join(messages)})")


def read_records(source: Union[str, Path, TextIO]) -> List[GroupTableRecord]:
    if isinstance(source, (str, Path)):
        try:
            with open(source, encoding="utf-8") as handle:
                return read_records(handle)
        except FileNotFoundError:
            raise InputError(f"table file not found: {source}") from None
    records = []
    for lineno, line in enumerate(source, start=1):
        if line.strip():
            records.append(parse_record(line, lineno))
    logger.debug(f"Read {len(records)} records")
    return records


def records_to_table(records: Iterable[GroupTableRecord]) -> GroupTable:
    table: GroupTable = {}
    for record in records:
        key = record.degree_key()
        table[key] = table.get(key, GroupPresentation.zero()) + record.group()
    return table


def read_table(source: Union[str, Path, TextIO]) -> GroupTable:
    return records_to_table(read_records(source))


def table_to_records(table: GroupTable, nonzero_only: bool = True) -> List[GroupTableRecord]:
    return [
        GroupTableRecord.from_group(degree, group)
        for degree, group in sorted(table.items())
        if group or not nonzero_only
    ]


def write_records(records: Iterable[GroupTableRecord], out: TextIO) -> int:
    count = 0
    for record in records:
        out.write(record.to_line() + "\n")
        count += 1
    return count


def format_tsv(record: GroupTableRecord) -> str:
    summands = " ".join(f"{order}{{{label}}}" for order, label in record.summands) or "0"
    return "\t".join([*(str(x) for x in record.degree), summands])


def write_tsv(records: Iterable[GroupTableRecord], out: TextIO) -> int:
    count = 0
    for record in records:
        out.write(format_tsv(record) + "\n")
        count += 1
    return count


def read_product_edges(source: Union[str, Path]) -> List[ProductEdgeRecord]:
    edges = []
    try:
        with open(source, encoding="utf-8") as handle:
            for lineno, line in enumerate(handle, start=1):
                if not line.strip():
                    continue
                try:
                    edges.append(ProductEdgeRecord.model_validate_json(line))
                except ValidationError as exc:
                    raise InputError(f"{source}:{lineno}: {exc.errors()[0]['msg']}") from None
    except FileNotFoundError:
        raise InputError(f"product table not found: {source}") from None
    return edges
