"""Adams-Novikov Ext tables, read through the on-disk cache."""

from __future__ import annotations

import logging
from typing import List, Optional, TextIO

from trigraded.algebra.cobar import Coefficients, ExtTable, ExtTables, bockstein_imbalance, ext_tables_for
from trigraded.algebra.hopf import generators_for
from trigraded.data.dao import fetch_ext_table, store_ext_table
from trigraded.data.schemas import ExtRecord, GroupTableRecord
from trigraded.errors import ValidationFailed
from trigraded.jobs.output import emit

logger = logging.getLogger(__name__)


def load_ext_tables(D: int, s_max: int, cocycles: bool = False, use_cache: bool = True) -> ExtTables:
    """Integral and mod-2 Ext through degree D, computing and caching on a miss."""
    D = max(D, 2)
    N = generators_for(D)
    if use_cache:
        integral = fetch_ext_table(N, s_max, D, Coefficients.Z, cocycles)
        mod_two = fetch_ext_table(N, s_max, D, Coefficients.F2, cocycles)
        if integral is not None and mod_two is not None:
            logger.info(f"Using cached Ext tables N={N} s_max={s_max} D={D}")
            return ExtTables(integral=integral, mod_two=mod_two)
    tables = ext_tables_for(D, s_max, cocycles)
    if use_cache:
        store_ext_table(tables.integral, cocycles)
        store_ext_table(tables.mod_two, cocycles)
    return tables


def _records(table: ExtTable, as_table: bool) -> List:
    records = []
    for (s, t), group in table.nonzero():
        if as_table:
            records.append(GroupTableRecord(degree=[t - s, s], summands=group.to_pairs()))
            continue
        cocycles = None
        if table.cocycles:
            cocycles = {label: table.cocycles[label] for label in group.labels() if label in table.cocycles}
        records.append(
            ExtRecord(coeffs=table.coeffs, s=s, t=t, summands=group.to_pairs(), cocycles=cocycles or None)
        )
    return records


def run(
    s_max: int,
    degree: int,
    coeffs: str = "Z",
    cocycles: bool = False,
    as_table: bool = False,
    check: bool = False,
    use_cache: bool = True,
    out: Optional[TextIO] = None,
    job_id: Optional[str] = None,
) -> int:
    logger.info(f"Ext job {job_id}: coeffs={coeffs} s_max={s_max} D={degree} cache={use_cache}")
    tables = load_ext_tables(degree, s_max, cocycles, use_cache)
    wanted = [Coefficients.Z, Coefficients.F2] if coeffs == "both" else [Coefficients(coeffs)]
    count = 0
    for c in wanted:
        for record in _records(tables.table(c), as_table):
            emit(record, out)
            count += 1
    logger.info(f"Ext job {job_id} complete: {count} nonzero bidegrees")
    if check:
        bad = bockstein_imbalance(tables.integral, tables.mod_two)
        if bad:
            raise ValidationFailed(f"2-Bockstein rank accounting fails at (s, t) = {bad}")
        logger.info(f"Ext job {job_id}: 2-Bockstein rank accounting balances")
    return 0
