"""Inspect or empty the Ext cache."""

from __future__ import annotations

import logging
from typing import Optional, TextIO

from trigraded.data.dao import clear_ext_tables, list_ext_tables
from trigraded.jobs.output import emit

logger = logging.getLogger(__name__)


def list_entries(out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    entries = list_ext_tables()
    for entry in entries:
        emit(entry, out)
    logger.debug(f"Cache job {job_id}: {len(entries)} entries")
    return 0


def clear(out: Optional[TextIO] = None, job_id: Optional[str] = None) -> int:
    removed = clear_ext_tables()
    emit({"removed": removed}, out)
    return 0
