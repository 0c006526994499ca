"""Data Access Object (DAO) for the content-addressed Ext cache."""

from __future__ import annotations

import hashlib
import json
import logging
from datetime import datetime
from typing import List, Optional

from sqlalchemy import delete, select
from sqlalchemy.dialects.postgresql import insert as pg_insert
from sqlalchemy.dialects.sqlite import insert as sqlite_insert

from trigraded.algebra.cobar import Coefficients, ExtTable
from trigraded.database.connection import create_tables, get_sync_session, is_sqlite
from trigraded.database.models import ExtCacheEntry

logger = logging.getLogger(__name__)


def ext_cache_key(N: int, s_max: int, D: int, coeffs: Coefficients, cocycles: bool = False) -> str:
    """sha256 of the canonical JSON of the table parameters."""
    canonical = json.dumps(
        {"N": N, "s_max": s_max, "D": D, "coeffs": Coefficients(coeffs).value, "cocycles": bool(cocycles)},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def fetch_ext_table(
    N: int, s_max: int, D: int, coeffs: Coefficients, cocycles: bool = False
) -> Optional[ExtTable]:
    """Return the cached table for these parameters, or None."""
    create_tables()
    key = ext_cache_key(N, s_max, D, coeffs, cocycles)
    session = get_sync_session()
    try:
        entry = session.execute(
            select(ExtCacheEntry).where(ExtCacheEntry.cache_key == key)
        ).scalar_one_or_none()
        if entry is None:
            logger.debug(f"Ext cache miss for {key[:12]}")
            return None
        logger.debug(f"Ext cache hit for {key[:12]}")
        return ExtTable.from_payload(json.loads(entry.payload))
    except Exception as e:
        logger.error(f"Error reading Ext cache: {e}", exc_info=True)
        raise
    finally:
        session.close()


def upsert_statement(record_data: dict):
    """INSERT ... ON CONFLICT (cache_key) DO UPDATE for the configured database."""
    if is_sqlite():
        stmt = sqlite_insert(ExtCacheEntry).values(**record_data)
    else:
        stmt = pg_insert(ExtCacheEntry).values(**record_data)
    return stmt.on_conflict_do_update(
        index_elements=["cache_key"],
        set_={
            "payload": stmt.excluded.payload,
            "created_at": stmt.excluded.created_at,
        },
    )


def store_ext_table(table: ExtTable, cocycles: bool = False) -> str:
    """Upsert a computed table; returns its cache key."""
    create_tables()
    key = ext_cache_key(table.generators, table.s_max, table.degree_cap, table.coeffs, cocycles)
    record_data = {
        "cache_key": key,
        "generators": table.generators,
        "s_max": table.s_max,
        "degree_cap": table.degree_cap,
        "coeffs": table.coeffs.value,
        "with_cocycles": int(bool(cocycles)),
        "payload": json.dumps(table.to_payload(), separators=(",", ":")),
        "created_at": datetime.utcnow(),
    }
    session = get_sync_session()
    try:
        session.execute(upsert_statement(record_data))
        session.commit()
        db_type = "SQLite" if is_sqlite() else "PostgreSQL"
        logger.info(
            f"Cached Ext({table.coeffs.value}) N={table.generators} s_max={table.s_max} "
            f"D={table.degree_cap} in {db_type}"
        )
        return key
    except Exception as e:
        session.rollback()
        logger.error(f"Error storing Ext table: {e}", exc_info=True)
        raise
    finally:
        session.close()


def list_ext_tables() -> List[dict]:
    """Summaries of every cached table, newest first."""
    create_tables()
    session = get_sync_session()
    try:
        entries = session.execute(
            select(ExtCacheEntry).order_by(ExtCacheEntry.created_at.desc())
        ).scalars().all()
        return [
            {
                "key": e.cache_key,
                "generators": e.generators,
                "s_max": e.s_max,
                "degree_cap": e.degree_cap,
                "coeffs": e.coeffs,
                "cocycles": bool(e.with_cocycles),
                "created_at": e.created_at.isoformat(timespec="seconds"),
            }
            for e in entries
        ]
    finally:
        session.close()


def clear_ext_tables() -> int:
    """Delete every cached table; returns the number removed."""
    create_tables()
    session = get_sync_session()
    try:
        result = session.execute(delete(ExtCacheEntry))
        session.commit()
        logger.info(f"Removed {result.rowcount} cached Ext tables")
        return result.rowcount
    except Exception as e:
        session.rollback()
        logger.error(f"Error clearing Ext cache: {e}", exc_info=True)
        raise
    finally:
        session.close()
