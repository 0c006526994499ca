"""Database connection and session management."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, sessionmaker

from trigraded.config import settings
from trigraded.database.models import Base

logger = logging.getLogger(__name__)

_engines: Dict[str, Engine] = {}
_session_factories: Dict[str, sessionmaker] = {}


def current_database_url() -> str:
    """The configured URL, read at call time so tests can point it elsewhere."""
    return settings.database_url or f"sqlite:///{Path(settings.cache_dir) / 'ext_cache.db'}"


def is_sqlite(database_url: Optional[str] = None) -> bool:
    return (database_url or current_database_url()).startswith("sqlite")


def get_engine(database_url: Optional[str] = None) -> Engine:
    """Create (once per URL) and return a sync engine."""
    url = database_url or current_database_url()
    if url not in _engines:
        if url.startswith("sqlite:///"):
            Path(url[len("sqlite:///"):]).parent.mkdir(parents=True, exist_ok=True)
        _engines[url] = create_engine(
            url,
            echo=False,  # Set to True for SQL query logging
            connect_args={"check_same_thread": False} if is_sqlite(url) else {},
        )
        _session_factories[url] = sessionmaker(autocommit=False, autoflush=False, bind=_engines[url])
        logger.debug(f"Opened database engine for {url}")
    return _engines[url]


def get_sync_session(database_url: Optional[str] = None) -> Session:
    """Get a synchronous database session.

    Usage:
        session = get_sync_session()
        try:
            # Use session
            session.commit()
        except:
            session.rollback()
            raise
        finally:
            session.close()

    Returns:
        SQLAlchemy Session
    """
    url = database_url or current_database_url()
    get_engine(url)
    return _session_factories[url]()


def create_tables(database_url: Optional[str] = None) -> None:
    """Create all database tables (idempotent)."""
    Base.metadata.create_all(bind=get_engine(database_url))


def drop_tables(database_url: Optional[str] = None) -> None:
    """Drop all database tables.

    WARNING: This will delete every cached table.
    """
    logger.warning("Dropping all database tables...")
    Base.metadata.drop_all(bind=get_engine(database_url))


def close_connections() -> None:
    """Dispose every engine opened by this process."""
    for engine in _engines.values():
        engine.dispose()
    _engines.clear()
    _session_factories.clear()
