"""Shared fixtures: an isolated Ext cache and session-wide Ext tables."""

from __future__ import annotations

import pytest

from trigraded.algebra.cobar import ext_tables_for
from trigraded.config import settings
from trigraded.database import connection


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    """Point the Ext cache at a fresh SQLite file for every test."""
    monkeypatch.setattr(settings, "cache_dir", str(tmp_path))
    monkeypatch.setattr(settings, "database_url", f"sqlite:///{tmp_path / 'ext_cache.db'}")
    yield tmp_path
    connection.close_connections()


@pytest.fixture(scope="session")
def ext_tables():
    """Integral and mod-2 Ext with s <= 8 through internal degree 16."""
    return ext_tables_for(16, 8)
