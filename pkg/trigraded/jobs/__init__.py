"""One entry point per CLI subcommand."""

from __future__ import annotations
