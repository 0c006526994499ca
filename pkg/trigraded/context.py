"""Run identifiers for CLI jobs."""

from __future__ import annotations

import uuid
from datetime import datetime


def generate_run_id(prefix: str = "run") -> str:
    """Generate a unique run ID with timestamp and UUID.

    Args:
        prefix: Prefix for the run ID (e.g., 'ext', 'cta', 'bockstein')

    Returns:
        Unique run ID string like 'ext_20261018_101500_1a2b3c4d'
    """
    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    unique_id = uuid.uuid4().hex[:8]
    return f"{prefix}_{timestamp}_{unique_id}"
