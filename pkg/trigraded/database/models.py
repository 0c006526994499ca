"""SQLAlchemy database models for the Ext cache."""

from __future__ import annotations

from datetime import datetime

from sqlalchemy import DateTime, Index, Integer, String, Text
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    """Base class for all database models."""
    pass


class ExtCacheEntry(Base):
    """One computed Ext table, addressed by the hash of its parameters."""

    __tablename__ = "ext_cache"

    id: Mapped[int] = mapped_column(Integer, primary_key=True, autoincrement=True)

    cache_key: Mapped[str] = mapped_column(String(64), nullable=False)

    # Parameters the key was computed from
    generators: Mapped[int] = mapped_column(Integer, nullable=False)
    s_max: Mapped[int] = mapped_column(Integer, nullable=False)
    degree_cap: Mapped[int] = mapped_column(Integer, nullable=False)
    coeffs: Mapped[str] = mapped_column(String(8), nullable=False)  # Z or F2
    with_cocycles: Mapped[int] = mapped_column(Integer, nullable=False, default=0)

    # ExtTable.to_payload() as JSON
    payload: Mapped[str] = mapped_column(Text, nullable=False)

    created_at: Mapped[datetime] = mapped_column(DateTime, nullable=False, default=datetime.utcnow)

    __table_args__ = (
        Index("idx_unique_cache_key", "cache_key", unique=True),
        Index("idx_params", "generators", "s_max", "degree_cap", "coeffs"),
    )

    def __repr__(self) -> str:
        return (
            f"<ExtCacheEntry(key={self.cache_key[:12]}, N={self.generators}, "
            f"s_max={self.s_max}, D={self.degree_cap}, coeffs={self.coeffs})>"
        )
