"""SQLite storage for cached Ext tables."""
