"""Record schemas, table files and the Ext cache."""
