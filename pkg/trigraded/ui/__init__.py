"""SVG charts of graded group tables."""
