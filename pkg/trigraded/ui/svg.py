"""Minimal SVG document builder."""

from __future__ import annotations

from xml.sax.saxutils import escape, quoteattr


def _attrs(extra: dict) -> str:
    return "".join(f" {key.replace('_', '-')}={quoteattr(str(value))}" for key, value in extra.items())


class SVG:
    def __init__(self):
        self.svg = ""

    def header(self, width: float, height: float) -> None:
        self.svg += (
            '<?xml version="1.0" standalone="no"?>\n'
            f'<svg version="1.1" width="{width:.0f}" height="{height:.0f}" '
            f'viewBox="0 0 {width:.0f} {height:.0f}" xmlns="http://www.w3.org/2000/svg">\n'
        )

    def style(self, css: str) -> None:
        self.svg += f"<style>\n{css}\n</style>\n"

    def group_start(self, attr: dict) -> None:
        g_attr = {key: value for key, value in attr.items() if key in ("id", "class")}
        self.svg += f"<g{_attrs(g_attr)}>\n"
        if "title" in attr:
            self.svg += f"<title>{escape(attr['title'])}</title>\n"

    def group_end(self) -> None:
        self.svg += "</g>\n"

    def line(self, x1: float, y1: float, x2: float, y2: float, **extra) -> None:
        self.svg += f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}"{_attrs(extra)}/>\n'

    def circle(self, cx: float, cy: float, r: float, **extra) -> None:
        self.svg += f'<circle cx="{cx:.1f}" cy="{cy:.1f}" r="{r:.1f}"{_attrs(extra)}/>\n'

    def rectangle(self, x1: float, y1: float, x2: float, y2: float, **extra) -> None:
        self.svg += (
            f'<rect x="{x1:.1f}" y="{y1:.1f}" width="{x2 - x1:.1f}" height="{y2 - y1:.1f}"{_attrs(extra)}/>\n'
        )

    def text(self, x: float, y: float, string: str, **extra) -> None:
        self.svg += f'<text x="{x:.1f}" y="{y:.1f}"{_attrs(extra)}>{escape(string)}</text>\n'

    def get_svg(self) -> str:
        return f"{self.svg}</svg>\n"
