"""Deterministic SVG rendering of opinions in the triangle.

Hand-rolled SVG 1.1 with fixed-precision coordinates, so an identical
spec always produces byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import VERTEX_B, VERTEX_D, VERTEX_U, to_cartesian
from .opinion import Opinion

__all__ = ["PlotSpec", "render_svg", "write_svg"]

_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")
MIN_WIDTH_PX = 100


@dataclass(frozen=True)
class PlotSpec:
    """Points (label, opinion, color) and segments to draw; labels unique."""

    points: tuple[tuple[str, Opinion, str], ...] = ()
    segments: tuple[tuple[Opinion, Opinion], ...] = ()
    width_px: int = 640
    output_path: str = "triangle.svg"

    def __post_init__(self) -> None:
        if self.width_px < MIN_WIDTH_PX:
            raise ValueError(f"width_px must be >= {MIN_WIDTH_PX}")
        labels = [label for label, _, _ in self.points]
        if len(set(labels)) != len(labels):
            raise ValueError("point labels must be unique")


def default_color(index: int) -> str:
    return _PALETTE[index % len(_PALETTE)]


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(spec: PlotSpec) -> str:
    width = spec.width_px
    margin = width * 0.12
    scale = (width - 2.0 * margin) / VERTEX_D.x
    height = 2.0 * margin + scale * 1.0

    def px(x: float, y: float) -> tuple[str, str]:
        return _fmt(margin + x * scale), _fmt(height - margin - y * scale)

    bx, by = px(*VERTEX_B.as_tuple())
    dx, dy = px(*VERTEX_D.as_tuple())
    ux, uy = px(*VERTEX_U.as_tuple())

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{_fmt(height)}" '
        f'viewBox="0 0 {width} {_fmt(height)}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<polygon points="{bx},{by} {dx},{dy} {ux},{uy}" '
        'fill="none" stroke="#333333" stroke-width="1.5"/>',
        f'<text x="{bx}" y="{_fmt(float(by) + 18)}" font-size="13" '
        'font-family="sans-serif" text-anchor="middle">belief</text>',
        f'<text x="{dx}" y="{_fmt(float(dy) + 18)}" font-size="13" '
        'font-family="sans-serif" text-anchor="middle">disbelief</text>',
        f'<text x="{ux}" y="{_fmt(float(uy) - 8)}" font-size="13" '
        'font-family="sans-serif" text-anchor="middle">uncertainty</text>',
    ]
    for start, end in spec.segments:
        p0 = to_cartesian(start)
        p1 = to_cartesian(end)
        x0, y0 = px(p0.x, p0.y)
        x1, y1 = px(p1.x, p1.y)
        lines.append(
            f'<line x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}" '
            'stroke="#888888" stroke-width="1.2" stroke-dasharray="5,3"/>'
        )
    for label, opinion, color in spec.points:
        point = to_cartesian(opinion)
        x, y = px(point.x, point.y)
        lines.append(f'<circle cx="{x}" cy="{y}" r="4" fill="{color}"/>')
        lines.append(
            f'<text x="{_fmt(float(x) + 7)}" y="{_fmt(float(y) - 6)}" '
            f'font-size="12" font-family="sans-serif">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def write_svg(spec: PlotSpec) -> None:
    """Render and write to ``spec.output_path`` (OSError on unwritable paths)."""
    with open(spec.output_path, "w", encoding="utf-8") as handle:
        handle.write(render_svg(spec))
