"""Deterministic SVG scatter panels: root sets with a circle overlay.

Point coordinates are written verbatim with the same 17-significant-digit
formatting the CSV output uses; the mapping onto screen pixels happens
entirely in a group transform, so the byte content of the coordinates can
be compared against other output formats.
"""

from __future__ import annotations

from dataclasses import dataclass

from .util import fmt17

PANEL_PX = 320
POINT_FRAC = 0.012


@dataclass(frozen=True)
class RootPanel:
    label: str
    points: tuple[complex, ...]
    circle_radius: float | None = None


def _panel_extent(panel: RootPanel) -> float:
    reach = max((abs(z) for z in panel.points), default=0.0)
    if panel.circle_radius:
        reach = max(reach, panel.circle_radius)
    if reach == 0.0:
        reach = 1.0
    return 1.1 * reach  # square viewport padded 10%


def render_panels(panels: list[RootPanel]) -> str:
    """One SVG document, one square panel per entry, LF line endings."""
    if not panels:
        raise ValueError("nothing to draw")
    width = PANEL_PX * len(panels)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{PANEL_PX}" '
        f'viewBox="0 0 {width} {PANEL_PX}">',
        f'<rect width="{width}" height="{PANEL_PX}" fill="white"/>',
    ]
    for i, panel in enumerate(panels):
        extent = _panel_extent(panel)
        scale = PANEL_PX / (2.0 * extent)
        cx = i * PANEL_PX + PANEL_PX / 2.0
        cy = PANEL_PX / 2.0
        lines.append(
            f'<g transform="translate({fmt17(cx)} {fmt17(cy)}) '
            f'scale({fmt17(scale)} {fmt17(-scale)})">'
        )
        if panel.circle_radius:
            lines.append(
                f'<circle cx="0" cy="0" r="{fmt17(panel.circle_radius)}" '
                f'fill="none" stroke="#d62728" stroke-width="{fmt17(1.2 / scale)}"/>'
            )
        pt = fmt17(POINT_FRAC * extent)
        for z in panel.points:
            lines.append(
                f'<circle cx="{fmt17(z.real)}" cy="{fmt17(z.imag)}" r="{pt}" fill="#1f77b4"/>'
            )
        lines.append("</g>")
        lines.append(
            f'<text x="{i * PANEL_PX + 8}" y="18" font-family="monospace" '
            f'font-size="13">{panel.label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
