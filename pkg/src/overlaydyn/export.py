"""File emitters: SVG line charts of series and GraphML overlay graphs."""

from __future__ import annotations

from html import escape
from itertools import combinations

import networkx as nx

from .basemap import Basemap
from .overlay import OverlayProfile

__all__ = ["series_svg", "write_series_svg", "overlay_graph", "write_overlay_graphml"]

WIDTH, HEIGHT = 960, 480
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 70, 70, 40, 50
MOD_COLOR = "#1f77b4"
ODR_COLOR = "#d62728"


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _range(values, include=()):
    vals = [v for v in values if v is not None] + list(include)
    if not vals:
        return 0.0, 1.0
    lo, hi = min(vals), max(vals)
    if hi == lo:
        pad = abs(hi) * 0.1 or 0.5
    else:
        pad = (hi - lo) * 0.08
    return lo - pad, hi + pad


def _segments(xs, ys):
    """Split a series into runs of consecutive defined points."""
    run = []
    for x, y in zip(xs, ys):
        if y is None:
            if run:
                yield run
            run = []
        else:
            run.append((x, y))
    if run:
        yield run


def _ticks(lo, hi, n=5):
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def series_svg(series, title: str | None = None) -> str:
    """Render MOD (left axis) and ODR (right axis) against year as SVG text.

    Undefined values break the line. A dashed horizontal line marks ODR = 1.
    """
    years = series.years
    mods = series.column("mod")
    odrs = series.column("odr")
    plot_w = WIDTH - MARGIN_L - MARGIN_R
    plot_h = HEIGHT - MARGIN_T - MARGIN_B

    if years:
        y0, y1 = years[0], years[-1]
    else:
        y0, y1 = 0, 1
    span = (y1 - y0) or 1

    def px(year):
        return MARGIN_L + plot_w * (year - y0) / span

    _, mod_hi = _range(mods, include=(0.0,))
    mod_lo = 0.0
    odr_lo, odr_hi = _range(odrs, include=(1.0,))

    def py(v, lo, hi):
        return MARGIN_T + plot_h * (1 - (v - lo) / (hi - lo))

    title = title or f"{series.spec.mode.cli_name} ({series.spec.counting} counting)"
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {WIDTH} {HEIGHT}" '
        f'width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.0f}" y="22" text-anchor="middle" font-size="15">{escape(title)}</text>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{plot_w}" height="{plot_h}" '
        'fill="none" stroke="#444"/>',
    ]

    out.append('<g id="axis-year" text-anchor="middle">')
    step = max(1, -(-len(years) // 10))
    for year in years[::step]:
        x = _fmt(px(year))
        out.append(
            f'<line x1="{x}" y1="{HEIGHT - MARGIN_B}" x2="{x}" y2="{HEIGHT - MARGIN_B + 5}" stroke="#444"/>'
            f'<text x="{x}" y="{HEIGHT - MARGIN_B + 18}">{year}</text>'
        )
    out.append(f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 8}">year</text></g>')

    out.append(f'<g id="axis-mod" text-anchor="end" fill="{MOD_COLOR}">')
    for v in _ticks(mod_lo, mod_hi):
        out.append(f'<text x="{MARGIN_L - 6}" y="{_fmt(py(v, mod_lo, mod_hi) + 4)}">{v:.3g}</text>')
    out.append(f'<text x="16" y="{MARGIN_T - 10}" text-anchor="start">MOD</text></g>')

    out.append(f'<g id="axis-odr" text-anchor="start" fill="{ODR_COLOR}">')
    for v in _ticks(odr_lo, odr_hi):
        out.append(
            f'<text x="{WIDTH - MARGIN_R + 6}" y="{_fmt(py(v, odr_lo, odr_hi) + 4)}">{v:.3g}</text>'
        )
    out.append(f'<text x="{WIDTH - 16}" y="{MARGIN_T - 10}" text-anchor="end">ODR</text></g>')

    ref = _fmt(py(1.0, odr_lo, odr_hi))
    out.append(
        f'<line id="odr-reference" x1="{MARGIN_L}" y1="{ref}" x2="{WIDTH - MARGIN_R}" y2="{ref}" '
        f'stroke="{ODR_COLOR}" stroke-dasharray="6 4" stroke-opacity="0.6"/>'
    )

    for name, values, color, lo, hi in (
        ("mod", mods, MOD_COLOR, mod_lo, mod_hi),
        ("odr", odrs, ODR_COLOR, odr_lo, odr_hi),
    ):
        out.append(f'<g id="series-{name}" fill="none" stroke="{color}" stroke-width="2">')
        for run in _segments(years, values):
            pts = " ".join(f"{_fmt(px(x))},{_fmt(py(y, lo, hi))}" for x, y in run)
            out.append(f'<polyline points="{pts}"/>')
            if len(run) == 1:
                x, y = run[0]
                out.append(
                    f'<circle cx="{_fmt(px(x))}" cy="{_fmt(py(y, lo, hi))}" r="2.5" fill="{color}"/>'
                )
        out.append("</g>")

    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_series_svg(series, path, title=None) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(series_svg(series, title))


def overlay_graph(profile: OverlayProfile, basemap: Basemap) -> nx.Graph:
    """Profile categories as nodes (``weight``) joined where ``distance < 1``."""
    basemap.check_known(profile.weights)
    g = nx.Graph()
    for cat, weight in profile.ranked():
        g.add_node(cat, weight=float(weight))
    for a, b in combinations(sorted(profile.weights), 2):
        d = basemap.distance(a, b)
        if d < 1.0:
            g.add_edge(a, b, distance=d)
    return g


def write_overlay_graphml(profile, basemap, path) -> None:
    nx.write_graphml(overlay_graph(profile, basemap), path, encoding="utf-8")
