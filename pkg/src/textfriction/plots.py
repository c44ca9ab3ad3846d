"""Plot-ready TSV data and minimal self-contained SVG charts.

Every figure is emitted twice: a TSV anyone can replot, and a small SVG
(line, scatter, or bar) for quick inspection. The SVG writer is deliberately
tiny and deterministic -- fixed canvas, fixed decimal formatting, no external
renderer.
"""

from __future__ import annotations

from typing import Sequence

WIDTH, HEIGHT = 720, 440
LEFT, RIGHT, TOP, BOTTOM = 70, 20, 44, 56
N_TICKS = 5


def _fmt(v: float) -> str:
    return f"{v:.2f}"


def _tick_label(v: float) -> str:
    return f"{v:g}" if abs(v) < 1e6 else f"{v:.3e}"


class _Frame:
    """Maps data coordinates onto the SVG plot area and draws the scaffolding."""

    def __init__(self, x_lo, x_hi, y_lo, y_hi):
        if x_hi == x_lo:
            x_lo, x_hi = x_lo - 0.5, x_hi + 0.5
        if y_hi == y_lo:
            y_lo, y_hi = y_lo - 0.5, y_hi + 0.5
        self.x_lo, self.x_hi, self.y_lo, self.y_hi = x_lo, x_hi, y_lo, y_hi

    def x(self, v: float) -> float:
        return LEFT + (v - self.x_lo) * (WIDTH - LEFT - RIGHT) / (self.x_hi - self.x_lo)

    def y(self, v: float) -> float:
        return HEIGHT - BOTTOM - (v - self.y_lo) * (HEIGHT - TOP - BOTTOM) / (self.y_hi - self.y_lo)

    def scaffold(self, title: str, x_label: str, y_label: str) -> list[str]:
        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
            f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
            f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
            f'<text x="{WIDTH / 2:.0f}" y="24" text-anchor="middle" font-size="15">{_esc(title)}</text>',
            f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 12}" text-anchor="middle">{_esc(x_label)}</text>',
            f'<text x="18" y="{HEIGHT / 2:.0f}" text-anchor="middle" '
            f'transform="rotate(-90 18 {HEIGHT / 2:.0f})">{_esc(y_label)}</text>',
            f'<rect x="{LEFT}" y="{TOP}" width="{WIDTH - LEFT - RIGHT}" '
            f'height="{HEIGHT - TOP - BOTTOM}" fill="none" stroke="black"/>',
        ]
        for i in range(N_TICKS + 1):
            xv = self.x_lo + i * (self.x_hi - self.x_lo) / N_TICKS
            yv = self.y_lo + i * (self.y_hi - self.y_lo) / N_TICKS
            xp, yp = self.x(xv), self.y(yv)
            parts.append(f'<line x1="{_fmt(xp)}" y1="{HEIGHT - BOTTOM}" '
                         f'x2="{_fmt(xp)}" y2="{HEIGHT - BOTTOM + 5}" stroke="black"/>')
            parts.append(f'<text x="{_fmt(xp)}" y="{HEIGHT - BOTTOM + 18}" '
                         f'text-anchor="middle">{_tick_label(xv)}</text>')
            parts.append(f'<line x1="{LEFT - 5}" y1="{_fmt(yp)}" '
                         f'x2="{LEFT}" y2="{_fmt(yp)}" stroke="black"/>')
            parts.append(f'<text x="{LEFT - 8}" y="{_fmt(yp + 4)}" '
                         f'text-anchor="end">{_tick_label(yv)}</text>')
        return parts


def _esc(s: str) -> str:
    return s.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def line_chart_svg(points: Sequence[tuple[float, float]], title: str,
                   x_label: str, y_label: str) -> str:
    frame = _Frame(min(p[0] for p in points), max(p[0] for p in points),
                   min(p[1] for p in points), max(p[1] for p in points))
    parts = frame.scaffold(title, x_label, y_label)
    coords = " ".join(f"{_fmt(frame.x(x))},{_fmt(frame.y(y))}" for x, y in points)
    parts.append(f'<polyline points="{coords}" fill="none" stroke="steelblue" stroke-width="1"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def scatter_chart_svg(points: Sequence[tuple[float, float]], title: str,
                      x_label: str, y_label: str,
                      fit: tuple[float, float] | None = None) -> str:
    """Scatter of (x, y) points; `fit` draws intercept + slope*x across the frame."""
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    y_lo, y_hi = min(ys), max(ys)
    if fit is not None:
        intercept, slope = fit
        fit_ys = [intercept + slope * min(xs), intercept + slope * max(xs)]
        y_lo, y_hi = min(y_lo, *fit_ys), max(y_hi, *fit_ys)
    frame = _Frame(min(xs), max(xs), y_lo, y_hi)
    parts = frame.scaffold(title, x_label, y_label)
    if fit is not None:
        intercept, slope = fit
        x1, x2 = frame.x_lo, frame.x_hi
        parts.append(f'<line x1="{_fmt(frame.x(x1))}" y1="{_fmt(frame.y(intercept + slope * x1))}" '
                     f'x2="{_fmt(frame.x(x2))}" y2="{_fmt(frame.y(intercept + slope * x2))}" '
                     f'stroke="firebrick" stroke-width="1.5"/>')
    for x, y in points:
        parts.append(f'<circle cx="{_fmt(frame.x(x))}" cy="{_fmt(frame.y(y))}" '
                     f'r="3" fill="steelblue"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def bar_chart_svg(labels: Sequence[str], series: dict[str, Sequence[float]],
                  title: str, x_label: str, y_label: str) -> str:
    """Grouped vertical bars; one group per label, one bar per series."""
    colors = ["steelblue", "darkorange", "seagreen", "firebrick"]
    all_vals = [v for vals in series.values() for v in vals]
    y_lo, y_hi = min(0.0, min(all_vals)), max(0.0, max(all_vals))
    frame = _Frame(0.0, float(len(labels)), y_lo, y_hi)
    parts = frame.scaffold(title, x_label, y_label)
    n_series = len(series)
    group_w = (WIDTH - LEFT - RIGHT) / max(1, len(labels))
    bar_w = group_w * 0.8 / max(1, n_series)
    base = frame.y(0.0)
    for s_idx, (name, vals) in enumerate(series.items()):
        color = colors[s_idx % len(colors)]
        for i, v in enumerate(vals):
            x = LEFT + i * group_w + group_w * 0.1 + s_idx * bar_w
            top = frame.y(v)
            y0, h = (top, base - top) if v >= 0 else (base, top - base)
            parts.append(f'<rect x="{_fmt(x)}" y="{_fmt(y0)}" width="{_fmt(bar_w)}" '
                         f'height="{_fmt(h)}" fill="{color}"/>')
        # legend swatch
        lx, ly = WIDTH - RIGHT - 150, TOP + 14 + 16 * s_idx
        parts.append(f'<rect x="{lx}" y="{ly - 9}" width="10" height="10" fill="{color}"/>')
        parts.append(f'<text x="{lx + 14}" y="{ly}">{_esc(name)}</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def histogram_svg(bins: Sequence[tuple[float, int]], bin_width: float,
                  title: str, x_label: str, y_label: str) -> str:
    """Contiguous histogram bars from (lower edge, count) bins."""
    top_count = max(c for _, c in bins)
    frame = _Frame(bins[0][0], bins[-1][0] + bin_width, 0.0, float(top_count))
    parts = frame.scaffold(title, x_label, y_label)
    base = frame.y(0.0)
    for edge, count in bins:
        x0, x1 = frame.x(edge), frame.x(edge + bin_width)
        top = frame.y(float(count))
        parts.append(f'<rect x="{_fmt(x0)}" y="{_fmt(top)}" width="{_fmt(x1 - x0)}" '
                     f'height="{_fmt(base - top)}" fill="steelblue" stroke="white"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def profile_tsv(values: Sequence[float]) -> str:
    """Window index vs friction value, for per-text trace plots."""
    lines = ["window\tfriction\n"]
    lines.extend(f"{i}\t{v:.6f}\n" for i, v in enumerate(values))
    return "".join(lines)


def scatter_tsv(rows: Sequence[tuple[str, float, float]]) -> str:
    """Rows of (filename, mean friction, ease)."""
    lines = ["file\tmean_friction\tease\n"]
    lines.extend(f"{name}\t{mf:.6f}\t{ease:.6f}\n" for name, mf, ease in rows)
    return "".join(lines)


def histogram_tsv(bins: Sequence[tuple[float, int]]) -> str:
    lines = ["bin_lower\tcount\n"]
    lines.extend(f"{edge:.6f}\t{count}\n" for edge, count in bins)
    return "".join(lines)


def comparison_tsv(rows: Sequence[tuple[str, float, float]]) -> str:
    """Rows of (filename, measured ease, predicted ease)."""
    lines = ["file\tmeasured_ease\tpredicted_ease\n"]
    lines.extend(f"{name}\t{m:.6f}\t{p:.6f}\n" for name, m, p in rows)
    return "".join(lines)
