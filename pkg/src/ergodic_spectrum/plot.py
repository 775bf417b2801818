"""Standalone SVG 1.1 rendering of a solved spectrum (no external assets)."""
import math
from xml.sax.saxutils import escape

WIDTH, HEIGHT = 640, 420
LEFT, RIGHT, TOP, BOTTOM = 64, 24, 40, 52


def _x(alpha):
    return LEFT + alpha * (WIDTH - LEFT - RIGHT)


def _y(dim, ymax):
    return HEIGHT - BOTTOM - (dim / ymax) * (HEIGHT - TOP - BOTTOM)


def plot_to_data(x, y, ymax):
    """Inverse of the plot transform, for reading coordinates back out of an SVG."""
    alpha = (x - LEFT) / (WIDTH - LEFT - RIGHT)
    dim = (HEIGHT - BOTTOM - y) / (HEIGHT - TOP - BOTTOM) * ymax
    return alpha, dim


def spectrum_svg(points, attractor_dim, bernoulli_alpha, params):
    ymax = attractor_dim
    ok = [pt for pt in points if pt.error is None and math.isfinite(pt.dimension)]
    poly = " ".join(f"{_x(pt.alpha):.3f},{_y(pt.dimension, ymax):.3f}" for pt in ok)
    x0, x1 = _x(0.0), _x(1.0)
    y0, y1 = _y(0.0, ymax), _y(ymax, ymax)
    title = escape(f"dim L_alpha, lambda0={params.lambda0:.6g}, lambda1={params.lambda1:.6g}")
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" style="fill:#ffffff;stroke:none"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" style="font-family:sans-serif;font-size:14px;text-anchor:middle">{title}</text>',
        f'<line id="x-axis" x1="{x0:.3f}" y1="{y0:.3f}" x2="{x1:.3f}" y2="{y0:.3f}" style="stroke:#000000;stroke-width:1"/>',
        f'<line id="y-axis" x1="{x0:.3f}" y1="{y0:.3f}" x2="{x0:.3f}" y2="{y1:.3f}" style="stroke:#000000;stroke-width:1"/>',
    ]
    for i in range(5):
        a = i / 4
        out.append(f'<line x1="{_x(a):.3f}" y1="{y0:.3f}" x2="{_x(a):.3f}" y2="{y0 + 5:.3f}" style="stroke:#000000"/>')
        out.append(
            f'<text x="{_x(a):.3f}" y="{y0 + 20:.3f}" style="font-family:sans-serif;font-size:11px;'
            f'text-anchor:middle">{a:.2f}</text>'
        )
        d = ymax * i / 4
        out.append(f'<line x1="{x0 - 5:.3f}" y1="{_y(d, ymax):.3f}" x2="{x0:.3f}" y2="{_y(d, ymax):.3f}" style="stroke:#000000"/>')
        out.append(
            f'<text x="{x0 - 8:.3f}" y="{_y(d, ymax) + 4:.3f}" style="font-family:sans-serif;font-size:11px;'
            f'text-anchor:end">{d:.3f}</text>'
        )
    out += [
        f'<text x="{(x0 + x1) / 2:.1f}" y="{HEIGHT - 12}" style="font-family:sans-serif;font-size:12px;'
        f'text-anchor:middle">alpha</text>',
        f'<line id="attractor-dimension" x1="{x0:.3f}" y1="{y1:.3f}" x2="{x1:.3f}" y2="{y1:.3f}" '
        f'style="stroke:#888888;stroke-dasharray:6,4"/>',
        f'<polyline id="spectrum" points="{poly}" style="fill:none;stroke:#1f4e9c;stroke-width:2"/>',
        f'<circle id="bernoulli" cx="{_x(bernoulli_alpha):.3f}" cy="{y1:.3f}" r="4" style="fill:#c0392b;stroke:none"/>',
        "</svg>",
    ]
    return "\n".join(out) + "\n"
