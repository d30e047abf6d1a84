import matplotlib
matplotlib.use("Agg")
from matplotlib import pyplot
from matplotlib.patches import Circle, Ellipse, Polygon

import numpy as np


SVG_METADATA = {"Date": None, "Creator": "overtop"}


def _setup(size: int, dpi: int, salt: str):
    pyplot.rcParams["svg.hashsalt"] = salt
    pyplot.rcParams["svg.fonttype"] = "none"
    return pyplot.figure(figsize=(size / dpi, size / dpi), dpi=dpi)


def _save(fig, out: str, dpi: int) -> None:
    fig.savefig(out, format="svg", dpi=dpi, metadata=SVG_METADATA)
    pyplot.close(fig)


def triangle_vertices(triangle):
    """A, B, C in the solver frame: A at the origin, BC on y = h."""
    a, b, c = (float(v) for v in triangle)
    h = b * c / a
    return np.array([[0.0, 0.0], [c * c / a, h], [-b * b / a, h]])


def render_figure(report, out: str, size: int = 800, dpi: int = 100,
                  salt: str = "overtop") -> None:
    """Triangle, ellipse, the three equal circles and the tangency points of a solved configuration."""
    from ..sangaku.asymmetric import derived_constants, leg_tangency_points

    verts = triangle_vertices(report.triangle)
    el = report.ellipse
    x0, y0 = float(el.x0), float(el.y0)
    r = float(report.r)

    fig = _setup(size, dpi, salt)
    ax = fig.add_axes([0.04, 0.04, 0.92, 0.92])
    ax.add_patch(Polygon(verts, closed=True, fill=False, edgecolor="black", linewidth=1.2))
    ax.add_patch(Ellipse((x0, y0), 2 * float(el.alpha), 2 * float(el.beta),
                         fill=False, edgecolor="tab:blue", linewidth=1.2))
    centres = [(float(report.x1), float(report.y1)), (x0 - r, y0), (x0 + r, y0)]
    for cx, cy in centres:
        ax.add_patch(Circle((cx, cy), r, fill=False, edgecolor="tab:red", linewidth=1.0))

    legs = leg_tangency_points(derived_constants(report.triangle, report.r), el)
    points = [(float(report.xT), float(report.yT))] + [(float(x), float(y)) for x, y in legs]
    points.append((x0, float(report.triangle.b * report.triangle.c / report.triangle.a)))
    pts = np.array(points)
    ax.plot(pts[:, 0], pts[:, 1], "o", color="tab:green", markersize=3)

    for name, (x, y) in zip("ABC", verts):
        ax.annotate(name, (x, y), textcoords="offset points", xytext=(4, -10 if name == "A" else 4))
    ax.annotate("T", points[0], textcoords="offset points", xytext=(4, -8))
    ax.annotate("C1", centres[0], textcoords="offset points", xytext=(2, 2))

    lo, hi = verts.min(axis=0), verts.max(axis=0)
    pad = 0.05 * max(hi - lo)
    ax.set_xlim(lo[0] - pad, hi[0] + pad)
    ax.set_ylim(lo[1] - pad, hi[1] + pad)
    ax.set_aspect("equal")
    ax.axis("off")
    _save(fig, out, dpi)


def plot_sweep(sweep, out: str, size: int = 800, dpi: int = 100, salt: str = "overtop") -> None:
    eps = np.array([float(e) for e in sweep.eps])
    ins = np.array([np.nan if v is None else float(v) for v in sweep.r_inscribed])
    bis = np.array([np.nan if v is None else float(v) for v in sweep.r_bisector])

    fig = _setup(size, dpi, salt)
    ax = fig.add_subplot(1, 1, 1)
    ax.plot(eps, ins, label="inscribed radius")
    ax.plot(eps, bis, label="bisector radius")
    if sweep.crossing is not None:
        ax.axvline(float(sweep.crossing), color="gray", linestyle="--", linewidth=0.8)
    ax.set_xlabel("eccentricity")
    ax.set_ylabel("radius")
    ax.legend()
    _save(fig, out, dpi)
