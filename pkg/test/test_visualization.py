import mpmath

from overtop.sangaku.asymmetric import SweepResult
from overtop.utils.visualization import plot_sweep, render_figure, triangle_vertices


def test_vertices(worked_triangle):
    verts = triangle_vertices(worked_triangle)
    assert verts[0].tolist() == [0.0, 0.0]
    assert verts[1][1] == verts[2][1]
    assert verts[1][0] > 0 > verts[2][0]


def test_figure_is_deterministic(worked_report, tmp_path):
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    render_figure(worked_report, str(first), size=400)
    render_figure(worked_report, str(second), size=400)
    data = first.read_bytes()
    assert data.startswith(b"<?xml")
    assert b"<svg" in data
    assert data == second.read_bytes()


def test_sweep_plot_is_deterministic(tmp_path):
    eps = [mpmath.mpf(0.75) + mpmath.mpf(k) / 40 for k in range(9)]
    ins = [mpmath.mpf(0.3) - e / 10 for e in eps]
    bis = [None] + [mpmath.mpf(0.2) + (e - 0.75) / 5 for e in eps[1:]]
    sweep = SweepResult(eps, ins, bis, 1, mpmath.mpf("0.9"))
    first, second = tmp_path / "a.svg", tmp_path / "b.svg"
    plot_sweep(sweep, str(first), size=300)
    plot_sweep(sweep, str(second), size=300)
    assert first.read_bytes() == second.read_bytes()
