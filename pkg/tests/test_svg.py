import pytest

from newtondual.core.cellres import build_borel_complex, build_planar_complex, build_taylor_complex
from newtondual.core.duals import newton_bound
from newtondual.core.monomials import monomial
from newtondual.helpers.svg import render_complex, vertex_positions, write_svg


def test_planar_drawing(unstable_ferrers):
    diag, bound = unstable_ferrers
    cx = build_planar_complex(diag, bound)
    drawing = render_complex(cx, ["x", "y", "z"])

    assert drawing.startswith("<svg")
    assert drawing.count("<circle ") == 4
    assert drawing.count("<line ") == 4
    assert drawing.count("<rect ") == 1
    assert "x^2*y^3*z^2" in drawing
    assert render_complex(cx, ["x", "y", "z"]) == drawing


def test_planar_positions_follow_the_diagram(unstable_ferrers):
    diag, bound = unstable_ferrers
    cx = build_planar_complex(diag, bound)
    points = {c.data[0]: vertex_positions(cx)[c.id] for c in cx.of_dim(0)}
    assert points[(1, 2)] == (120.0, 60.0)
    assert points[(2, 3)] == (180.0, 120.0)


def test_borel_drawing(closure):
    cx = build_borel_complex(closure, newton_bound(closure))
    drawing = render_complex(cx)
    assert drawing.count("<circle ") == 14
    assert drawing.count("<line ") == 21
    assert "<rect " not in drawing


def test_simplices_are_not_drawn():
    with pytest.raises(ValueError):
        render_complex(build_taylor_complex([monomial((1, 0)), monomial((0, 1))]))


def test_write_svg(tmp_path, unstable_ferrers):
    diag, bound = unstable_ferrers
    target = write_svg(build_planar_complex(diag, bound), tmp_path / "out" / "planar.svg")
    assert target.exists()
    assert target.read_text(encoding="utf-8").count("<circle ") == 4
