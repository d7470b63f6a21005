from pathlib import Path

import orjson
import pytest
import yaml

import ndual

SMALL_TEXT: str = "vars x y\nx^3\nx^2*y^2\ny^4\n"
CLOSURE_TEXT: str = """vars x1 x2 x3 x4
x1^3
x1^2*x2
x1*x2^2
x2^3
x1^2*x3
x1*x2*x3
x2^2*x3
x1*x3^2
x2*x3^2
x1^2*x4
x1*x2*x4
x2^2*x4
x1*x3*x4
x2*x3*x4
"""
COMPATIBLE_TEXT: str = "vars x1 x2 x3\nbound 3 4 2\nx1*x2\nx1*x3\nx2^2\nx2*x3\n"
STABLE_NOT_STRONGLY_TEXT: str = """vars a b c d
3 0 0 0
2 1 0 0
1 2 0 0
0 3 0 0
2 0 1 0
1 1 1 0
0 2 1 0
1 0 2 0
0 1 2 0
0 0 3 0
1 1 0 1
0 0 2 1
"""
TWO_BY_THREE_JSON: str = (
    '{"variables": ["x1", "x2", "y1", "y2", "y3"], "blocks": [2, 3], '
    '"generators": [[1, 0, 1, 0, 0], [1, 0, 0, 1, 0], [1, 0, 0, 0, 1], [0, 1, 1, 0, 0], [0, 1, 0, 1, 0]]}'
)
COUNTER_TEXT: str = "vars x1 x2 y1 y2\nx1*y1\nx1*y2\nx2*y1\nx2*y2\ny1*y2\n"


@pytest.fixture
def run(tmp_path, cfg):
    config = tmp_path / "ndual_config.yml"
    config.write_text(yaml.safe_dump(cfg), encoding="utf-8")

    def _run(*argv: str) -> int:
        return ndual.main(ndual.build_parser().parse_args(["--config", str(config), *argv]))

    return _run


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


def test_dual_with_bound(run, write, capsys):
    assert run("dual", write("small.txt", SMALL_TEXT), "--bound", "5,6") == 0
    doc = orjson.loads(capsys.readouterr().out)
    assert sorted(doc["generators"]) == [[2, 6], [3, 4], [5, 2]]
    assert doc["bound"] == [5, 6]


def test_dual_as_text(run, write, capsys):
    assert run("--text", "dual", write("small.txt", SMALL_TEXT), "--bound", "5,6") == 0
    assert set(capsys.readouterr().out.split()) == {"x^2*y^6", "x^3*y^4", "x^5*y^2"}


def test_dual_with_newton_bound(run, write, capsys):
    assert run("dual", write("small.txt", SMALL_TEXT)) == 0
    assert orjson.loads(capsys.readouterr().out)["bound"] == [3, 4]


def test_resolve_borel(run, write, capsys):
    assert run("--text", "resolve", write("closure.txt", CLOSURE_TEXT), "--mode", "borel") == 0
    assert capsys.readouterr().out.splitlines()[0] == "14 21 9 1"


def test_resolve_borel_checked(run, write, capsys):
    assert run("resolve", write("closure.txt", CLOSURE_TEXT), "--check") == 0
    doc = orjson.loads(capsys.readouterr().out)
    assert doc["verified"] is True
    assert doc["complex"]["f_vector"] == [14, 21, 9, 1]
    assert doc["betti"]["quotient_totals"] == [1, 14, 21, 9, 1]


def test_resolve_planar(run, write, capsys):
    assert run("resolve", write("compatible.txt", COMPATIBLE_TEXT), "--mode", "planar", "--check") == 0
    assert orjson.loads(capsys.readouterr().out)["betti"]["totals"] == [4, 4, 1]


def test_resolve_rejects_unstable_input(run, write):
    assert run("resolve", write("stable.txt", STABLE_NOT_STRONGLY_TEXT)) == 2


def test_betti_of_the_dual(run, write, capsys):
    assert run("--text", "betti", write("compatible.txt", COMPATIBLE_TEXT), "--dual") == 0
    assert capsys.readouterr().out.splitlines()[0] == "4 4 1"


def test_linear_quotients(run, write, capsys):
    assert run("check-linear-quotients", write("closure.txt", CLOSURE_TEXT)) == 0
    assert orjson.loads(capsys.readouterr().out)["ok"] is True
    assert run("check-linear-quotients", write("stable.txt", STABLE_NOT_STRONGLY_TEXT)) == 1


def test_linear_quotients_in_removal_order(run, write, capsys):
    assert run("check-linear-quotients", write("compatible.txt", COMPATIBLE_TEXT), "--order", "removal") == 0
    doc = orjson.loads(capsys.readouterr().out)
    assert doc["generators"] == [[2, 3, 2], [2, 4, 1], [3, 2, 2], [3, 3, 1]]
    assert doc["colons"] == [[3], [2], [2, 3]]


def test_alexander_compare(run, write, capsys):
    assert run("alexander-compare", write("less.json", TWO_BY_THREE_JSON)) == 0
    assert orjson.loads(capsys.readouterr().out)["equal"] is True
    assert run("alexander-compare", write("counter.txt", COUNTER_TEXT)) == 1


def test_fiber_relations(run, write, capsys):
    veronese = write("veronese.txt", "vars x y\nx^2\nx*y\ny^2\n")
    assert run("fiber-relations", veronese, "--degree-cap", "2") == 0
    doc = orjson.loads(capsys.readouterr().out)
    assert doc["degree_cap"] == 2
    assert [(r["alpha"], r["beta"]) for r in doc["relations"]] == [([1, 3], [2, 2])]


def test_export_svg(run, write, tmp_path):
    target = tmp_path / "planar.svg"
    assert run("export-svg", write("compatible.txt", COMPATIBLE_TEXT), "-o", str(target)) == 0
    assert target.read_text(encoding="utf-8").count("<circle ") == 4


def test_verify_one_suite(run):
    assert run("verify", "--suite", "fields") == 0


@pytest.mark.slow
def test_verify_all(run):
    assert run("verify", "--suite", "all", "--max-points", "8") == 0


def test_usage_errors(run, write, tmp_path):
    assert run("dual", write("bad.txt", "vars x y\nx^2*z\n")) == 2
    assert run("dual", write("small.txt", SMALL_TEXT), "--bound", "1,1") == 2
    assert run("dual", write("small.txt", SMALL_TEXT), "--bound", "5,6,7") == 2
    assert run("dual", str(tmp_path / "missing.txt")) == 2


def test_missing_config(write):
    args = ndual.build_parser().parse_args(["--config", "/nonexistent/ndual.yml", "dual", write("s.txt", SMALL_TEXT)])
    assert ndual.main(args) == 2


def test_bad_flags_exit_with_usage():
    with pytest.raises(SystemExit) as info:
        ndual.build_parser().parse_args(["dual", "x.txt", "--bound", "a,b"])
    assert info.value.code == 2


def test_shipped_config_sweep_sizes():
    with open(Path(ndual.__file__).parent / "ndual_config.yml", encoding="utf-8") as f:
        shipped = yaml.full_load(f)
    sizes = shipped["sweeps"]["sizes"]
    assert sizes["involution"] >= 1000
    assert sizes["product"] >= 1000
    assert sizes["borel"] >= 200
    assert sizes["stable_quadratic"] >= 100
    assert sizes["fiber"] >= 100
    assert sizes["graph_vertices"] >= 7
