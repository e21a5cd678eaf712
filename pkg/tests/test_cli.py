import json
from pathlib import Path

import pytest

from racg.cli import main
from racg.corpus import named_corpus

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="module")
def fixture_dir(tmp_path_factory):
    if FIXTURES.is_dir():
        return FIXTURES
    d = tmp_path_factory.mktemp("fixtures")
    from racg.corpus import write_fixtures

    write_fixtures(d)
    return d


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_nf(capsys, fixture_dir):
    code, out, _ = run(capsys, "nf", str(fixture_dir / "p3.graph"), "p2 p1 p3")
    assert code == 0
    assert out.strip() == "p1 p2 p3"  # adjacent letters commute past each other


def test_nf_identity(capsys, fixture_dir):
    code, out, _ = run(capsys, "nf", str(fixture_dir / "p3.graph"), "p1 p1")
    assert code == 0 and out.strip() == "e"


def test_classify_json_roundtrips(capsys, fixture_dir):
    code, out, _ = run(capsys, "classify", str(fixture_dir / "k23.graph"), "--json")
    assert code == 0
    data = json.loads(out)
    assert data["strongly_solid"] is False
    assert json.dumps(data, indent=2, sort_keys=True) == out.strip()


def test_classify_text(capsys, fixture_dir):
    code, out, _ = run(capsys, "classify", str(fixture_dir / "c4.graph"))
    assert code == 0
    assert "amenable: true" in out
    assert "hyperbolic: false" in out


def test_witness(capsys, fixture_dir):
    code, out, _ = run(capsys, "witness", str(fixture_dir / "k23.graph"))
    assert code == 0
    assert "zxf2_triple" in out and "special_subgroup" in out


def test_decompose(capsys, fixture_dir):
    code, out, _ = run(
        capsys,
        "decompose",
        str(fixture_dir / "k23.graph"),
        "a1 b3 a2",
        "--g1",
        "a1,b1",
        "--g2",
        "a2",
    )
    assert code == 0
    lines = dict(line.split(": ", 1) for line in out.strip().splitlines())
    assert lines["left"] == "a1"
    assert lines["center"] == "b3"
    assert lines["right"] == "a2"


def test_intersect(capsys, fixture_dir):
    code, out, _ = run(
        capsys,
        "intersect",
        str(fixture_dir / "k23.graph"),
        "b3 a1",
        "--g1",
        "a1,a2",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["d"] == "b3"
    # a1, a2 both commute with b3, so the core keeps both
    assert data["core"] == ["a1", "a2"]


def test_growth_with_bfs_check(capsys, fixture_dir):
    code, out, _ = run(
        capsys, "growth", str(fixture_dir / "dinf.graph"), "-n", "5", "--check-bfs", "5"
    )
    assert code == 0
    assert "numerator: [1, 1]" in out
    assert "denominator: [1, -1]" in out
    assert "ok" in out


def test_ball(capsys, fixture_dir):
    code, out, _ = run(capsys, "ball", str(fixture_dir / "dinf.graph"), "--radius", "2")
    assert code == 0
    assert out.splitlines() == ["e", "u", "v", "u v", "v u"]


def test_verify_single_graph(capsys, fixture_dir):
    code, out, _ = run(
        capsys,
        "verify",
        "combinatorics",
        str(fixture_dir / "p3.graph"),
        "--radius",
        "3",
    )
    assert code == 0
    assert out.startswith("pass")


def test_verify_inner_product_skips_when_no_link_family(capsys, fixture_dir):
    code, out, _ = run(
        capsys, "verify", "inner-product", str(fixture_dir / "k1.graph")
    )
    assert code == 0
    assert out.startswith("skip")


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("vertices: a b\nedge: a\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 2
    assert "line 2" in err


def test_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "nf", "no/such/file.graph", "a")
    assert code == 2
    assert "error" in err


def test_unknown_letter_exit_2(capsys, fixture_dir):
    code, _, err = run(capsys, "nf", str(fixture_dir / "p3.graph"), "zz")
    assert code == 2
