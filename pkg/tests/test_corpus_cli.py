import json

import pytest

from stanley_lab import cli
from stanley_lab.classes import is_polymatroidal
from stanley_lab.corpus import (
    EmptyFamily,
    generate,
    parse_spec,
    run_suite,
    squarefree_veronese,
    veronese_sweep,
    veronese_type,
)
from stanley_lab.monomials import format_ideal, power

from conftest import ACCEPTANCE_SPEC, ideal

SMALL_SPEC = """
seed = 3
require_weakly_polymatroidal = true
family = squarefree-veronese n=3 d=2
family = veronese-type n=3 d=3 caps=2,1,2
family = principal n=3 max_deg=2
"""


def test_families():
    assert squarefree_veronese(3, 2).gens == ((1, 1, 0), (1, 0, 1), (0, 1, 1))
    assert veronese_type(2, 2, (2, 2)).gens == ((2, 0), (1, 1), (0, 2))
    P = power(squarefree_veronese(3, 2), 2)
    assert P.degrees() == {4} and P.t == 6
    with pytest.raises(EmptyFamily):
        veronese_type(2, 5, (1, 1))


def test_veronese_families_are_polymatroidal():
    for I in veronese_sweep(3, 2) + veronese_sweep(4, 1):
        assert is_polymatroidal(I)


def test_spec_parsing():
    spec = parse_spec(SMALL_SPEC + "family = power-of k=2 base=veronese-type n=2 d=2 caps=2,1\n")
    assert spec.seed == 3 and spec.require_weakly_polymatroidal
    assert [f.kind for f in spec.families] == ["squarefree-veronese", "veronese-type", "principal", "power-of"]
    assert spec.families[3].params["base"].params["caps"] == (2, 1)
    with pytest.raises(ValueError):
        parse_spec("colour = blue\n")


def test_generate_deterministic():
    spec = parse_spec("seed = 11\nfamily = random n=4 t=5 max_exp=3 count=30\n")
    a, b = generate(spec), generate(spec)
    assert [(i, format_ideal(I)) for i, I in a] == [(i, format_ideal(I)) for i, I in b]
    spec.seed = 12
    assert [I for _, I in generate(spec)] != [I for _, I in a]


def test_run_suite_small():
    report = run_suite(parse_spec(SMALL_SPEC), exact=True)
    assert len(report.rows) == 2 + 9
    assert report.ok and all(r.conjecture_holds for r in report.rows)


def test_run_suite_skips_precondition():
    report = run_suite(parse_spec("family = random n=2 t=2 max_exp=3 count=20 seed=5\n"))
    statuses = {r.status for r in report.rows}
    assert "skipped: precondition" in statuses
    assert report.ok


def test_run_suite_empty():
    report = run_suite(parse_spec(""))
    assert report.rows == [] and report.ok


def test_report_determinism_and_jobs():
    spec = parse_spec(SMALL_SPEC + "family = random n=3 t=4 max_exp=2 count=15\n")
    strip = lambda rep: [{**r.__dict__, "seconds": 0} for r in rep.rows]
    one = run_suite(spec)
    assert strip(one) == strip(run_suite(spec))
    assert strip(one) == strip(run_suite(spec, jobs=2))


def test_report_files(tmp_path):
    report = run_suite(parse_spec(SMALL_SPEC))
    report.write(tmp_path)
    rows = json.loads((tmp_path / "report.json").read_text())
    assert len(rows) == len(report.rows)
    assert (tmp_path / "report.csv").read_text().splitlines()[0].startswith("id,family,n,t")


# -- CLI

@pytest.fixture
def triangle_file(tmp_path):
    p = tmp_path / "triangle.txt"
    p.write_text("# x1x2, x1x3, x2x3\nn 3\n1 1 0\n1 0 1\n0 1 1\n")
    return str(p)


def test_cli_classify(triangle_file, capsys):
    assert cli.main(["classify", triangle_file]) == 0
    out = capsys.readouterr().out
    assert "polymatroidal " in out and "n_i = [1, 1]" in out
    assert "no" not in out.split()


def test_cli_classify_failure_witness(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("n 2\n2 0\n0 2\n")
    cli.main(["classify", str(p)])
    out = capsys.readouterr().out
    assert "weakly polymatroidal (given order)       no  [((2, 0), (0, 2), 0)]" in out


def test_cli_depth(triangle_file, capsys):
    assert cli.main(["depth", triangle_file, "--oracle", "--char", "2"]) == 0
    out = capsys.readouterr().out
    assert "pd = 2" in out and "depth = 1" in out and "totals = [1, 3, 2]" in out


def test_cli_sdepth_and_decompose(triangle_file, capsys):
    assert cli.main(["sdepth", triangle_file, "--exact"]) == 0
    assert "# sdepth = 1 (exact)" in capsys.readouterr().out
    assert cli.main(["decompose", triangle_file, "--trace", "--verify-exact"]) == 0
    out = capsys.readouterr().out
    assert "# split [x1]" in out and "# exact sdepth = 1" in out
    spaces = [l for l in out.splitlines() if not l.startswith("#")]
    assert spaces and all("|" in l for l in spaces)


def test_cli_decompose_rejects(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("n 2\n2 0\n0 2\n")
    assert cli.main(["decompose", str(p)]) == 2


def test_cli_suite(tmp_path, capsys, monkeypatch):
    spec = tmp_path / "small.spec"
    spec.write_text(SMALL_SPEC)
    monkeypatch.setenv("STANLEY_LAB_TIMEOUT", "5")
    assert cli.main(["suite", "--spec", str(spec), "--out", str(tmp_path / "out"), "--exact"]) == 0
    assert "11 ideals, 0 failures" in capsys.readouterr().out
    assert (tmp_path / "out" / "report.csv").exists()


def test_acceptance_spec_parses():
    assert generate(parse_spec(ACCEPTANCE_SPEC.read_text()))
