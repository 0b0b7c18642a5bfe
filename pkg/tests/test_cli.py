import json

import pytest

from conftest import components, ideal
from scarfkit.cli import main
from scarfkit.corpus import fixtures, generate_corpus, optimal, tree
from scarfkit.verify import verify_all

THREE = "vars: x,y,z\\ny*z^2\\nx*z^2\\ny^2*z\\nx*y^2\\nx^2"
TWISTED = "vars: a,b,c,d\na*c - b^2\na*d - b*c\nb*d - c^2\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_betti_grid(capsys):
    code, out, _ = run(capsys, "betti", THREE)
    assert code == 0
    assert out.splitlines()[1].split() == ["total:", "1", "5", "5", "1"]


def test_json_report(capsys):
    code, out, _ = run(capsys, "dual", "--json", THREE)
    data = json.loads(out)
    assert code == 0
    assert data["results"]["dual"] == "vars: x,y,z\nx^2*y^2\nx*y*z\nx^2*z^2\n"
    assert data["results"]["bound"] == [2, 2, 2]


def test_bound_option(capsys):
    code, out, _ = run(capsys, "dual", "--bound", "3,3,3", "vars: x,y,z\\nx\\ny")
    assert code == 0 and out.splitlines()[1:] == ["x^3*y^3"]


def test_file_and_stdin(capsys, tmp_path, monkeypatch):
    path = tmp_path / "m.txt"
    path.write_text("vars: x,y\nx^2\nx*y\ny^2\n")
    code, out, _ = run(capsys, "depth", str(path))
    assert (code, out.strip()) == (0, "depth: 0")
    monkeypatch.setattr("sys.stdin", open(path))
    code, out, _ = run(capsys, "cm", "-")
    assert (code, out.strip()) == (0, "cohen-macaulay: True")


@pytest.mark.parametrize(
    "argv,needle",
    [
        (["betti", "vars: x,y\\n"], "no generators"),
        (["betti", "vars: x,y\\nx^2*q"], "line 2, column 5"),
        (["betti", "/no/such/file"], "no such file"),
        (["betti", "--field", "p:4", "vars: x\\nx"], "field"),
        (["coscarf", "vars: x,y,z\\nx*y\\nx*z\\ny*z\\nx^2"], "not cogeneric"),
    ],
)
def test_input_errors_exit_two(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_usage_error_exit_two(capsys):
    assert run(capsys, "no-such-verb")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_unasserted_failure_exits_zero(capsys):
    # saturated chains are asserted only for generic input; the Borel ideal is reported, not asserted
    code, out, _ = run(capsys, "chains", "vars: x,y,z\\nx^2\\nx*y\\nx*z")
    assert code == 0 and "False" in out


def test_failed_check_exits_one(capsys, monkeypatch):
    from scarfkit import cli
    from scarfkit.reports import CheckReport

    monkeypatch.setattr(cli, "check_saturated_chains", lambda M: CheckReport.of("saturated-chains", False))
    code, _, err = run(capsys, "chains", "vars: x,y\\nx^2\\nx*y\\ny^2")
    assert code == 1 and "FAILED: saturated-chains" in err


def test_consistency_error_exits_one(capsys, monkeypatch):
    from scarfkit import cli
    from scarfkit.errors import ConsistencyError

    def boom(M):
        raise ConsistencyError("two routes disagree")

    monkeypatch.setattr(cli, "associated_primes", boom)
    code, _, err = run(capsys, "ass", "vars: x\\nx")
    assert code == 1 and "two routes disagree" in err


def test_binomial_verb_rejects_monomials(capsys):
    code, _, err = run(capsys, "gb", "vars: x,y,z\\nx^2\\nx*y")
    assert code == 2 and "line 2" in err


def test_census_verdicts_exit_zero(capsys, tmp_path):
    path = tmp_path / "tc.txt"
    path.write_text(TWISTED)
    code, out, _ = run(capsys, "census", "--json", str(path))
    data = json.loads(out)
    assert code == 0
    assert len(data["results"]["initial_ideals"]) == 8
    assert all(v["status"] == "pass" for v in data["verdicts"])


def test_gb_and_inideal(capsys, tmp_path):
    path = tmp_path / "tc.txt"
    path.write_text(TWISTED)
    assert run(capsys, "gb", str(path))[1].splitlines() == ["b^2 - a*c", "b*c - a*d", "c^2 - b*d"]
    assert run(capsys, "inideal", str(path))[1].splitlines()[1:] == ["b^2", "b*c", "c^2"]


def test_resolve_verbs(capsys):
    code, out, _ = run(capsys, "resolve", "taylor", "vars: x,y\\nx^2\\nx*y\\ny^2")
    assert code == 0 and "ranks: [1, 3, 3, 1]" in out and "minimal: False" in out
    code, out, _ = run(capsys, "resolve", "scarf", "vars: x,y,z\\nx*y\\nx*z\\ny*z")
    assert code == 0 and "exact: False" in out


def test_hvector_verb(capsys):
    code, out, _ = run(capsys, "hvector", "--local", "x,y", "vars: x,y\\nx^2\\nx*y\\ny^2")
    assert code == 0
    assert out.splitlines() == ["h: [1, 1]", "local h: [0, 1]"]
    code, _, err = run(capsys, "hvector", "vars: x,y,z\\nx*y\\nx*z")
    assert code == 2


@pytest.mark.parametrize(
    "verb",
    ["check-generic", "check-cogeneric", "scarf", "extended", "decompose", "stanley-reisner",
     "coscarf", "type", "ass", "connectivity", "dual-betti-check"],
)
def test_every_verb_runs_on_three(capsys, verb):
    code, out, _ = run(capsys, verb, "--json", THREE)
    assert code == 0
    json.loads(out)


def test_verify_all_three(capsys):
    code, out, _ = run(capsys, "verify-all", "--json", THREE)
    data = json.loads(out)
    res = data["results"]
    assert code == 0
    assert res["betti_totals"] == [1, 5, 5, 1]
    assert res["depth"] == 0
    assert res["dual"] == "vars: x,y,z\nx^2*y^2\nx*y*z\nx^2*z^2\n"
    assert len(res["co_scarf_interior"]) == 11
    assert sorted(res["components"]) == [[1, 0, 1], [1, 1, 0], [2, 2, 2]]
    assert all(v["status"] in ("pass", "na") for v in data["verdicts"])


def test_verify_all_tree_three():
    rep = verify_all(tree(3))
    res = rep.results
    assert res["generic"] and res["cm"] and res["colength"] == 16
    shell = next(v for v in rep.verdicts if v.check == "shellability")
    assert shell.details["scarf"] is True and shell.details["stanley_reisner"] is True
    assert not rep.failed


def test_verify_all_never_reports_conjecture():
    names = {v.check for f in fixtures().values() for v in verify_all(f.ideal).verdicts}
    assert "top-codim-prime" not in names


def test_config_override_warns(capsys, tmp_path, caplog):
    cfg = tmp_path / "caps.cfg"
    cfg.write_text("shelling_max_facets = 2\n")
    from scarfkit import config

    old = config.LIMITS
    try:
        code, out, _ = run(capsys, "verify-all", "--json", "--config", str(cfg), "vars: x,y,z\\nx^2\\ny^2\\nz^2\\nx*y*z")
    finally:
        config.set_limits(old)
    assert code == 0
    assert "overridden" in caplog.text


def test_corpus_verb_deterministic(capsys):
    a = run(capsys, "corpus", "generic", "--seed", "7", "--count", "5", "--json")[1]
    b = run(capsys, "corpus", "generic", "--seed", "7", "--count", "5", "--json")[1]
    assert a == b


def test_corpus_families():
    assert optimal(3, 2) == components("x1,x2,x3,x4", (1, 1, 1, 0), (2, 2, 0, 1))
    assert tree(2) == ideal("x,y", "x^2", "x*y", "y^2")
    assert generate_corpus("random", 3, 20) == generate_corpus("random", 3, 20)
    with pytest.raises(ValueError):
        generate_corpus("bogus", 0, 1)


def test_fixture_notes_are_present():
    for key, f in fixtures().items():
        assert f.key == key and f.note
