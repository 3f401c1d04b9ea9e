import json

import pytest

from unionstab.cli import main
from unionstab.diagram import emit_diagram
from unionstab.plat import two_bridge_plat

from conftest import TREFOIL_PD


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def files(tmp_path):
    pd = tmp_path / "trefoil.pd"
    pd.write_text(TREFOIL_PD)
    plat = tmp_path / "six3.pd"
    plat.write_text(emit_diagram(two_bridge_plat([2, 1, 1, 2])))
    pres = tmp_path / "trefoil.pres"
    pres.write_text("gens 2\ng1 g2 g1 G2 G1 G2\n")
    return pd, plat, pres


def test_two_bridge(capsys):
    code, out, _ = run(capsys, "two-bridge", "--cf", "2,1,1,2")
    assert code == 0
    assert out.startswith("P 2 1 1 2\n")
    assert out.count("X") == 6


def test_two_bridge_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "two-bridge", "--cf", "3")
    assert json.loads(out)["stats"]["crossings"] == 3


def test_validate(capsys, files, tmp_path):
    assert run(capsys, "validate", str(files[0]))[:2] == (0, "ok\n")
    bad = tmp_path / "bad.pd"
    bad.write_text("Xp 1 2 3 4\n")
    assert run(capsys, "validate", str(bad))[0] == 1


def test_attach_and_perturb(capsys, files, tmp_path):
    code, out, _ = run(capsys, "attach-tunnels", "--upper", "--lower", str(files[1]))
    assert code == 0
    assert out.count("\nV ") == 4 and out.count("\nI ") == 2
    both = tmp_path / "both.pd"
    both.write_text(out)
    code, out, _ = run(capsys, "perturb", "--case", "2", str(both), "--output", "json")
    assert json.loads(out)["stats"]["crossings"] == 34


def test_attach_requires_a_side(capsys, files):
    code, _, err = run(capsys, "attach-tunnels", str(files[1]))
    assert code == 1 and "error:" in err


def test_group_commands(capsys, files):
    pd, _, pres = files
    code, out, _ = run(capsys, "wirtinger", str(pd))
    assert code == 0 and out.startswith("gens 3\n")
    assert run(capsys, "simplify", str(pres))[1].startswith("gens 2\n")
    assert run(capsys, "abelianize", str(pres))[1] == "Z^1\n"
    assert run(capsys, "count-homs", "--group", "S3", str(pres))[1] == "12\n"
    assert run(capsys, "--jobs", "2", "count-homs", "--group", "S3",
               "--symmetry-reduction", str(pres))[1] == "12\n"


def test_count_homs_with_cayley_file(capsys, files, tmp_path):
    table = tmp_path / "z2.txt"
    table.write_text("order 2\n0 1\n1 0\n")
    assert run(capsys, "count-homs", "--cayley", str(table), str(files[2]))[1] == "2\n"


def test_not_free_exit_codes(capsys, files, tmp_path):
    code, out, _ = run(capsys, "not-free", "--rank", "1", "--groups", "S3", str(files[2]))
    assert code == 0 and "NotFree(1) via S3" in out
    free = tmp_path / "free.pres"
    free.write_text("gens 2\n")
    assert run(capsys, "not-free", "--rank", "2", "--groups", "S3", str(free))[0] == 2


def test_budget_flag_and_environment(capsys, files, monkeypatch):
    code, out, _ = run(capsys, "--budget", "5", "not-free", "--rank", "1", "--groups", "S3",
                       str(files[2]))
    assert code == 2 and "skipped S3" in out
    monkeypatch.setenv("UNIONSTAB_BUDGET", "5")
    code, _, err = run(capsys, "count-homs", "--group", "S3", str(files[2]))
    assert code == 1 and "budget" in err


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "prop33", "--g", "1", "--n", "3")
    assert code == 0
    assert out.splitlines()[0].startswith("tunnel number = 3")
    assert out.splitlines()[1].startswith("union genus = 7")
    assert len(out.splitlines()) == 2
    out = run(capsys, "bounds", "prop33", "--g", "1", "--n", "3", "--euler-check")[1]
    assert len(out.splitlines()) == 3 and "= 7" in out.splitlines()[2]
    assert "= 3" in run(capsys, "bounds", "prop21", "--g", "2")[1]
    assert "= 9" in run(capsys, "bounds", "thm22", "--g1", "2", "--g2", "3", "--crossings", "4")[1]
    assert "= 4" in run(capsys, "bounds", "prop32", "--g1", "2", "--g2", "2")[1]
    code, out, _ = run(capsys, "--output", "json", "bounds", "prop21", "--g", "1")
    assert json.loads(out)["bounds"][0]["value"] == 2


def test_errors_exit_one(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "missing.pd"))[0] == 1
    assert run(capsys, "two-bridge", "--cf", "2,0")[0] == 1
    assert run(capsys, "no-such-command")[0] == 1
    bad = tmp_path / "bad.pres"
    bad.write_text("gens 1\ng2\n")
    code, _, err = run(capsys, "abelianize", str(bad))
    assert code == 1 and "line 2" in err


def test_case_study_small_budget(capsys):
    # a tiny budget refuses every count; the run still reports all four cases
    code, out, _ = run(capsys, "--budget", "10", "--output", "json", "case-study-63",
                       "--no-timing")
    data = json.loads(out)
    assert code == 2
    assert len(data["cases"]) == 4 and "timing" not in data
    assert all(c["verdict"]["verdict"] == "Inconclusive" for c in data["cases"])
    assert data["budget"] == 10
