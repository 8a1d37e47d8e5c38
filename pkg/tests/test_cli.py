import json

import pytest

from rigcat import finperm as fp
from rigcat.canhom import canonical_hom, hom_to_dict, random_hom
from rigcat.cli import main
from rigcat.rigiface import fset_instance


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_structural_commands(capsys):
    assert run(capsys, "rdist", "1", "1", "4") == (0, "(2,3,5)(4,7,6)_8\n", "")
    assert run(capsys, "add-comm", "1", "2")[1] == "(1,3,2)_3\n"
    code, out, _ = run(capsys, "mul-comm", "3", "3", "--order")
    assert out == "(2,4)(3,7)(6,8)_9\norder 2\n"
    assert run(capsys, "sigma", "2", "3")[1] == "(2,3)(4,5)_6\n"
    assert run(capsys, "sigma", "1")[1] == "()_2\n"


def test_sigma_bad_index(capsys):
    code, _, err = run(capsys, "sigma", "5", "3")
    assert code == 2 and err.startswith("rigcat:")


def test_negative_sizes_are_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["rdist", "-1", "1", "1"])
    capsys.readouterr()


def test_verify_laplaza_text(capsys):
    code, out, _ = run(capsys, "verify", "laplaza", "--target", "fset", "--max", "3")
    assert code == 0
    assert "0 failed" in out.splitlines()[-1]


def test_verify_mutant_reports_first_failure(capsys):
    code, out, _ = run(capsys, "verify", "laplaza", "--target", "fset-mutant-dprime-id", "--max", "2")
    assert code == 1
    assert "A4.1" in out
    assert out.splitlines()[-1].startswith("first failure:")


def test_verify_json_is_deterministic(capsys):
    argv = ["verify", "laplaza", "--target", "fset-mutant-comm-id", "--max", "2", "--format", "json", "--seed", "5"]
    a = run(capsys, *argv)
    b = run(capsys, *argv)
    assert a == b
    doc = json.loads(a[1])
    assert doc["schema"] == 1
    assert doc["config"]["seed"] == 5
    assert doc["failures"] == sum(r["verdict"] == "fail" for r in doc["reports"]) > 0


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("RIGCAT_SEED", "11")
    _, out, _ = run(capsys, "verify", "oracle", "--max", "2", "--format", "json", "--samples", "10")
    assert json.loads(out)["config"]["seed"] == 11


def test_unique_skips_on_mat(capsys):
    code, out, _ = run(capsys, "verify", "unique", "--target", "mat", "--max", "2")
    assert code == 0
    assert "SKIP UNIQUE-pruned" in out


def test_verify_all_on_mat(capsys):
    code, out, _ = run(capsys, "verify", "all", "--target", "mat", "--max", "3", "--seed", "7", "--homs", "5")
    assert code == 0, out


def test_hom_build_fcan(capsys):
    code, out, _ = run(capsys, "hom", "build", "@fcan")
    assert code == 0
    assert "fcan: equals F_can at all checked indices" in out


def test_hom_build_inspect_compare_files(capsys, tmp_path):
    S = fset_instance()
    path = tmp_path / "h.json"
    h = random_hom(S, 4, __import__("random").Random(3))
    path.write_text(json.dumps(hom_to_dict(h)))

    code, out, _ = run(capsys, "hom", "build", str(path))
    assert code == 0 and "differs from F_can" in out

    code, out, _ = run(capsys, "hom", "inspect", str(path), "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["tau"][3] == str(h.tau[3])

    code, out, _ = run(capsys, "hom", "compare", "@fcan", str(path))
    assert code == 0
    assert str(fp.invert(h.tau[4])) in out


def test_hom_compare_mat(capsys):
    code, out, _ = run(capsys, "hom", "compare", "@random:1", "@random:2", "--target", "mat", "--max", "2")
    assert code == 0, out


def test_descriptor_errors_exit_2(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"target": "fset", "tau": ["()_0", "()_1", "(1,2_2"]}')
    code, out, err = run(capsys, "hom", "build", str(path))
    assert code == 2 and out == ""
    assert "tau[2]" in err
    code, _, err = run(capsys, "hom", "build", str(tmp_path / "missing.json"))
    assert code == 2
