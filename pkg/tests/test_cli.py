"""CLI subcommands, exit codes, JSON reports."""

import json

import pytest

from leibniz_homology.cli import EXIT_CAP, EXIT_OK, EXIT_USAGE, main


def run(args):
    return main(args)


def test_algebra_report(capsys, tmp_path):
    out = tmp_path / "alg.json"
    assert run(["algebra", "--p", "2", "--q", "2", "--json", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "dim so = 6" in text and "dim affine = 10" in text
    data = json.loads(out.read_text())
    assert data["schema_version"] == "1"
    assert data["command"] == "algebra"
    assert data["results"][0]["dim_affine"] == 10
    brackets = {(e["a"], e["b"]): e["bracket"] for e in data["results"][0]["structure"]}
    assert brackets[("d(1)", "X(1,2)")] == {"d(2)": -1}


def test_algebra_definite(capsys):
    assert run(["algebra", "--p", "3", "--q", "0"]) == EXIT_OK
    assert "dim so = 3" in capsys.readouterr().out


def test_algebra_invalid_signature(capsys):
    assert run(["algebra", "--p", "0", "--q", "2"]) == EXIT_USAGE


def test_invariants_descriptors(capsys, tmp_path):
    out = tmp_path / "inv.json"
    assert run(
        ["invariants", "--p", "2", "--q", "3", "--module", "so*wedge:2", "--json", str(out)]
    ) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["results"][0]["dim"] == 1
    chain = data["results"][0]["basis"][0]
    assert all(set(t) == {"word", "numerator", "denominator"} for t in chain)

    assert run(["invariants", "--p", "2", "--q", "2", "--module", "wedge:I:4"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "dim 1" in text

    assert run(["invariants", "--p", "2", "--q", "2", "--module", "so*wedge:2"]) == EXIT_OK
    assert "dim 2" in capsys.readouterr().out

    assert run(["invariants", "--p", "2", "--q", "2", "--module", "so"]) == EXIT_OK
    assert run(["invariants", "--p", "2", "--q", "2", "--module", "bogus:3"]) == EXIT_USAGE


def test_homology_abelian(capsys, tmp_path):
    out = tmp_path / "hom.json"
    assert run(["homology", "--abelian", "2", "--max-degree", "3", "--json", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    betti = [e["betti"] for e in data["results"][0]["entries"]]
    assert betti == [1, 2, 4, 8]
    # duality table is included and identical
    dual = [e["betti"] for e in data["results"][1]["entries"]]
    assert dual == betti and data["results"][1]["variant"] == "cohomology"


def test_homology_h4_low_degrees(capsys):
    assert run(["homology", "--p", "2", "--q", "2", "--max-degree", "3"]) == EXIT_OK
    text = capsys.readouterr().out
    assert "predicted" in text


def test_homology_cap_gives_partial_and_exit3(capsys):
    code = run(
        ["homology", "--p", "2", "--q", "2", "--max-degree", "4", "--cap-modular", "1000"]
    )
    assert code == EXIT_CAP


def test_homology_usage_errors(capsys):
    assert run(["homology", "--abelian", "2", "--p", "2", "--q", "2"]) == EXIT_USAGE
    assert run(["homology", "--p", "2"]) == EXIT_USAGE


def test_verify_structure(capsys, tmp_path):
    out = tmp_path / "ver.json"
    assert run(
        ["verify", "--suite", "structure", "--p", "1", "--q", "3", "--json", str(out)]
    ) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["passed"] is True
    assert all(r["status"] in ("pass", "fail", "reported") for r in data["results"])


def test_verify_refuses_small_n(capsys):
    assert run(["verify", "--suite", "paper", "--p", "1", "--q", "2"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "n >= 4" in err


def test_env_var_overrides(monkeypatch, tmp_path):
    out = tmp_path / "env.json"
    monkeypatch.setenv("LEIBNIZ_HOMOLOGY_SEED", "99")
    monkeypatch.setenv("LEIBNIZ_HOMOLOGY_JSON", str(out))
    assert run(["homology", "--abelian", "2", "--max-degree", "2"]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["environment"]["seed"] == 99


@pytest.mark.slow
def test_verify_paper_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "--suite", "paper", "--p", "2", "--q", "2", "--seed", "42",
                "--json", str(a)]) == EXIT_OK
    assert run(["verify", "--suite", "paper", "--p", "2", "--q", "2", "--seed", "42",
                "--json", str(b)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["resolved_gamma_sign"] in (1, -1)
    assert data["environment"]["seed"] == 42


def test_homology_json_byte_identical(tmp_path):
    a, b = tmp_path / "h1.json", tmp_path / "h2.json"
    for path in (a, b):
        assert run(["homology", "--p", "2", "--q", "2", "--max-degree", "3",
                    "--seed", "7", "--json", str(path)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_verify_report_shape(tmp_path):
    out = tmp_path / "shape.json"
    assert run(["verify", "--suite", "all", "--p", "2", "--q", "2",
                "--json", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    ids = [r["check_id"] for r in data["results"]]
    assert len(ids) == len(set(ids))  # one claim per check id
    assert all(r["claim"] for r in data["results"])
    assert data["passed"] == all(r["status"] != "fail" for r in data["results"])
    assert {"seed", "primes", "cap_exact", "cap_modular"} <= set(data["environment"])
