import json
import subprocess
import sys

import pytest

from bzsv.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, infer_group, main, normal_form_group
from bzsv.rootdata import build_root_datum
from bzsv.tables import RHS_NOTICE


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--all")
    assert code == EXIT_OK
    assert out.strip().endswith("75/75 passed")
    assert RHS_NOTICE in out


def test_verify_json_matches_text(capsys):
    _, text, _ = run(capsys, "verify", "--table", "nonred2", "-v")
    code, js, _ = run(capsys, "verify", "--table", "nonred2", "--json")
    doc = json.loads(js)
    assert doc["schema"] == "bzsv-cli/1" and code == EXIT_OK
    assert doc["passed"] == doc["total"] == 5
    for e in doc["entries"]:
        assert f"{e['id']:<12} {'PASS' if e['ok'] else 'FAIL'}" in text


def test_verify_is_idempotent(capsys):
    _, a, _ = run(capsys, "verify", "red2:1", "red2:2", "--check", "validate,grading", "--json")
    _, b, _ = run(capsys, "verify", "red2:1", "red2:2", "--check", "validate,grading", "--json")
    strip = lambda s: {k: v for k, v in json.loads(s).items() if k != "seconds"}  # noqa: E731
    assert strip(a) == strip(b)


def test_verify_all_checks_reports_known_failure(capsys):
    code, out, _ = run(capsys, "verify", "--table", "nonred2x", "--check", "all")
    assert code == EXIT_FAIL
    assert "nonred2x:9" in out and "whittaker-compat=FAIL" in out


def test_verify_unknown_check(capsys):
    code, _, err = run(capsys, "verify", "--check", "nope")
    assert code == EXIT_USAGE and "unknown check" in err


def test_dim_e7(capsys):
    code, out, _ = run(capsys, "dim", "std(E7)")
    assert code == EXIT_OK and out.strip() == "56"


@pytest.mark.parametrize("spec,dim", [("wedge0_3(Sp6)", 14), ("HSpin+(Spin12)", 32), ("Spin(Spin11)", 32),
                                      ("Spin(Spin7)", 8), ("std(G2)", 7), ("std(E6)", 27)])
def test_dim_regressions(capsys, spec, dim):
    assert run(capsys, "dim", spec)[1].strip() == str(dim)


def test_reduce_gsp10(capsys):
    code, out, _ = run(capsys, "reduce", "nonred1x:3")
    assert code == EXIT_OK
    assert "Delta_red(nonred1x:3) = ((GL2)^3, GL2, 0, 1)" in out
    assert "match" in out


def test_induce(capsys):
    code, out, _ = run(capsys, "induce", "nonred1x:3")
    assert code == EXIT_OK and "compatible" in out
    code, _, err = run(capsys, "induce", "red1:1")
    assert code == EXIT_USAGE


def test_entry(capsys):
    code, out, _ = run(capsys, "entry", "red1", "3")
    assert code == EXIT_OK and "GSp6 x GSpin7" in out
    code, out, _ = run(capsys, "entry", "nonred1x:12", "--json")
    doc = json.loads(out)
    assert doc["entry"]["id"] == "nonred1x:12" and doc["derived"]["period"] == "Bessel"


def test_glue(capsys):
    code, out, _ = run(capsys, "glue", "S.3:n=4", "S.3:n=4", "--lookup")
    assert code == EXIT_OK and "red1:22" in out
    code, out, _ = run(capsys, "glue", "S.9", "S.9")
    assert "rewrite" in out
    code, _, err = run(capsys, "glue", "S.8", "S.3:n=4")
    assert code == EXIT_USAGE and "not anomaly-free" in err


def test_glue_chain(capsys):
    code, out, _ = run(capsys, "glue", "S.3:n=4", "S.1:m=1", "S.3:n=4", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and doc["kind"] == "glued"
    assert doc["primal"]["rho_H"].count("(x)") == 4


def test_lfactor(capsys):
    code, out, _ = run(capsys, "lfactor", "std(GL2)(x)std(GL3)", "--coords", "1,1j,-1,0.5,2", "--q", "5", "--json")
    doc = json.loads(out)
    assert code == EXIT_OK and len(doc["factors"]) == 6
    code, out, _ = run(capsys, "lfactor", "triv(GL1)", "--s", "2")
    assert code == EXIT_OK and "1.33333333333333" in out
    code, out, _ = run(capsys, "lfactor", "std(GL1)", "--coords", "1", "--s", "0")
    assert code == EXIT_FAIL and "pole" in out


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "std(Sp4)(x)std(Sp4)", "--json")
    doc = json.loads(out)
    assert sorted(s["dim"] for s in doc["summands"]) == [1, 5, 10]


def test_bad_inputs(capsys):
    assert run(capsys, "dim", "std(GL2")[0] == EXIT_USAGE
    assert run(capsys, "entry", "red1:99")[0] == EXIT_USAGE
    assert run(capsys, "verify", "--corpus", "/nonexistent")[0] == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_mutated_corpus_exit_code(capsys, corpus_copy):
    p = corpus_copy / "red1.json"
    doc = json.loads(p.read_text())
    doc["entries"][7]["rho_H"] = "std(Sp4)(x)std(GL3)"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", "--corpus", str(corpus_copy))
    assert code == EXIT_FAIL and "74/75 passed" in out


def test_helpers():
    assert normal_form_group(build_root_datum("GL2^3")) == "(GL2)^3"
    assert normal_form_group(build_root_datum("GL1")) == "1"
    assert infer_group("std(GL2#1)(x)std(GL2#2)(x)Spin(Spin7)") == "GL2 x GL2 x Spin7"


def test_console_entry_points():
    for cmd in (["bzsv", "dim", "std(G2)"], [sys.executable, "-m", "bzsv", "dim", "std(G2)"]):
        res = subprocess.run(cmd, capture_output=True, text=True, check=False)
        assert res.returncode == 0 and res.stdout.strip() == "7"
