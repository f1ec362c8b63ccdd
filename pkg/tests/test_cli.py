import json
import shutil
from pathlib import Path

import pytest

from puiseux_cert.audit import audit_certificate
from puiseux_cert.cli import main

CORPUS = Path(__file__).resolve().parent.parent / "corpus"
JOBS = CORPUS / "jobs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_certify_example_37(capsys):
    code, out, _ = run(capsys, "certify", JOBS / "curve_prefix.json")
    report = json.loads(out)
    assert code == 0 and report["verdict"] == "certified"
    prefix = next(c for c in report["certificates"] if c["kind"] == "curve-prefix")
    assert prefix["threshold"] == "1" and prefix["M"] == 1
    assert [c["terms"] for c in prefix["certified_prefix"]] == [
        [{"exp": "1", "coeff": "1"}],
        [{"exp": "1", "coeff": "1"}],
        [],
    ]


def test_certify_example_23_inconclusive(capsys):
    code, out, _ = run(capsys, "certify", JOBS / "no_common_curve.json")
    report = json.loads(out)
    assert code == 10 and report["verdict"] == "inconclusive"
    kinds = {c["kind"]: c for c in report["certificates"]}
    assert set(kinds) == {"nonisolation", "common-curve"}
    assert kinds["common-curve"]["orders"] == ["inf", "2"]


def test_certify_precondition_exit_code(capsys, tmp_path):
    data = json.loads((JOBS / "curve_prefix.json").read_text())
    data["point"] = ["1", "0", "0"]
    data["theta"][0]["center"] = "1"
    for comp in data["theta"][1:]:
        comp["center"] = "1"
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(data))
    code, out, _ = run(capsys, "certify", path)
    assert code == 2 and json.loads(out)["verdict"] == "precondition-violated"


def test_certify_empty_system_is_a_validation_error(capsys, tmp_path):
    data = json.loads((JOBS / "curve_prefix.json").read_text())
    data["system"] = []
    path = tmp_path / "empty.json"
    path.write_text(json.dumps(data))
    code, out, err = run(capsys, "certify", path)
    assert code == 1 and out == "" and "system" in err


def test_certify_text_format(capsys):
    code, out, _ = run(capsys, "certify", JOBS / "lemma_prefix.json", "--format", "text")
    assert code == 0 and out.startswith("verdict: certified")
    assert "[lemma-prefix] certified" in out


def test_timing_is_opt_in(capsys):
    _, plain, _ = run(capsys, "certify", JOBS / "lemma_prefix.json")
    _, timed, _ = run(capsys, "certify", JOBS / "lemma_prefix.json", "--timing")
    assert "timing" not in json.loads(plain) and "timing" in json.loads(timed)


def test_reports_audit_after_reparse(capsys):
    for path in sorted(JOBS.glob("*.json")):
        _, out, _ = run(capsys, "certify", path)
        for cert in json.loads(out)["certificates"]:
            assert audit_certificate(cert)


def test_expand_cusp(capsys):
    code, out, _ = run(capsys, "expand", "--poly", "x2^2 - x1^3", "--precision", "5")
    branches = json.loads(out)["branches"]
    assert code == 0 and len(branches) == 2
    assert all(b["status"] == "exact" for b in branches)


def test_expand_linear(capsys):
    _, out, _ = run(capsys, "expand", "--poly", "x2 - 3*x1", "--precision", "2")
    (br,) = json.loads(out)["branches"]
    assert br["status"] == "exact" and br["expansion"]["terms"] == [{"exp": "1", "coeff": "3"}]


def test_expand_obstruction(capsys):
    _, out, _ = run(capsys, "expand", "--poly", "x2^2 - 2*x1^2")
    (br,) = json.loads(out)["branches"]
    assert br["status"] == "irrational-obstruction"


def test_expand_off_curve(capsys):
    code, out, _ = run(capsys, "expand", "--poly", "x2 - 1")
    assert code == 2 and "does not lie" in json.loads(out)["error"]


def test_expand_bad_poly(capsys):
    code, _, err = run(capsys, "expand", "--poly", "x2 +* 1")
    assert code == 1 and "position" in err


def write(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return path


def test_bounds_dense_quadratics(capsys, tmp_path):
    path = write(tmp_path, "s.json", {"variables": ["x1", "x2"], "system": ["x1^2 + x2^2 - 1", "x1^2 - x2^2 + x1*x2"]})
    code, out, _ = run(capsys, "bounds", path)
    rep = json.loads(out)
    kinds = {c["kind"]: c["value"] for c in rep["noether"]["candidates"] + rep["degree"]["candidates"]}
    assert code == 0 and kinds["bezout-noether"] == 4 and kinds["bezout-degree"] == 4
    assert kinds["sparse-degree"] == 4 and kinds["mixedvol-degree"] == 4


def test_bounds_linear(capsys, tmp_path):
    path = write(tmp_path, "s.json", {"variables": ["x1", "x2"], "system": ["x1 + x2", "x1 - 2*x2 + 1"]})
    _, out, _ = run(capsys, "bounds", path)
    rep = json.loads(out)
    values = {c["kind"]: c["value"] for c in rep["noether"]["candidates"] + rep["degree"]["candidates"]}
    # sparse Noether carries the n^(n+2) factor even for unit volume
    assert values.pop("sparse-noether") == 16
    assert set(values.values()) == {1}
    assert rep["noether"]["chosen"]["value"] == 1


def test_bounds_fallback_above_cap(capsys, tmp_path):
    names = [f"x{i}" for i in range(1, 6)]
    path = write(tmp_path, "s.json", {"variables": names, "system": ["x1*x2 + x5^2"]})
    _, out, _ = run(capsys, "bounds", path)
    rep = json.loads(out)
    assert [c["kind"] for c in rep["noether"]["candidates"]] == ["bezout-noether"]
    assert rep["noether"]["warnings"] and rep["degree"]["warnings"]


def test_batch_empty_manifest(capsys, tmp_path):
    path = write(tmp_path, "manifest.json", {"schema": "1", "jobs": []})
    code, out, _ = run(capsys, "batch", path)
    rep = json.loads(out)
    assert code == 0 and rep["jobs"] == [] and sum(rep["summary"].values()) == 0


def test_batch_with_malformed_job(capsys, tmp_path):
    shutil.copy(JOBS / "curve_prefix.json", tmp_path / "good.json")
    (tmp_path / "broken.json").write_text("{ not json")
    code, out, _ = run(capsys, "batch", tmp_path)
    rep = json.loads(out)
    assert code == 1
    assert [j["name"] for j in rep["jobs"]] == ["broken", "good"]
    assert rep["jobs"][0]["status"] == "error" and rep["jobs"][1]["verdict"] == "certified"


def test_batch_text_summary(capsys):
    code, out, _ = run(capsys, "batch", CORPUS / "manifest.json", "--format", "text")
    assert code == 0 and "certified=3" in out and "inconclusive=2" in out


def test_harness_subcommand(capsys):
    code, out, _ = run(capsys, "harness", "--pairs", "5", "--seed", "3")
    rep = json.loads(out)
    assert code == 0 and rep["cases"] == 5 and rep["oracle_failures"] == 0


@pytest.mark.parametrize("path", sorted(JOBS.glob("*.json")), ids=lambda p: p.stem)
def test_certify_matches_golden(capsys, path):
    _, out, _ = run(capsys, "certify", path)
    assert out == (CORPUS / "golden" / path.name).read_text(encoding="utf-8")
