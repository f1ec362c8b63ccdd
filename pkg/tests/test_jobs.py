import json
from fractions import Fraction

import pytest

from puiseux_cert.jobs import AUTO, JobError, digest_of, load_job, parse_job

T = {"center": "0", "terms": [{"exp": "1", "coeff": "1"}]}
ZERO = {"center": "0", "terms": []}


def job(**over):
    base = {
        "schema": "1",
        "variables": ["x1", "x2"],
        "system": ["x2"],
        "point": ["0", "0"],
        "theta": [T, ZERO],
        "L": "1",
    }
    base.update(over)
    return base


def test_minimal_job_defaults():
    j = parse_job(job())
    assert j.n == 2 and j.m == 1 and j.L == 1
    assert j.options.noether_bound == AUTO and j.options.dim1 is False


@pytest.mark.parametrize(
    "over, field",
    [
        ({"system": []}, "system"),
        ({"system": ["x2 +"]}, "system[0]"),
        ({"system": ["y"]}, "system[0]"),
        ({"point": ["0"]}, "point"),
        ({"point": [0.5, "0"]}, "point[0]"),
        ({"point": ["1.5", "0"]}, "point[0]"),
        ({"theta": [T]}, "theta"),
        ({"theta": [T, {"center": "0"}]}, "theta[1]"),
        ({"L": 2.0}, "L"),
        ({"schema": "2"}, "schema"),
        ({"variables": ["x1", "x1"]}, "variables"),
        ({"options": {"noether_bound": 0}}, "options.noether_bound"),
        ({"options": {"dim1": "yes"}}, "options.dim1"),
        ({"options": {"bogus": 1}}, "options"),
        ({"options": {"variable_permutation": ["x1", "x3"]}}, "options.variable_permutation"),
    ],
)
def test_validation_names_the_field(over, field):
    with pytest.raises(JobError) as info:
        parse_job(job(**over))
    assert info.value.field == field


def test_missing_L():
    data = job()
    del data["L"]
    with pytest.raises(JobError, match="L"):
        parse_job(data)


def test_permutation_reorders_everything():
    data = job(system=["x1 - 1"], point=["0", "1"], theta=[T, {"center": "0", "terms": [{"exp": "0", "coeff": "1"}]}])
    data["options"] = {"variable_permutation": ["x2", "x1"]}
    j = parse_job(data)
    assert j.variables == ("x2", "x1")
    assert j.point == (Fraction(1), Fraction(0))
    assert j.system[0].terms == {(0, 1): 1, (0, 0): -1}


def test_digest_is_key_order_independent():
    a = job()
    b = dict(reversed(list(a.items())))
    assert digest_of(a) == digest_of(b)
    assert digest_of(a) != digest_of(job(L="2"))


def test_bad_json_reports_line_and_column(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{\n  "schema": "1",\n  "L": ,\n}\n')
    with pytest.raises(JobError, match="line 3, column 8"):
        load_job(path)


def test_missing_file(tmp_path):
    with pytest.raises(JobError, match="cannot read"):
        load_job(tmp_path / "nope.json")


def test_load_roundtrip(tmp_path):
    path = tmp_path / "ok.json"
    path.write_text(json.dumps(job()))
    assert load_job(path).digest == digest_of(job())
