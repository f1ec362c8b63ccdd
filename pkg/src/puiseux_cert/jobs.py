"""Job files: JSON descriptions of one certification request.

Example::

    {
      "schema": "1",
      "variables": ["x1", "x2", "x3"],
      "system": ["(x1 - x2)*(x1 - 2*x2)", "x3"],
      "point": ["0", "0", "0"],
      "theta": [
        {"center": "0", "terms": [{"exp": "1", "coeff": "1"}]},
        {"center": "0", "terms": [{"exp": "1", "coeff": "1"}, {"exp": "3/2", "coeff": "1"}]},
        {"center": "0", "terms": []}
      ],
      "L": "2",
      "options": {"noether_bound": 1, "degree_bound": 2, "dim1": true}
    }

Everything is validated before any computation; failures raise
:class:`JobError` naming the offending field.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Union

from .certificates import SCHEMA
from .parse import PolySyntaxError, poly_parse
from .poly import MultiPoly, as_rational
from .puiseux import PuiseuxPoly

AUTO = "auto"


class JobError(ValueError):
    def __init__(self, field_name: str, message: str):
        self.field = field_name
        super().__init__(f"{field_name}: {message}")


@dataclass(frozen=True)
class JobOptions:
    noether_bound: Union[int, str] = AUTO
    degree_bound: Union[int, str] = AUTO
    dim1: bool = False
    variable_permutation: Optional[tuple] = None


@dataclass(frozen=True)
class JobFile:
    variables: tuple
    system: tuple
    point: tuple
    theta: tuple
    L: Fraction
    options: JobOptions = field(default_factory=JobOptions)
    digest: str = ""

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def m(self) -> int:
        return len(self.system)


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def digest_of(data) -> str:
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


def load_json(path: Union[str, Path]):
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise JobError(str(path), f"cannot read file: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(str(path), f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def _check_schema(data: dict) -> None:
    if not isinstance(data, dict):
        raise JobError("<root>", "expected a JSON object")
    schema = data.get("schema", SCHEMA)
    if schema != SCHEMA:
        raise JobError("schema", f"unsupported schema {schema!r}, expected {SCHEMA!r}")


def parse_variables(data: dict) -> list[str]:
    names = data.get("variables")
    if not isinstance(names, list) or not names or not all(isinstance(s, str) for s in names):
        raise JobError("variables", "expected a nonempty list of names")
    if len(set(names)) != len(names):
        raise JobError("variables", "variable names must be distinct")
    return names


def parse_system(data: dict, names: list[str]) -> list[MultiPoly]:
    system = data.get("system")
    if not isinstance(system, list):
        raise JobError("system", "expected a list of polynomial strings")
    if not system:
        raise JobError("system", "the system is empty")
    out = []
    for k, text in enumerate(system):
        if not isinstance(text, str):
            raise JobError(f"system[{k}]", "expected a string")
        try:
            out.append(poly_parse(text, names))
        except PolySyntaxError as exc:
            raise JobError(f"system[{k}]", str(exc)) from exc
    return out


def _rational(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise JobError(where, "rationals must be written as strings 'p/q', not floats")
    try:
        return as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise JobError(where, str(exc)) from exc


def _bound_option(value, where: str):
    if value == AUTO:
        return AUTO
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise JobError(where, "expected a positive integer or \"auto\"")
    return value


def parse_job(data: dict) -> JobFile:
    _check_schema(data)
    names = parse_variables(data)
    n = len(names)
    system = parse_system(data, names)
    point = data.get("point")
    if not isinstance(point, list) or len(point) != n:
        raise JobError("point", f"expected a list of {n} rationals")
    point = [_rational(x, f"point[{k}]") for k, x in enumerate(point)]
    theta = data.get("theta")
    if not isinstance(theta, list) or len(theta) != n:
        raise JobError("theta", f"expected a list of {n} series objects")
    series = []
    for k, item in enumerate(theta):
        try:
            series.append(PuiseuxPoly.from_dict(item))
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise JobError(f"theta[{k}]", str(exc)) from exc
    if "L" not in data:
        raise JobError("L", "missing")
    L = _rational(data["L"], "L")
    raw_opts = data.get("options", {})
    if not isinstance(raw_opts, dict):
        raise JobError("options", "expected an object")
    unknown = set(raw_opts) - {"noether_bound", "degree_bound", "dim1", "variable_permutation"}
    if unknown:
        raise JobError("options", f"unknown option(s) {sorted(unknown)}")
    dim1 = raw_opts.get("dim1", False)
    if not isinstance(dim1, bool):
        raise JobError("options.dim1", "expected true or false")
    perm = raw_opts.get("variable_permutation")
    opts = JobOptions(
        _bound_option(raw_opts.get("noether_bound", AUTO), "options.noether_bound"),
        _bound_option(raw_opts.get("degree_bound", AUTO), "options.degree_bound"),
        dim1,
        None if perm is None else tuple(perm),
    )
    if perm is not None:
        if sorted(perm) != sorted(names):
            raise JobError("options.variable_permutation", "must list every variable exactly once")
        order = [names.index(v) for v in perm]
        names = list(perm)
        system = [f.permute(order) for f in system]
        point = [point[i] for i in order]
        series = [series[i] for i in order]
    return JobFile(tuple(names), tuple(system), tuple(point), tuple(series), L, opts, digest_of(data))


def load_job(path: Union[str, Path]) -> JobFile:
    return parse_job(load_json(path))
