"""Command-line front end.

    puiseux-cert certify job.json
    puiseux-cert expand --poly "x2^2 - x1^3" --precision 5
    puiseux-cert bounds system.json
    puiseux-cert batch corpus/manifest.json
    puiseux-cert harness --pairs 200 --seed 0

Exit codes for ``certify``: 0 certified, 10 inconclusive, 2 precondition
violated, 1 for unreadable or invalid input. ``batch`` exits 1 when any job
could not be run and 0 otherwise.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .audit import audit_mismatches
from .bivariate import BivariateQuery, lemma_prefix_certificate, proposition_common_curve
from .bounds import BoundResolution, degree_bounds, noether_bounds, user_bound
from .certificates import EXIT_CODES, SCHEMA, Verdict
from .harness import HarnessConfig, run_oracle_harness
from .jobs import AUTO, JobError, JobFile, load_job, load_json, parse_system, parse_variables
from .multivar import SystemQuery, certify_curve_prefix, certify_nonisolated
from .newton import ExpansionDepthError, expand_branches
from .parse import PolySyntaxError, poly_parse
from .poly import as_rational, format_rational

log = logging.getLogger("puiseux_cert")

EXIT_ERROR = 1


class AuditFailure(RuntimeError):
    pass


def dump(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _resolve(option, resolver, system) -> tuple:
    """(BoundReport, BoundResolution or None) for an option that may be "auto"."""
    if option == AUTO:
        res = resolver(system)
        return res.chosen, res
    return user_bound(option), None


def _overall(verdicts: list[Verdict]) -> Verdict:
    # any sound certificate is enough; otherwise surface broken input first
    if Verdict.CERTIFIED in verdicts:
        return Verdict.CERTIFIED
    if Verdict.PRECONDITION_VIOLATED in verdicts:
        return Verdict.PRECONDITION_VIOLATED
    return Verdict.INCONCLUSIVE


def run_certify(job: JobFile) -> dict:
    """All applicable certificates for one job, audited, as a report dict."""
    system = list(job.system)
    resolutions: dict[str, Optional[BoundResolution]] = {}
    noether, resolutions["noether"] = _resolve(job.options.noether_bound, noether_bounds, system)
    degree = None
    if job.options.dim1:
        degree, resolutions["degree"] = _resolve(job.options.degree_bound, degree_bounds, system)

    query = SystemQuery(system, job.point, job.theta, job.L, noether, degree, job.options.dim1, job.variables)
    certs = [certify_nonisolated(query)]
    if job.options.dim1:
        certs.append(certify_curve_prefix(query))
    if job.n == 2 and job.m in (1, 2):
        bq = BivariateQuery(system, job.point, job.theta[1], job.L, job.variables)
        certs.append(lemma_prefix_certificate(bq) if job.m == 1 else proposition_common_curve(bq))

    dicts = []
    for cert in certs:
        bad = audit_mismatches(cert)
        if bad:
            raise AuditFailure(f"{cert.kind} certificate failed its own audit: {bad}")
        dicts.append(cert.to_dict())
    verdict = _overall([c.verdict for c in certs])
    summary = [f"{c.kind}: {c.verdict.value}" for c in certs]
    return {
        "schema": SCHEMA,
        "job_digest": job.digest,
        "verdict": verdict.value,
        "exit_code": EXIT_CODES[verdict],
        "certificates": dicts,
        "bound_resolution": {k: None if v is None else v.to_dict() for k, v in sorted(resolutions.items())},
        "summary": summary,
    }


def _text_certify(report: dict) -> str:
    lines = [f"verdict: {report['verdict']} (exit {report['exit_code']})", f"job: {report['job_digest'][:16]}"]
    for cert in report["certificates"]:
        lines.append(f"[{cert['kind']}] {cert['verdict']}")
        lines.append(f"  orders: {', '.join(cert['orders'])}  L = {cert['L'] if 'L' in cert else cert['query']['L']}")
        if cert.get("threshold") is not None:
            lines.append(f"  threshold: {cert['threshold']}  M = {cert['M']}")
        for r in cert.get("reasons", []) + cert.get("violations", []):
            lines.append(f"  - {r}")
        lines.append(f"  {cert['statement']}")
    return "\n".join(lines) + "\n"


@dataclass
class Emitter:
    fmt: str = "json"
    timing: bool = False

    def emit(self, data: dict, text: Optional[str] = None, started: Optional[float] = None) -> None:
        if self.timing and started is not None:
            data = dict(data, timing={"seconds": round(time.perf_counter() - started, 6)})
        if self.fmt == "text" and text is not None:
            sys.stdout.write(text)
        else:
            sys.stdout.write(dump(data))


def cmd_certify(args, out: Emitter) -> int:
    started = time.perf_counter()
    job = load_job(args.job)
    report = run_certify(job)
    out.emit(report, _text_certify(report), started)
    return report["exit_code"]


def cmd_expand(args, out: Emitter) -> int:
    started = time.perf_counter()
    names = [v.strip() for v in args.vars.split(",")]
    if len(names) != 2:
        raise JobError("--vars", "expected exactly two comma-separated names")
    try:
        q = poly_parse(args.poly, names)
        center, y0, precision = as_rational(args.center), as_rational(args.y0), as_rational(args.precision)
    except (PolySyntaxError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise JobError("expand", str(exc)) from exc
    data = {
        "schema": SCHEMA,
        "poly": q.to_string(names),
        "center": format_rational(center),
        "y0": format_rational(y0),
        "precision": format_rational(precision),
    }
    try:
        branches = expand_branches(q, center, y0, precision)
    except (ValueError, ExpansionDepthError) as exc:
        data["error"] = str(exc)
        out.emit(data, f"precondition violated: {exc}\n", started)
        return EXIT_CODES[Verdict.PRECONDITION_VIOLATED]
    data["branches"] = [b.to_dict() for b in branches]
    text = "".join(
        f"{b.expansion}  [{b.status}, multiplicity {b.multiplicity}, residual order {d['residual_order']}]\n"
        for b, d in zip(branches, data["branches"])
    )
    out.emit(data, text, started)
    return 0


def cmd_bounds(args, out: Emitter) -> int:
    started = time.perf_counter()
    data = load_json(args.system)
    if not isinstance(data, dict):
        raise JobError("<root>", "expected a JSON object")
    names = parse_variables(data)
    system = parse_system(data, names)
    noether, degree = noether_bounds(system), degree_bounds(system)
    report = {"schema": SCHEMA, "noether": noether.to_dict(), "degree": degree.to_dict()}
    text = []
    for label, res in (("noether", noether), ("degree", degree)):
        for c in res.candidates:
            mark = "*" if c == res.chosen else " "
            text.append(f"{mark} {label:8s} {c.kind:16s} {c.value}")
        text += [f"  warning: {w}" for w in res.warnings]
    out.emit(report, "\n".join(text) + "\n", started)
    return 0


def _manifest_entries(target: Path) -> list[tuple[str, Path]]:
    if target.is_dir():
        return sorted((p.stem, p) for p in target.glob("*.json") if p.name != "manifest.json")
    data = load_json(target)
    if not isinstance(data, dict) or not isinstance(data.get("jobs"), list):
        raise JobError("jobs", "a manifest needs a 'jobs' list")
    entries = []
    for k, item in enumerate(data["jobs"]):
        if not isinstance(item, dict) or not isinstance(item.get("path"), str):
            raise JobError(f"jobs[{k}]", "expected an object with a 'path' string")
        path = target.parent / item["path"]
        entries.append((str(item.get("name", path.stem)), path))
    names = [n for n, _ in entries]
    if len(set(names)) != len(names):
        raise JobError("jobs", "job names must be distinct")
    return sorted(entries)


def _run_one(path: Path) -> dict:
    try:
        report = run_certify(load_job(path))
    except JobError as exc:
        return {"status": "error", "error": str(exc)}
    return {"status": "ok", "verdict": report["verdict"], "exit_code": report["exit_code"], "report": report}


def run_batch(target: Path, workers: int = 4) -> dict:
    entries = _manifest_entries(target)
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        results = list(pool.map(_run_one, [p for _, p in entries]))
    jobs = [dict(res, name=name) for (name, _), res in zip(entries, results)]
    counts = {v.value: 0 for v in Verdict}
    counts["error"] = 0
    for job in jobs:
        counts[job["verdict"] if job["status"] == "ok" else "error"] += 1
    return {"schema": SCHEMA, "jobs": jobs, "summary": counts}


def cmd_batch(args, out: Emitter) -> int:
    started = time.perf_counter()
    report = run_batch(Path(args.target), args.workers)
    text = [f"{j['name']:24s} {j.get('verdict', 'error'):22s} {j.get('error', '')}".rstrip() for j in report["jobs"]]
    text.append(" ".join(f"{k}={v}" for k, v in sorted(report["summary"].items())))
    out.emit(report, "\n".join(text) + "\n", started)
    return EXIT_ERROR if report["summary"]["error"] else 0


def cmd_harness(args, out: Emitter) -> int:
    started = time.perf_counter()
    config = HarnessConfig(pairs=args.pairs, seed=args.seed)
    res = run_oracle_harness(config)
    data = {
        "schema": SCHEMA,
        "config": {"pairs": config.pairs, "max_degree": config.max_degree, "coeff_range": config.coeff_range, "seed": config.seed},
        "cases": res.cases,
        "queries": res.queries,
        "certified": res.certified,
        "oracle_failures": len(res.failures),
        "resultants_checked": res.resultants_checked,
        "resultant_failures": len(res.resultant_failures),
    }
    text = (
        f"{res.cases} pairs, {res.queries} queries, {res.certified} certified, "
        f"{len(res.failures)} oracle failures; {res.resultants_checked} resultants, "
        f"{len(res.resultant_failures)} degree-bound failures\n"
    )
    out.emit(data, text, started)
    return 0 if not res.failures and not res.resultant_failures else EXIT_ERROR


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized harnesses")
    common.add_argument("--timing", action="store_true", help="add wall-clock timing (breaks byte-identical output)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="puiseux-cert", description="Certify non-isolated solutions via Puiseux prefixes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", parents=[common], help="run every applicable certificate on a job file")
    p.add_argument("job")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("expand", parents=[common], help="Newton-Puiseux branches of q(x1, x2) through a point")
    p.add_argument("--poly", required=True)
    p.add_argument("--vars", default="x1,x2")
    p.add_argument("--center", default="0")
    p.add_argument("--y0", default="0")
    p.add_argument("--precision", default="5")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("bounds", parents=[common], help="Noether-exponent and degree upper bounds for a system")
    p.add_argument("system")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("batch", parents=[common], help="certify every job of a manifest or directory")
    p.add_argument("target")
    p.add_argument("--workers", type=int, default=4)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("harness", parents=[common], help="randomized oracle cross-check of the common-curve certificate")
    p.add_argument("--pairs", type=int, default=200)
    p.set_defaults(func=cmd_harness)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    out = Emitter(args.format, args.timing)
    try:
        return args.func(args, out)
    except JobError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
