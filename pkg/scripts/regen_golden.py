"""Rewrite corpus/golden/<name>.json from the current certifier output.

Run only after a deliberate change to the report format; the acceptance
suite compares fresh reports against these files byte for byte.
"""

import argparse
from pathlib import Path

from puiseux_cert.cli import dump, run_certify
from puiseux_cert.jobs import load_job, load_json

ROOT = Path(__file__).resolve().parent.parent / "corpus"


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--corpus", type=Path, default=ROOT)
    args = parser.parse_args()
    manifest = load_json(args.corpus / "manifest.json")
    out_dir = args.corpus / "golden"
    out_dir.mkdir(exist_ok=True)
    for item in manifest["jobs"]:
        report = run_certify(load_job(args.corpus / item["path"]))
        (out_dir / f"{item['name']}.json").write_text(dump(report), encoding="utf-8")
        print(f"{item['name']:28s} {report['verdict']}")


if __name__ == "__main__":
    main()
