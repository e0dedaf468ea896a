#!/usr/bin/env python3
"""Validate criterion reports against schemas/report.schema.json.

Each input file may hold a single report, a list of reports, or any CLI
document that nests reports (for example `examples run` output).
"""

import argparse
import json
import pathlib
import sys

import jsonschema

DEFAULT_SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "schemas" / "report.schema.json"


def collect_reports(doc):
    if isinstance(doc, dict):
        if "hypotheses" in doc and "conclusions" in doc:
            yield doc
            return
        for value in doc.values():
            yield from collect_reports(value)
    elif isinstance(doc, list):
        for item in doc:
            yield from collect_reports(item)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("files", nargs="+", type=pathlib.Path)
    parser.add_argument("--schema", type=pathlib.Path, default=DEFAULT_SCHEMA)
    args = parser.parse_args(argv)

    schema = json.loads(args.schema.read_text())
    validator_cls = jsonschema.validators.validator_for(schema)
    validator_cls.check_schema(schema)
    validator = validator_cls(schema)

    total = 0
    bad = 0
    for path in args.files:
        reports = list(collect_reports(json.loads(path.read_text())))
        if not reports:
            print(f"{path}: no reports found", file=sys.stderr)
            bad += 1
        for i, report in enumerate(reports):
            total += 1
            errors = sorted(validator.iter_errors(report), key=lambda e: list(e.path))
            for err in errors:
                loc = "/".join(str(p) for p in err.path)
                print(f"{path}[{i}] /{loc}: {err.message}", file=sys.stderr)
            bad += bool(errors)
    print(f"validated {total} reports, {bad} invalid")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
