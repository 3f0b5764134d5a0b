#!/usr/bin/env python3
# munnlab - representation types of Munn algebras and Rees matrix semigroups
"""Validate munnlab JSON reports against docs/report_schema.json.

    validate_report.py REPORT.json [...]     validate files ("-" reads stdin)
    validate_report.py --run MUNNLAB EXAMPLE.toml [...]
        run `MUNNLAB classify --json` on each example twice, then check the
        exit code, byte stability, schema validity and the agreement flag
"""

import argparse
import json
import pathlib
import subprocess
import sys

import jsonschema

SCHEMA = pathlib.Path(__file__).resolve().parent.parent / "docs" / "report_schema.json"


def validator():
    schema = json.loads(SCHEMA.read_text())
    jsonschema.Draft7Validator.check_schema(schema)
    return jsonschema.Draft7Validator(schema)


def errors_of(v, text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        return [f"not JSON: {e}"], None
    return [f"{'/'.join(map(str, e.path)) or '<root>'}: {e.message}"
            for e in v.iter_errors(doc)], doc


def check_files(v, paths):
    ok = True
    for p in paths:
        text = sys.stdin.read() if p == "-" else pathlib.Path(p).read_text()
        errs, _ = errors_of(v, text)
        for e in errs:
            print(f"{p}: {e}")
        ok = ok and not errs
    return ok


def check_examples(v, binary, examples):
    ok = True
    for ex in examples:
        runs = [subprocess.run([binary, "classify", "--json", ex],
                               capture_output=True, text=True) for _ in range(2)]
        problems = []
        if runs[0].returncode != 0:
            problems.append(f"exit code {runs[0].returncode}: {runs[0].stderr.strip()}")
        if runs[0].stdout != runs[1].stdout:
            problems.append("output differs between runs")
        errs, doc = errors_of(v, runs[0].stdout)
        problems += errs
        if doc is not None and doc.get("agreement") is not True:
            problems.append("agreement flag is not true")
        verdict = doc["verdicts"]["theorem"] if doc and "verdicts" in doc else {}
        status = "ok  " if not problems else "FAIL"
        print(f"{status} {ex}: {verdict.get('kind', '?')} {verdict.get('case', '')}")
        for p in problems:
            print(f"     {p}")
        ok = ok and not problems
    return ok


def main():
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--run", metavar="MUNNLAB")
    ap.add_argument("paths", nargs="+")
    args = ap.parse_args()
    v = validator()
    ok = check_examples(v, args.run, args.paths) if args.run else check_files(v, args.paths)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
