#!/usr/bin/env python3
"""Validates live CLI payloads against docs/schema/v1.json.

Usage: validate_schema.py <cli-binary> <schema-file>
Exits 77 when the jsonschema package is unavailable (skip).
"""

import json
import subprocess
import sys

try:
    import jsonschema
except ImportError:
    print("jsonschema not installed; skipping")
    sys.exit(77)


def run(cli, args):
    proc = subprocess.run([cli] + args, capture_output=True, text=True)
    return proc


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)

    def validate(defs_name, document):
        jsonschema.validate(
            document,
            {"$ref": f"#/$defs/{defs_name}", "$defs": schema["$defs"]},
        )

    cases = [
        ("parse", ["parse", "2|4/1|2|3"]),
        ("meander", ["meander", "2|4/1|2|3"]),
        ("index", ["index", "2/2"]),
        ("frobenius", ["frobenius", "2/2"]),
        ("spectrum", ["spectrum", "2|4/1|2|3"]),
        ("principal", ["principal", "2|4/1|2|3", "--ref-vertex", "5"]),
        ("blocks", ["blocks", "2|2/1|3"]),
        ("simple", ["simple", "6|5|3/14"]),
        ("windup", ["wind-up", "1/1", "block-creation"]),
        ("oracle", ["oracle", "2|2/1|3"]),
        ("oracle", ["oracle", "2/2"]),
        ("verify", ["verify", "2|4/1|2|3", "--windup"]),
        ("verify", ["verify", "2/2"]),
        ("sweep", ["sweep", "--n-min", "1", "--n-max", "3", "--oracle-up-to", "3"]),
    ]
    for defs_name, args in cases:
        proc = run(cli, args)
        if proc.returncode != 0:
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}")
            return 1
        validate(defs_name, json.loads(proc.stdout))
        print(f"ok {defs_name}: {' '.join(args)}")

    # wind-down emits JSON lines: steps then one outcome record.
    proc = run(cli, ["wind-down", "2|4/1|2|3"])
    lines = [json.loads(line) for line in proc.stdout.splitlines() if line.strip()]
    for record in lines[:-1]:
        validate("winddownStep", record)
    validate("winddownOutcome", lines[-1])
    print("ok winddown lines")

    # Error objects land on standard error with a matching shape.
    proc = run(cli, ["principal", "2/2"])
    if proc.returncode != 2:
        print(f"FAIL error exit code: {proc.returncode}")
        return 1
    validate("error", json.loads(proc.stderr.strip()))
    print("ok error payload")
    return 0


if __name__ == "__main__":
    sys.exit(main())
