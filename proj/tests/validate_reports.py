#!/usr/bin/env python3
"""Runs ncalg commands with --json and validates every report against the schema."""
import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    (["reduce", "A", "y*x*x"], 0),
    (["gbasis", "A", "--max-deg", "10"], 0),
    (["gbasis", "Braid", "--max-deg", "5"], 3),
    (["reduce", "Braid", "x*x*x*x*x*y*x", "--max-deg", "5"], 3),
    (["basis", "Z2", "--len", "6"], 0),
    (["double", "Cyclic3"], 0),
    (["opposite", "Weyl"], 0),
    (["freeprod", "Weyl", "Z2", "--rename"], 0),
    (["fock", "Z2", "--len", "5"], 0),
    (["check", "ordered", "Free2", "--samples", "10"], 0),
    (["check", "bounded", "Free2", "--elem", "3/5*e", "--elem", "4/5*e"], 0),
    (["check", "modulus", "Free2", "--x", "x", "--y", "i*x"], 0),
    (["check", "modulus", "Free2", "--x", "e", "--y", "x"], 2),
    (["check", "isometry", "D", "--elem", "s"], 0),
    (["embed", "gamma", "Mixed", "--verify-deg", "2"], 0),
    (["embed", "z2z2", "D", "--verify-deg", "2"], 0),
    (["matrep", "dz2", "--lambda", "(1/2 + 1/3 i)"], 0),
    (["matrep", "faithful", "--bound", "4", "--lambda", "1/2", "--lambda", "1", "--lambda", "3/2"], 0),
    (["matrep", "faithful", "--bound", "8", "--lambda", "1/2"], 3),
    (["example", "cholesky", "--matrix", "4, 2; 2, 5"], 0),
    (["example", "triangular", "--n", "5"], 0),
    (["example", "vcbound", "--c", "1/10", "--Y", "1, 2; 0, 1"], 0),
    (["selftest"], None),
]


def main() -> int:
    binary, schema_path, demo = sys.argv[1:4]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, code in COMMANDS:
        proc = subprocess.run([binary, "--json", "-f", demo, *args], capture_output=True, text=True)
        label = " ".join(args)
        if code is not None and proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}\n{proc.stderr}")
            failures += 1
            continue
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: not JSON ({exc})")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(report), key=lambda e: e.path)
        for e in errors:
            print(f"FAIL {label}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
