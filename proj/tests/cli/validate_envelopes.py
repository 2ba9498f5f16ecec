#!/usr/bin/env python3
"""Run every subcommand through the segreta binary and validate the JSON output."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

binary, data, schema_path = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
schema = json.loads(schema_path.read_text())
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["segre", "--input", data / "veronese.ideal", "--seed", "42"],
    ["segre", "--input", data / "monomial.ideal", "--degree", "9"],
    ["zeta", "--input", data / "conic.ideal", "--N", "5"],
    ["zeta", "--input", data / "twisted_cubic.ideal"],
    ["join", "--input", data / "conic.ideal", "--m", "2"],
    ["csm", "--input", data / "nodal_cubic.ideal"],
    ["csm", "--input", data / "cuspidal_cubic.ideal", "--field", "Fp:32003"],
    ["csm", "--input", data / "hyperplane.ideal"],
    ["check", "--input", data / "veronese.ideal"],
    ["residual", "--input", data / "monomial.ideal", "--retries", "2"],
]

failures = 0


def run(args, env=None):
    return subprocess.run([binary, *map(str, args)], capture_output=True, text=True, env=env)


for args in runs:
    proc = run([*args, "--output", "json"])
    label = " ".join(map(str, args))
    if proc.returncode != 0:
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    envelope = json.loads(proc.stdout)
    errors = sorted(validator.iter_errors(envelope), key=lambda e: list(e.path))
    for e in errors:
        print(f"FAIL {label}: {list(e.path)}: {e.message}")
    failures += bool(errors)
    if json.loads(json.dumps(envelope)) != envelope:
        print(f"FAIL {label}: envelope does not round-trip")
        failures += 1
    again = json.loads(run([*args, "--output", "json"]).stdout)
    envelope.pop("timing_ms")
    again.pop("timing_ms")
    if json.dumps(envelope, sort_keys=True) != json.dumps(again, sort_keys=True):
        print(f"FAIL {label}: output differs between identical runs")
        failures += 1
    if not errors:
        print(f"ok   {label}")

with tempfile.TemporaryDirectory() as tmp:
    f2 = Path(tmp) / "f2.ideal"
    f2.write_text("ring: x0, x1, x2 over Fp:2\ndegree: 2\nideal: x0^2, x1^2, x2^2\n")
    bad = Path(tmp) / "bad.ideal"
    bad.write_text("ring: x0, x1, x2 over Q\ndegree: 3\nideal: x0^2 - x1*x2\n")
    matrix = [
        (["segre", "--input", data / "conic.ideal"], 0),
        (["segre", "--input", Path(tmp) / "missing.ideal"], 2),
        (["segre", "--input", bad], 2),
        (["frobnicate"], 2),
        (["join", "--input", data / "conic.ideal"], 2),
        (["segre", "--input", data / "conic.ideal", "--field", "Fp:9"], 2),
        (["residual", "--input", f2, "--retries", "0", "--seed", "3"], 3),
    ]
    for args, expected in matrix:
        code = run(args).returncode
        label = " ".join(map(str, args))
        if code != expected:
            print(f"FAIL exit code {code} != {expected}: {label}")
            failures += 1
        else:
            print(f"ok   exit {code}: {label}")

sys.exit(1 if failures else 0)
