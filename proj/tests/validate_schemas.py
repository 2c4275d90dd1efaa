#!/usr/bin/env python3
# Runs the CLI with --json over the fixtures and validates every document
# against schemas/<command>.schema.json. Usage: validate_schemas.py CLI ROOT
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli = sys.argv[1]
root = pathlib.Path(sys.argv[2])
fx = root / "fixtures"
schemas = {p.name[: -len(".schema.json")]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}

jobs = [
    ["gb", "--ideal", fx / "gorenstein3.txt"],
    ["gb", "--ideal", "xy,yz", "--order", "lex"],
    ["initial", "--ideal", fx / "gorenstein3.txt"],
    ["homogenize", "--ideal", fx / "gorenstein3.txt", "--weights", "3,2,1"],
    ["betti", "--ideal", "xy,yz"],
    ["betti", "--ideal", fx / "minors_2x3.txt"],
    ["fiber-inv", "--ideal", fx / "gorenstein3.txt"],
    ["fiber-inv", "--ideal", fx / "minors_2x3.txt"],
    ["rainbow", "--ideal", fx / "rainbow_2x3.txt"],
    ["rainbow", "--ideal", fx / "reiner_welker.txt"],
    ["rainbow", "--ideal", fx / "minors_2x3.txt"],
    ["massey", "--ideal", fx / "edge_path.txt"],
    ["massey", "--ideal", fx / "gorenstein3.txt", "--pmax", "2"],
    ["massey", "--ideal", fx / "monomial" / "02_m2.txt", "--pmax", "3"],
    ["golod", "--ideal", fx / "gorenstein3.txt", "--order", "lex"],
    ["golod", "--ideal", fx / "rainbow_2x3.txt"],
    ["golod", "--ideal", fx / "monomial" / "04_x2_xy.txt"],
    ["golod", "--ideal", fx / "monomial" / "09_staircase.txt"],
    ["golod", "--ideal", "x^2", "--N", "4"],
    ["minors", "--shape", "2x3", "--t", "1", "--orders", "2"],
    ["minors", "--mask", "110/111", "--t", "1", "--orders", "1"],
]

failures = 0
with tempfile.TemporaryDirectory() as tmp:
    table = pathlib.Path(tmp) / "table.json"
    for job in jobs:
        args = [str(a) for a in job]
        run = subprocess.run([cli, *args, "--json"], capture_output=True, text=True, timeout=300)
        label = " ".join(args)
        if run.returncode not in (0, 2):
            print(f"FAIL {label}: exit {run.returncode}: {run.stderr.strip()}")
            failures += 1
            continue
        doc = json.loads(run.stdout)
        try:
            jsonschema.validate(doc, schemas[args[0]])
        except jsonschema.ValidationError as e:
            print(f"FAIL {label}: {e.message} at {list(e.absolute_path)}")
            failures += 1
            continue
        print(f"ok   {label}")
        if args[0] == "massey" and doc["verified"]:
            table.write_text(run.stdout)
    run = subprocess.run([cli, "massey-verify", "--table", str(table), "--json"], capture_output=True, text=True)
    try:
        doc = json.loads(run.stdout)
        jsonschema.validate(doc, schemas["massey-verify"])
        assert run.returncode == 0 and doc["verified"]
        print("ok   massey-verify")
    except Exception as e:  # noqa: BLE001
        print(f"FAIL massey-verify: {e}")
        failures += 1

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
