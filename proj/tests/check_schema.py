"""Validate every command's JSON report against the shipped schemas and check determinism."""
import json
import pathlib
import subprocess
import sys

import jsonschema

dcq, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
report_schema = json.loads((schema_dir / "report.schema.json").read_text())
reproduce_schema = json.loads((schema_dir / "reproduce.schema.json").read_text())

runs = [
    ["derive", "--k", "1"],
    ["bound", "--spec", "x1-Px1", "--reduced"],
    ["bound", "--spec", "Px1-Py1", "--calibrate", "true"],
    ["sweep", "--kind", "upper", "--k", "2"],
    ["energy", "--A", "0"],
    ["reproduce", "--only", "bounds", "--json"],
]

failures = 0
for args in runs:
    outs = []
    for _ in range(2):
        p = subprocess.run([dcq, *args], capture_output=True, text=True)
        if p.returncode not in (0, 1):
            print(f"FAIL {args}: exit {p.returncode}: {p.stderr.strip()}")
            failures += 1
            break
        outs.append(json.loads(p.stdout))
    if len(outs) != 2:
        continue
    try:
        jsonschema.validate(outs[0], report_schema)
        if args[0] == "reproduce":
            jsonschema.validate(outs[0]["result"], reproduce_schema)
    except jsonschema.ValidationError as e:
        print(f"FAIL {args}: {e.message}")
        failures += 1
        continue
    for o in outs:
        o.pop("metadata", None)
    if json.dumps(outs[0], sort_keys=True) != json.dumps(outs[1], sort_keys=True):
        print(f"FAIL {args}: reports differ between identical runs")
        failures += 1
        continue
    print(f"ok   {' '.join(args)}")

sys.exit(1 if failures else 0)
