"""Exit-code contract of the command line front end."""
import os
import subprocess
import sys
import tempfile

dcq = sys.argv[1]

cases = [
    (["derive", "--k", "2"], 0),
    (["derive", "--k", "0"], 64),
    (["derive"], 0),
    (["bound", "--spec", "x1-Px1", "--full"], 0),
    (["bound", "--spec", "Q1-Q2"], 64),
    (["bound", "--reduced", "--full"], 64),
    (["sweep", "--kind", "cutoff", "--k", "2"], 0),
    (["sweep", "--kind", "upper", "--grid-max", "0.5", "--grid-points", "5"], 2),
    (["sweep", "--kind", "sideways"], 64),
    (["energy", "--e", "0"], 0),
    (["reproduce", "--only", "fields"], 0),
    (["reproduce", "--only", "thresholds"], 1),
    (["reproduce", "--only", "nothing"], 64),
    (["bound", "--config", "/nonexistent.cfg"], 64),
    ([], 64),
]

failures = 0
for args, want in cases:
    got = subprocess.run([dcq, *args], capture_output=True, text=True).returncode
    status = "ok  " if got == want else "FAIL"
    failures += got != want
    print(f"{status} dcq {' '.join(args)}: exit {got}, expected {want}")

# a failing run must not leave a partial output file behind
with tempfile.TemporaryDirectory() as d:
    out = os.path.join(d, "report.json")
    subprocess.run([dcq, "sweep", "--kind", "upper", "--grid-max", "0.5", "--grid-points", "5", "--out", out],
                   capture_output=True)
    if os.path.exists(out) or os.path.exists(out + ".tmp"):
        print("FAIL partial output left after a failed sweep")
        failures += 1
    code = subprocess.run([dcq, "bound", "--spec", "x1-Px1", "--format", "text", "--out", out]).returncode
    if code != 0 or "0.050625" not in open(out).read():
        print("FAIL --out did not receive the report")
        failures += 1

sys.exit(1 if failures else 0)
