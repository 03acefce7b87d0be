"""End-to-end checks of the bsgw command line: exit codes and output formats."""
import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


EX = ["--type", "A2", "--word", "1,2,1", "--m", "1,1,3"]

r = run("report", *EX)
expect(r.returncode == 0, "report exit 0")
rep = json.loads(r.stdout)
expect(rep["width"] == "2", "report width")
expect(rep["caseline"] == "3", "report caseline")
expect(rep["condition_p"]["witness"] == ["0", "3"], "report witness")
expect(run("report", *EX).stdout == r.stdout, "report deterministic")

t = run("--format", "text", "report", *EX)
expect(t.returncode == 0 and "width" in t.stdout, "text report")

r = run("report", "--type", "A1", "--word", "1", "--m", "7/2")
expect(json.loads(r.stdout)["width"] == "7/2", "rational width")

r = run("report", "--type", "A2", "--word", "1,1", "--m", "1,1")
expect(r.returncode == 1 and "not reduced at position 2" in r.stderr, "non-reduced word exit 1")
expect(run("report", "--type", "Q7", "--word", "1", "--m", "1").returncode == 1, "bad type exit 1")
expect(run("report", "--type", "A2", "--word", "1,2", "--m", "1,0").returncode == 1, "zero weight exit 1")
expect(run("nonsense").returncode == 1, "unknown subcommand exit 1")

r = run("check-p", *EX)
cp = json.loads(r.stdout)["condition_p"]
expect(r.returncode == 0 and cp["holds"] is False and cp["failing_k"] == 1, "check-p")

expect(run("bott", *EX).returncode == 1, "bott refuses without (P)")
r = run("bott", *EX, "--force-degeneration")
expect(r.returncode == 0 and "hypothesis (P) violated" in r.stderr, "forced tower warns")
r = run("bott", "--type", "A2", "--word", "1,2", "--m", "2,5")
expect(json.loads(r.stdout)["bott"]["toric_width"] == "5", "tower toric width")

with tempfile.TemporaryDirectory() as tmp:
    coll = os.path.join(tmp, "c.json")
    with open(coll, "w") as f:
        json.dump({"dims": [1, 1], "a": {"2,1,1": 1}, "divisor": ["0", "2", "5", "0"]}, f)
    r = run("bott", "--input", coll)
    b = json.loads(r.stdout)["bott"]
    expect(r.returncode == 0 and b["smooth"] and b["toric_width"] == "5", "bott collection file")

    job = os.path.join(tmp, "job.json")
    with open(job, "w") as f:
        json.dump({"type": "A2", "word": [1, 2, 1], "m": ["1", "1", "3"]}, f)
    r = run("report", "--input", job)
    expect(r.returncode == 0 and json.loads(r.stdout)["width"] == "2", "report --input")

    pts = os.path.join(tmp, "pts.txt")
    r = run("lattice", "--type", "A2", "--word", "1,2", "--m", "1,1", "--output", pts)
    expect(r.returncode == 0 and json.loads(r.stdout)["count"] == 5, "lattice count")
    with open(pts) as f:
        lines = f.read().split("\n")
    expect(lines[:5] == ["0 0", "1 0", "0 1", "1 1", "2 1"], "lattice points file")

    r = run("lattice", *EX, "--cap", "10")
    expect(r.returncode == 1 and "partial count 10" in r.stderr, "lattice cap exceeded")

r = run("selftest", "--suite", "nope")
expect(r.returncode == 1, "unknown suite exit 1")
r = run("selftest", "--suite", "cor25", "--trials", "20", "--seed", "3")
expect(r.returncode == 0 and json.loads(r.stdout)["passed"], "selftest passes")
r = run("selftest", "--trials", "0")
expect(r.returncode == 0 and "warning" in r.stderr, "zero trials warns")

print("cli: %d failure(s)" % len(failures))
sys.exit(1 if failures else 0)
