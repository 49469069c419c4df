"""Validates shipped fixtures and `jl --json` output against data/schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

jl, data = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in (data / "schemas").glob("*.json")}
failures = 0


def check(name, schema, doc):
    global failures
    errors = sorted(jsonschema.Draft202012Validator(schemas[schema]).iter_errors(doc), key=str)
    status = "ok" if not errors else "FAIL"
    print(f"{status:4} {name}")
    for e in errors[:5]:
        print(f"     {'/'.join(map(str, e.absolute_path))}: {e.message}")
    failures += bool(errors)


def run(*args, codes=(0,)):
    p = subprocess.run([jl, "--json", "--no-timing", *args], capture_output=True, text=True)
    if p.returncode not in codes:
        raise SystemExit(f"jl {' '.join(args)} exited {p.returncode}: {p.stderr}")
    return p.stdout


check("catalog.json", "catalog", json.loads((data / "catalog.json").read_text()))
check("ledger.json", "ledger", json.loads((data / "ledger.json").read_text()))

for expr in ["S5", "C7", "A5", "(A5 * A5) : C2 [swap]", "heis-108", "C2 * A7"]:
    out = run("compute", expr)
    check(f"compute {expr}", "report", json.loads(out))
    if run("compute", expr) != out:
        print(f"FAIL compute {expr}: output differs between runs")
        failures += 1
check("compute bound-only", "report", json.loads(run("compute", "A5 * A5 * A5 * A5 * A5 * A5 * A5", codes=(3,))))
check("compute cap", "report", json.loads(run("--degree-cap", "8", "compute", "A5 * A5", codes=(2,))))
check("subgroups S4", "subgroups", json.loads(run("subgroups", "S4")))
check("cd-lattice D4", "cd_lattice", json.loads(run("cd-lattice", "D4")))

verify = run("verify-paper", "--jobs", "4")
check("verify-paper", "verify", json.loads(verify))
if run("verify-paper", "--jobs", "2") != verify:
    print("FAIL verify-paper: output differs between runs")
    failures += 1

sys.exit(1 if failures else 0)
