"""Runs the command-line tool and validates its outputs against docs/schemas."""
import csv
import io
import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "docs" / "schemas").glob("*.json")}
registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())
failures = []


def run(args, stdin=None):
    return subprocess.run([cli, *args], input=stdin, capture_output=True, text=True)


def check(name, cond):
    print(("ok   " if cond else "FAIL ") + name)
    if not cond:
        failures.append(name)


def valid(schema, doc):
    errors = list(Draft202012Validator(schemas[schema], registry=registry).iter_errors(doc))
    for e in errors[:3]:
        print("  ", e.message)
    return not errors


table = run(["table", "--p", "3", "--k", "1", "--format", "json"])
check("table exit code", table.returncode == 0)
doc = json.loads(table.stdout)
check("table schema", valid("table.schema.json", doc))
check("table shape", len(doc["supercharacters"]) == 345 and len(doc["values"]) == 345
      and all(len(row) == 345 for row in doc["values"]))
check("table deterministic", run(["table", "--p", "3", "--format", "json"]).stdout == table.stdout)

rows = list(csv.reader(io.StringIO(run(["table", "--p", "3", "--format", "csv"]).stdout)))
check("csv grid", len(rows) == 347 and all(len(r) == 346 for r in rows) and rows[0][1] == "C0" and rows[2][1] == "1")

latex = run(["table", "--p", "3", "--format", "latex"])
check("latex", latex.returncode == 0 and "\\begin{tabular}" in latex.stdout and "2187" in latex.stdout)

classes = run(["superclasses", "--p", "3"])
cdoc = json.loads(classes.stdout)
check("superclasses schema", valid("superclasses.schema.json", cdoc))
check("superclass sizes", cdoc["count"] == 345 and sum(c["size"] for c in cdoc["superclasses"]) == 3 ** 12)

orbits = json.loads(run(["orbits", "--p", "5"]).stdout)
check("orbits schema", valid("orbits.schema.json", orbits))
check("orbit sizes", sum(f["orbits"] * f["orbit_size"] for f in orbits["families"]) == 5 ** 12)

comm_in = '{"i": 2, "ti": 1, "j": 5, "tj": 1}'
check("elem input schema", valid("elem_input.schema.json", json.loads(comm_in)))
comm = run(["elem", "comm", "--p", "3"], comm_in)
check("elem comm", comm.returncode == 0 and json.loads(comm.stdout) == {"t": [0, 0, 0, 0, 0, 1]})
check("uelem schema", valid("uelem.schema.json", json.loads(comm.stdout)))
pair = '{"a": {"t": [1, 2, 3, 4, 0, 1]}, "b": {"t": [5, 0, 7, 0, 1, 2]}}'
prod = json.loads(run(["elem", "mul", "--p", "3"], pair).stdout)
inv = json.loads(run(["elem", "inv", "--p", "3"], json.dumps({"a": prod})).stdout)
back = json.loads(run(["elem", "mul", "--p", "3"], json.dumps({"a": prod, "b": inv})).stdout)
check("elem mul/inv", back == {"t": [0] * 6})

verify = run(["verify", "--p", "3", "--suite", "field", "--seed", "7", "--budget", "1000"])
vdoc = json.loads(verify.stdout)
check("verify schema", verify.returncode == 0 and valid("verify.schema.json", vdoc) and vdoc["pass"])

check("bad subcommand exits 2", run(["frobnicate"]).returncode == 2)
check("bad prime exits 2", run(["table", "--p", "9"]).returncode == 2)
check("q above 7 refused", run(["table", "--p", "11"]).returncode == 2)
check("bad suite exits 2", run(["verify", "--suite", "nope"]).returncode == 2)
check("bad element exits 2", run(["elem", "inv", "--p", "3"], '{"a": {"t": [0, 7, 0, 0, 0, 0]}}').returncode == 2)
check("bad JSON exits 2", run(["elem", "inv", "--p", "3"], "{").returncode == 2)

sys.exit(1 if failures else 0)
