"""Runs the cutgk binary and validates every JSON document against docs/schemas.

usage: cli_schema_test.py <cutgk-binary> <schema-dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
from referencing import Registry, Resource

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])


def load_registry():
    resources = []
    for path in SCHEMAS.glob("*.schema.json"):
        contents = json.loads(path.read_text())
        resources.append((path.name, Resource.from_contents(contents)))
    return Registry().with_resources(resources)


REGISTRY = load_registry()
failures = []


def validator(name):
    schema = json.loads((SCHEMAS / name).read_text())
    return jsonschema.Draft202012Validator(schema, registry=REGISTRY)


def run(args, schema, expect_exit=0, check_stable=True):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
    label = " ".join(args)
    if proc.returncode != expect_exit:
        failures.append(f"{label}: exit {proc.returncode}, expected {expect_exit}\n{proc.stdout}{proc.stderr}")
        return None
    doc = json.loads(proc.stdout)
    errors = sorted(validator(schema).iter_errors(doc), key=str)
    if errors:
        failures.append(f"{label}: {schema}: {errors[0].message} at {list(errors[0].absolute_path)}")
    if check_stable:
        again = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300)
        if again.stdout != proc.stdout:
            failures.append(f"{label}: output differs between identical runs")
    print(f"ok  {label}")
    return doc


def expect(cond, message):
    if not cond:
        failures.append(message)


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    doc = run(["gk", "DP(MM, SD(Cyc(7),Cyc(3),pow=2))"], "gk_output.schema.json")
    expect(doc and doc["edges"] == [[2, 3], [2, 7], [3, 5], [5, 7]], "gk: main witness edges")

    doc = run(["classify", "MM"], "classify.schema.json")
    expect(doc and doc["order"] == 200 and doc["rational"] and doc["cut"] and doc["solvable"], "classify MM")
    run(["classify", "Alt(5)"], "classify.schema.json")

    doc = run(["rationality", "Sym(4)", "--element", "g0"], "rationality.schema.json")
    expect(doc and doc["is_rational"], "rationality Sym(4) g0")
    run(["rationality", "Cyc(5)", "--element", "g0^2"], "rationality.schema.json")

    instance = tmp / "instance.json"
    instance.write_text(json.dumps({"subject": "Alt(4)", "params": {"p": 3}}))
    doc = run(["verify", "L-2.5-GSylowp", "--instance", str(instance)], "check_report.schema.json")
    expect(doc and doc["status"] == "pass", "verify L-2.5 on Alt(4)")

    doc = run(["explicit"], "check_report.schema.json")
    expect(doc and doc["data"]["matrix_group_order"] == 252, "explicit order 252")

    catalog = tmp / "catalog.txt"
    catalog.write_text("# small\nCyc(6)\nSym(4)\nMM\n")
    out = tmp / "run.json"
    doc = run(["--json", str(out), "catalog", "--file", str(catalog), "--lemmas", "L-2.5-GSylowp,L-2.7-Fittingp"],
              "catalog_run.schema.json")
    expect(doc and len(doc["reports"]) == 6, "catalog report count")
    expect(out.exists() and json.loads(out.read_text()) == doc, "--json file matches stdout")

    doc = run(["gk", "DP(MM"], "error.schema.json", expect_exit=2)
    expect(doc and doc["error"] == "SyntaxError" and doc["column"] == 6, "syntax error position")
    run(["classify", "SD(Sym(3),Cyc(2),pow=1)"], "error.schema.json", expect_exit=2)
    run(["verify", "no-such-lemma", "--instance", str(instance)], "error.schema.json", expect_exit=2)
    run(["catalog", "--file", str(tmp / "missing.txt")], "error.schema.json", expect_exit=2)
    run(["frobnicate"], "error.schema.json", expect_exit=2)

    dot = subprocess.run([BIN, "gk", "--dot", "W4200"], capture_output=True, text=True)
    expect(dot.returncode == 0 and "2 -- 3;" in dot.stdout and dot.stdout.startswith("graph"), "gk --dot")

for f in failures:
    print("FAIL", f)
sys.exit(1 if failures else 0)
