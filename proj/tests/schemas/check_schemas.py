"""Validate the JSON output of every subcommand against docs/schemas and
check that it survives a parse/dump round trip unchanged."""

import json
import pathlib
import subprocess
import sys

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

tlk, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])

resources = []
for path in sorted(schema_dir.glob("*.schema.json")):
    doc = json.loads(path.read_text())
    resources.append((doc["$id"], Resource.from_contents(doc)))
registry = Registry().with_resources(resources)

RUNS = [
    ("roots", ["--type", "A3"]),
    ("roots", ["--type", "D4", "--sigma", "order3"]),
    ("census", ["--type", "E6"]),
    ("census", ["--type", "D4", "--sigma", "order2"]),
    ("verify", ["--type", "A3"]),
    ("verify", ["--type", "D4", "--sigma", "order3"]),
    ("spectrum", ["--type", "A5"]),
    ("spectrum", ["--type", "A4"]),
    ("annihilator", ["--type", "A5"]),
    ("coupling", ["--type", "D4", "--sigma", "order3"]),
    ("irreducible", ["--type", "A3"]),
    ("irreducible", ["--type", "A2"]),
    ("faithful", ["--type", "A3", "--max-len", "4"]),
    ("faithful", ["--type", "A3", "--max-len", "3", "--params", "a=1,b=1,d=2,f=0"]),
    ("equiv", ["--type", "A5", "--type2", "A6", "--params", "a=1,b=1,d=2,f=3"]),
    ("equiv", ["--type", "A5", "--type2", "A5"]),
]

failures = 0
for sub, args in RUNS:
    proc = subprocess.run([tlk, sub, *args], capture_output=True, text=True)
    label = " ".join([sub, *args])
    if proc.returncode not in (0, 1):
        print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
        failures += 1
        continue
    doc = json.loads(proc.stdout)
    validator = Draft202012Validator({"$ref": f"{sub}.schema.json"}, registry=registry)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
    if json.dumps(doc, indent=2, ensure_ascii=False) + "\n" != proc.stdout:
        errors.append("output does not round-trip")
    for e in errors:
        print(f"FAIL {label}: {getattr(e, 'message', e)} at {list(getattr(e, 'path', []))}")
    failures += bool(errors)
    if not errors:
        print(f"ok   {label}")

sys.exit(1 if failures else 0)
