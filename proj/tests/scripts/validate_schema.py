"""Runs each rccs subcommand with --json and validates the output."""
import json
import pathlib
import subprocess
import sys

import jsonschema

rccs, schema_path, data = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
schema = json.loads(schema_path.read_text())
validator = jsonschema.Draft202012Validator(schema)

search_input = json.dumps({
    "weights": ["1/4", "1/4", "1/4", "1/4"],
    "a": {"members": [0, 1]},
    "b": {"members": [0, 1]},
    "n": 2,
})
runs = [
    (["construct", "--json", str(data / "worked_example.json")], 0),
    (["verify", "--json", str(data / "worked_example_partition.json")], 0),
    (["verify", "--json", str(data / "tampered_partition.json")], 3),
    (["search", "--json", search_input], 0),
    (["bell", "--json"], 0),
    (["demo", "--json"], 0),
]
failed = 0
for args, code in runs:
    proc = subprocess.run([rccs, *args], capture_output=True, text=True)
    label = " ".join(args[:2])
    if proc.returncode != code:
        print(f"{label}: exit {proc.returncode}, expected {code}")
        failed += 1
        continue
    errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=lambda e: e.path)
    for e in errors[:3]:
        print(f"{label}: {list(e.path)}: {e.message[:200]}")
    failed += bool(errors)
    print(f"{label}: {'ok' if not errors else 'INVALID'}")
sys.exit(1 if failed else 0)
