"""Validates diosum --format json output against docs/row.schema.json.

usage: check_schema.py DIOSUM SCHEMA GOLDEN_DIR
"""

import json
import pathlib
import subprocess
import sys

import jsonschema

INVOCATIONS = [
    "expand --alpha phi,e,surd:3,7,2 --terms 40",
    "sum --family dist --alpha phi --N 10,1000",
    "sum --family harmonic --alpha e --N-geom 10:1e4:x10",
    "sum --family frac --alpha sqrt2 --N 300",
    "sum --family cofrac --alpha sqrt2 --N 300 --weight inverse-n",
    "sum --family shifted --alpha phi --beta 1/3 --N 50 --mode full",
    "sum --family multidim --alpha cbrt2,cbrt4 --N 8 --weight linf",
    "compare --theorem thm1.1 --alpha phi --N 1000 --weight inverse-n",
    "compare --theorem thm2.1 --alpha e --N 100,5000",
    "compare --theorem thm2.1 --alpha phi --N 8,13 --K 5",
    "compare --theorem thm3.1 --alpha phi --N 1000 --variant cofrac",
    "compare --theorem thm3.2 --alpha sqrt2 --beta 1/5 --N 100",
    "compare --theorem thm3.3 --alpha cbrt2,cbrt4 --N 16 --t 1/8",
    "mc --samples 3 --seed0 9 --N 1e4 --K 300",
]


def main() -> int:
    cli, schema_path, golden = sys.argv[1:4]
    schema = json.loads(pathlib.Path(schema_path).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    streams = {}
    for args in INVOCATIONS:
        proc = subprocess.run([cli, *args.split(), "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 4):
            print(f"FAIL {args}: exit {proc.returncode}: {proc.stderr.strip()}")
            return 1
        streams[args] = proc.stdout
    for path in sorted(pathlib.Path(golden).glob("*.jsonl")):
        streams[path.name] = path.read_text()

    failures = 0
    for name, text in streams.items():
        lines = text.splitlines()
        if not lines:
            print(f"FAIL {name}: no rows")
            failures += 1
        for i, line in enumerate(lines):
            errors = list(validator.iter_errors(json.loads(line)))
            if errors:
                print(f"FAIL {name} line {i + 1}: {errors[0].message}")
                failures += 1
    print(f"{len(streams)} streams checked, {failures} invalid rows")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
