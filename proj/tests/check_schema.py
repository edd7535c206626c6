"""Runs the CLI with --json over a spread of commands and validates every report against the shipped schema."""
import json
import subprocess
import sys

import jsonschema

cli, schema_path, corpus_dir = sys.argv[1:4]
with open(schema_path) as f:
    schema = json.load(f)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    (["classify", "--ring", "HQ[t]", "--poly", "t^2+1"], 0),
    (["classify", "--ring", "HQ[x]", "(x-j)*(x-i)"], 0),
    (["classify", "--ring", "GF(4)[t;frob]", "t+1"], 0),
    (["classify", "--ring", "QX[t;shift]", "t+x"], 0),
    (["classify", "--ring", "HQ[t]", "0"], 0),
    (["classify", "--ring", "HQ[t]", "1"], 1),
    (["classify", "--ring", "HQ[t]", "t^^2"], 1),
    (["factor", "--ring", "HQ[t]", "t^2+1"], 0),
    (["factor", "--ring", "GF(4)[t;frob]", "--order", "left", "t^3+1"], 0),
    (["factor", "--ring", "QX[t;shift]", "t^2+x*t"], 0),
    (["bound", "--ring", "HQ[x]", "(x-j)*(x-i)"], 0),
    (["bound", "--ring", "QX[t;shift]", "t+x"], 0),
    (["closure", "--ring", "GF(4)[t;frob]", "t+1"], 0),
    (["similar", "--ring", "HQ[t]", "t-i", "t-j"], 0),
    (["similar", "--ring", "QX[t;shift]", "t+x", "t+x+1"], 0),
    (["lab", "--check", "examples"], 0),
    (["lab", "--ring", "GF(2)[x]/(x^3)"], 0),
    (["lab", "--ring", "M2(GF(4))", "--cap", "10"], 2),
    (["validate", "--ring", "GF(4)[t;frob]", "--deg", "2"], 0),
    (["corpus", "--dir", corpus_dir], 0),
]

failed = 0
for args, want in runs:
    proc = subprocess.run([cli, *args, "--json"], capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != want:
        print(f"FAIL {label}: exit {proc.returncode}, expected {want}\n{proc.stderr}")
        failed += 1
        continue
    report = json.loads(proc.stdout)
    errors = sorted(validator.iter_errors(report), key=str)
    if errors:
        print(f"FAIL {label}: {errors[0].message} at {list(errors[0].absolute_path)}")
        failed += 1
    else:
        print(f"ok   {label}")
sys.exit(1 if failed else 0)
