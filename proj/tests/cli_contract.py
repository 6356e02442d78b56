"""Exit codes, output routing and byte stability of the lieosc command line."""
import json
import os
import subprocess
import sys
import tempfile

CLI = sys.argv[1]
SCHEMAS = sys.argv[2] if len(sys.argv) > 2 else None
failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("LIEOSC_OUTPUT_DIR", None)
    full_env.update(env or {})
    return subprocess.run([CLI, *args], capture_output=True, text=True, env=full_env, timeout=600)


def expect(name, cond, extra=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({extra})" if extra and not cond else ""))
    if not cond:
        failures.append(name)


def expect_code(name, args, code):
    p = run(*args)
    expect(name, p.returncode == code, f"exit {p.returncode}: {p.stderr.strip()}")
    return p


p = expect_code("verify-all c2 cutoff 8 passes", ["verify-all", "--family", "c", "--rank", "2", "--cutoff", "8"], 0)
if p.returncode == 0:
    report = json.loads(p.stdout)
    expect("verify-all report pass flag", report["pass"] is True)
    expect("verify-all carries parameters", report["parameters"].get("cutoff") == "8")

p = expect_code("gen-rep b2", ["gen-rep", "--family", "b", "--rank", "2", "--format", "json"], 0)
if p.returncode == 0:
    gens = json.loads(p.stdout)["generators"]
    expect("gen-rep b2 has 10 generators", len(gens) == 10)
    expect("gen-rep b2 matrices are 5x5", all(g["matrix"]["rows"] == 5 and g["matrix"]["cols"] == 5 for g in gens))

p = expect_code("check-rtt d3 at u = v", ["check-rtt", "--family", "d", "--rank", "3", "--u", "1", "--v", "1", "--eta", "1"], 0)
if p.returncode == 0:
    report = json.loads(p.stdout)
    expect("rtt report records interior depth", "interior_depth" in report["parameters"])
    expect("rtt residual is exactly zero", report["checks"][0]["max_residual"] == "0")

expect_code("check-rtt d3 generic point", ["check-rtt", "--family", "d", "--rank", "3", "--u", "3", "--v", "2", "--eta", "1"], 0)
expect_code("monodromy d3 two sites",
            ["monodromy", "--family", "d", "--rank", "3", "--sites", "2", "--u", "3", "--v", "2", "--eta", "1"], 0)
expect_code("check-quadratic d3", ["check-quadratic", "--family", "d", "--rank", "3"], 0)
expect_code("check-casimir c2", ["check-casimir", "--family", "c", "--rank", "2", "--cutoff", "8"], 0)
expect_code("spectrum b3 csv", ["spectrum", "--family", "b", "--rank", "3", "--format", "csv"], 0)
expect_code("osc-rep c2", ["osc-rep", "--family", "c", "--rank", "2", "--cutoff", "8", "--format", "json"], 0)

ybe = ["check-ybe", "--family", "c", "--rank", "2", "--samples", "5", "--seed", "42"]
a, b = run(*ybe), run(*ybe)
expect("check-ybe seeded passes", a.returncode == 0)
expect("check-ybe output is byte identical across runs", a.stdout == b.stdout and a.stdout.endswith("\n"))
tens = ["gen-tensors", "--family", "c", "--rank", "2", "--tensor", "c", "--format", "csv"]
a, b = run(*tens), run(*tens)
expect("tensor CSV is byte identical across runs", a.returncode == 0 and a.stdout == b.stdout)
rows = a.stdout.splitlines()
expect("tensor CSV header", rows[0] == "i,j,k,value")
keys = [tuple(int(x) for x in r.split(",")[:3]) for r in rows[1:]]
expect("tensor CSV rows sorted", keys == sorted(keys) and len(set(keys)) == len(keys))

# Usage errors.
expect_code("missing cutoff for c", ["osc-rep", "--family", "c", "--rank", "2"], 2)
expect_code("missing cutoff for a", ["verify-all", "--family", "a", "--rank", "2"], 2)
expect_code("cutoff rejected for d", ["check-quadratic", "--family", "d", "--rank", "3", "--cutoff", "4"], 2)
expect_code("seed required with samples", ["check-ybe", "--family", "c", "--rank", "2", "--samples", "3"], 2)
expect_code("seed without samples", ["check-rtt", "--family", "d", "--rank", "3", "--u", "1", "--v", "1", "--eta", "1",
                                     "--seed", "3"], 2)
expect_code("unknown family", ["gen-rep", "--family", "e", "--rank", "6"], 2)
expect_code("rank too small", ["gen-rep", "--family", "d", "--rank", "2"], 2)
expect_code("bad format", ["gen-rep", "--family", "c", "--rank", "2", "--format", "xml"], 2)
expect_code("no subcommand", [], 2)
expect_code("unknown subcommand", ["frobnicate"], 2)
expect_code("missing spectral parameters", ["check-rtt", "--family", "d", "--rank", "3"], 2)
expect_code("pole", ["check-ybe", "--family", "c", "--rank", "2", "--u", "0", "--v", "3", "--eta", "1"], 2)
expect_code("bad rational", ["check-rtt", "--family", "d", "--rank", "3", "--u", "x", "--v", "1", "--eta", "1"], 2)

with tempfile.TemporaryDirectory() as tmp:
    p = run("gen-tensors", "--family", "d", "--rank", "3", "--tensor", "d", "--format", "csv",
            env={"LIEOSC_OUTPUT_DIR": tmp})
    path = os.path.join(tmp, "gen-tensors-d3-d.csv")
    expect("output directory from the environment", p.returncode == 0 and os.path.exists(path) and p.stdout == "")
    explicit = os.path.join(tmp, "explicit.json")
    p = run("gen-rep", "--family", "c", "--rank", "3", "--output", explicit, env={"LIEOSC_OUTPUT_DIR": tmp})
    expect("--output takes precedence", p.returncode == 0 and os.path.exists(explicit))
    expect_code("unwritable output", ["gen-rep", "--family", "c", "--rank", "2", "--output",
                                      os.path.join(tmp, "missing", "x.json")], 2)

# Every JSON document validates against its schema file.
if SCHEMAS:
    try:
        import jsonschema
    except ImportError:
        jsonschema = None
        print("skip schema validation (jsonschema not installed)")
    if jsonschema:
        def schema(name):
            with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
                return json.load(f)

        docs = [
            ("rep", ["gen-rep", "--family", "b", "--rank", "3"]),
            ("rep", ["gen-rep", "--family", "a", "--rank", "2"]),
            ("tensor", ["gen-tensors", "--family", "d", "--rank", "3", "--tensor", "h"]),
            ("tensor", ["gen-tensors", "--family", "c", "--rank", "2", "--tensor", "v"]),
            ("oscillator", ["osc-rep", "--family", "c", "--rank", "2", "--cutoff", "4"]),
            ("oscillator", ["osc-rep", "--family", "b", "--rank", "2"]),
            ("report", ["verify-all", "--family", "d", "--rank", "3"]),
            ("report", ["check-casimir", "--family", "a", "--rank", "2", "--cutoff", "4"]),
        ]
        for name, args in docs:
            p = run(*args)
            try:
                jsonschema.validate(json.loads(p.stdout), schema(name))
                ok = p.returncode == 0
            except jsonschema.ValidationError as e:
                ok = False
                print("   ", e.message)
            expect(f"{' '.join(args[:1])} {args[2]}{args[4]} matches {name} schema", ok)

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
