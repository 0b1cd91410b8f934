"""End-to-end checks of the jetlct command line: exit codes, schemas, determinism."""

import json
import pathlib
import subprocess
import sys

import jsonschema

BIN, SCHEMAS, SAMPLES = sys.argv[1], pathlib.Path(sys.argv[2]), pathlib.Path(sys.argv[3])
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env, timeout=300)


def expect(cond, what):
    if not cond:
        failures.append(what)
    print(("ok   " if cond else "FAIL ") + what)


def json_case(schema, *args):
    res = run(*args, "--format", "json")
    expect(res.returncode == 0, f"{' '.join(args)} exits 0")
    doc = json.loads(res.stdout)
    try:
        jsonschema.validate(doc, json.loads((SCHEMAS / schema).read_text()))
        expect(True, f"{' '.join(args)} matches {schema}")
    except jsonschema.ValidationError as err:
        expect(False, f"{' '.join(args)} matches {schema}: {err.message}")
    expect(run(*args, "--format", "json").stdout == res.stdout, f"{' '.join(args)} is deterministic")
    return doc


lct = json_case("lct.schema.json", "lct", "--ideal", "x^2; y^3")
expect(lct["lct"] == "5/6" and lct["vertex"] == ["1/2", "1/3"], "lct of (x^2, y^3) is 5/6 at (1/2, 1/3)")
text = run("lct", "--ideal", "x^2; y^3").stdout
expect("lct: 5/6" in text and "vertex: 1/2 1/3" in text, "text and JSON lct agree")
expect(json_case("lct.schema.json", "lct", "--ideal", "1", "--vars", "x,y")["lct"] == "inf", "unit ideal has lct inf")
jets = json_case("lct.schema.json", "lct", "--file", str(SAMPLES / "x2_y3.ideal"), "--via-jets")
expect(jets["via_jets"]["certificate_level"] == 5, "jet certificate for (x^2, y^3) sits at m = 5")

sys_doc = json_case("jet_ideal.schema.json", "jet-ideal", "--ideal", "u^2 - v^3", "--level", "1")
expect(sys_doc["generators"] == ["u^2 - v^3", "2*u*u' - 3*v^2*v'"], "cusp jet equations at level 1")
expect(run("jet-ideal", "--ideal", "u^2 - v^3", "--level", "1").stdout.splitlines()
       == ["u^2 - v^3", "2*u*u' - 3*v^2*v'"], "jet-ideal text lists one generator per line")
json_case("jet_ideal.schema.json", "jet-ideal", str(SAMPLES / "umbrella.ideal"), "--level", "2",
          "--convention", "coefficient")

rep = json_case("jet_dim.schema.json", "jet-dim", "--ideal", "x^2; y^3", "--level", "5")
expect(rep["dim"] == 7 and rep["normalized"] == "7/6", "dim Y_5 of (x^2, y^3) is 7")
sweep = json_case("jet_dim.schema.json", "jet-dim", "--file", str(SAMPLES / "normal_crossing.ideal"), "--sweep", "4",
                  "--fiber-origin")
expect(len(sweep) == 5, "sweep reports every level")

est = json_case("estimate.schema.json", "estimate", "--file", str(SAMPLES / "cusp.ideal"), "--prime", "5", "--prime",
                "7", "--levels", "8")
expect(est["est_lct"] == "5/6" and est["best_level"] == 5, "cusp estimate is 5/6 at m = 5")
json_case("estimate.schema.json", "estimate", "--file", str(SAMPLES / "umbrella.ideal"), "--levels", "2")

chk = json_case("check.schema.json", "check", "--property", "all", "--seed", "42", "--trials", "100")
expect(chk["violations"] == [], "seeded property check is clean")

expect(run().returncode == 1, "missing subcommand is a usage error")
expect(run("lct").returncode == 1, "missing ideal is a usage error")
expect(run("lct", "--ideal", "x^2", "--format", "yaml").returncode == 1, "unknown format is a usage error")
expect(run("lct", "--ideal", "x^^2").returncode == 2, "malformed ideal is a parse error")
res = run("lct", "--ideal", "x + y")
expect(res.returncode == 3 and "estimate" in res.stderr, "non-monomial ideal is rejected with a pointer to estimate")
expect(run("jet-dim", "--ideal", "x^2 - y^3", "--level", "2").returncode == 3, "jet-dim needs a monomial ideal")
res = run("estimate", "--ideal", "x*y - z*w", "--levels", "6", "--budget", "1000")
expect(res.returncode == 4 and "budget" in res.stderr, "exhausted budget exits 4")
res = run("estimate", "--ideal", "x*y - z*w", "--levels", "6", env={"JETLCT_BUDGET": "1000"})
expect(res.returncode == 4, "JETLCT_BUDGET caps the search")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
