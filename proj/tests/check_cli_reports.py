"""Runs the crown CLI, validates every --json report against the shipped schema,
and checks exit codes and determinism."""

import json
import os
import subprocess
import sys

import jsonschema

CROWN, SCHEMA = sys.argv[1], sys.argv[2]

CASES = [
    (["boundary", "--type", "B", "--rank", "5"], 0),
    (["boundary", "--all"], 0),
    (["exponents", "--type", "G", "--rank", "2", "--m1", "1"], 0),
    (["exponents", "--type", "BC", "--rank", "7"], 0),
    (["exponents", "--type", "D", "--rank", "6", "--m", "3/2", "--eta", "w6"], 0),
    (["exponents", "--type", "B", "--rank", "4", "--m1", "2", "--m2", "1"], 0),
    (["decay", "--type", "E", "--rank", "7", "--m", "2"], 0),
    (["decay", "--type", "BC", "--rank", "3", "--m1", "1", "--m2", "2", "--mh", "1/2", "--period", "1", "2", "3"], 0),
    (["complex-check"], 0),
    (["complex-check", "--type", "E", "--rank", "6"], 0),
    (["verify", "stirling"], 0),
    (["verify", "maass", "--seed", "3"], 0),
    (["verify", "tables", "--timing"], 0),
]

USAGE = [
    [],
    ["nonsense"],
    ["verify", "nosuch"],
    ["exponents", "--type", "B"],
    ["exponents", "--type", "Q", "--rank", "3"],
    ["exponents", "--type", "A", "--rank", "3", "--m", "x/y"],
    ["boundary", "--type", "B", "--rank", "5", "--all"],
    ["boundary", "--json", "--tsv", "--all"],
    ["exponents", "--type", "B", "--rank", "4", "--eta", "w2"],
]


def run(args, env=None):
    return subprocess.run([CROWN] + args, capture_output=True, text=True, env=env)


def main():
    with open(SCHEMA) as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = []
    for args, code in CASES:
        first = run(args + ["--json"])
        if first.returncode != code:
            failures.append(f"{args}: exit {first.returncode}, expected {code}: {first.stderr}")
            continue
        doc = json.loads(first.stdout)
        errors = sorted(validator.iter_errors(doc), key=str)
        if errors:
            failures.append(f"{args}: schema: {errors[0].message}")
        if "--timing" not in args and run(args + ["--json"]).stdout != first.stdout:
            failures.append(f"{args}: output differs between runs")

    for args in USAGE:
        r = run(args)
        if r.returncode != 2:
            failures.append(f"usage {args}: exit {r.returncode}, expected 2")

    b5 = json.loads(run(["boundary", "--type", "B", "--rank", "5", "--json"]).stdout)["rows"][0]
    if b5["extremal"] != ["w1", "w5/2"] or b5["minuscule"] != ["w1"]:
        failures.append(f"B_5 boundary row {b5}")
    g2 = json.loads(run(["exponents", "--type", "G", "--rank", "2", "--m1", "1", "--json"]).stdout)["rows"][0]
    if g2["eta"] != "w1/3" or g2["s_value"] != "-1/2":
        failures.append(f"G_2 exponent row {g2}")

    env = dict(os.environ, CROWN_SEED="11")
    seeded = json.loads(run(["verify", "stirling", "--json"], env).stdout)["command"]["seed"]
    overridden = json.loads(run(["verify", "stirling", "--json", "--seed", "5"], env).stdout)["command"]["seed"]
    if seeded != 11 or overridden != 5:
        failures.append(f"seed handling: env {seeded}, flag {overridden}")

    decimal = run(["exponents", "--type", "A", "--rank", "2", "--m", "1.5"])
    if decimal.returncode != 0 or "decimal" not in decimal.stderr:
        failures.append("decimal multiplicity should warn on stderr")

    for f in failures:
        print("FAIL", f)
    print(f"{len(CASES)} json reports, {len(USAGE)} usage errors, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
