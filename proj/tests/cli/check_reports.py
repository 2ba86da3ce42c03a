#!/usr/bin/env python3
# Copyright 2026 The resform Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs the driver on a spread of inputs and validates every --json report
against the shipped schema, the exit code, and run-to-run determinism."""

import argparse
import json
import subprocess
import sys

import jsonschema

F7_XY = ["--p", "7", "--vars", "x,y"]
F2_XY = ["--p", "2", "--vars", "x,y"]

# (arguments, expected exit code)
CASES = [
    (["milnor", *F7_XY, "--poly", "x^3+y^3"], 0),
    (["milnor", "--p", "3", "--m", "2", "--vars", "x", "--poly", "x^4+[0,1]*x^2"], 0),
    (["gram", "--p", "7", "--vars", "x", "--poly", "x^3", "--scale=-1"], 0),
    (["gram", *F2_XY, "--poly", "x^2+x*y+y^2"], 0),
    (["gram", "--p", "2", "--vars", "u", "--poly", "u^2+u^3"], 0),
    (["disc", "--p", "5", "--m", "2", "--modulus", "2,4,1", "--vars", "x,y", "--poly", "x^2+[1,1]*y^2"], 0),
    (["arf", *F2_XY, "--poly", "x^2+x*y+y^2"], 0),
    (["arf", "--p", "2", "--m", "2", "--vars", "x,y", "--poly", "x^3+y^3", "--lift-perturbation", "random",
      "--seed", "7"], 0),
    (["arf", *F2_XY, "--poly", "x^2+x*y", "--lift-perturbation", "3*x^3+y"], 0),
    (["epsilon", "--p", "5", "--vars", "t", "--poly", "t^2"], 0),
    (["epsilon", "--p", "7", "--vars", "x,y", "--poly", "x^3+y^3"], 0),
    (["epsilon", "--p", "2", "--vars", "u", "--poly", "u^2+u^3"], 0),
    (["verify", "--p", "3", "--m", "1", "--vars", "x,y", "--poly", "x^2+y^2"], 0),
    (["verify", "--p", "5", "--vars", "x", "--poly", "2*x^2", "--convention", "literal"], 1),
    (["verify", *F2_XY, "--poly", "x^2+x*y+y^2"], 0),
    (["verify", "--p", "7", "--vars", "x,y", "--poly", "x^3+y^3"], 0),
    (["fermat", "--d", "3", "--n", "0", "--a", "1,1"], 0),
    (["fermat", "--d", "4", "--n", "1", "--a", "1,2,3", "--p", "7"], 0),
    (["fermat", "--d", "5", "--n", "1", "--a", "1,1,1"], 0),
    (["homog2", "--p", "2", "--coeffs", "0,1,1,0"], 0),
    (["homog2", "--p", "2", "--m", "2", "--coeffs", "1,[0,1],0,1"], 0),
    (["homog2", "--p", "7", "--coeffs", "1,0,0,1"], 0),
    (["corpus", "--no-acceptance"], 0),
    # Input errors produce a structured record and exit code 2.
    (["milnor", "--p", "4", "--vars", "x", "--poly", "x^2"], 2),
    (["milnor", "--p", "2", "--m", "2", "--modulus", "1,0,1", "--vars", "x", "--poly", "x^2"], 2),
    (["milnor", "--p", "3", "--vars", "x,y", "--poly", "x^2"], 2),
    (["milnor", "--p", "3", "--vars", "x", "--poly", "x^2+z"], 2),
    (["gram", "--p", "3", "--vars", "x", "--poly", "x^2", "--scale", "0"], 2),
    (["arf", "--p", "3", "--vars", "x", "--poly", "x^2"], 2),
    (["verify", "--p", "5", "--vars", "x", "--poly", "x^2+"], 2),
    (["fermat", "--d", "3", "--n", "0", "--a", "1"], 2),
    (["homog2", "--p", "2", "--coeffs", "1,0,1"], 2),
]


def run(cli, args):
    proc = subprocess.run([cli, *args, "--json"], capture_output=True, text=True, timeout=120)
    return proc.returncode, proc.stdout


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", required=True)
    ap.add_argument("--schema", required=True)
    opts = ap.parse_args()
    with open(opts.schema) as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)

    failures = 0
    for args, want_rc in CASES:
        label = " ".join(args)
        rc, out = run(opts.cli, args)
        problems = []
        if rc != want_rc:
            problems.append(f"exit code {rc}, expected {want_rc}")
        try:
            report = json.loads(out)
        except json.JSONDecodeError as exc:
            problems.append(f"not JSON: {exc}")
            report = None
        if report is not None:
            problems += [f"schema: {e.message} at {list(e.absolute_path)}" for e in validator.iter_errors(report)]
            if want_rc == 2 and "error" not in report:
                problems.append("missing error record")
            if report.get("convention") not in ("calibrated", "literal"):
                problems.append("missing convention")
            if run(opts.cli, args) != (rc, out):
                problems.append("output differs between runs")
        status = "ok" if not problems else "FAILED"
        print(f"{status:6} {label}")
        for p in problems:
            print(f"       {p}")
        failures += bool(problems)

    # Early-exit paths that bypass the report: usage errors.
    rc = subprocess.run([opts.cli, "frobnicate"], capture_output=True).returncode
    if rc != 2:
        print(f"FAILED unknown subcommand exits {rc}, expected 2")
        failures += 1

    print(f"{len(CASES) - failures}/{len(CASES)} report checks passed")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
