# Copyright 2026 The coursealloc Authors
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

"""Runs every CLI subcommand with --json and validates the reports.

usage: check_json_schema.py CLI SCHEMA
"""

import json
import subprocess
import sys

import jsonschema

THREE_COURSES = """\
[students]
s1 credits=2 prefs=c1,c3,c2
s2 credits=1 prefs=c2,c1
[courses]
c1 credits=1 upper=1 prefs=s2,s1
c2 credits=1 upper=1 prefs=s1,s2
c3 credits=2 upper=1 prefs=s1
[matching]
s1 c3
s2 c2
"""

LOWER_QUOTA = """\
[students]
s1 credits=2 prefs=c1,c2
[courses]
c1 credits=1 upper=1 lower=1 prefs=s1
c2 credits=2 upper=1 prefs=s1
"""

HRS = """\
[residents]
r1 size=1 prefs=h2,h1
r2 size=1 prefs=h1,h2
r3 size=2 prefs=h1
[hospitals]
h1 quota=2 prefs=r1,r3,r2
h2 quota=1 prefs=r2,r1
"""

# (args, stdin, expected exit code, expected status)
CASES = [
    (["verify", "--notion", "pair", "-"], THREE_COURSES, 10, "unstable"),
    (["verify", "--notion", "pair-size", "--mode", "dp", "-"], THREE_COURSES,
     0, "stable"),
    (["verify", "--notion", "coalition", "--mode", "exhaustive", "-"],
     THREE_COURSES, 0, "stable"),
    (["solve", "--alg", "pair-size-da", "-"], THREE_COURSES, 0, "ok"),
    (["max", "--notion", "pair", "-"], THREE_COURSES, 11, "none"),
    (["max", "--notion", "pair-size", "-"], THREE_COURSES, 0, "ok"),
    (["max", "--notion", "pair", "--lq", "cl", "-"], LOWER_QUOTA, 0, "ok"),
    (["oracle", "-"], THREE_COURSES, 0, "ok"),
    (["oracle", "--lq", "nc", "-"], LOWER_QUOTA, 0, "ok"),
    (["oracle", "--max-pairs", "1", "-"], THREE_COURSES, 3, "error"),
    (["gen", "--students", "3", "--courses", "3", "--seed", "5"], "", 0, "ok"),
    (["reduce", "--from", "hrs", "-"], HRS, 0, "ok"),
    (["solve", "--alg", "pair-size-da", "-"], "[students]\ns1 credits=\n", 2,
     "error"),
]


def main():
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args, stdin, code, status in CASES:
        proc = subprocess.run([cli, "--json", *args], input=stdin,
                              capture_output=True, text=True, check=False)
        label = " ".join(args)
        try:
            report = json.loads(proc.stdout)
        except json.JSONDecodeError as e:
            print(f"FAIL {label}: not JSON ({e})")
            failures += 1
            continue
        errors = [e.message for e in validator.iter_errors(report)]
        if proc.returncode != code:
            errors.append(f"exit {proc.returncode}, expected {code}")
        if report.get("status") != status:
            errors.append(f"status {report.get('status')}, expected {status}")
        if errors:
            print(f"FAIL {label}: " + "; ".join(errors))
            failures += 1
        else:
            print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
