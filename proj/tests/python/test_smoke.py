# Copyright 2026 The kdep Authors
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

import json
import os
import pathlib
import subprocess

import pytest

import kdep

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"

SIGMA = ["R[A] <= S[B]", "S[] <= R[]"]
TAU = "S[B] <= R[A]"


def load(name):
    return json.loads((DATA / name).read_text())


def test_classify_builtins():
    assert kdep.classify("naturals")["weakly_cancellative"]
    report = kdep.classify("boolean")
    assert report["self_absorptive"] and not report["weakly_cancellative"]


def test_classify_table():
    assert kdep.classify(load("table_valid.json"))["self_absorptive"]


def test_weak_symmetry_derivation():
    result = kdep.derive(["Budget[proj] <= Grant[proj]", "Grant[] <= Budget[]"],
                         "Grant[proj] <= Budget[proj]", system="ws")
    assert result["derivable"]
    assert result["proof"]["rule"] == "WeakSymmetry"
    assert not kdep.derive(["Budget[proj] <= Grant[proj]"], "Grant[proj] <= Budget[proj]",
                           system="standard")["derivable"]


def test_dichotomy():
    assert kdep.entail(SIGMA, TAU, "naturals")["entailed"]
    verdict = kdep.entail(SIGMA, TAU, "boolean")
    assert not verdict["entailed"]
    assert verdict["countermodel"]["verified"]


def test_check_running_example():
    db = load("running_example.json")
    result = kdep.check(db, ["Budget[proj] <= Grant[proj]", "Grant[proj] <= Expense[proj]"])
    assert result == {"Budget[proj] <= Grant[proj]": True, "Grant[proj] <= Expense[proj]": False}


def test_chase_terminates_on_symmetric_pair():
    db = load("chase_start.json")
    trace = kdep.chase(db, ["R[B,C] <= R[A,B]", "R[A,B] <= R[B,C]"])
    assert trace["outcome"] == "Terminated"
    assert trace["step_count"] == 5


def test_chase_step_limit():
    db = load("chase_start.json")
    trace = kdep.chase(db, ["R[B,C] <= R[A,B]"], step_limit=100)
    assert trace["outcome"] == "StepLimitExceeded"


def test_errors_raise():
    with pytest.raises(kdep.KdepError):
        kdep.classify("no_such_monoid")
    with pytest.raises(ValueError, match="SyntaxError"):
        kdep.derive(["R[A <= S[B]"], TAU)


@pytest.mark.skipif("KDEP_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_agrees_with_module():
    out = subprocess.run([os.environ["KDEP_CLI"], "entail", str(DATA / "dichotomy.txt"), TAU,
                          "--monoid", "boolean", "--json"],
                         capture_output=True, text=True, check=False)
    assert out.returncode == 1
    assert json.loads(out.stdout)["entailed"] is False
