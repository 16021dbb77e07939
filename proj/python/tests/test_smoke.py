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

import pytest

import coursealloc as ca

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


@pytest.fixture
def parsed():
    return ca.Instance.parse(THREE_COURSES)


def test_parse_and_round_trip(parsed):
    inst, matching = parsed
    assert inst.students == ["s1", "s2"]
    assert inst.courses == ["c1", "c2", "c3"]
    assert matching == [("s1", "c3"), ("s2", "c2")]
    assert inst.to_text(matching) == THREE_COURSES
    again, _ = ca.Instance.parse(inst.to_text())
    assert again == inst


def test_verify(parsed):
    inst, matching = parsed
    w = ca.verify(inst, matching, "pair")
    assert w["student"] == "s1"
    assert w["coalition"] == ["c1"]
    assert w["drop"] == ["c3"]
    assert w["text"] == "s1 blocks with c1 dropping c3"
    assert ca.verify(inst, matching, "coalition") is None
    assert ca.verify(inst, matching, "pair-size", mode="dp") is None


def test_solve_and_size(parsed):
    inst, matching = parsed
    assert ca.solve(inst) == matching
    size = ca.matching_size(inst, matching)
    assert size == {"size": 3, "course_complete": False,
                    "student_complete": True}


def test_max_stable_and_oracle(parsed):
    inst, _ = parsed
    assert ca.max_stable(inst, "pair") is None
    best = ca.max_stable(inst, "pair-size")
    assert best["size"] == 3
    report = ca.oracle(inst)
    assert report["total_matchings"] == 11
    assert report["notions"]["pair"]["stable_count"] == 0
    assert report["notions"]["pair-size"]["max_size"] == 3


def test_generate_is_deterministic():
    a = ca.generate(4, 3, seed=9, rules=2, master_list=True)
    b = ca.generate(4, 3, seed=9, rules=2, master_list=True)
    assert a == b
    assert a.has_rules
    assert ca.verify(a, ca.solve(a, "serial-dictatorship"), "pair") is None


def test_reduce():
    inst, matching = ca.reduce("subset-sum", "[subset-sum]\ntarget=3\nsizes=1,2\n")
    assert "b" in inst.courses
    assert ca.verify(inst, matching, "pair-size") is not None


def test_errors(parsed):
    inst, matching = parsed
    with pytest.raises(ValueError):
        ca.Instance.parse("[students]\ns1 credits=x\n")
    with pytest.raises(ValueError):
        ca.verify(inst, matching, "strong")
    with pytest.raises(ValueError):
        ca.verify(inst, [("s2", "c3")], "pair")
    with pytest.raises(ca.BudgetExceeded):
        ca.oracle(inst, max_pairs=1)
