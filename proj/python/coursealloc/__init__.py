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

"""Stable course allocation with credits.

Matchings are lists of (student label, course label) pairs. Bad input
raises ValueError; an exhausted search or enumeration budget raises
BudgetExceeded.
"""

from ._coursealloc import (
    BudgetExceeded,
    Instance,
    generate,
    matching_size,
    max_stable,
    oracle,
    reduce,
    solve,
    verify,
)

NOTIONS = ("pair", "first-coalition", "coalition", "pair-size")

__all__ = [
    "NOTIONS",
    "BudgetExceeded",
    "Instance",
    "generate",
    "matching_size",
    "max_stable",
    "oracle",
    "reduce",
    "solve",
    "verify",
]
