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

"""Inclusion dependencies over databases annotated with monoid weights.

Monoids are given by builtin name ("naturals", "boolean", "monogenic:2,3", ...)
or as a finite-table dict. Databases and schemas use the same JSON layout as
the command-line tool. Errors raise KdepError, a ValueError subclass.
"""

import json

from . import _kdep
from ._kdep import KdepError

__all__ = ["KdepError", "classify", "derive", "entail", "check", "chase"]


def _dump(value):
    return None if value is None else json.dumps(value)


def classify(monoid):
    """Property report for a monoid."""
    return json.loads(_kdep.classify(json.dumps(monoid)))


def derive(sigma, tau, system="ws", schema=None):
    """Derivability of tau from sigma; system is "standard", "ws" or "balance"."""
    return json.loads(_kdep.derive(list(sigma), tau, system, _dump(schema)))


def entail(sigma, tau, monoid="naturals", schema=None, balanced=False, step_limit=10000):
    """Entailment verdict with a proof or a verified countermodel."""
    return json.loads(
        _kdep.entail(list(sigma), tau, json.dumps(monoid), _dump(schema), balanced, step_limit)
    )


def check(database, sigma):
    """Maps each IND to whether the database satisfies it."""
    return json.loads(_kdep.check(json.dumps(database), list(sigma)))


def chase(database, sigma, method="plus", step_limit=10000):
    """Runs the additive ("plus") or classical chase and returns its trace."""
    return json.loads(_kdep.chase(json.dumps(database), list(sigma), method, step_limit))
