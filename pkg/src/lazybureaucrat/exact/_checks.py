#
# (c) Copyright IBM Corp. 2025
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#
"""Shared solver plumbing."""

from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.evaluate import evaluate
from lazybureaucrat.data.types import (
    Instance,
    ObjectiveKind,
    Regime,
    Schedule,
    Solution,
)
from lazybureaucrat.exceptions import InternalValidationError, PreconditionError
from lazybureaucrat.feasibility import validate

_logger = get_logger(__name__)


def require_regime(instance: Instance, *regimes: Regime, algo: str) -> None:
    """Reject instances outside the regimes an algorithm supports."""
    if instance.regime not in regimes:
        allowed = ", ".join(r.value for r in regimes)
        raise PreconditionError(
            f"{algo} needs regime {allowed}, instance is {instance.regime.value}"
        )


def checked_solution(
    instance: Instance,
    schedule: Schedule,
    objective: ObjectiveKind,
    algo: str,
) -> Solution:
    """Validate a solver's schedule and evaluate it.

    Raises
    ------
    `.InternalValidationError`
        If the validator rejects the schedule.
    """
    violations = validate(instance, schedule)
    if violations:
        _logger.error("solver output rejected", algo=algo, violations=len(violations))
        raise InternalValidationError(
            f"{algo} produced an infeasible schedule", violations
        )
    value = evaluate(instance, schedule, objective)
    _logger.info("solved", algo=algo, objective=objective.value, value=value)
    return Solution(schedule, value)
