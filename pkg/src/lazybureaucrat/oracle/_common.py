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
"""Search limits and witness certification."""

from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.evaluate import evaluate
from lazybureaucrat.data.types import Instance, ObjectiveKind, Schedule, Solution
from lazybureaucrat.exceptions import BudgetExceeded, InternalValidationError
from lazybureaucrat.feasibility import validate

_logger = get_logger(__name__)


def check_limits(instance: Instance, max_jobs: int, max_horizon: int) -> None:
    """Reject instances beyond the configured search limits.

    Raises
    ------
    `.BudgetExceeded`
        If ``n`` or the horizon is over its limit.
    """
    if instance.n > max_jobs or instance.horizon > max_horizon:
        raise BudgetExceeded(
            f"oracle limited to n <= {max_jobs} and K <= {max_horizon}, "
            f"got n={instance.n} K={instance.horizon}"
        )


def certified(
    instance: Instance,
    schedule: Schedule,
    objective: ObjectiveKind,
    value: int,
    label: str,
) -> Solution:
    """Check a witness replays to the value the search reported."""
    violations = validate(instance, schedule)
    if violations:
        raise InternalValidationError(f"{label} witness is infeasible", violations)
    replayed = evaluate(instance, schedule, objective)
    if replayed != value:
        raise InternalValidationError(
            f"{label} witness evaluates to {replayed}, search reported {value}"
        )
    _logger.info("oracle optimum", oracle=label, objective=objective.value, value=value)
    return Solution(schedule, value)
