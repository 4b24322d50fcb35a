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
"""Constraint I Solvers.

Under ``PREEMPT_I`` a job stays executable for as long as the next unit fits in
its window, so the worker can always be kept busy on whichever job expires last.
"""

from collections.abc import Sequence
from typing import NamedTuple

from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.fileformat import serialize_instance
from lazybureaucrat.data.types import Instance, ObjectiveKind, Regime, Solution
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.oracle import oracle_preemptive

from ._checks import checked_solution, require_regime
from .greedy import latest_deadline_first, simulate

_logger = get_logger(__name__)


def solve_preempt1_ldd(instance: Instance, objective: ObjectiveKind) -> Solution:
    """Latest Due Date, optimal for total work and for makespan.

    Raises
    ------
    `.PreconditionError`
        For another regime or the weighted objective.
    """
    require_regime(instance, Regime.PREEMPT_I, algo="preempt1-ldd")
    if objective is ObjectiveKind.WEIGHTED_COMPLETED:
        raise PreconditionError("preempt1-ldd minimises total work or makespan only")
    schedule = simulate(instance, latest_deadline_first(instance))
    return checked_solution(instance, schedule, objective, "preempt1-ldd")


def _edd_short_of_completion(instance: Instance):
    jobs = instance.jobs

    def choose(ready: frozenset[int], done: Sequence[int], _: int) -> int:
        unfinishable = [i for i in ready if jobs[i].length - done[i] > 1]
        if unfinishable:
            return min(unfinishable, key=lambda i: (jobs[i].deadline, i))
        # every candidate completes this slot
        return min(ready, key=lambda i: (jobs[i].weight, -jobs[i].deadline, i))

    return choose


def solve_preempt1_min_weight(instance: Instance) -> Solution:
    """Keep the completed weight low by stopping every job one unit short.

    Jobs run Earliest Due Date but are preempted while a single unit remains, so
    they only complete when nothing else is executable. One grid unit plays the
    part of an arbitrarily small interruption, which needs a grid of at least
    ``3n`` units per time unit.

    Raises
    ------
    `.PreconditionError`
        For another regime or a grid coarser than ``3n``.
    """
    require_regime(instance, Regime.PREEMPT_I, algo="preempt1-weight")
    if instance.n and instance.scale < 3 * instance.n:
        raise PreconditionError(
            f"preempt1-weight needs scale >= {3 * instance.n}, got {instance.scale}"
        )
    schedule = simulate(instance, _edd_short_of_completion(instance))
    return checked_solution(
        instance, schedule, ObjectiveKind.WEIGHTED_COMPLETED, "preempt1-weight"
    )


class WeightAudit(NamedTuple):
    """Solver weight against the exhaustive optimum on the same grid."""

    solver: int
    oracle: int
    flagged: bool


def audit_preempt1_min_weight(instance: Instance) -> WeightAudit:
    """Compare `.solve_preempt1_min_weight` with the slot-level oracle.

    A disagreement is logged with the serialized instance attached.
    """
    solver = solve_preempt1_min_weight(instance).value
    oracle = oracle_preemptive(instance, ObjectiveKind.WEIGHTED_COMPLETED).value
    flagged = solver != oracle
    if flagged:
        _logger.warning(
            "min_weight_mismatch",
            solver=solver,
            oracle=oracle,
            instance=serialize_instance(instance),
        )
    return WeightAudit(solver, oracle, flagged)
