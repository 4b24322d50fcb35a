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
"""Objective Evaluation."""

from lazybureaucrat.exceptions import PreconditionError

from .types import Instance, ObjectiveKind, Schedule


def executed_amounts(instance: Instance, schedule: Schedule) -> list[int]:
    """Return the work ``y_i`` executed on every job.

    Raises
    ------
    `.PreconditionError`
        If a segment refers to a job the instance does not have.
    """
    amounts = [0] * instance.n
    for segment in schedule.segments:
        if segment.job_id >= instance.n:
            raise PreconditionError(f"segment refers to unknown job {segment.job_id}")
        amounts[segment.job_id] += segment.length
    return amounts


def completed_jobs(instance: Instance, schedule: Schedule) -> frozenset[int]:
    """Return the ids of jobs executed to completion."""
    amounts = executed_amounts(instance, schedule)
    return frozenset(
        job.id for job in instance.jobs if amounts[job.id] >= job.length
    )


def evaluate(
    instance: Instance,
    schedule: Schedule,
    objective: ObjectiveKind,
) -> int:
    """Evaluate a schedule.

    Parameters
    ----------
    instance : `.Instance`
        The jobs.
    schedule : `.Schedule`
        A schedule over ``instance``.
    objective : `.ObjectiveKind`
        ``TOTAL_WORK`` sums segment lengths, ``WEIGHTED_COMPLETED`` sums the weights
        of completed jobs and ``MAKESPAN`` is the leave time.

    Returns
    -------
    int
        The objective value in grid units (weights for ``WEIGHTED_COMPLETED``).
    """
    match objective:
        case ObjectiveKind.TOTAL_WORK:
            return sum(executed_amounts(instance, schedule))
        case ObjectiveKind.WEIGHTED_COMPLETED:
            return sum(
                instance.jobs[i].weight for i in completed_jobs(instance, schedule)
            )
        case ObjectiveKind.MAKESPAN:
            executed_amounts(instance, schedule)
            return schedule.leave_time
    raise PreconditionError(f"unknown objective {objective!r}")
