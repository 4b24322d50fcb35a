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
"""Busy-Requirement Validation."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict

from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.evaluate import executed_amounts
from lazybureaucrat.data.types import Instance, Regime, Schedule

from .executability import ever_executable, executable_ids

_logger = get_logger(__name__)


class ViolationKind(StrEnum):
    """Every way a schedule can break the execution rules."""

    IDLE_WHILE_EXECUTABLE = "IDLE_WHILE_EXECUTABLE"
    RAN_INEXECUTABLE = "RAN_INEXECUTABLE"
    PREEMPTED_NONPREEMPTIVE = "PREEMPTED_NONPREEMPTIVE"
    STARTED_NOT_COMPLETED = "STARTED_NOT_COMPLETED"
    LEFT_WHILE_EXECUTABLE = "LEFT_WHILE_EXECUTABLE"
    OVERLAP = "OVERLAP"
    OUTSIDE_WINDOW = "OUTSIDE_WINDOW"


class Violation(BaseModel):
    """One rule broken at ``time``, optionally attributed to a job."""

    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    time: int
    job_id: int | None = None

    def __str__(self) -> str:
        job = "-" if self.job_id is None else str(self.job_id)
        return f"{self.kind.value} time={self.time} job={job}"


def _slot_owners(
    instance: Instance,
    schedule: Schedule,
    violations: list[Violation],
) -> dict[int, int]:
    owners: dict[int, int] = {}
    previous_end = 0
    for segment in schedule.segments:
        job = instance.jobs[segment.job_id]
        if segment.start < previous_end:
            violations.append(
                Violation(
                    kind=ViolationKind.OVERLAP,
                    time=segment.start,
                    job_id=segment.job_id,
                )
            )
        previous_end = max(previous_end, segment.end)
        if segment.start < job.arrival or segment.end > job.deadline:
            violations.append(
                Violation(
                    kind=ViolationKind.OUTSIDE_WINDOW,
                    time=segment.start if segment.start < job.arrival else job.deadline,
                    job_id=job.id,
                )
            )
        for time in range(segment.start, segment.end):
            owners.setdefault(time, segment.job_id)
    return owners


def validate(instance: Instance, schedule: Schedule) -> list[Violation]:
    """Replay ``schedule`` slot by slot against the busy requirement.

    Parameters
    ----------
    instance : `.Instance`
        The jobs and the regime.
    schedule : `.Schedule`
        The schedule to check.

    Returns
    -------
    list[`.Violation`]
        Violations ordered by time; empty when the schedule is feasible.

    Raises
    ------
    `.PreconditionError`
        If a segment refers to an unknown job.
    """
    executed_amounts(instance, schedule)
    violations: list[Violation] = []
    owners = _slot_owners(instance, schedule, violations)
    regime = instance.regime
    done = [0] * instance.n
    active: int | None = None
    preempted: set[int] = set()
    flagged_run: int | None = None

    def preempt(job_id: int, time: int) -> None:
        if job_id not in preempted:
            preempted.add(job_id)
            violations.append(
                Violation(
                    kind=ViolationKind.PREEMPTED_NONPREEMPTIVE,
                    time=time,
                    job_id=job_id,
                )
            )

    for time in range(schedule.leave_time):
        owner = owners.get(time)
        if owner is None:
            if executable_ids(instance, time, done, active):
                violations.append(
                    Violation(kind=ViolationKind.IDLE_WHILE_EXECUTABLE, time=time)
                )
            if active is not None:
                preempt(active, time)
                active = None
            flagged_run = None
            continue

        if active is not None and owner != active:
            preempt(active, time)
            active = None
        if owner not in executable_ids(instance, time, done, active):
            if flagged_run != owner:
                violations.append(
                    Violation(
                        kind=ViolationKind.RAN_INEXECUTABLE,
                        time=time,
                        job_id=owner,
                    )
                )
            flagged_run = owner
        else:
            flagged_run = None

        job = instance.jobs[owner]
        done[owner] = min(job.length, done[owner] + 1)
        if regime is Regime.NONPREEMPTIVE:
            active = owner if done[owner] < job.length else None

    leave = schedule.leave_time
    if active is not None:
        violations.append(
            Violation(
                kind=ViolationKind.LEFT_WHILE_EXECUTABLE,
                time=leave,
                job_id=active,
            )
        )
        preempt(active, leave)
    else:
        violations.extend(
            Violation(
                kind=ViolationKind.LEFT_WHILE_EXECUTABLE,
                time=leave,
                job_id=job.id,
            )
            for job in instance.jobs
            if ever_executable(regime, job, done[job.id], leave)
        )
    if regime is Regime.PREEMPT_III:
        violations.extend(
            Violation(
                kind=ViolationKind.STARTED_NOT_COMPLETED,
                time=leave,
                job_id=job.id,
            )
            for job in instance.jobs
            if 0 < done[job.id] < job.length
        )

    violations.sort(
        key=lambda v: (v.time, -1 if v.job_id is None else v.job_id, v.kind.value)
    )
    if violations:
        _logger.debug("schedule rejected", violations=[str(v) for v in violations])
    return violations


def is_feasible(instance: Instance, schedule: Schedule) -> bool:
    """Whether `.validate` reports nothing."""
    return not validate(instance, schedule)
