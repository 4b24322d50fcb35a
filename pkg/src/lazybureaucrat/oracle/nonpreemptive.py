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
"""Nonpreemptive Branch and Bound.

Decisions happen only when a job finishes or the worker is idle, so the search
branches over which executable job to start and jumps over idle stretches.
"""

from lazybureaucrat.config.models.search import SearchConfig, search_settings
from lazybureaucrat.data.types import (
    Instance,
    ObjectiveKind,
    Regime,
    Schedule,
    Segment,
    Solution,
)
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.feasibility import job_executable, next_executable_time

from ._common import certified, check_limits


def oracle_nonpreemptive(
    instance: Instance,
    objective: ObjectiveKind,
    *,
    prune: bool = True,
    settings: SearchConfig | None = None,
) -> Solution:
    """Return the exact optimum over all nonpreemptive busy schedules.

    Parameters
    ----------
    instance : `.Instance`
        A ``NONPREEMPTIVE`` instance.
    objective : `.ObjectiveKind`
        Quantity to minimise.
    prune : bool, default=True
        Use state dominance and incumbent bounds. Disabling them enumerates
        every branch and must not change the optimum.
    settings : `.SearchConfig`, optional
        Size limits; the active configuration by default.

    Raises
    ------
    `.PreconditionError`
        For a preemptive regime.
    `.BudgetExceeded`
        If the instance is over the configured limits.
    """
    if instance.regime is not Regime.NONPREEMPTIVE:
        raise PreconditionError("oracle_nonpreemptive needs the nonpreemptive regime")
    settings = settings or search_settings()
    check_limits(
        instance, settings.nonpreemptive_max_jobs, settings.nonpreemptive_max_horizon
    )
    jobs = instance.jobs
    regime = instance.regime

    def gain(job_id: int) -> int:
        match objective:
            case ObjectiveKind.TOTAL_WORK:
                return jobs[job_id].length
            case ObjectiveKind.WEIGHTED_COMPLETED:
                return jobs[job_id].weight
            case _:
                return 0

    seen: dict[tuple[int, int], int] = {}
    path: list[tuple[int, int]] = []
    best: list[tuple[int, int, list[tuple[int, int]]]] = []

    def explore(now: int, executed: int, cost: int) -> None:
        done = [(executed >> job.id) & 1 and job.length for job in jobs]
        ready = [
            job.id
            for job in jobs
            if not (executed >> job.id) & 1
            and job_executable(regime, job, done[job.id], now)
        ]
        if not ready:
            arrival = next_executable_time(instance, done, now)
            if arrival is not None:
                explore(arrival, executed, cost)
                return
            value = now if objective is ObjectiveKind.MAKESPAN else cost
            if not best or value < best[0][0]:
                best[:] = [(value, now, list(path))]
            return
        if prune:
            if seen.get((now, executed), cost + 1) <= cost:
                return
            seen[(now, executed)] = cost
            if objective is ObjectiveKind.MAKESPAN:
                bound = now + min(jobs[i].length for i in ready)
            else:
                bound = cost + min(gain(i) for i in ready)
            if best and bound >= best[0][0]:
                return
        for job_id in ready:
            path.append((now, job_id))
            explore(
                now + jobs[job_id].length, executed | 1 << job_id, cost + gain(job_id)
            )
            path.pop()

    explore(0, 0, 0)
    value, leave, starts = best[0]
    schedule = Schedule(
        segments=tuple(
            Segment(job_id=i, start=start, end=start + jobs[i].length)
            for start, i in starts
        ),
        leave_time=leave,
    )
    return certified(instance, schedule, objective, value, "nonpreemptive")
