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
"""Slot-level Search for the Preemptive Regimes."""

from collections.abc import Callable
from functools import cache

from lazybureaucrat.config.models.search import SearchConfig, search_settings
from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.types import (
    Instance,
    ObjectiveKind,
    Regime,
    Schedule,
    Solution,
)
from lazybureaucrat.exceptions import (
    BudgetExceeded,
    InternalValidationError,
    PreconditionError,
)
from lazybureaucrat.feasibility import executable_ids, next_executable_time, validate

from ._common import certified, check_limits

_logger = get_logger(__name__)

Done = tuple[int, ...]
Outcome = tuple[int, int, tuple[tuple[int, int], ...]]
"""Cost to go, leave time and the remaining ``(time, job_id)`` slots."""


def _advance(done: Done, job_id: int) -> Done:
    return done[:job_id] + (done[job_id] + 1,) + done[job_id + 1 :]


def oracle_preemptive(
    instance: Instance,
    objective: ObjectiveKind,
    *,
    prune: bool = True,
    settings: SearchConfig | None = None,
) -> Solution:
    """Return the exact grid optimum over busy schedules of a preemptive regime.

    Each slot runs one executable job; the worker idles only when nothing is
    executable, and then straight to the next arrival. Under ``PREEMPT_III`` a
    branch dies as soon as a started job can no longer be completed.

    Parameters
    ----------
    instance : `.Instance`
        A ``PREEMPT_I``, ``PREEMPT_II`` or ``PREEMPT_III`` instance.
    objective : `.ObjectiveKind`
        Quantity to minimise.
    prune : bool, default=True
        Memoise on ``(time, executed amounts)``.
    settings : `.SearchConfig`, optional
        Size limits; the active configuration by default.

    Raises
    ------
    `.PreconditionError`
        For the nonpreemptive regime.
    `.BudgetExceeded`
        If the instance is over the configured limits.
    """
    if not instance.regime.preemptive:
        raise PreconditionError("oracle_preemptive needs a preemptive regime")
    settings = settings or search_settings()
    check_limits(
        instance, settings.preemptive_max_jobs, settings.preemptive_max_horizon
    )
    jobs = instance.jobs
    must_complete = instance.regime is Regime.PREEMPT_III

    def gain(job_id: int, done: Done) -> int:
        job = jobs[job_id]
        match objective:
            case ObjectiveKind.TOTAL_WORK:
                return 1
            case ObjectiveKind.WEIGHTED_COMPLETED if done[job_id] + 1 == job.length:
                return job.weight
            case _:
                return 0

    def best(now: int, done: Done) -> Outcome | None:
        if must_complete and any(
            0 < amount < job.length and now + job.length - amount > job.deadline
            for job, amount in zip(jobs, done)
        ):
            return None
        ready = executable_ids(instance, now, done)
        if not ready:
            arrival = next_executable_time(instance, done, now)
            if arrival is not None:
                return search(arrival, done)
            return (now if objective is ObjectiveKind.MAKESPAN else 0), now, ()
        found: Outcome | None = None
        for job_id in sorted(ready):
            tail = search(now + 1, _advance(done, job_id))
            if tail is None:
                continue
            cost = tail[0] + gain(job_id, done)
            if found is None or cost < found[0]:
                found = cost, tail[1], ((now, job_id), *tail[2])
        return found

    search: Callable[[int, Done], Outcome | None] = cache(best) if prune else best
    outcome = search(0, (0,) * instance.n)
    if outcome is None:
        raise InternalValidationError("no busy schedule completes every started job")
    value, leave, slots = outcome
    schedule = Schedule.from_slots(slots, leave)
    return certified(instance, schedule, objective, value, instance.regime.value)


def decide_preemptive(
    instance: Instance,
    T: int,
    *,
    settings: SearchConfig | None = None,
) -> Schedule | None:
    """Decide exactly whether a ``PREEMPT_II`` worker can go home at ``T``.

    Leaving at ``T`` requires every job to be non-executable at ``T`` for good:
    complete, or short of its deadline by more than the remaining work. Jobs
    that can no longer be left that way are committed, and a branch dies once
    its committed work no longer fits before ``min(d, T)``.

    Returns
    -------
    `.Schedule` or None
        A validated schedule leaving at ``T``, or None for NO.

    Raises
    ------
    `.PreconditionError`
        For another regime or a negative ``T``.
    `.BudgetExceeded`
        If more than ``decide_state_budget`` states are refuted.
    """
    if instance.regime is not Regime.PREEMPT_II:
        raise PreconditionError("decide_preemptive needs the preempt2 regime")
    if T < 0:
        raise PreconditionError(f"T={T} is negative")
    settings = settings or search_settings()
    jobs = instance.jobs
    if any(job.arrival > T and not job.degenerate for job in jobs):
        _logger.debug("job arrives after leave time", T=T)
        return None
    abandon_cap = [T + job.length - job.deadline - 1 for job in jobs]
    failed: set[tuple[int, Done]] = set()
    slots: list[tuple[int, int]] = []

    def hopeless(now: int, done: Done) -> bool:
        due = sorted(
            (min(job.deadline, T), job.length - done[job.id])
            for job in jobs
            if not job.degenerate
            and done[job.id] < job.length
            and done[job.id] > abandon_cap[job.id]
        )
        spent = now
        for bound, remaining in due:
            spent += remaining
            if spent > bound:
                return True
        return False

    def search(now: int, done: Done) -> bool:
        if now > T or (now, done) in failed:
            return False
        if len(failed) >= settings.decide_state_budget:
            raise BudgetExceeded(
                f"decision search refuted {len(failed)} states without an answer"
            )
        ready = executable_ids(instance, now, done)
        if not ready:
            arrival = next_executable_time(instance, done, now)
            ok = arrival is None or search(arrival, done)
        elif now == T or hopeless(now, done):
            ok = False
        else:
            ok = False
            for job_id in sorted(
                ready,
                key=lambda i: (jobs[i].deadline - jobs[i].length + done[i], i),
            ):
                slots.append((now, job_id))
                if search(now + 1, _advance(done, job_id)):
                    ok = True
                    break
                slots.pop()
        if not ok:
            failed.add((now, done))
        return ok

    if not search(0, (0,) * instance.n):
        _logger.debug("no schedule leaves at T", T=T, refuted=len(failed))
        return None
    schedule = Schedule.from_slots(slots, T)
    violations = validate(instance, schedule)
    if violations:
        raise InternalValidationError("decision witness is infeasible", violations)
    return schedule
