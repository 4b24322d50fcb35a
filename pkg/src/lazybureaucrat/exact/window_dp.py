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
"""Window-bounded Dynamic Programs.

Nonpreemptive search over states ``(t, F)``: the worker is free at time ``t`` and
``F`` holds the executed jobs whose critical time has not yet passed, the only
history that still affects which jobs are executable. Narrow windows keep ``F``
empty; windows at most ``R`` lengths wide with length ratio ``Delta`` keep it
within roughly ``2 R lg Delta`` jobs.
"""

from fractions import Fraction
from math import comb
from typing import NamedTuple

from lazybureaucrat.config.models.search import SearchConfig, search_settings
from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.types import (
    Instance,
    Job,
    ObjectiveKind,
    Regime,
    Schedule,
    Segment,
    Solution,
)
from lazybureaucrat.exceptions import BudgetExceeded, PreconditionError

from ._checks import checked_solution, require_regime

_logger = get_logger(__name__)


class WindowBounds(NamedTuple):
    """Structural bounds of an instance.

    Attributes
    ----------
    ratio : Fraction
        Largest ``(d - a) / t``.
    delta : Fraction
        Longest over shortest job length.
    """

    ratio: Fraction
    delta: Fraction


def infer_bounds(instance: Instance) -> WindowBounds:
    """Return the tightest ``R`` and ``Delta`` the instance satisfies."""
    if not instance.jobs:
        return WindowBounds(Fraction(0), Fraction(1))
    lengths = [job.length for job in instance.jobs]
    return WindowBounds(
        max(Fraction(job.window, job.length) for job in instance.jobs),
        Fraction(max(lengths), min(lengths)),
    )


def can_precede(first: Job, second: Job) -> bool:
    """Whether ``first`` can run to completion before ``second`` starts."""
    return first.arrival + first.length <= second.deadline - second.length


def unique_ordering_holds(instance: Instance) -> bool:
    """Whether no pair of jobs can run in both orders."""
    jobs = instance.jobs
    return not any(
        can_precede(i, j) and can_precede(j, i)
        for x, i in enumerate(jobs)
        for j in jobs[x + 1 :]
    )


def active_set_bound(ratio: Fraction, delta: Fraction) -> int:
    """Smallest ``k`` with ``2 ** k >= delta ** (2 * ratio)``, in exact arithmetic."""
    if delta <= 1 or ratio <= 0:
        return 0
    p, q = delta.numerator, delta.denominator
    r, s = ratio.numerator, ratio.denominator
    k = 0
    while p ** (2 * r) > 2 ** (k * s) * q ** (2 * r):
        k += 1
    return k


class _Search:
    """Memoised shortest path over ``(time, F)`` states."""

    def __init__(
        self,
        instance: Instance,
        objective: ObjectiveKind,
        budget: int | None,
    ) -> None:
        self.instance = instance
        self.objective = objective
        self.budget = budget
        self.memo: dict[tuple[int, frozenset[int]], tuple[int, int | None, int]] = {}
        self.live = [job for job in instance.jobs if not job.degenerate]

    def _cost(self, job: Job) -> int:
        match self.objective:
            case ObjectiveKind.TOTAL_WORK:
                return job.length
            case ObjectiveKind.WEIGHTED_COMPLETED:
                return job.weight
        return 0

    def _advance(self, time: int, executed: frozenset[int]) -> frozenset[int]:
        jobs = self.instance.jobs
        return frozenset(i for i in executed if jobs[i].critical_time >= time)

    def best(self, time: int, executed: frozenset[int]) -> int:
        key = (time, executed)
        if key in self.memo:
            return self.memo[key][0]
        if self.budget is not None and len(self.memo) >= self.budget:
            raise BudgetExceeded(f"state budget of {self.budget} exhausted")

        ready = [
            job
            for job in self.live
            if job.id not in executed and job.arrival <= time <= job.critical_time
        ]
        if not ready:
            arrivals = [job.arrival for job in self.live if job.arrival > time]
            if not arrivals:
                value = time if self.objective is ObjectiveKind.MAKESPAN else 0
                self.memo[key] = (value, None, time)
                return value
            later = min(arrivals)
            value = self.best(later, self._advance(later, executed))
            self.memo[key] = (value, None, later)
            return value

        best: tuple[int, int | None, int] | None = None
        for job in ready:
            end = time + job.length
            value = self._cost(job) + self.best(
                end, self._advance(end, executed | {job.id})
            )
            if best is None or value < best[0]:
                best = (value, job.id, end)
        assert best is not None
        self.memo[key] = best
        return best[0]

    def schedule(self) -> Schedule:
        time, executed = 0, frozenset()
        self.best(time, executed)
        segments: list[Segment] = []
        while True:
            _, job_id, following = self.memo[(time, executed)]
            if job_id is None:
                if following == time:
                    return Schedule(segments=tuple(segments), leave_time=time)
            else:
                segments.append(Segment(job_id=job_id, start=time, end=following))
                executed = executed | {job_id}
            time = following
            executed = self._advance(time, executed)


def _solve(
    instance: Instance,
    objective: ObjectiveKind,
    algo: str,
    budget: int | None,
) -> Solution:
    search = _Search(instance, objective, budget)
    schedule = search.schedule()
    _logger.debug("window search finished", algo=algo, states=len(search.memo))
    return checked_solution(instance, schedule, objective, algo)


def solve_narrow_window_dp(instance: Instance, objective: ObjectiveKind) -> Solution:
    """Optimal nonpreemptive schedule when every window is under twice its job.

    With ``d - a < 2t`` an executed job's critical time has always passed by the
    time it completes, so the state is the current time alone.

    Raises
    ------
    `.PreconditionError`
        For a preemptive regime or a job with ``d - a >= 2t``.
    """
    require_regime(instance, Regime.NONPREEMPTIVE, algo="narrow-dp")
    for job in instance.jobs:
        if job.window >= 2 * job.length:
            raise PreconditionError(
                f"narrow-dp needs d - a < 2t, job {job.id} has window {job.window}"
                f" for length {job.length}"
            )
    return _solve(instance, objective, "narrow-dp", None)


def solve_bounded_ratio_dp(
    instance: Instance,
    objective: ObjectiveKind,
    ratio: Fraction,
    delta: Fraction,
    settings: SearchConfig | None = None,
) -> Solution:
    """Optimal nonpreemptive schedule for windows at most ``ratio`` lengths wide.

    Parameters
    ----------
    instance : `.Instance`
        Nonpreemptive jobs with ``d - a <= ratio * t`` and length ratio at most
        ``delta``.
    objective : `.ObjectiveKind`
        Objective to minimise.
    ratio, delta : Fraction
        Caller-supplied bounds, checked against the instance.
    settings : `.SearchConfig`, optional
        Source of the state budget; the active configuration by default.

    Raises
    ------
    `.PreconditionError`
        If the bounds do not hold.
    `.BudgetExceeded`
        If the state space is, or turns out to be, larger than the budget.
    """
    require_regime(instance, Regime.NONPREEMPTIVE, algo="ratio-dp")
    ratio, delta = Fraction(ratio), Fraction(delta)
    if ratio <= 0 or delta < 1:
        raise PreconditionError("ratio-dp needs R > 0 and Delta >= 1")
    bounds = infer_bounds(instance)
    if bounds.ratio > ratio:
        raise PreconditionError(f"window ratio {bounds.ratio} exceeds R={ratio}")
    if bounds.delta > delta:
        raise PreconditionError(f"length ratio {bounds.delta} exceeds {delta}")

    budget = (settings or search_settings()).ratio_state_budget
    k = min(instance.n, max(1, active_set_bound(ratio, delta)))
    estimate = (instance.horizon + 1) * sum(comb(instance.n, i) for i in range(k + 1))
    _logger.debug("ratio-dp state estimate", active_bound=k, estimate=estimate)
    if estimate > budget:
        raise BudgetExceeded(f"ratio-dp estimates {estimate} states, budget {budget}")
    return _solve(instance, objective, "ratio-dp", budget)
