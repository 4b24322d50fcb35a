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
"""Common Deadline Makespan under Constraint II.

Every job shares the deadline ``D``. Going home at ``T`` leaves slack
``x = D - T``: a job with ``t <= x`` (short) would still be executable at ``T`` and
must be completed, a longer job may be abandoned provided strictly fewer than
``t - x`` units were done. The decision for a given ``T`` runs in four steps:

1. forced gaps are removed; the problem starts at ``tau'``;
2. a tentative schedule gives short jobs ``t`` and long jobs ``t - x`` units in
   arrival order, and its gaps say how many long jobs must be completed before
   each arrival;
3. a table ``T(m, k)`` holds the earliest time ``m`` jobs among the first ``k``
   can be completed, with back-pointers to the chosen jobs;
4. the completed sets read from the table, smallest ``m`` first, are turned into
   gapless schedules ending at ``T`` and checked by the validator.

Steps 2 and 3 are necessary conditions only: an abandoned job may keep at most
``t - x - 1`` units, one fewer than the tentative schedule grants. A table is
therefore returned only once step 4 realizes one of its entries.

`.decide_go_home_by` scans leave times from ``tau'`` upwards, since feasible leave
times are closed upwards: once nothing is executable, idling until any later
time is legal. The first-come-first-served busy schedule bounds the scan.
"""

from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from enum import StrEnum
from itertools import batched, repeat
from typing import NamedTuple

from pydantic import BaseModel, ConfigDict

from lazybureaucrat.config.models.search import SearchConfig, search_settings
from lazybureaucrat.core.logging import get_logger
from lazybureaucrat.data.types import (
    Instance,
    Job,
    ObjectiveKind,
    Regime,
    Schedule,
    Segment,
)
from lazybureaucrat.exceptions import InternalValidationError, PreconditionError
from lazybureaucrat.feasibility import forced_gaps, validate
from lazybureaucrat.oracle import decide_preemptive

from ._checks import checked_solution, require_regime
from .greedy import simulate

_logger = get_logger(__name__)


class JobClasses(NamedTuple):
    """Short and long jobs relative to the slack ``x = D - T``."""

    short: frozenset[int]
    long: frozenset[int]
    x: int


class Tentative(NamedTuple):
    """Arrival-order allocation used to derive gap constraints.

    Attributes
    ----------
    schedule : `.Schedule`
        Short jobs get ``t``, long jobs ``t - x`` units; leave time is its end.
    gaps : tuple[tuple[int, int], ...]
        Idle intervals between allocations.
    """

    schedule: Schedule
    gaps: tuple[tuple[int, int], ...]

    @property
    def end(self) -> int:
        """End of the last allocation."""
        return self.schedule.leave_time


class GapConstraints(NamedTuple):
    """Long completions required among the jobs preceding each position.

    Attributes
    ----------
    order : tuple[int, ...]
        Job ids in arrival order.
    required : tuple[int, ...]
        ``required[k]`` counts the long jobs among ``order[:k]`` that must be
        completed; the final entry covers all jobs up to the leave time.
    """

    order: tuple[int, ...]
    required: tuple[int, ...]


class Choice(StrEnum):
    """Back-pointer of a table entry."""

    SKIP = "skip"
    TAKE = "take"


class DPTable(BaseModel):
    """The ``T(m, k)`` table for one target leave time.

    Attributes
    ----------
    target : int
        Leave time under test.
    x : int
        Slack ``D - target``.
    origin : int
        End of the last forced gap; the table starts there.
    order : tuple[int, ...]
        Job ids in arrival order; column ``k`` covers ``order[:k]``.
    short, long : frozenset[int]
        Classification of the jobs in ``order``.
    required : tuple[int, ...]
        Gap constraints folded into the boundary condition.
    values : dict[tuple[int, int], int]
        Finite entries ``T(m, k)``. Missing entries are infeasible or, in the
        last column, below the first count that realizes.
    choices : dict[tuple[int, int], `.Choice`]
        Whether the k-th job is completed in the entry's optimum.
    """

    model_config = ConfigDict(frozen=True)

    target: int
    x: int
    origin: int
    order: tuple[int, ...]
    short: frozenset[int]
    long: frozenset[int]
    required: tuple[int, ...]
    values: dict[tuple[int, int], int]
    choices: dict[tuple[int, int], Choice]

    def value(self, m: int, k: int) -> int | None:
        """Return ``T(m, k)``, or None when infeasible."""
        return self.values.get((m, k))

    @property
    def feasible_counts(self) -> list[int]:
        """Completion counts ``m`` with ``T(m, n)`` finite, ascending."""
        n = len(self.order)
        return [m for m in range(n + 1) if (m, n) in self.values]

    def completed(self, m: int) -> frozenset[int]:
        """Jobs completed in the entry ``T(m, n)``, read from the back-pointers."""
        k = len(self.order)
        chosen: set[int] = set()
        while k > 0:
            if self.choices[(m, k)] is Choice.TAKE:
                chosen.add(self.order[k - 1])
                m -= 1
            k -= 1
        return frozenset(chosen)


def _common_deadline(instance: Instance) -> int:
    deadline = instance.common_deadline
    if deadline is None:
        raise PreconditionError("all jobs must share one deadline")
    return deadline


def _arrival_order(jobs: Iterable[Job]) -> list[Job]:
    return sorted(jobs, key=lambda job: (job.arrival, job.id))


def classify_jobs(instance: Instance, T: int) -> JobClasses:
    """Split jobs into short (``t <= D - T``) and long ones.

    Raises
    ------
    `.PreconditionError`
        If deadlines differ or ``T`` is outside ``[0, D]``.
    """
    deadline = _common_deadline(instance)
    if not 0 <= T <= deadline:
        raise PreconditionError(f"T={T} outside [0, {deadline}]")
    x = deadline - T
    short = frozenset(job.id for job in instance.jobs if job.length <= x)
    return JobClasses(short, frozenset(range(instance.n)) - short, x)


def _tentative(jobs: list[Job], T: int, x: int, origin: int) -> Tentative | None:
    """Allocate ``jobs`` from ``origin``; None if shorts cannot finish."""
    shorts = [job for job in jobs if job.length <= x]
    finish = origin
    for job in shorts:
        if job.arrival >= T:
            return None
        finish = max(finish, job.arrival) + job.length
    if finish > T:
        return None

    segments: list[Segment] = []
    gaps: list[tuple[int, int]] = []
    cursor = origin
    for job in jobs:
        if job.length > x and job.arrival >= T:
            continue
        start = max(cursor, job.arrival)
        if segments and start > cursor:
            gaps.append((cursor, start))
        allocation = job.length if job.length <= x else job.length - x
        segments.append(Segment(job_id=job.id, start=start, end=start + allocation))
        cursor = start + allocation
    return Tentative(Schedule(segments=tuple(segments), leave_time=cursor), tuple(gaps))


def build_tentative_schedule(instance: Instance, T: int) -> Tentative | None:
    """Arrival-order allocation from time zero.

    Returns
    -------
    `.Tentative` or None
        None signals that short jobs cannot all be completed by ``T``, so the
        answer for ``T`` is NO.
    """
    x = classify_jobs(instance, T).x
    live = _arrival_order(job for job in instance.jobs if not job.degenerate)
    return _tentative(live, T, x, 0)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def gap_constraints(S: Schedule, instance: Instance, x: int) -> GapConstraints | None:
    """Derive how many long jobs must be completed to close the gaps of ``S``.

    Returns
    -------
    `.GapConstraints` or None
        None when ``x`` is zero but there is idle time to fill, which no long
        job can supply.
    """
    target = _common_deadline(instance) - x
    before: list[int] = []
    mass = 0
    previous_end: int | None = None
    for segment in S.segments:
        if previous_end is not None and segment.start > previous_end:
            mass += segment.start - previous_end
        before.append(mass)
        previous_end = segment.end
    terminal = mass + max(0, target - S.leave_time)
    if x == 0:
        if terminal:
            return None
        return GapConstraints(tuple(S.job_order()), (0,) * (len(before) + 1))
    required = [_ceil_div(g, x) for g in before] + [_ceil_div(terminal, x)]
    return GapConstraints(tuple(S.job_order()), tuple(required))


class _Problem(NamedTuple):
    deadline: int
    origin: int
    x: int
    prefix: list[Job]
    main: list[Job]


def _problem(instance: Instance, T: int) -> _Problem:
    deadline = _common_deadline(instance)
    origin = forced_gaps(instance).tau_prime
    live = _arrival_order(job for job in instance.jobs if not job.degenerate)
    return _Problem(
        deadline,
        origin,
        deadline - T,
        [job for job in live if job.arrival < origin],
        [job for job in live if job.arrival >= origin],
    )


def schedule_by_T(instance: Instance, T: int) -> DPTable | None:
    """Fill the ``T(m, k)`` table for leave time ``T``.

    ``T(m, k)`` is the earliest time by which ``m`` of the first ``k`` jobs (in
    arrival order, after the forced gaps) can all be completed, short jobs being
    mandatory. An entry is infeasible when it completes fewer long jobs than
    the gap constraints demand.

    Final entries ``T(m, n)`` are then realized in increasing ``m``. Those below
    the first realizable count are dropped, so ``feasible_counts[0]`` always
    yields a validated schedule. Larger counts are kept as computed.

    Returns
    -------
    `.DPTable` or None
        None when no schedule leaving at ``T`` is found: short jobs cannot
        finish, gaps cannot be closed, or no completed set realizes.
    """
    classes = classify_jobs(instance, T)
    problem = _problem(instance, T)
    if T < problem.origin:
        raise PreconditionError(
            f"T={T} precedes the last forced gap end {problem.origin}"
        )
    x = classes.x
    main = [job for job in problem.main if job.length <= x or job.arrival < T]
    tentative = _tentative(main, T, x, problem.origin)
    if tentative is None:
        return None
    constraints = gap_constraints(tentative.schedule, instance, x)
    if constraints is None:
        return None

    values: dict[tuple[int, int], int] = {(0, 0): problem.origin}
    choices: dict[tuple[int, int], Choice] = {}
    shorts_so_far = 0
    for k, job in enumerate(main, start=1):
        is_long = job.id in classes.long
        shorts_so_far += not is_long
        for m in range(k + 1):
            alpha = values.get((m, k - 1)) if is_long else None
            beta = None
            if m and (m - 1, k - 1) in values:
                finish = max(job.arrival, values[(m - 1, k - 1)]) + job.length
                beta = finish if finish <= T else None
            if alpha is None and beta is None:
                continue
            if m - shorts_so_far < constraints.required[k]:
                continue
            if beta is None or (alpha is not None and alpha <= beta):
                values[(m, k)], choices[(m, k)] = alpha, Choice.SKIP
            else:
                values[(m, k)], choices[(m, k)] = beta, Choice.TAKE
    table = DPTable(
        target=T,
        x=x,
        origin=problem.origin,
        order=tuple(job.id for job in main),
        short=frozenset(job.id for job in main) & classes.short,
        long=frozenset(job.id for job in main) & classes.long,
        required=constraints.required,
        values=values,
        choices=choices,
    )
    realized = next(_realizations(instance, T, table), None)
    if realized is None:
        _logger.debug("no completed set realizes", T=T)
        return None
    n = len(table.order)
    kept = {
        key: value
        for key, value in values.items()
        if key[1] < n or key[0] >= realized[0]
    }
    return table.model_copy(update={"values": kept})


def _prefix_slots(prefix: list[Job]) -> list[tuple[int, int]]:
    slots: list[tuple[int, int]] = []
    cursor = 0
    for job in prefix:
        cursor = max(cursor, job.arrival)
        slots.extend((cursor + u, job.id) for u in range(job.length))
        cursor += job.length
    return slots


def _fill(
    problem: _Problem,
    jobs: list[Job],
    completed: frozenset[int],
    T: int,
    earliest_deadline: bool,
) -> list[tuple[int, int]] | None:
    """Fill ``[origin, T)`` gaplessly: completed jobs in full, others partially.

    An abandoned job may receive fewer than ``t - x`` units and its k-th unit
    must run by ``D - t + k - 1`` so that it stays executable. Abandoned units are
    preferred while the quota lasts; completed jobs fill the remaining slots.
    """
    deadline, origin, x = problem.deadline, problem.origin, problem.x
    mandatory = [job for job in jobs if job.id in completed]
    optional = [job for job in jobs if job.id not in completed]
    if any(job.length <= x for job in optional):
        return None
    quota = (T - origin) - sum(job.length for job in mandatory)
    caps = {job.id: job.length - x - 1 for job in optional}
    if quota < 0 or sum(caps.values()) < quota:
        return None

    done = {job.id: 0 for job in jobs}
    if earliest_deadline:
        optional.sort(key=lambda job: (deadline - job.length, job.arrival, job.id))
    used = 0
    slots: list[tuple[int, int]] = []
    for time in range(origin, T):
        pick: Job | None = None
        if used < quota:
            ready = (
                job
                for job in optional
                if job.arrival <= time
                and done[job.id] < caps[job.id]
                and time <= deadline - job.length + done[job.id]
            )
            if earliest_deadline:
                pick = min(
                    ready,
                    key=lambda job: (deadline - job.length + done[job.id], job.arrival),
                    default=None,
                )
            else:
                pick = next(ready, None)
            used += pick is not None
        if pick is None:
            pick = next(
                (
                    job
                    for job in mandatory
                    if job.arrival <= time and done[job.id] < job.length
                ),
                None,
            )
        if pick is None:
            return None
        done[pick.id] += 1
        slots.append((time, pick.id))
    return slots


def _realizations(
    instance: Instance, T: int, table: DPTable
) -> Iterator[tuple[int, Schedule]]:
    """Validated schedules for the final entries, in increasing ``m``."""
    problem = _problem(instance, T)
    jobs = [instance.jobs[i] for i in table.order]
    prefix = _prefix_slots(problem.prefix)
    for m in table.feasible_counts:
        completed = table.completed(m)
        for earliest_deadline in (False, True):
            slots = _fill(problem, jobs, completed, T, earliest_deadline)
            if slots is None:
                continue
            schedule = Schedule.from_slots(prefix + slots, T)
            if not validate(instance, schedule):
                yield m, schedule
                break
            _logger.debug("candidate rejected", T=T, completed=sorted(completed))


def realize_schedule(instance: Instance, T: int, table: DPTable) -> Schedule | None:
    """Turn the table into a validated schedule that goes home exactly at ``T``.

    The completed set is read from the back-pointers at the smallest feasible
    ``m`` and escalates to larger ``m`` while realization fails. Forced-gap jobs
    run first-come-first-served. From ``tau'`` the slots up to ``T`` are filled
    without idling: completed jobs in full, abandoned jobs with at most
    ``t - x - 1`` units, each run before its adjusted critical time. The fill is
    tried first-come-first-served, then by earliest adjusted critical time, and
    the validator decides.

    Returns
    -------
    `.Schedule` or None
        None when every completed set fails. Tables from `.schedule_by_T` always
        realize.
    """
    realized = next(_realizations(instance, T, table), None)
    return None if realized is None else realized[1]


def _attempt(instance: Instance, T: int) -> Schedule | None:
    table = schedule_by_T(instance, T)
    if table is None:
        return None
    return realize_schedule(instance, T, table)


def _busy_schedule(instance: Instance) -> Schedule:
    """First-come-first-served schedule obeying the busy requirement."""
    jobs = instance.jobs
    schedule = simulate(
        instance,
        lambda ready, done, _: min(ready, key=lambda i: (jobs[i].arrival, i)),
    )
    violations = validate(instance, schedule)
    if violations:
        raise InternalValidationError("busy schedule rejected", violations)
    return schedule


def _earliest_leave(
    instance: Instance,
    upto: int,
    settings: SearchConfig,
) -> tuple[int, Schedule] | None:
    """Smallest feasible leave time not after ``upto``, with its schedule."""
    fallback = _busy_schedule(instance)
    origin = forced_gaps(instance).tau_prime
    leave_times = range(origin, min(upto, fallback.leave_time - 1) + 1)
    if settings.workers == 1:
        for T in leave_times:
            if (schedule := _attempt(instance, T)) is not None:
                return T, schedule
    else:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            for chunk in batched(leave_times, settings.workers * 4):
                results = pool.map(_attempt, repeat(instance), chunk)
                for T, schedule in zip(chunk, results):
                    if schedule is not None:
                        return T, schedule
    if fallback.leave_time <= upto:
        return fallback.leave_time, fallback
    return None


def decide_go_home_by(
    instance: Instance,
    T: int,
    *,
    allow_search: bool = False,
    settings: SearchConfig | None = None,
) -> Schedule | None:
    """Decide whether the worker can go home exactly at ``T``.

    Leave times from ``tau'`` up to ``T`` are tried in turn through `.schedule_by_T`
    and `.realize_schedule`; the busy schedule answers when it ends first.

    Parameters
    ----------
    instance : `.Instance`
        ``PREEMPT_II`` jobs sharing one deadline.
    T : int
        Leave time, on the instance grid.
    allow_search : bool, default=False
        Answer instances with differing deadlines by exhaustive search instead
        of rejecting them.
    settings : `.SearchConfig`, optional
        Worker count and search budgets; the active configuration by default.

    Returns
    -------
    `.Schedule` or None
        A validated schedule leaving at ``T``, or None for NO.

    Raises
    ------
    `.PreconditionError`
        For another regime, differing deadlines, or ``T`` outside ``[tau', D]``.
    """
    require_regime(instance, Regime.PREEMPT_II, algo="common-deadline")
    settings = settings or search_settings()
    if instance.n == 0:
        return Schedule(leave_time=T)
    if instance.common_deadline is None:
        if not allow_search:
            raise PreconditionError("common-deadline needs all deadlines equal")
        return decide_preemptive(instance, T, settings=settings)

    deadline = instance.common_deadline
    origin = forced_gaps(instance).tau_prime
    if T < origin:
        raise PreconditionError(f"T={T} precedes the last forced gap end {origin}")
    if T > deadline:
        raise PreconditionError(f"T={T} is after the common deadline {deadline}")
    found = _earliest_leave(instance, T, settings)
    if found is None:
        _logger.info("go home decision", T=T, answer="NO")
        return None
    earliest, schedule = found
    schedule = schedule.model_copy(update={"leave_time": T})
    _logger.info("go home decision", T=T, answer="YES", earliest=earliest)
    solution = checked_solution(instance, schedule, ObjectiveKind.MAKESPAN, "decide")
    return solution.schedule


class MakespanResult(NamedTuple):
    """Earliest leave time on the grid.

    Attributes
    ----------
    makespan : int
        Smallest feasible leave time, grid units.
    schedule : `.Schedule`
        A schedule attaining it.
    attained : bool
        False when a finer grid does strictly better, so the true optimum is
        only approached in the limit.
    """

    makespan: int
    schedule: Schedule
    attained: bool


def minimize_makespan_common_deadline(
    instance: Instance,
    *,
    refine: bool = True,
    settings: SearchConfig | None = None,
) -> MakespanResult:
    """Find the earliest leave time and whether finer grids improve on it.

    Grids refined by factors ``2, 4, ...`` up to ``refine_scale_cap`` (``3n`` when
    unset) are tried just below the current optimum.

    Raises
    ------
    `.PreconditionError`
        For another regime or differing deadlines.
    `.InternalValidationError`
        If no leave time up to ``D`` validates.
    """
    require_regime(instance, Regime.PREEMPT_II, algo="common-deadline")
    settings = settings or search_settings()
    if instance.n == 0:
        return MakespanResult(0, Schedule(), True)
    deadline = _common_deadline(instance)
    found = _earliest_leave(instance, deadline, settings)
    if found is None:
        raise InternalValidationError(f"no leave time up to {deadline} validated")
    makespan, schedule = found
    checked_solution(instance, schedule, ObjectiveKind.MAKESPAN, "common-deadline")

    attained = True
    if refine:
        cap = settings.refine_scale_cap or 3 * instance.n
        factor = 2
        while factor <= cap:
            finer = instance.rescaled(factor)
            if _earliest_leave(finer, factor * makespan - 1, settings) is not None:
                _logger.info("limiting optimum", makespan=makespan, factor=factor)
                attained = False
                break
            factor *= 2
    return MakespanResult(makespan, schedule, attained)
