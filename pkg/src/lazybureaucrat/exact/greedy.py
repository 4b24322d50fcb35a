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
"""Slot-by-slot Greedy Rules."""

from collections.abc import Callable, Sequence

from lazybureaucrat.data.types import (
    Instance,
    ObjectiveKind,
    Regime,
    Schedule,
    Solution,
)
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.feasibility import executable_ids, next_executable_time

from ._checks import checked_solution, require_regime

Chooser = Callable[[frozenset[int], Sequence[int], int], int]
"""Pick one job from the executable set, given executed amounts and the time."""


def simulate(instance: Instance, choose: Chooser) -> Schedule:
    """Run the busy requirement forward with ``choose`` deciding every slot.

    The worker goes home at the first moment nothing is executable and nothing
    will become executable.
    """
    done = [0] * instance.n
    active: int | None = None
    slots: list[tuple[int, int]] = []
    now = 0
    while True:
        ready = executable_ids(instance, now, done, active)
        if ready:
            pick = choose(ready, done, now)
            slots.append((now, pick))
            done[pick] += 1
            if instance.regime is Regime.NONPREEMPTIVE:
                active = pick if done[pick] < instance.jobs[pick].length else None
            now += 1
            continue
        arrival = next_executable_time(instance, done, now)
        if arrival is None:
            break
        now = arrival
    return Schedule.from_slots(slots, now)


def latest_deadline_first(instance: Instance) -> Chooser:
    """LDD; equal deadlines go to less remaining work, then the lower id."""
    jobs = instance.jobs

    def choose(ready: frozenset[int], done: Sequence[int], _: int) -> int:
        return min(
            ready,
            key=lambda i: (-jobs[i].deadline, jobs[i].length - done[i], i),
        )

    return choose


def solve_unit_ldd(instance: Instance) -> Solution:
    """Minimise total work for unit jobs by Latest Due Date.

    Raises
    ------
    `.PreconditionError`
        If the regime is preemptive or a job is longer than one unit.
    """
    require_regime(instance, Regime.NONPREEMPTIVE, algo="unit-ldd")
    if not instance.unit_lengths:
        raise PreconditionError("unit-ldd needs every job to have length 1")
    schedule = simulate(instance, latest_deadline_first(instance))
    return checked_solution(instance, schedule, ObjectiveKind.TOTAL_WORK, "unit-ldd")
