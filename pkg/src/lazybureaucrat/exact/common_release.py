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
"""Common Release Dynamic Program."""

from typing import NamedTuple

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
from lazybureaucrat.exceptions import PreconditionError

from ._checks import checked_solution, require_regime

_logger = get_logger(__name__)


class _Label(NamedTuple):
    """Partial selection reaching some time.

    Attributes
    ----------
    cost : int
        Weight of the taken jobs; zero unless minimising completed weight.
    need : int
        Earliest end at which every skipped job is no longer executable.
    chosen : tuple[int, ...]
        Indices of the taken jobs in EDD order.
    """

    cost: int
    need: int
    chosen: tuple[int, ...]


def _add(labels: list[_Label], label: _Label) -> None:
    """Insert ``label`` unless dominated, dropping what it dominates."""
    if any(o.cost <= label.cost and o.need <= label.need for o in labels):
        return
    labels[:] = [o for o in labels if o.cost < label.cost or o.need < label.need]
    labels.append(label)


def _reach(
    jobs: list[Job],
    release: int,
    objective: ObjectiveKind,
) -> dict[int, list[_Label]]:
    """Non-dominated gapless selections from ``release``, keyed by their end.

    Jobs are considered in EDD order. A taken job must start by its critical
    time; a skipped one raises the end needed to leave it inexecutable.
    """
    weighted = objective is ObjectiveKind.WEIGHTED_COMPLETED
    reach: dict[int, list[_Label]] = {release: [_Label(0, release, ())]}
    for index, job in enumerate(jobs):
        following: dict[int, list[_Label]] = {}
        for time, labels in reach.items():
            for label in labels:
                _add(
                    following.setdefault(time, []),
                    label._replace(need=max(label.need, job.critical_time + 1)),
                )
                if time <= job.critical_time:
                    _add(
                        following.setdefault(time + job.length, []),
                        _Label(
                            label.cost + (job.weight if weighted else 0),
                            label.need,
                            label.chosen + (index,),
                        ),
                    )
        reach = following
    return reach


def solve_common_release_dp(instance: Instance, objective: ObjectiveKind) -> Solution:
    """Optimal nonpreemptive schedule when every job arrives at the same time.

    The worker is busy from the release until going home, running the selected
    jobs Earliest Due Date. One pass over the jobs keeps, per reachable time,
    the selections not beaten on both cost and needed end; without weights that
    is a single selection, so the pass takes ``O(K n)`` steps. The cheapest
    selection whose end meets its need wins, earlier ends breaking ties.

    Raises
    ------
    `.PreconditionError`
        For a preemptive regime or unequal arrivals.
    """
    require_regime(instance, Regime.NONPREEMPTIVE, algo="common-release")
    release = instance.common_arrival
    if instance.n and release is None:
        raise PreconditionError("common-release needs equal arrivals")
    release = release or 0
    live = sorted(
        (job for job in instance.jobs if not job.degenerate),
        key=lambda job: (job.deadline, job.id),
    )

    _, end, chosen = min(
        (label.cost, time, label.chosen)
        for time, labels in _reach(live, release, objective).items()
        for label in labels
        if label.need <= time
    )
    segments: list[Segment] = []
    time = release
    for job in (live[i] for i in chosen):
        segments.append(Segment(job_id=job.id, start=time, end=time + job.length))
        time += job.length
    schedule = Schedule(segments=tuple(segments), leave_time=end if chosen else 0)
    _logger.debug(
        "common release selection", end=end, jobs=[live[i].id for i in chosen]
    )
    return checked_solution(instance, schedule, objective, "common-release")
