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
"""Executability per Regime."""

from collections.abc import Sequence
from typing import Annotated, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from lazybureaucrat.data.types import Instance, Job, Regime
from lazybureaucrat.exceptions import PreconditionError


class ExecState(BaseModel):
    """Progress of a schedule at time ``now``.

    Attributes
    ----------
    now : int
        Current grid time.
    done : tuple[int, ...]
        Executed amount per job id.
    active_job : int, optional
        Nonpreemptive job that is mid-run.
    """

    model_config = ConfigDict(frozen=True)

    now: Annotated[int, Field(ge=0)] = 0
    done: tuple[int, ...] = ()
    active_job: int | None = None

    @model_validator(mode="after")
    def _active_started(self) -> Self:
        if self.active_job is not None and (
            self.active_job >= len(self.done) or self.done[self.active_job] == 0
        ):
            raise ValueError(f"active job {self.active_job} has not started")
        return self

    @classmethod
    def initial(cls, instance: Instance, now: int = 0) -> Self:
        """State with nothing executed."""
        return cls(now=now, done=(0,) * instance.n)

    @property
    def started(self) -> frozenset[int]:
        """Jobs with some work executed."""
        return frozenset(i for i, amount in enumerate(self.done) if amount > 0)

    def check(self, instance: Instance) -> Self:
        """Verify the state against ``instance``.

        Raises
        ------
        `.PreconditionError`
            If amounts are out of range or the active job is inconsistent.
        """
        if len(self.done) != instance.n:
            raise PreconditionError(
                f"state tracks {len(self.done)} jobs, instance has {instance.n}"
            )
        for job, amount in zip(instance.jobs, self.done):
            if not 0 <= amount <= job.length:
                raise PreconditionError(f"job {job.id}: executed amount {amount}")
        if self.active_job is not None:
            if instance.regime.preemptive:
                raise PreconditionError("active job outside the nonpreemptive regime")
            job = instance.jobs[self.active_job]
            if self.done[job.id] >= job.length:
                raise PreconditionError(f"active job {job.id} is already complete")
        return self


def job_executable(regime: Regime, job: Job, done: int, now: int) -> bool:
    """Membership test for one job that is not mid-run.

    Nonpreemptive jobs must be untouched and start within ``[a, c]``. Under
    ``PREEMPT_I`` the next unit must fit in the window; under ``PREEMPT_II`` and
    ``PREEMPT_III`` all remaining work must still fit.
    """
    if job.degenerate or done >= job.length or now < job.arrival:
        return False
    match regime:
        case Regime.NONPREEMPTIVE:
            return done == 0 and now <= job.critical_time
        case Regime.PREEMPT_I:
            return now + 1 <= job.deadline
        case _:
            return now + job.length - done <= job.deadline


def executable_ids(
    instance: Instance,
    now: int,
    done: Sequence[int],
    active_job: int | None = None,
) -> frozenset[int]:
    """Tuple-level `.executable_set` used by the replays and searches."""
    if active_job is not None:
        return frozenset((active_job,))
    regime = instance.regime
    return frozenset(
        job.id
        for job in instance.jobs
        if job_executable(regime, job, done[job.id], now)
    )


def executable_set(instance: Instance, state: ExecState) -> frozenset[int]:
    """Return the jobs the busy requirement allows to run at ``state.now``.

    Parameters
    ----------
    instance : `.Instance`
        The jobs and the regime.
    state : `.ExecState`
        Progress so far.

    Returns
    -------
    frozenset[int]
        Executable job ids. A nonpreemptive job that is mid-run is the only
        executable job.
    """
    state.check(instance)
    return executable_ids(instance, state.now, state.done, state.active_job)


def ever_executable(regime: Regime, job: Job, done: int, since: int) -> bool:
    """Whether an idle worker would face ``job`` as executable at some time >= since."""
    return job_executable(regime, job, done, max(job.arrival, since))


def next_executable_time(
    instance: Instance,
    done: Sequence[int],
    after: int,
) -> int | None:
    """Earliest time > ``after`` at which some job becomes executable, if any.

    Only arrivals can make a job executable while nothing runs, so the answer is
    the first such arrival.
    """
    regime = instance.regime
    candidates = [
        job.arrival
        for job in instance.jobs
        if job.arrival > after
        and job_executable(regime, job, done[job.id], job.arrival)
    ]
    return min(candidates, default=None)
