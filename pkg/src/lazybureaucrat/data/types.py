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
"""Domain Types.

All times and durations are integers on the instance grid: one grid unit is
``1 / scale`` of an original time unit, and one unit of work occupies the
half-open slot ``[t, t + 1)``.
"""

from collections.abc import Iterable, Sequence
from enum import StrEnum
from typing import Annotated, Any, NamedTuple, Self

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from lazybureaucrat.exceptions import PreconditionError

GridTime = Annotated[int, Field(ge=0)]


class Regime(StrEnum):
    """Execution regime.

    ``PREEMPT_I`` keeps a job executable while inside its window,
    ``PREEMPT_II`` additionally requires it can still be completed and
    ``PREEMPT_III`` adds the obligation that started jobs are completed.
    """

    NONPREEMPTIVE = "nonpreemptive"
    PREEMPT_I = "preempt1"
    PREEMPT_II = "preempt2"
    PREEMPT_III = "preempt3"

    @property
    def preemptive(self) -> bool:
        """Whether a job may be interrupted."""
        return self is not Regime.NONPREEMPTIVE


class ObjectiveKind(StrEnum):
    """Quantity minimised by a solver."""

    TOTAL_WORK = "total_work"
    WEIGHTED_COMPLETED = "weighted_completed"
    MAKESPAN = "makespan"


class Job(BaseModel):
    """One task on the grid.

    Attributes
    ----------
    id : int
        Position of the job in its instance.
    arrival, deadline : int
        The window ``[arrival, deadline]``.
    length : int
        Processing time, at least one grid unit.
    weight : int
        Objective weight; defaults to ``length``.
    """

    model_config = ConfigDict(frozen=True)

    id: Annotated[int, Field(ge=0)]
    arrival: GridTime
    deadline: GridTime
    length: Annotated[int, Field(ge=1)]
    weight: Annotated[int, Field(ge=0)]

    @model_validator(mode="before")
    @classmethod
    def _default_weight(cls, data: Any) -> Any:
        if isinstance(data, dict) and data.get("weight") is None:
            data = dict(data)
            data["weight"] = data.get("length")
        return data

    @property
    def critical_time(self) -> int:
        """Latest start from which the job still completes by its deadline."""
        return self.deadline - self.length

    @property
    def window(self) -> int:
        """Width ``deadline - arrival`` of the job's window."""
        return self.deadline - self.arrival

    @property
    def degenerate(self) -> bool:
        """Whether the window is too narrow to hold the job at all."""
        return self.deadline < self.arrival + self.length


def critical_time(job: Job) -> int:
    """Return ``d - t``, the latest start that still completes the job."""
    return job.critical_time


def adjusted_critical_time(job: Job, done: int) -> int:
    """Return the latest resume time after ``done`` units were executed.

    Parameters
    ----------
    job : `.Job`
        The job.
    done : int
        Units already executed, ``0 <= done <= length``.

    Returns
    -------
    int
        ``deadline - length + done``.

    Raises
    ------
    `.PreconditionError`
        If ``done`` is out of range.
    """
    if not 0 <= done <= job.length:
        raise PreconditionError(
            f"job {job.id}: executed amount {done} outside [0, {job.length}]"
        )
    return job.deadline - job.length + done


class Instance(BaseModel):
    """A job set with its execution regime and grid scale.

    Attributes
    ----------
    jobs : tuple[`.Job`, ...]
        Jobs with ids ``0..n-1`` in order.
    regime : `.Regime`
        Execution regime.
    scale : int
        Grid units per original time unit.
    """

    model_config = ConfigDict(frozen=True)

    jobs: tuple[Job, ...] = ()
    regime: Regime = Regime.NONPREEMPTIVE
    scale: Annotated[int, Field(ge=1)] = 1

    @field_validator("jobs")
    @classmethod
    def _ids_in_order(cls, jobs: tuple[Job, ...]) -> tuple[Job, ...]:
        for position, job in enumerate(jobs):
            if job.id != position:
                raise ValueError(f"job id {job.id} at position {position}")
        return jobs

    @classmethod
    def build(
        cls,
        windows: Iterable[tuple[int, int, int]],
        regime: Regime = Regime.NONPREEMPTIVE,
        scale: int = 1,
        weights: Sequence[int | None] | None = None,
    ) -> Self:
        """Create an instance from ``(arrival, deadline, length)`` triples."""
        triples = list(windows)
        weights = list(weights) if weights is not None else [None] * len(triples)
        return cls(
            jobs=tuple(
                Job(id=i, arrival=a, deadline=d, length=t, weight=w)
                for i, ((a, d, t), w) in enumerate(zip(triples, weights, strict=True))
            ),
            regime=regime,
            scale=scale,
        )

    @property
    def n(self) -> int:
        """Number of jobs."""
        return len(self.jobs)

    @property
    def horizon(self) -> int:
        """Largest deadline K, zero for an empty instance."""
        return max((job.deadline for job in self.jobs), default=0)

    @property
    def degenerate(self) -> bool:
        """Whether any job can never be executed."""
        return any(job.degenerate for job in self.jobs)

    @property
    def common_deadline(self) -> int | None:
        """The shared deadline, if every job has the same one."""
        deadlines = {job.deadline for job in self.jobs}
        return deadlines.pop() if len(deadlines) == 1 else None

    @property
    def common_arrival(self) -> int | None:
        """The shared arrival, if every job has the same one."""
        arrivals = {job.arrival for job in self.jobs}
        return arrivals.pop() if len(arrivals) == 1 else None

    @property
    def unit_lengths(self) -> bool:
        """Whether every job has length one."""
        return all(job.length == 1 for job in self.jobs)

    def rescaled(self, factor: int) -> Self:
        """Refine the grid by ``factor``; weights are kept."""
        if factor < 1:
            raise PreconditionError(f"scale factor must be positive, got {factor}")
        return self.model_copy(
            update={
                "jobs": tuple(
                    job.model_copy(
                        update={
                            "arrival": job.arrival * factor,
                            "deadline": job.deadline * factor,
                            "length": job.length * factor,
                        }
                    )
                    for job in self.jobs
                ),
                "scale": self.scale * factor,
            }
        )

    def with_regime(self, regime: Regime) -> Self:
        """Return the same jobs under another regime."""
        return self.model_copy(update={"regime": regime})


class Segment(BaseModel):
    """Work on one job over the half-open interval ``[start, end)``."""

    model_config = ConfigDict(frozen=True)

    job_id: Annotated[int, Field(ge=0)]
    start: GridTime
    end: GridTime

    @model_validator(mode="after")
    def _nonempty(self) -> Self:
        if self.start >= self.end:
            raise ValueError(f"segment [{self.start}, {self.end}) is empty")
        return self

    @property
    def length(self) -> int:
        """Duration of the segment."""
        return self.end - self.start


class Schedule(BaseModel):
    """Time-sorted work segments plus the time the worker goes home.

    Overlapping segments are representable so that validation can report them.
    """

    model_config = ConfigDict(frozen=True)

    segments: tuple[Segment, ...] = ()
    leave_time: GridTime = 0

    @field_validator("segments")
    @classmethod
    def _sorted(cls, segments: tuple[Segment, ...]) -> tuple[Segment, ...]:
        return tuple(sorted(segments, key=lambda s: (s.start, s.end, s.job_id)))

    @model_validator(mode="after")
    def _leave_after_work(self) -> Self:
        if self.leave_time < self.end:
            raise ValueError(
                f"leave time {self.leave_time} before last work ends at {self.end}"
            )
        return self

    @classmethod
    def from_slots(cls, slots: Sequence[tuple[int, int]], leave_time: int) -> Self:
        """Build a schedule from ``(time, job_id)`` unit slots, merging runs."""
        runs: list[list[int]] = []
        for time, job_id in sorted(slots):
            if runs and runs[-1][0] == job_id and runs[-1][2] == time:
                runs[-1][2] = time + 1
            else:
                runs.append([job_id, time, time + 1])
        segments = [Segment(job_id=j, start=s, end=e) for j, s, e in runs]
        return cls(segments=tuple(segments), leave_time=leave_time)

    @property
    def end(self) -> int:
        """End of the last segment, zero when nothing is executed."""
        return max((segment.end for segment in self.segments), default=0)

    def job_order(self) -> list[int]:
        """Job ids in order of first execution."""
        seen: dict[int, None] = {}
        for segment in self.segments:
            seen.setdefault(segment.job_id, None)
        return list(seen)


class Solution(NamedTuple):
    """A feasible schedule and its objective value."""

    schedule: Schedule
    value: int
