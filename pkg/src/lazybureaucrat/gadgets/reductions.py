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
"""Hardness reductions as instance generators.

Each generator returns the instance together with the data needed to check a
solver's answer against the source combinatorial problem.
"""

from collections.abc import Iterable, Sequence
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from lazybureaucrat.data.types import Instance, Regime, Schedule, Segment
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.oracle import subset_sum_reachable

PositiveInts = tuple[Annotated[int, Field(ge=1)], ...]


def _build(
    windows: Iterable[tuple[int, int, int]],
    regime: Regime = Regime.NONPREEMPTIVE,
    scale: int = 1,
) -> Instance:
    try:
        return Instance.build(windows, regime=regime, scale=scale)
    except ValidationError as e:
        message = f"gadget parameters give an invalid instance: {e}"
        raise PreconditionError(message) from e


def _require_positive(values: Sequence[int]) -> None:
    if not values or any(value < 1 for value in values):
        raise PreconditionError("values must be a non-empty list of positive integers")


class SubsetSumGadget(BaseModel):
    """Nonpreemptive subset-sum reduction.

    The long job is avoidable exactly when some subset of ``values`` sums to
    ``target``, in which case the optimal total work is ``target``.
    """

    model_config = ConfigDict(frozen=True)

    instance: Instance
    values: PositiveInts
    target: int
    reachable: bool

    @property
    def long_job(self) -> int:
        """Id of the long job."""
        return len(self.values)


def gen_subset_sum_nonpreemptive(values: Sequence[int], target: int) -> SubsetSumGadget:
    """Value jobs ``(0, target, x)`` plus a long job of length ``1 + sum``.

    The long job's deadline ``target + t - 1`` puts its critical time just before
    ``target``.

    Raises
    ------
    `.PreconditionError`
        For non-positive values or a target outside ``[0, sum(values)]``.
    """
    _require_positive(values)
    if not 0 <= target <= sum(values):
        raise PreconditionError(f"target {target} outside [0, {sum(values)}]")
    long_length = 1 + sum(values)
    windows = [(0, target, x) for x in values]
    windows.append((0, target + long_length - 1, long_length))
    return SubsetSumGadget(
        instance=_build(windows),
        values=tuple(values),
        target=target,
        reachable=subset_sum_reachable(values, target),
    )


def _check_three_partition(values: Sequence[int], bound: int) -> int:
    _require_positive(values)
    if len(values) % 3:
        raise PreconditionError(f"need 3m values, got {len(values)}")
    m = len(values) // 3
    if sum(values) != m * bound:
        raise PreconditionError(f"values sum to {sum(values)}, expected {m * bound}")
    for x in values:
        if not (4 * x > bound and 2 * x < bound):
            raise PreconditionError(f"value {x} outside ({bound}/4, {bound}/2)")
    return m


class ThreePartitionGadget(BaseModel):
    """Nonpreemptive 3-Partition reduction.

    Element jobs ``0..3m-1`` share the deadline ``(m-1) + mB``, unit jobs follow
    and must run at arrival, splitting time into blocks of length ``B``. The
    last job is the large one.
    """

    model_config = ConfigDict(frozen=True)

    instance: Instance
    values: PositiveInts
    bound: int
    m: int

    @property
    def large_job(self) -> int:
        """Id of the large job."""
        return self.instance.n - 1

    @property
    def leave_time(self) -> int:
        """End of the last block, ``(m-1) + mB``."""
        return (self.m - 1) + self.m * self.bound

    def canonical_schedule(self, partition: Sequence[Sequence[int]]) -> Schedule:
        """Lay out a witness partition block by block.

        Parameters
        ----------
        partition : sequence of sequence of int
            ``m`` triples of element job ids, each summing to ``B``.

        Raises
        ------
        `.PreconditionError`
            If ``partition`` is not a valid 3-partition of the elements.
        """
        ids = sorted(i for triple in partition for i in triple)
        if len(partition) != self.m or ids != list(range(3 * self.m)):
            raise PreconditionError("partition must split every element into m triples")
        segments: list[Segment] = []
        for block, triple in enumerate(partition):
            if len(triple) != 3 or sum(self.values[i] for i in triple) != self.bound:
                raise PreconditionError(f"block {block} does not sum to {self.bound}")
            cursor = block * (self.bound + 1)
            for i in triple:
                end = cursor + self.values[i]
                segments.append(Segment(job_id=i, start=cursor, end=end))
                cursor = end
            if block < self.m - 1:
                unit = 3 * self.m + block
                segments.append(Segment(job_id=unit, start=cursor, end=cursor + 1))
        return Schedule(segments=tuple(segments), leave_time=self.leave_time)


def gen_3partition(values: Sequence[int], bound: int) -> ThreePartitionGadget:
    """Build the 3-Partition gadget with large job length ``L = mB + m``.

    Raises
    ------
    `.PreconditionError`
        Unless there are ``3m`` values strictly between ``B/4`` and ``B/2`` summing
        to ``mB``.
    """
    m = _check_three_partition(values, bound)
    deadline = (m - 1) + m * bound
    windows = [(0, deadline, x) for x in values]
    windows += [(i * (bound + 1) - 1, i * (bound + 1), 1) for i in range(1, m)]
    large = m * bound + m
    windows.append((0, large + (m - 2) + m * bound, large))
    return ThreePartitionGadget(
        instance=_build(windows), values=tuple(values), bound=bound, m=m
    )


class BoundedDeltaGadget(BaseModel):
    """3-Partition reduction with job lengths within a factor ``delta``.

    Attributes
    ----------
    long_jobs : tuple[int, ...]
        Ids of the chained jobs ``l_1..l_m`` of length ``delta * B / 4``.
    short_jobs : tuple[int, ...]
        Ids of ``s_1..s_m`` of length ``B / 4``; running them avoids the chain.
    """

    model_config = ConfigDict(frozen=True)

    instance: Instance
    values: PositiveInts
    bound: int
    delta: int
    m: int
    long_jobs: tuple[int, ...]
    short_jobs: tuple[int, ...]


def gen_bounded_delta(
    values: Sequence[int], bound: int, delta: int, m: int | None = None
) -> BoundedDeltaGadget:
    """Replace the unit separators by length ``B/3`` and the large job by a chain.

    Every separator, chain and short job fills its window exactly, so it can only
    run at its arrival. The chain starts one unit before the element deadline.

    Raises
    ------
    `.PreconditionError`
        If ``B`` is not a multiple of 12, ``delta < 2``, ``m`` disagrees with the
        number of values, or the values are not a 3-Partition input.
    """
    if bound % 12:
        raise PreconditionError(f"B={bound} must be divisible by 12")
    if delta < 2:
        raise PreconditionError(f"delta={delta} must be at least 2")
    triples = _check_three_partition(values, bound)
    if m is not None and m != triples:
        raise PreconditionError(f"m={m} but {len(values)} values give m={triples}")
    m = triples
    separator = bound // 3
    element_deadline = (m - 1) * separator + m * bound
    windows = [(0, element_deadline, x) for x in values]
    windows += [
        (i * (bound + separator) - separator, i * (bound + separator), separator)
        for i in range(1, m)
    ]
    long_length, short_length = delta * bound // 4, bound // 4
    arrival = element_deadline - 1
    chain, shorts = [], []
    for _ in range(m):
        chain.append((arrival, arrival + long_length, long_length))
        arrival += long_length
        shorts.append((arrival - 1, arrival - 1 + short_length, short_length))
    first = len(windows)
    windows += chain + shorts
    return BoundedDeltaGadget(
        instance=_build(windows),
        values=tuple(values),
        bound=bound,
        delta=delta,
        m=m,
        long_jobs=tuple(range(first, first + m)),
        short_jobs=tuple(range(first + m, first + 2 * m)),
    )


class Preempt2Gadget(BaseModel):
    """Subset-sum reduction under ``PREEMPT_II`` on the grid ``q = 3n``.

    The worker can go home at ``leave_time = q * target`` exactly when some subset
    of ``values`` sums to ``target``.
    """

    model_config = ConfigDict(frozen=True)

    instance: Instance
    values: PositiveInts
    target: int
    reachable: bool

    @property
    def leave_time(self) -> int:
        """Target leave time on the instance grid."""
        return self.instance.scale * self.target


def gen_preempt2_subset_sum(values: Sequence[int], target: int) -> Preempt2Gadget:
    """Value jobs due one grid unit before ``target + x``, plus a long job.

    One grid unit is ``1/(3n)`` of a time unit. The long job has length
    ``(target + 1) q`` and is due two units before ``target + t``, so one unit of
    work on it already forces its completion.

    Raises
    ------
    `.PreconditionError`
        For non-positive values or a negative target.
    """
    _require_positive(values)
    if target < 0:
        raise PreconditionError(f"target {target} is negative")
    q = 3 * len(values)
    windows = [(0, q * (target + x) - 1, q * x) for x in values]
    long_length = (target + 1) * q
    windows.append((0, q * target - 2 + long_length, long_length))
    return Preempt2Gadget(
        instance=_build(windows, Regime.PREEMPT_II, scale=q),
        values=tuple(values),
        target=target,
        reachable=subset_sum_reachable(values, target),
    )


def gen_limiting_example(n: int, scale: int = 1) -> Instance:
    """``n - 1`` jobs of length 51 and one of length 48, all in ``[0, 100]``.

    Its minimum makespan improves with every grid refinement and is approached
    only in the limit.

    Raises
    ------
    `.PreconditionError`
        If ``n < 3`` or ``scale < 1``.
    """
    if n < 3:
        raise PreconditionError(f"the limiting example needs n >= 3, got {n}")
    if scale < 1:
        raise PreconditionError(f"scale must be positive, got {scale}")
    windows = [(0, 100, 51)] * (n - 1) + [(0, 100, 48)]
    return _build(windows, Regime.PREEMPT_II).rescaled(scale)
