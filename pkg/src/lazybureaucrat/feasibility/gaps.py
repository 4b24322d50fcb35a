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
"""Forced Gaps."""

from typing import NamedTuple

from lazybureaucrat.data.types import Instance


class ForcedGaps(NamedTuple):
    """Intervals no schedule can fill, and where the real problem begins.

    Attributes
    ----------
    gaps : tuple[tuple[int, int], ...]
        ``(start, end)`` pairs with ``start < end``.
    tau_prime : int
        End of the last forced gap, zero if there is none.
    """

    gaps: tuple[tuple[int, int], ...]
    tau_prime: int


def forced_gaps(instance: Instance) -> ForcedGaps:
    """Find the gaps forced by arrivals.

    Jobs are taken in arrival order (ties by id). A gap opens whenever all work
    that has arrived so far ends strictly before the next arrival; accounting
    restarts at that arrival. Degenerate jobs are never executable and ignored.
    """
    gaps: list[tuple[int, int]] = []
    cursor = 0
    for job in sorted(
        (job for job in instance.jobs if not job.degenerate),
        key=lambda job: (job.arrival, job.id),
    ):
        if cursor < job.arrival:
            gaps.append((cursor, job.arrival))
            cursor = job.arrival
        cursor += job.length
    return ForcedGaps(tuple(gaps), gaps[-1][1] if gaps else 0)
