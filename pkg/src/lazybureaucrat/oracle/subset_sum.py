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
"""Subset-sum Reachability."""

from collections.abc import Sequence

from lazybureaucrat.exceptions import PreconditionError


def subset_sum_reachable(values: Sequence[int], target: int) -> bool:
    """Whether some subset of ``values`` sums to ``target``.

    Raises
    ------
    `.PreconditionError`
        If the target or any value is negative.
    """
    if target < 0 or any(value < 0 for value in values):
        raise PreconditionError("subset sum needs non-negative values and target")
    reachable = [True] + [False] * target
    for value in values:
        for total in range(target, value - 1, -1):
            reachable[total] = reachable[total] or reachable[total - value]
    return reachable[target]
