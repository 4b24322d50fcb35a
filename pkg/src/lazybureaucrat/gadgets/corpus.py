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
"""Seeded Random Corpora."""

import random
from enum import StrEnum

from lazybureaucrat.data.types import Instance, Regime
from lazybureaucrat.exceptions import PreconditionError


class Profile(StrEnum):
    """Structural shape of generated instances."""

    GENERAL = "general"
    NARROW_WINDOW = "narrow-window"
    COMMON_ARRIVAL = "common-arrival"
    COMMON_DEADLINE = "common-deadline"
    UNIT_LENGTH = "unit-length"


def _window(rng: random.Random, K: int, profile: Profile) -> tuple[int, int, int]:
    arrival = 0 if profile is Profile.COMMON_ARRIVAL else rng.randrange(K)
    room = K - arrival
    if profile is Profile.UNIT_LENGTH:
        length = 1
    else:
        length = rng.randint(1, min(room, max(1, K // 3)))
    match profile:
        case Profile.COMMON_DEADLINE:
            deadline = K
        case Profile.NARROW_WINDOW:
            deadline = rng.randint(arrival + length, min(K, arrival + 2 * length - 1))
        case _:
            deadline = rng.randint(arrival + length, K)
    return arrival, deadline, length


def gen_random(
    n: int,
    K: int,
    regime: Regime,
    profile: Profile,
    rng_seed: int,
) -> Instance:
    """Draw ``n`` jobs with deadlines at most ``K``.

    Every job fits its window, and the same arguments always give the same
    instance.

    Raises
    ------
    `.PreconditionError`
        If ``n`` is negative or ``K`` leaves no room for a job.
    """
    if n < 0:
        raise PreconditionError(f"n={n} is negative")
    if n and K < 1:
        raise PreconditionError(f"K={K} leaves no room for a job")
    rng = random.Random(rng_seed)
    windows = [_window(rng, K, Profile(profile)) for _ in range(n)]
    return Instance.build(windows, regime=regime)
