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
"""Search Budget Configuration."""

from typing import Annotated

from pydantic import Field

from .. import AutoLoadConfig, ConfigManager


class SearchConfig(AutoLoadConfig, _config_prefix="search"):
    """Limits for the exhaustive searches and the makespan sweep.

    Attributes
    ----------
    nonpreemptive_max_jobs : int, default=10
        Largest instance the nonpreemptive oracle accepts.
    nonpreemptive_max_horizon : int, default=40
        Largest horizon K (grid units) the nonpreemptive oracle accepts.
    preemptive_max_jobs : int, default=6
        Largest instance the slot-level oracle accepts.
    preemptive_max_horizon : int, default=24
        Largest horizon K (grid units) the slot-level oracle accepts.
    ratio_state_budget : int, default=2000000
        Cap on the bounded-ratio dynamic program's state count.
    decide_state_budget : int, default=2000000
        Cap on the states the preemptive decision search may visit.
    refine_scale_cap : int, optional
        Largest grid refinement factor tried when deciding whether a minimum
        makespan is attained. Defaults to ``3n``.
    workers : int, default=1
        Threads used to try candidate leave times concurrently.
    """

    nonpreemptive_max_jobs: Annotated[int, Field(ge=0)] = 10
    nonpreemptive_max_horizon: Annotated[int, Field(ge=0)] = 40
    preemptive_max_jobs: Annotated[int, Field(ge=0)] = 6
    preemptive_max_horizon: Annotated[int, Field(ge=0)] = 24
    ratio_state_budget: Annotated[int, Field(ge=1)] = 2_000_000
    decide_state_budget: Annotated[int, Field(ge=1)] = 2_000_000
    refine_scale_cap: Annotated[int | None, Field(ge=1)] = None
    workers: Annotated[int, Field(ge=1)] = 1


def search_settings() -> SearchConfig:
    """Return the active search settings, falling back to defaults if unrendered."""
    return getattr(ConfigManager.current(), "search", None) or SearchConfig()
