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
"""Domain types, objective evaluation and file formats."""

from .evaluate import completed_jobs, evaluate, executed_amounts
from .fileformat import (
    parse_instance,
    parse_schedule,
    serialize_instance,
    serialize_schedule,
)
from .types import (
    Instance,
    Job,
    ObjectiveKind,
    Regime,
    Schedule,
    Segment,
    Solution,
    adjusted_critical_time,
    critical_time,
)

__all__ = [
    "Instance",
    "Job",
    "ObjectiveKind",
    "Regime",
    "Schedule",
    "Segment",
    "Solution",
    "adjusted_critical_time",
    "completed_jobs",
    "critical_time",
    "evaluate",
    "executed_amounts",
    "parse_instance",
    "parse_schedule",
    "serialize_instance",
    "serialize_schedule",
]
