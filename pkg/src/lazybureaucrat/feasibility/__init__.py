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
"""Executability, busy-requirement validation and forced gaps."""

from .executability import (
    ExecState,
    ever_executable,
    executable_ids,
    executable_set,
    job_executable,
    next_executable_time,
)
from .gaps import ForcedGaps, forced_gaps
from .mutations import (
    mutate_drop_segment,
    mutate_early_leave,
    mutate_extend_past_deadline,
)
from .validate import Violation, ViolationKind, is_feasible, validate

__all__ = [
    "ExecState",
    "ForcedGaps",
    "Violation",
    "ViolationKind",
    "ever_executable",
    "executable_ids",
    "executable_set",
    "forced_gaps",
    "is_feasible",
    "job_executable",
    "mutate_drop_segment",
    "mutate_early_leave",
    "mutate_extend_past_deadline",
    "next_executable_time",
    "validate",
]
