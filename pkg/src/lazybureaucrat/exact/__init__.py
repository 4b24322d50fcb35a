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
"""Polynomial and pseudo-polynomial solvers for the tractable cases."""

from .common_deadline import (
    DPTable,
    GapConstraints,
    JobClasses,
    MakespanResult,
    Tentative,
    build_tentative_schedule,
    classify_jobs,
    decide_go_home_by,
    gap_constraints,
    minimize_makespan_common_deadline,
    realize_schedule,
    schedule_by_T,
)
from .common_release import solve_common_release_dp
from .greedy import latest_deadline_first, simulate, solve_unit_ldd
from .preempt1 import (
    WeightAudit,
    audit_preempt1_min_weight,
    solve_preempt1_ldd,
    solve_preempt1_min_weight,
)
from .window_dp import (
    WindowBounds,
    active_set_bound,
    can_precede,
    infer_bounds,
    solve_bounded_ratio_dp,
    solve_narrow_window_dp,
    unique_ordering_holds,
)

__all__ = [
    "DPTable",
    "GapConstraints",
    "JobClasses",
    "MakespanResult",
    "Tentative",
    "WeightAudit",
    "WindowBounds",
    "active_set_bound",
    "audit_preempt1_min_weight",
    "build_tentative_schedule",
    "can_precede",
    "classify_jobs",
    "decide_go_home_by",
    "gap_constraints",
    "infer_bounds",
    "latest_deadline_first",
    "minimize_makespan_common_deadline",
    "realize_schedule",
    "schedule_by_T",
    "simulate",
    "solve_bounded_ratio_dp",
    "solve_common_release_dp",
    "solve_narrow_window_dp",
    "solve_preempt1_ldd",
    "solve_preempt1_min_weight",
    "solve_unit_ldd",
    "unique_ordering_holds",
]
