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


import pytest

from lazybureaucrat.data import Instance, Schedule, Segment
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.feasibility import (
    ViolationKind,
    is_feasible,
    mutate_drop_segment,
    mutate_early_leave,
    mutate_extend_past_deadline,
    validate,
)


@pytest.fixture
def schedule() -> Schedule:
    return Schedule(
        segments=(
            Segment(job_id=1, start=0, end=7),
            Segment(job_id=0, start=7, end=9),
        ),
        leave_time=9,
    )


class TestMutations:
    def test_baseline(self, worked_example, schedule):
        assert is_feasible(worked_example, schedule)

    @pytest.mark.parametrize("index", [0, 1])
    def test_drop_segment(self, worked_example, schedule, index):
        mutated = mutate_drop_segment(schedule, index)
        assert len(mutated.segments) == 1
        assert mutated.leave_time == 9
        kinds = {v.kind for v in validate(worked_example, mutated)}
        assert ViolationKind.IDLE_WHILE_EXECUTABLE in kinds

    def test_extend_past_deadline(self, worked_example, schedule):
        mutated = mutate_extend_past_deadline(worked_example, schedule)
        assert mutated.segments[-1] == Segment(job_id=0, start=7, end=11)
        assert mutated.leave_time == 11
        kinds = {v.kind for v in validate(worked_example, mutated)}
        assert ViolationKind.OUTSIDE_WINDOW in kinds

    def test_early_leave(self, worked_example, schedule):
        mutated = mutate_early_leave(schedule)
        assert mutated.leave_time == 8
        assert mutated.segments[-1] == Segment(job_id=0, start=7, end=8)
        assert [str(v) for v in validate(worked_example, mutated)] == [
            "LEFT_WHILE_EXECUTABLE time=8 job=0",
            "LEFT_WHILE_EXECUTABLE time=8 job=1",
            "LEFT_WHILE_EXECUTABLE time=8 job=2",
        ]

    def test_early_leave_unit_segment(self):
        instance = Instance.build([(0, 5, 1), (0, 5, 1)])
        schedule = Schedule(
            segments=(
                Segment(job_id=0, start=0, end=1),
                Segment(job_id=1, start=1, end=2),
            ),
            leave_time=2,
        )
        assert is_feasible(instance, schedule)
        mutated = mutate_early_leave(schedule)
        assert mutated.segments == (Segment(job_id=0, start=0, end=1),)
        assert not is_feasible(instance, mutated)

    def test_empty_schedule(self, worked_example):
        empty = Schedule(leave_time=3)
        with pytest.raises(PreconditionError):
            mutate_early_leave(empty)
        with pytest.raises(PreconditionError):
            mutate_extend_past_deadline(worked_example, empty)
        with pytest.raises(PreconditionError):
            mutate_drop_segment(empty, 0)
