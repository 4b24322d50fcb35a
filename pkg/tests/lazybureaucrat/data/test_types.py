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
from pydantic import ValidationError

from lazybureaucrat.data import (
    Instance,
    Job,
    Regime,
    Schedule,
    Segment,
    adjusted_critical_time,
    critical_time,
)
from lazybureaucrat.exceptions import PreconditionError


class TestJob:
    def test_weight_defaults_to_length(self):
        job = Job(id=0, arrival=2, deadline=10, length=4)
        assert job.weight == 4
        assert Job(id=0, arrival=2, deadline=10, length=4, weight=1).weight == 1

    def test_derived_times(self):
        job = Job(id=0, arrival=2, deadline=10, length=4)
        assert job.critical_time == critical_time(job) == 6
        assert job.window == 8
        assert not job.degenerate
        assert adjusted_critical_time(job, 3) == 9

    def test_degenerate(self):
        assert Job(id=0, arrival=0, deadline=3, length=4).degenerate
        assert not Job(id=0, arrival=0, deadline=4, length=4).degenerate

    @pytest.mark.parametrize("done", [-1, 5])
    def test_adjusted_critical_time_range(self, done):
        with pytest.raises(PreconditionError):
            adjusted_critical_time(Job(id=0, arrival=0, deadline=10, length=4), done)

    @pytest.mark.parametrize(
        "fields",
        [
            {"arrival": -1, "deadline": 3, "length": 1},
            {"arrival": 0, "deadline": 3, "length": 0},
            {"arrival": 0, "deadline": 3, "length": 1, "weight": -2},
        ],
    )
    def test_invalid(self, fields):
        with pytest.raises(ValidationError):
            Job(id=0, **fields)


class TestInstance:
    def test_build(self, worked_example):
        assert worked_example.n == 3
        assert worked_example.horizon == 10
        assert worked_example.common_deadline == 10
        assert worked_example.common_arrival is None
        assert not worked_example.unit_lengths
        assert not worked_example.degenerate
        assert [job.id for job in worked_example.jobs] == [0, 1, 2]

    def test_weights(self):
        instance = Instance.build([(0, 3, 1), (0, 3, 2)], weights=[5, None])
        assert [job.weight for job in instance.jobs] == [5, 2]

    def test_ids_must_match_positions(self):
        with pytest.raises(ValidationError):
            Instance(jobs=(Job(id=1, arrival=0, deadline=3, length=1),))

    def test_empty(self):
        instance = Instance()
        assert instance.n == 0
        assert instance.horizon == 0
        assert instance.unit_lengths

    def test_rescaled(self, worked_example):
        finer = worked_example.rescaled(2)
        assert finer.scale == 2
        assert finer.regime is Regime.PREEMPT_II
        assert [(j.arrival, j.deadline, j.length) for j in finer.jobs] == [
            (0, 20, 4),
            (0, 20, 18),
            (16, 20, 4),
        ]
        assert [job.weight for job in finer.jobs] == [2, 9, 2]
        assert finer.rescaled(3).scale == 6

    def test_rescaled_rejects_zero(self, worked_example):
        with pytest.raises(PreconditionError):
            worked_example.rescaled(0)

    def test_with_regime(self, worked_example):
        other = worked_example.with_regime(Regime.PREEMPT_I)
        assert other.regime is Regime.PREEMPT_I
        assert other.jobs == worked_example.jobs


class TestSchedule:
    def test_segments_are_sorted(self):
        schedule = Schedule(
            segments=(
                Segment(job_id=0, start=7, end=9),
                Segment(job_id=1, start=0, end=7),
            ),
            leave_time=9,
        )
        assert [s.job_id for s in schedule.segments] == [1, 0]
        assert schedule.end == 9
        assert schedule.job_order() == [1, 0]

    def test_empty_segment(self):
        with pytest.raises(ValidationError):
            Segment(job_id=0, start=3, end=3)

    def test_leave_before_work_ends(self):
        with pytest.raises(ValidationError):
            Schedule(segments=(Segment(job_id=0, start=0, end=4),), leave_time=3)

    def test_from_slots_merges_runs(self):
        schedule = Schedule.from_slots([(2, 0), (0, 1), (1, 1), (3, 0), (5, 1)], 6)
        assert [(s.job_id, s.start, s.end) for s in schedule.segments] == [
            (1, 0, 2),
            (0, 2, 4),
            (1, 5, 6),
        ]
        assert schedule.job_order() == [1, 0]
        assert schedule.leave_time == 6

    def test_empty_schedule(self):
        schedule = Schedule.from_slots([], 4)
        assert schedule.end == 0
        assert schedule.job_order() == []
