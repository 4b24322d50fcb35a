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

from lazybureaucrat.data import (
    Instance,
    Regime,
    Schedule,
    Segment,
    parse_instance,
    parse_schedule,
    serialize_instance,
    serialize_schedule,
)
from lazybureaucrat.data.fileformat import FORMAT_VERSION
from lazybureaucrat.exceptions import ParseError

_SAMPLE = """\
lbp v1
# worked example
regime: preempt2
scale: 1

job 0 arrival=0 deadline=10 length=2
job 1 arrival=0 deadline=10 length=9 weight=1  # cheap
job 2 arrival=8 deadline=10 length=2
"""


class TestInstanceFormat:
    def test_parse(self):
        instance = parse_instance(_SAMPLE)
        assert instance.regime is Regime.PREEMPT_II
        assert instance.scale == 1
        assert [(j.arrival, j.deadline, j.length, j.weight) for j in instance.jobs] == [
            (0, 10, 2, 2),
            (0, 10, 9, 1),
            (8, 10, 2, 2),
        ]

    def test_serialize(self, worked_example):
        text = serialize_instance(worked_example)
        assert text.splitlines() == [
            FORMAT_VERSION,
            "regime: preempt2",
            "scale: 1",
            "job 0 arrival=0 deadline=10 length=2",
            "job 1 arrival=0 deadline=10 length=9",
            "job 2 arrival=8 deadline=10 length=2",
        ]
        assert parse_instance(text) == worked_example

    def test_weight_written_when_it_differs(self):
        instance = Instance.build([(0, 3, 2)], Regime.PREEMPT_I, scale=4, weights=[7])
        text = serialize_instance(instance)
        assert "job 0 arrival=0 deadline=3 length=2 weight=7" in text
        assert parse_instance(text) == instance

    def test_no_jobs(self):
        assert parse_instance("lbp v1\nregime: nonpreemptive\nscale: 2\n").n == 0

    @pytest.mark.parametrize(
        "body, line, message",
        [
            (
                "job 0 arrival=0 deadline=3 length=1\n"
                "job 0 arrival=0 deadline=3 length=1",
                5,
                "duplicate job id 0",
            ),
            ("job 1 arrival=0 deadline=3 length=1", 4, "expected job id 0, got 1"),
            ("job 0 arrival=0 deadline=3 length=1 colour=2", 4, "unknown job field"),
            ("job 0 arrival=0 arrival=1 deadline=3 length=1", 4, "repeated job field"),
            ("job 0 arrival=0 length=1", 4, "job 0 is missing deadline"),
            ("job 0 arrival=-1 deadline=3 length=1", 4, "arrival must be non-negative"),
            ("job 0 arrival=0 deadline=3 length=0", 4, "length must be positive"),
            ("job 0 arrival=x deadline=3 length=1", 4, "not an integer"),
            ("task 0", 4, "unknown record"),
        ],
    )
    def test_bad_job_records(self, body, line, message):
        with pytest.raises(ParseError) as e:
            parse_instance(f"lbp v1\nregime: preempt1\nscale: 1\n{body}\n")
        assert e.value.line == line
        assert str(e.value).startswith(f"line {line}: ")
        assert message in str(e.value)

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "empty instance file"),
            ("# nothing\n\n", "empty instance file"),
            ("lbp v2\nregime: preempt1\nscale: 1\n", "expected 'lbp v1'"),
            ("lbp v1\nmode: preempt1\nscale: 1\n", "expected 'regime: ...'"),
            ("lbp v1\nregime: preempt4\nscale: 1\n", "unknown regime"),
            ("lbp v1\nregime: preempt1\nscale: 0\n", "scale must be positive"),
            ("lbp v1\nregime: preempt1\n", "needs regime and scale"),
        ],
    )
    def test_bad_headers(self, text, message):
        with pytest.raises(ParseError) as e:
            parse_instance(text)
        assert message in str(e.value)
        assert e.value.exit_code == 3


class TestScheduleFormat:
    def test_round_trip(self):
        schedule = Schedule(
            segments=(
                Segment(job_id=1, start=0, end=7),
                Segment(job_id=0, start=7, end=9),
            ),
            leave_time=9,
        )
        text = serialize_schedule(schedule)
        assert text == "leave: 9\nseg 1 0 7\nseg 0 7 9\n"
        assert parse_schedule(text) == schedule

    def test_nothing_executed(self):
        schedule = parse_schedule("leave: 0\n")
        assert schedule.segments == ()
        assert schedule.leave_time == 0

    @pytest.mark.parametrize(
        "text, line",
        [
            ("leave: 3\nseg 0 2 2\n", 2),
            ("leave: 3\nseg 0 0\n", 2),
            ("leave: 3\nrun 0 0 1\n", 2),
            ("leave 3\n", 1),
            ("leave: -1\n", 1),
            ("leave: 1\nseg 0 0 4\n", 2),
        ],
    )
    def test_bad_records(self, text, line):
        with pytest.raises(ParseError) as e:
            parse_schedule(text)
        assert e.value.line == line

    def test_empty(self):
        with pytest.raises(ParseError, match="empty schedule file"):
            parse_schedule("\n# only a comment\n")
