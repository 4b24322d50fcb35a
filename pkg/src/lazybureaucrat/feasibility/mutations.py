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
"""Schedule Mutations.

Each mutation turns a feasible schedule into one the validator must reject.
"""

from lazybureaucrat.data.types import Instance, Schedule, Segment
from lazybureaucrat.exceptions import PreconditionError


def _last(schedule: Schedule) -> Segment:
    if not schedule.segments:
        raise PreconditionError("mutation needs a schedule with work")
    return max(schedule.segments, key=lambda s: (s.end, s.start))


def mutate_drop_segment(schedule: Schedule, index: int) -> Schedule:
    """Remove segment ``index`` and keep the leave time."""
    if not 0 <= index < len(schedule.segments):
        raise PreconditionError(f"no segment {index}")
    segments = schedule.segments[:index] + schedule.segments[index + 1 :]
    return schedule.model_copy(update={"segments": segments})


def mutate_extend_past_deadline(instance: Instance, schedule: Schedule) -> Schedule:
    """Stretch the last segment one unit past its job's deadline."""
    last = _last(schedule)
    end = instance.jobs[last.job_id].deadline + 1
    segments = tuple(
        Segment(job_id=s.job_id, start=s.start, end=end) if s == last else s
        for s in schedule.segments
    )
    return Schedule(segments=segments, leave_time=max(schedule.leave_time, end))


def mutate_early_leave(schedule: Schedule) -> Schedule:
    """Drop the final unit of work and go home when it would have started."""
    last = _last(schedule)
    segments = tuple(s for s in schedule.segments if s != last)
    if last.length > 1:
        segments += (Segment(job_id=last.job_id, start=last.start, end=last.end - 1),)
    return Schedule(segments=segments, leave_time=last.end - 1)
