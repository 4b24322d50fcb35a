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
"""Instance and Schedule Text Formats.

Instance files::

    lbp v1
    regime: preempt2
    scale: 1
    job 0 arrival=0 deadline=10 length=2
    job 1 arrival=0 deadline=10 length=9 weight=1

Schedule files::

    leave: 9
    seg 1 0 9

``#`` starts a comment; blank lines are ignored. Integers are grid units.
"""

import re
from collections.abc import Iterator

from pydantic import ValidationError

from lazybureaucrat.exceptions import ParseError

from .types import Instance, Job, Regime, Schedule, Segment

FORMAT_VERSION = "lbp v1"

_INT = re.compile(r"^-?\d+$")
_JOB_FIELDS = ("arrival", "deadline", "length", "weight")
_REQUIRED = ("arrival", "deadline", "length")


def _records(text: str) -> Iterator[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _integer(token: str, what: str, line: int) -> int:
    if not _INT.match(token):
        raise ParseError(f"{what} is not an integer: {token!r}", line)
    return int(token)


def _header(line: str, key: str, number: int) -> str:
    name, sep, value = line.partition(":")
    if not sep or name.strip() != key:
        raise ParseError(f"expected '{key}: ...', got {line!r}", number)
    return value.strip()


def _validation_message(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first["loc"])
    return f"{location}: {first['msg']}" if location else first["msg"]


def _parse_job(tokens: list[str], position: int, number: int) -> Job:
    if len(tokens) < 2:
        raise ParseError("job record without an id", number)
    job_id = _integer(tokens[1], "job id", number)
    if job_id != position:
        if job_id < position:
            raise ParseError(f"duplicate job id {job_id}", number)
        raise ParseError(f"expected job id {position}, got {job_id}", number)
    fields: dict[str, int] = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep or key not in _JOB_FIELDS:
            raise ParseError(f"unknown job field {token!r}", number)
        if key in fields:
            raise ParseError(f"repeated job field {key!r}", number)
        fields[key] = _integer(value, key, number)
    for key in _REQUIRED:
        if key not in fields:
            raise ParseError(f"job {job_id} is missing {key}", number)
    for key in ("arrival", "deadline", "weight"):
        if fields.get(key, 0) < 0:
            raise ParseError(f"{key} must be non-negative", number)
    if fields["length"] < 1:
        raise ParseError("length must be positive", number)
    try:
        return Job(id=job_id, **fields)
    except ValidationError as e:
        raise ParseError(_validation_message(e), number) from e


def parse_instance(text: str) -> Instance:
    """Parse an instance file.

    Raises
    ------
    `.ParseError`
        On any malformed record, with its line number.
    """
    records = list(_records(text))
    if not records:
        raise ParseError("empty instance file")
    number, line = records[0]
    if line != FORMAT_VERSION:
        raise ParseError(f"expected {FORMAT_VERSION!r}, got {line!r}", number)
    if len(records) < 3:
        raise ParseError("instance header needs regime and scale lines")

    number, line = records[1]
    regime_name = _header(line, "regime", number)
    try:
        regime = Regime(regime_name)
    except ValueError as e:
        raise ParseError(f"unknown regime {regime_name!r}", number) from e

    number, line = records[2]
    scale = _integer(_header(line, "scale", number), "scale", number)
    if scale < 1:
        raise ParseError("scale must be positive", number)

    jobs: list[Job] = []
    for number, line in records[3:]:
        tokens = line.split()
        if tokens[0] != "job":
            raise ParseError(f"unknown record {tokens[0]!r}", number)
        jobs.append(_parse_job(tokens, len(jobs), number))
    return Instance(jobs=tuple(jobs), regime=regime, scale=scale)


def serialize_instance(instance: Instance) -> str:
    """Render an instance file; ``weight`` is written only when it differs."""
    lines = [
        FORMAT_VERSION,
        f"regime: {instance.regime.value}",
        f"scale: {instance.scale}",
    ]
    for job in instance.jobs:
        record = (
            f"job {job.id} arrival={job.arrival} deadline={job.deadline}"
            f" length={job.length}"
        )
        if job.weight != job.length:
            record += f" weight={job.weight}"
        lines.append(record)
    return "\n".join(lines) + "\n"


def parse_schedule(text: str) -> Schedule:
    """Parse a schedule file.

    Raises
    ------
    `.ParseError`
        On any malformed record, with its line number.
    """
    records = list(_records(text))
    if not records:
        raise ParseError("empty schedule file")
    number, line = records[0]
    leave = _integer(_header(line, "leave", number), "leave", number)
    if leave < 0:
        raise ParseError("leave must be non-negative", number)

    segments: list[Segment] = []
    for number, line in records[1:]:
        tokens = line.split()
        if tokens[0] != "seg" or len(tokens) != 4:
            raise ParseError(f"expected 'seg <job> <start> <end>': {line!r}", number)
        job_id, start, end = (
            _integer(token, what, number)
            for token, what in zip(tokens[1:], ("job id", "start", "end"))
        )
        try:
            segments.append(Segment(job_id=job_id, start=start, end=end))
        except ValidationError as e:
            raise ParseError(_validation_message(e), number) from e
    try:
        return Schedule(segments=tuple(segments), leave_time=leave)
    except ValidationError as e:
        raise ParseError(_validation_message(e), number) from e


def serialize_schedule(schedule: Schedule) -> str:
    """Render a schedule file."""
    lines = [f"leave: {schedule.leave_time}"]
    lines.extend(
        f"seg {segment.job_id} {segment.start} {segment.end}"
        for segment in schedule.segments
    )
    return "\n".join(lines) + "\n"
