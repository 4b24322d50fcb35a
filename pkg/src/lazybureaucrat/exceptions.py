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
"""Lazy Bureaucrat Exceptions."""

from collections.abc import Sequence
from typing import Any, ClassVar


class LbpError(Exception):
    """Base exception.

    Attributes
    ----------
    exit_code : ClassVar[int]
        Process exit code the command line reports for this failure.
    """

    exit_code: ClassVar[int] = 4


class PreconditionError(LbpError):
    """Input does not meet an operation's precondition."""

    exit_code: ClassVar[int] = 2


class BudgetExceeded(PreconditionError):
    """Search space is larger than the configured budget."""


class ParseError(LbpError):
    """Malformed instance or schedule text.

    Parameters
    ----------
    message : str
        What went wrong.
    line : int, optional
        1-based line number of the offending record.
    """

    exit_code: ClassVar[int] = 3

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class InternalValidationError(LbpError):
    """A solver produced a schedule the validator rejects.

    Parameters
    ----------
    message : str
        Context of the failure.
    violations : Sequence[Any]
        The violations reported by the validator.
    """

    exit_code: ClassVar[int] = 4

    def __init__(self, message: str, violations: Sequence[Any] = ()) -> None:
        self.violations = tuple(violations)
        detail = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{message}: {detail}" if detail else message)
