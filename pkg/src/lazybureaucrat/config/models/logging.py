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
"""Logging Configuration."""

import logging
from typing import Annotated

from pydantic import Field, field_validator

from .. import AutoLoadConfig


class LoggingConfig(AutoLoadConfig, _config_prefix="logging"):
    """Logging configuration.

    Attributes
    ----------
    level : str, default=WARNING, flag=--log-level
        A level name (case-insensitive) or a non-negative integer level. Solver
        progress is logged at ``INFO`` and per-decision traces at ``DEBUG``.
    """

    level: Annotated[
        str,
        Field(default=logging.getLevelName(logging.WARNING), validate_default=True),
    ]

    @field_validator("level", mode="before")
    @classmethod
    def _normalise(cls, value: object) -> str:
        text = str(value).strip().upper()
        if text in logging.getLevelNamesMapping():
            return text
        if text.lstrip("-").isdigit():
            return str(max(0, int(text)))
        raise ValueError(f"unknown logging level {value!r}")

    @property
    def level_as_int(self) -> int:
        """Logging level as integer."""
        if self.level.isdigit():
            return int(self.level)
        return logging.getLevelNamesMapping()[self.level]
