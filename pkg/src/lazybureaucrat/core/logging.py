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
"""Structured Logging.

Solvers, searches and the command line log through structlog. Records are JSON
objects on stderr, so stdout carries nothing but command output and stays
byte-deterministic for a given command line.
"""

import logging
import sys
import time
from collections.abc import Iterator
from contextlib import contextmanager
from typing import IO, Any

import structlog
from structlog.typing import EventDict, Processor

from .singleton import Singleton


def _pre_chain() -> list[Processor]:
    return [
        structlog.stdlib.add_logger_name,
        structlog.stdlib.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
    ]


class LoggingFactory(metaclass=Singleton):
    """Route structlog and stdlib records to one JSON stream, once per process.

    Parameters
    ----------
    name : str, default="lbp"
        Application name; every record carries it under ``app``.
    level : int, default=30
        Records below this level are dropped.
    stream : file object, optional
        Destination of the records, stderr by default.
    """

    def __init__(
        self,
        name: str = "lbp",
        level: int = logging.WARNING,
        stream: IO[str] | None = None,
    ) -> None:
        self.app = {"name": name}
        self.level = level

        handler = logging.StreamHandler(stream or sys.stderr)
        handler.setFormatter(
            structlog.stdlib.ProcessorFormatter(
                processors=[
                    structlog.stdlib.ProcessorFormatter.remove_processors_meta,
                    structlog.processors.JSONRenderer(sort_keys=True),
                ],
                foreign_pre_chain=[*_pre_chain(), structlog.stdlib.ExtraAdder()],
            )
        )
        logging.basicConfig(format="%(message)s", handlers=[handler], force=True)
        logging.getLogger().setLevel(level)

        structlog.configure(
            processors=[
                structlog.stdlib.filter_by_level,
                *_pre_chain(),
                structlog.contextvars.merge_contextvars,
                self._inject_app,
                structlog.processors.StackInfoRenderer(),
                structlog.processors.format_exc_info,
                structlog.processors.dict_tracebacks,
                structlog.processors.UnicodeDecoder(),
                structlog.stdlib.ProcessorFormatter.wrap_for_formatter,
            ],
            logger_factory=structlog.stdlib.LoggerFactory(),
            wrapper_class=structlog.stdlib.BoundLogger,
            cache_logger_on_first_use=True,
        )
        structlog.get_logger(__name__).debug(
            "logging configured", level=logging.getLevelName(level)
        )

    @staticmethod
    def get_logger(name: str, **kwargs) -> structlog.stdlib.BoundLogger:
        """Return a logger for ``name`` with ``kwargs`` bound."""
        return structlog.get_logger(name, **kwargs)

    def _inject_app(self, _0, _1, event_dict: EventDict) -> EventDict:
        """Add the ``app`` dict; values a caller logged under ``app`` win."""
        event_dict["app"] = self.app | event_dict.get("app", {})
        return event_dict


def get_logger(name: str, **kwargs) -> structlog.stdlib.BoundLogger:
    """Return a logger.

    Returns
    -------
    `structlog.stdlib.BoundLogger`
    """
    return LoggingFactory.get_logger(name, **kwargs)


@contextmanager
def timed(
    logger: structlog.stdlib.BoundLogger, event: str, **values: Any
) -> Iterator[None]:
    """Log ``event`` at info level with ``elapsed_s`` once the block exits.

    Everything logged inside the block also carries ``values``.
    """
    start = time.perf_counter()
    with structlog.contextvars.bound_contextvars(**values):
        try:
            yield
        finally:
            logger.info(event, elapsed_s=round(time.perf_counter() - start, 6))
