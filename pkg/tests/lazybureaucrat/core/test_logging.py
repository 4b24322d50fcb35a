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


import io
import json
import logging
import secrets

import pytest
from pydantic import ValidationError


class TestLogging:
    @pytest.mark.parametrize("level", logging.getLevelNamesMapping().keys())
    def test_inst_with_logging_level_str(
        self,
        level,
        ConfigManager,
        LoggingFactory,
    ):
        ext = LoggingFactory(
            level=ConfigManager.reload(logging={"level": level}).logging.level_as_int,
        )
        assert ext.level == logging.getLevelNamesMapping()[level]

    @pytest.mark.parametrize("level", ["debug", "Info", " warning "])
    def test_level_names_are_case_insensitive(
        self, level, ConfigManager, LoggingFactory
    ):
        config = ConfigManager.reload(logging={"level": level})
        assert config.logging.level == level.strip().upper()

    @pytest.mark.parametrize("level", [secrets.randbelow(200) - 100 for _ in range(10)])
    def test_inst_with_logging_level_int(
        self,
        level,
        ConfigManager,
        LoggingFactory,
    ):
        ext = LoggingFactory(
            level=ConfigManager.reload(logging={"level": level}).logging.level_as_int,
        )
        assert ext.level == max(0, int(level))

    @pytest.mark.parametrize(
        "level", [secrets.token_hex(secrets.randbelow(10) + 1) + "x" for _ in range(10)]
    )
    def test_inst_with_logging_level_invalid(
        self,
        level,
        ConfigManager,
        LoggingFactory,
    ):
        with pytest.raises(ValidationError):
            ConfigManager.reload(logging={"level": level})
        assert not LoggingFactory.initialized()

    def test_default_level_is_warning(self, ConfigManager, LoggingFactory):
        ext = LoggingFactory(level=ConfigManager.reload().logging.level_as_int)
        assert ext.level == logging.WARNING

    def test_factory_is_a_singleton(self, LoggingFactory):
        first = LoggingFactory("lbp", logging.INFO)
        assert LoggingFactory("other", logging.DEBUG) is first
        assert first.app == {"name": "lbp"}

    def test_inject_app_merges_record_values(self, LoggingFactory):
        ext = LoggingFactory("lbp")
        record = ext._inject_app(None, None, {"event": "x", "app": {"run": 1}})
        assert record["app"] == {"name": "lbp", "run": 1}
        assert ext._inject_app(None, None, {"event": "x"})["app"] == {"name": "lbp"}

    def test_get_logger_binds_values(self, LoggingFactory):
        from lazybureaucrat.core.logging import get_logger

        LoggingFactory("lbp")
        logger = get_logger("lazybureaucrat.tests", algo="unit-ldd")
        assert logger.bind(value=1) is not None

    def test_records_are_json_on_the_given_stream(self, LoggingFactory):
        from lazybureaucrat.core.logging import get_logger

        stream = io.StringIO()
        LoggingFactory("lbp", logging.INFO, stream=stream)
        get_logger("lazybureaucrat.tests.stream").info("solved", value=4)
        get_logger("lazybureaucrat.tests.stream").debug("hidden")
        records = [json.loads(line) for line in stream.getvalue().splitlines()]
        assert [r["event"] for r in records] == ["solved"]
        assert records[0]["value"] == 4
        assert records[0]["app"] == {"name": "lbp"}
        assert records[0]["level"] == "info"

    def test_timed_binds_context_and_reports_elapsed(self, LoggingFactory):
        from lazybureaucrat.core.logging import get_logger, timed

        stream = io.StringIO()
        LoggingFactory("lbp", logging.INFO, stream=stream)
        logger = get_logger("lazybureaucrat.tests.timed")
        with timed(logger, "command finished", command="solve"):
            logger.info("inside")
        logger.info("after")
        inside, finished, after = (
            json.loads(line) for line in stream.getvalue().splitlines()
        )
        assert inside["command"] == "solve"
        assert finished["event"] == "command finished"
        assert finished["command"] == "solve"
        assert finished["elapsed_s"] >= 0
        assert "command" not in after
