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


class TestConfigManager:
    def test_defaults(self, ConfigManager):
        from lazybureaucrat.config import models  # noqa: F401

        config = ConfigManager.reload()
        assert config.app.name == "lbp"
        assert config.logging.level == "WARNING"
        assert config.search.workers == 1
        assert config.search.nonpreemptive_max_jobs == 10
        assert config.search.preemptive_max_jobs == 6
        assert config.search.refine_scale_cap is None

    def test_overrides(self, ConfigManager):
        from lazybureaucrat.config import models  # noqa: F401

        config = ConfigManager.reload(
            search={"workers": 4, "refine_scale_cap": 8}, logging={"level": "debug"}
        )
        assert config.search.workers == 4
        assert config.search.refine_scale_cap == 8
        assert config.logging.level == "DEBUG"
        assert ConfigManager.current() is config

    def test_environment_is_ignored(self, monkeypatch, ConfigManager):
        from lazybureaucrat.config import models  # noqa: F401

        monkeypatch.setenv("SEARCH__WORKERS", "8")
        monkeypatch.setenv("search", '{"workers": 8}')
        assert ConfigManager.reload().search.workers == 1

    @pytest.mark.parametrize(
        "search",
        [
            {"workers": 0},
            {"ratio_state_budget": 0},
            {"decide_state_budget": -1},
            {"nonpreemptive_max_jobs": -1},
            {"refine_scale_cap": 0},
        ],
    )
    def test_invalid_overrides(self, search, ConfigManager):
        from lazybureaucrat.config import models  # noqa: F401

        with pytest.raises(ValidationError):
            ConfigManager.reload(search=search)

    def test_current_renders_on_first_use(self, ConfigManager):
        from lazybureaucrat.config.models.search import search_settings

        assert search_settings().workers == 1
        ConfigManager.reload(search={"workers": 3})
        assert search_settings().workers == 3

    def test_models_sharing_a_prefix_merge(self, ConfigManager):
        from lazybureaucrat.config import AutoLoadConfig

        class _Extra(AutoLoadConfig, _config_prefix="extra"):
            one: int = 1

        class _ExtraMore(AutoLoadConfig, _config_prefix="extra"):
            two: str = "two"

        class _Root(AutoLoadConfig):
            flag: bool = False

        assert _Extra and _ExtraMore and _Root
        config = ConfigManager.reload(extra={"two": "zwei"}, flag=True)
        assert config.extra.one == 1
        assert config.extra.two == "zwei"
        assert config.flag is True
