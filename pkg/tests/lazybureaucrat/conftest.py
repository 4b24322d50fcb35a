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


import importlib
import sys

import pytest

from lazybureaucrat.data import Instance, Regime


@pytest.fixture(scope="function")
def _cleanup():
    to_removes = [
        k
        for k in sys.modules.keys()
        if k.startswith("lazybureaucrat.config") or k.startswith("lazybureaucrat.core")
    ]
    for to_remove in to_removes:
        del sys.modules[to_remove]


@pytest.fixture(scope="function")
def ConfigManager(_cleanup):
    # Clear cached config
    import lazybureaucrat.config

    importlib.reload(lazybureaucrat.config)
    return lazybureaucrat.config.ConfigManager


@pytest.fixture(scope="function")
def LoggingFactory(_cleanup, ConfigManager):
    assert ConfigManager
    # Register logging config type
    # Clear logging singleton
    import lazybureaucrat.core.logging
    from lazybureaucrat.config.models import logging  # noqa: F401

    importlib.reload(lazybureaucrat.core.logging)
    return lazybureaucrat.core.logging.LoggingFactory


@pytest.fixture
def worked_example() -> Instance:
    """Jobs of length 2, 9 and 2 sharing the deadline 10; the last arrives at 8."""
    return Instance.build([(0, 10, 2), (0, 10, 9), (8, 10, 2)], Regime.PREEMPT_II)


@pytest.fixture
def limiting() -> Instance:
    """Three jobs of length 51 and one of 48 in ``[0, 100]``."""
    return Instance.build([(0, 100, 51)] * 3 + [(0, 100, 48)], Regime.PREEMPT_II)


@pytest.fixture
def two_long() -> Instance:
    return Instance.build([(0, 10, 4), (0, 10, 6)], Regime.PREEMPT_II)


@pytest.fixture
def split_arrivals() -> Instance:
    """A forced gap ``[10, 20)`` between two jobs of length 10."""
    return Instance.build([(0, 30, 10), (20, 30, 10)], Regime.PREEMPT_II)
