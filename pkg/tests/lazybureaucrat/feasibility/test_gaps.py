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

from lazybureaucrat.data import Instance, Regime
from lazybureaucrat.feasibility import ForcedGaps, forced_gaps


class TestForcedGaps:
    @pytest.mark.parametrize(
        "windows, expected",
        [
            ([(0, 10, 2), (5, 10, 1)], ForcedGaps(((2, 5),), 5)),
            ([(0, 10, 3), (3, 10, 1)], ForcedGaps((), 0)),
            ([(4, 10, 3)], ForcedGaps(((0, 4),), 4)),
            ([(0, 30, 1), (3, 30, 1), (9, 30, 2)], ForcedGaps(((1, 3), (4, 9)), 9)),
            ([(0, 1, 5), (2, 9, 3)], ForcedGaps(((0, 2),), 2)),
            ([], ForcedGaps((), 0)),
        ],
    )
    def test_gaps(self, windows, expected):
        assert forced_gaps(Instance.build(windows, Regime.PREEMPT_II)) == expected

    def test_arrival_order_not_id_order(self):
        instance = Instance.build([(6, 20, 2), (0, 20, 2)], Regime.PREEMPT_II)
        assert forced_gaps(instance) == ForcedGaps(((2, 6),), 6)

    def test_split_arrivals(self, split_arrivals):
        gaps = forced_gaps(split_arrivals)
        assert gaps.gaps == ((10, 20),)
        assert gaps.tau_prime == 20
