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
"""Exhaustive ground truth for small instances.

Every optimum is exact on the instance grid. Witness schedules are validated
before they are returned.
"""

from .nonpreemptive import oracle_nonpreemptive
from .preemptive import decide_preemptive, oracle_preemptive
from .subset_sum import subset_sum_reachable

__all__ = [
    "decide_preemptive",
    "oracle_nonpreemptive",
    "oracle_preemptive",
    "subset_sum_reachable",
]
