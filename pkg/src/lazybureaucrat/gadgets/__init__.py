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
"""Reduction gadgets and random corpora."""

from .corpus import Profile, gen_random
from .reductions import (
    BoundedDeltaGadget,
    Preempt2Gadget,
    SubsetSumGadget,
    ThreePartitionGadget,
    gen_3partition,
    gen_bounded_delta,
    gen_limiting_example,
    gen_preempt2_subset_sum,
    gen_subset_sum_nonpreemptive,
)

__all__ = [
    "BoundedDeltaGadget",
    "Preempt2Gadget",
    "Profile",
    "SubsetSumGadget",
    "ThreePartitionGadget",
    "gen_3partition",
    "gen_bounded_delta",
    "gen_limiting_example",
    "gen_preempt2_subset_sum",
    "gen_random",
    "gen_subset_sum_nonpreemptive",
]
