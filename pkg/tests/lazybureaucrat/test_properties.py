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


import time

import pytest

from lazybureaucrat.data import ObjectiveKind, Regime
from lazybureaucrat.exact import (
    audit_preempt1_min_weight,
    decide_go_home_by,
    infer_bounds,
    minimize_makespan_common_deadline,
    solve_bounded_ratio_dp,
    solve_common_release_dp,
    solve_narrow_window_dp,
    solve_preempt1_ldd,
    solve_unit_ldd,
)
from lazybureaucrat.exact import preempt1 as preempt1_module
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.feasibility import (
    forced_gaps,
    mutate_drop_segment,
    mutate_early_leave,
    mutate_extend_past_deadline,
    validate,
)
from lazybureaucrat.gadgets import Profile, gen_3partition, gen_random
from lazybureaucrat.oracle import oracle_nonpreemptive, oracle_preemptive

pytestmark = pytest.mark.slow

_SEEDS = range(200)


def _nonpreemptive(profile: Profile, seed: int, n: int = 6):
    return gen_random(n, 14, Regime.NONPREEMPTIVE, profile, seed)


class TestNonpreemptiveSolversMatchOracle:
    @pytest.mark.parametrize("seed", _SEEDS)
    def test_unit_ldd(self, seed):
        instance = _nonpreemptive(Profile.UNIT_LENGTH, seed, n=7)
        optimum = oracle_nonpreemptive(instance, ObjectiveKind.TOTAL_WORK)
        assert solve_unit_ldd(instance).value == optimum.value

    @pytest.mark.parametrize("seed", _SEEDS)
    def test_narrow_window(self, seed):
        instance = _nonpreemptive(Profile.NARROW_WINDOW, seed, n=7)
        for objective in ObjectiveKind:
            assert (
                solve_narrow_window_dp(instance, objective).value
                == oracle_nonpreemptive(instance, objective).value
            )

    @pytest.mark.parametrize("seed", _SEEDS)
    def test_bounded_ratio(self, seed):
        instance = _nonpreemptive(Profile.GENERAL, seed)
        bounds = infer_bounds(instance)
        for objective in ObjectiveKind:
            solution = solve_bounded_ratio_dp(
                instance, objective, bounds.ratio, bounds.delta
            )
            assert solution.value == oracle_nonpreemptive(instance, objective).value

    @pytest.mark.parametrize("seed", _SEEDS)
    def test_common_release(self, seed):
        instance = _nonpreemptive(Profile.COMMON_ARRIVAL, seed)
        for objective in ObjectiveKind:
            assert (
                solve_common_release_dp(instance, objective).value
                == oracle_nonpreemptive(instance, objective).value
            )


class TestPreemptiveSolversMatchOracle:
    @pytest.mark.parametrize("seed", range(100))
    def test_preempt1_ldd(self, seed):
        instance = gen_random(5, 20, Regime.PREEMPT_I, Profile.GENERAL, seed)
        for objective in (ObjectiveKind.TOTAL_WORK, ObjectiveKind.MAKESPAN):
            assert (
                solve_preempt1_ldd(instance, objective).value
                == oracle_preemptive(instance, objective).value
            )

    @pytest.mark.parametrize("seed", range(100))
    def test_preempt1_weight_mismatches_are_flagged(self, mocker, seed):
        logger = mocker.patch.object(preempt1_module, "_logger")
        instance = gen_random(2 + seed % 2, 12, Regime.PREEMPT_I, Profile.GENERAL, seed)
        instance = instance.model_copy(update={"scale": 3 * instance.n})
        audit = audit_preempt1_min_weight(instance)
        assert audit.solver >= audit.oracle
        assert audit.flagged == (audit.solver != audit.oracle)
        assert logger.warning.called == audit.flagged

    @pytest.mark.parametrize("seed", range(20))
    def test_common_deadline_decisions(self, seed):
        instance = gen_random(4, 12, Regime.PREEMPT_II, Profile.COMMON_DEADLINE, seed)
        optimum = oracle_preemptive(instance, ObjectiveKind.MAKESPAN).value
        assert decide_go_home_by(instance, optimum) is not None
        for T in range(forced_gaps(instance).tau_prime, optimum):
            assert decide_go_home_by(instance, T) is None


class TestCommonDeadlineScale:
    def test_large_instances(self):
        started = time.perf_counter()
        for seed in range(50):
            instance = gen_random(
                12, 60, Regime.PREEMPT_II, Profile.COMMON_DEADLINE, seed
            )
            result = minimize_makespan_common_deadline(instance, refine=False)
            assert validate(instance, result.schedule) == []
            assert result.schedule.leave_time == result.makespan
            assert result.attained
        assert time.perf_counter() - started < 10

    def test_common_arrival_is_left_to_the_oracle(self):
        instance = gen_random(12, 60, Regime.PREEMPT_II, Profile.COMMON_ARRIVAL, 0)
        with pytest.raises(PreconditionError, match="share one deadline"):
            minimize_makespan_common_deadline(instance)
        with pytest.raises(PreconditionError, match="oracle limited"):
            oracle_preemptive(instance, ObjectiveKind.MAKESPAN)
        small = gen_random(6, 10, Regime.PREEMPT_II, Profile.COMMON_ARRIVAL, 0)
        optimum = oracle_preemptive(small, ObjectiveKind.MAKESPAN)
        assert validate(small, optimum.schedule) == []


def _mutants(instance, schedule):
    for index in range(len(schedule.segments)):
        yield mutate_drop_segment(schedule, index)
    yield mutate_extend_past_deadline(instance, schedule)
    yield mutate_early_leave(schedule)


class TestMutationsAreRejected:
    @pytest.mark.parametrize("m", [1, 2])
    def test_three_partition_canonical(self, m):
        gadget = gen_3partition([4, 5, 6] * m, 15)
        partition = [[3 * b, 3 * b + 1, 3 * b + 2] for b in range(m)]
        schedule = gadget.canonical_schedule(partition)
        for mutant in _mutants(gadget.instance, schedule):
            assert validate(gadget.instance, mutant) != []

    @pytest.mark.parametrize("seed", range(10))
    @pytest.mark.parametrize(
        "regime", [Regime.PREEMPT_I, Regime.PREEMPT_II, Regime.PREEMPT_III]
    )
    def test_preemptive_witnesses(self, seed, regime):
        instance = gen_random(4, 12, regime, Profile.GENERAL, seed)
        schedule = oracle_preemptive(instance, ObjectiveKind.TOTAL_WORK).schedule
        if not schedule.segments:
            pytest.skip("nothing to mutate")
        for mutant in _mutants(instance, schedule):
            assert validate(instance, mutant) != []

    @pytest.mark.parametrize("seed", range(10))
    def test_nonpreemptive_witnesses(self, seed):
        instance = _nonpreemptive(Profile.GENERAL, seed)
        schedule = oracle_nonpreemptive(instance, ObjectiveKind.MAKESPAN).schedule
        if not schedule.segments:
            pytest.skip("nothing to mutate")
        for mutant in _mutants(instance, schedule):
            assert validate(instance, mutant) != []
