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

from lazybureaucrat.data import Instance, ObjectiveKind, Regime, Schedule, Solution
from lazybureaucrat.exact import (
    WeightAudit,
    audit_preempt1_min_weight,
    solve_preempt1_ldd,
    solve_preempt1_min_weight,
)
from lazybureaucrat.exact import preempt1 as preempt1_module
from lazybureaucrat.exceptions import PreconditionError
from lazybureaucrat.feasibility import is_feasible
from lazybureaucrat.gadgets import Profile, gen_random
from lazybureaucrat.oracle import oracle_preemptive


class TestLatestDeadlineFirst:
    def test_short_window_last(self):
        instance = Instance.build([(0, 5, 5), (0, 10, 1)], Regime.PREEMPT_I)
        solution = solve_preempt1_ldd(instance, ObjectiveKind.TOTAL_WORK)
        assert solution.value == 5
        assert solution.schedule.job_order() == [1, 0]
        assert solve_preempt1_ldd(instance, ObjectiveKind.MAKESPAN).value == 5

    def test_worked_example(self, worked_example):
        instance = worked_example.with_regime(Regime.PREEMPT_I)
        for objective in (ObjectiveKind.TOTAL_WORK, ObjectiveKind.MAKESPAN):
            assert solve_preempt1_ldd(instance, objective).value == 10
            assert oracle_preemptive(instance, objective).value == 10

    @pytest.mark.parametrize("seed", range(6))
    @pytest.mark.parametrize(
        "objective", [ObjectiveKind.TOTAL_WORK, ObjectiveKind.MAKESPAN]
    )
    def test_matches_oracle(self, seed, objective):
        instance = gen_random(5, 12, Regime.PREEMPT_I, Profile.GENERAL, seed)
        assert (
            solve_preempt1_ldd(instance, objective).value
            == oracle_preemptive(instance, objective).value
        )

    def test_weighted_rejected(self, worked_example):
        instance = worked_example.with_regime(Regime.PREEMPT_I)
        with pytest.raises(PreconditionError):
            solve_preempt1_ldd(instance, ObjectiveKind.WEIGHTED_COMPLETED)

    def test_other_regime_rejected(self, worked_example):
        with pytest.raises(PreconditionError, match="preempt1-ldd needs"):
            solve_preempt1_ldd(worked_example, ObjectiveKind.TOTAL_WORK)


class TestMinWeight:
    @pytest.mark.parametrize(
        "windows, scale, expected",
        [
            ([(0, 3, 3), (0, 6, 3)], 6, 3),
            ([(0, 4, 4)], 3, 4),
            ([], 1, 0),
        ],
    )
    def test_values(self, windows, scale, expected):
        instance = Instance.build(windows, Regime.PREEMPT_I, scale=scale)
        solution = solve_preempt1_min_weight(instance)
        assert solution.value == expected
        assert is_feasible(instance, solution.schedule)

    def test_coarse_grid_rejected(self):
        instance = Instance.build([(0, 3, 3), (0, 6, 3)], Regime.PREEMPT_I)
        with pytest.raises(PreconditionError, match="scale >= 6"):
            solve_preempt1_min_weight(instance)

    def test_audit_agrees(self, mocker):
        logger = mocker.patch.object(preempt1_module, "_logger")
        instance = Instance.build([(0, 3, 3), (0, 6, 3)], Regime.PREEMPT_I, scale=6)
        assert audit_preempt1_min_weight(instance) == WeightAudit(3, 3, False)
        logger.warning.assert_not_called()

    def test_audit_flags_mismatch(self, mocker):
        logger = mocker.patch.object(preempt1_module, "_logger")
        mocker.patch.object(
            preempt1_module,
            "oracle_preemptive",
            return_value=Solution(Schedule(), 0),
        )
        instance = Instance.build([(0, 4, 4)], Regime.PREEMPT_I, scale=3)
        audit = audit_preempt1_min_weight(instance)
        assert audit.flagged
        assert (audit.solver, audit.oracle) == (4, 0)
        logger.warning.assert_called_once()
        assert logger.warning.call_args.args == ("min_weight_mismatch",)
        assert "job 0 arrival=0" in logger.warning.call_args.kwargs["instance"]

    @pytest.mark.parametrize("seed", range(4))
    def test_audit_reports_consistently(self, mocker, seed):
        logger = mocker.patch.object(preempt1_module, "_logger")
        instance = gen_random(2, 12, Regime.PREEMPT_I, Profile.GENERAL, seed)
        instance = instance.model_copy(update={"scale": 3 * instance.n})
        audit = audit_preempt1_min_weight(instance)
        assert audit.flagged == (audit.solver != audit.oracle)
        assert logger.warning.called == audit.flagged
        assert audit.solver >= audit.oracle
