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
"""Command Line Entrypoint.

``lbp <command>`` parses instance files, runs a solver, the oracle, the
validator or a generator, and prints results on stdout. Logs go to stderr.

Exit codes: 0 success or YES, 1 NO or violations found, 2 precondition, 3
parse error, 4 internal validation failure, 5 solver/oracle mismatch.
"""

import argparse
import sys
from collections.abc import Callable, Sequence
from fractions import Fraction
from pathlib import Path

from pydantic import ValidationError

from lazybureaucrat.config import ConfigManager
from lazybureaucrat.core.logging import LoggingFactory, get_logger, timed
from lazybureaucrat.data import (
    Instance,
    ObjectiveKind,
    Regime,
    Solution,
    parse_instance,
    parse_schedule,
    serialize_instance,
    serialize_schedule,
)
from lazybureaucrat.exact import (
    decide_go_home_by,
    infer_bounds,
    minimize_makespan_common_deadline,
    solve_bounded_ratio_dp,
    solve_common_release_dp,
    solve_narrow_window_dp,
    solve_preempt1_ldd,
    solve_preempt1_min_weight,
    solve_unit_ldd,
)
from lazybureaucrat.exceptions import LbpError, ParseError, PreconditionError
from lazybureaucrat.feasibility import forced_gaps, validate
from lazybureaucrat.gadgets import (
    Profile,
    gen_3partition,
    gen_bounded_delta,
    gen_limiting_example,
    gen_preempt2_subset_sum,
    gen_random,
    gen_subset_sum_nonpreemptive,
)
from lazybureaucrat.oracle import oracle_nonpreemptive, oracle_preemptive

_logger = get_logger(__name__)

ALGORITHMS = (
    "auto",
    "unit-ldd",
    "narrow-dp",
    "ratio-dp",
    "common-release",
    "preempt1-ldd",
    "preempt1-weight",
    "common-deadline",
)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise PreconditionError(f"cannot read {path}: {e.strerror}") from e
    except UnicodeDecodeError as e:
        raise ParseError(f"{path} is not UTF-8 text: {e.reason}") from e


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise PreconditionError(f"cannot write {out}: {e.strerror}") from e


def _instance(args: argparse.Namespace) -> Instance:
    return parse_instance(_read(args.instance))


def _pick_algorithm(instance: Instance, objective: ObjectiveKind) -> str:
    """Choose the solver the instance's structure admits."""
    match instance.regime:
        case Regime.NONPREEMPTIVE:
            if instance.unit_lengths and objective is ObjectiveKind.TOTAL_WORK:
                return "unit-ldd"
            if all(job.window < 2 * job.length for job in instance.jobs):
                return "narrow-dp"
            if instance.common_arrival is not None:
                return "common-release"
            return "ratio-dp"
        case Regime.PREEMPT_I:
            if objective is ObjectiveKind.WEIGHTED_COMPLETED:
                return "preempt1-weight"
            return "preempt1-ldd"
        case Regime.PREEMPT_II if instance.common_deadline is not None:
            return "common-deadline"
    raise PreconditionError(
        f"no exact solver for {instance.regime.value} instances of this shape;"
        " use the oracle"
    )


def _solve(
    instance: Instance,
    objective: ObjectiveKind,
    algo: str,
    ratio: Fraction | None = None,
    delta: Fraction | None = None,
) -> tuple[str, Solution, bool | None]:
    """Run one solver; the flag says whether a makespan optimum is attained."""
    if algo == "auto":
        algo = _pick_algorithm(instance, objective)
        _logger.info("algorithm chosen", algo=algo)
    match algo:
        case "unit-ldd":
            if objective is not ObjectiveKind.TOTAL_WORK:
                raise PreconditionError("unit-ldd minimises total work only")
            return algo, solve_unit_ldd(instance), None
        case "narrow-dp":
            return algo, solve_narrow_window_dp(instance, objective), None
        case "ratio-dp":
            bounds = infer_bounds(instance)
            solution = solve_bounded_ratio_dp(
                instance,
                objective,
                ratio if ratio is not None else max(bounds.ratio, Fraction(1)),
                delta if delta is not None else bounds.delta,
            )
            return algo, solution, None
        case "common-release":
            return algo, solve_common_release_dp(instance, objective), None
        case "preempt1-ldd":
            return algo, solve_preempt1_ldd(instance, objective), None
        case "preempt1-weight":
            if objective is not ObjectiveKind.WEIGHTED_COMPLETED:
                raise PreconditionError("preempt1-weight minimises completed weight")
            return algo, solve_preempt1_min_weight(instance), None
        case "common-deadline":
            if objective is not ObjectiveKind.MAKESPAN:
                raise PreconditionError("common-deadline minimises makespan only")
            result = minimize_makespan_common_deadline(instance)
            return algo, Solution(result.schedule, result.makespan), result.attained
    raise PreconditionError(f"unknown algorithm {algo!r}")


def _oracle(
    instance: Instance, objective: ObjectiveKind, prune: bool = True
) -> Solution:
    if instance.regime is Regime.NONPREEMPTIVE:
        return oracle_nonpreemptive(instance, objective, prune=prune)
    return oracle_preemptive(instance, objective, prune=prune)


def _report(value: int, algo: str, instance: Instance) -> None:
    print(f"value={value} algo={algo} scale={instance.scale}")


def cmd_solve(args: argparse.Namespace) -> int:
    """Solve an instance with a chosen or inferred algorithm."""
    instance = _instance(args)
    algo, solution, attained = _solve(
        instance, ObjectiveKind(args.objective), args.algo, args.ratio, args.delta
    )
    _report(solution.value, algo, instance)
    if attained is not None:
        print(f"attained={str(attained).lower()}")
    _write(serialize_schedule(solution.schedule), args.out)
    return 0


def cmd_decide(args: argparse.Namespace) -> int:
    """Decide whether the worker can go home at ``--T``."""
    instance = _instance(args)
    schedule = decide_go_home_by(instance, args.T, allow_search=args.search)
    if schedule is None:
        print("NO")
        return 1
    print("YES")
    _write(serialize_schedule(schedule), args.out)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    """Report the exhaustive optimum."""
    instance = _instance(args)
    solution = _oracle(instance, ObjectiveKind(args.objective), prune=not args.no_prune)
    _report(solution.value, "oracle", instance)
    _write(serialize_schedule(solution.schedule), args.out)
    return 0


def cmd_validate(args: argparse.Namespace) -> int:
    """Replay a schedule and print its violations."""
    instance = _instance(args)
    schedule = parse_schedule(_read(args.schedule))
    violations = validate(instance, schedule)
    for violation in violations:
        print(violation)
    if violations:
        return 1
    print("OK")
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    """Run a solver and the oracle on the same objective."""
    instance = _instance(args)
    objective = ObjectiveKind(args.objective)
    algo, solution, _ = _solve(instance, objective, args.algo, args.ratio, args.delta)
    optimum = _oracle(instance, objective)
    print(f"solver={solution.value} oracle={optimum.value}")
    if solution.value != optimum.value:
        _logger.warning(
            "solver_oracle_mismatch",
            algo=algo,
            solver=solution.value,
            oracle=optimum.value,
            instance=serialize_instance(instance),
        )
        return 5
    return 0


def _gadget_text(instance: Instance, **notes: object) -> str:
    header = "".join(f"# {key}={value}\n" for key, value in notes.items())
    return header + serialize_instance(instance)


def cmd_gen(args: argparse.Namespace) -> int:
    """Write a generated instance."""
    match args.gadget:
        case "subset-sum":
            gadget = gen_subset_sum_nonpreemptive(args.values, args.target)
            text = _gadget_text(gadget.instance, reachable=gadget.reachable)
        case "three-partition":
            gadget = gen_3partition(args.values, args.bound)
            text = _gadget_text(gadget.instance, large_job=gadget.large_job)
        case "bounded-delta":
            gadget = gen_bounded_delta(args.values, args.bound, args.delta)
            text = _gadget_text(gadget.instance, long_jobs=list(gadget.long_jobs))
        case "preempt2":
            gadget = gen_preempt2_subset_sum(args.values, args.target)
            text = _gadget_text(
                gadget.instance,
                reachable=gadget.reachable,
                leave_time=gadget.leave_time,
            )
        case "limiting":
            text = serialize_instance(gen_limiting_example(args.n, args.scale))
        case _:
            instance = gen_random(
                args.n, args.K, Regime(args.regime), Profile(args.profile), args.seed
            )
            text = serialize_instance(instance)
    _write(text, args.out)
    return 0


def _ratio_text(value: Fraction | None) -> str:
    return "inf" if value is None else str(value)


def cmd_stats(args: argparse.Namespace) -> int:
    """Print structural statistics, one ``key=value`` per line."""
    instance = _instance(args)
    bounds = infer_bounds(instance)
    windows = [job.window for job in instance.jobs]
    if not windows:
        spread: Fraction | None = Fraction(1)
    elif min(windows) == 0:
        spread = None
    else:
        spread = Fraction(max(windows), min(windows))
    gaps = forced_gaps(instance)
    stats = {
        "n": instance.n,
        "K": instance.horizon,
        "scale": instance.scale,
        "regime": instance.regime.value,
        "R": _ratio_text(bounds.ratio),
        "R_max<2": str(bounds.ratio < 2).lower(),
        "Delta": _ratio_text(bounds.delta),
        "W": _ratio_text(spread),
        "forced_gaps": " ".join(f"[{s},{e})" for s, e in gaps.gaps) or "none",
        "tau_prime": gaps.tau_prime,
    }
    for key, value in stats.items():
        print(f"{key}={value}")
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lbp", description="Exact algorithms for the Lazy Bureaucrat Problem."
    )
    parser.add_argument("--log-level", help="logging level name or number")
    parser.add_argument("--workers", type=int, help="threads for the makespan sweep")
    parser.add_argument("--oracle-max-jobs", type=int, help="oracle job limit")
    parser.add_argument("--oracle-max-horizon", type=int, help="oracle horizon limit")
    parser.add_argument("--state-budget", type=int, help="dynamic program state cap")
    parser.add_argument("--refine-cap", type=int, help="largest grid refinement")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable[[argparse.Namespace], int], **kw):
        sub = commands.add_parser(name, help=handler.__doc__, **kw)
        sub.set_defaults(handler=handler)
        return sub

    objectives = [kind.value for kind in ObjectiveKind]

    def solver_options(sub: argparse.ArgumentParser) -> None:
        sub.add_argument("instance")
        sub.add_argument("--objective", choices=objectives, default="total_work")
        sub.add_argument("--algo", choices=ALGORITHMS, default="auto")
        sub.add_argument("--ratio", type=Fraction, help="window bound R for ratio-dp")
        sub.add_argument("--delta", type=Fraction, help="length bound for ratio-dp")

    solve = command("solve", cmd_solve)
    solver_options(solve)
    solve.add_argument("--out")

    decide = command("decide", cmd_decide)
    decide.add_argument("instance")
    decide.add_argument("--T", type=int, required=True)
    decide.add_argument(
        "--search", action="store_true", help="allow differing deadlines"
    )
    decide.add_argument("--out")

    oracle = command("oracle", cmd_oracle)
    oracle.add_argument("instance")
    oracle.add_argument("--objective", choices=objectives, default="total_work")
    oracle.add_argument("--no-prune", action="store_true")
    oracle.add_argument("--out")

    check = command("validate", cmd_validate)
    check.add_argument("instance")
    check.add_argument("schedule")

    solver_options(command("compare", cmd_compare))

    stats = command("stats", cmd_stats)
    stats.add_argument("instance")

    gen = command("gen", cmd_gen)
    gadgets = gen.add_subparsers(dest="gadget", required=True)
    for name in ("subset-sum", "preempt2"):
        sub = gadgets.add_parser(name)
        sub.add_argument("--values", type=int, nargs="+", required=True)
        sub.add_argument("--target", type=int, required=True)
    for name in ("three-partition", "bounded-delta"):
        sub = gadgets.add_parser(name)
        sub.add_argument("--values", type=int, nargs="+", required=True)
        sub.add_argument("--bound", type=int, required=True)
        if name == "bounded-delta":
            sub.add_argument("--delta", type=int, required=True)
    limiting = gadgets.add_parser("limiting")
    limiting.add_argument("--n", type=int, default=4)
    limiting.add_argument("--scale", type=int, default=1)
    corpus = gadgets.add_parser("random")
    corpus.add_argument("--n", type=int, required=True)
    corpus.add_argument("--K", type=int, required=True)
    corpus.add_argument(
        "--regime", choices=[r.value for r in Regime], default="nonpreemptive"
    )
    corpus.add_argument(
        "--profile", choices=[p.value for p in Profile], default="general"
    )
    corpus.add_argument("--seed", type=int, default=0)
    for sub in gadgets.choices.values():
        sub.add_argument("--out")
    return parser


def _overrides(args: argparse.Namespace) -> dict[str, dict[str, object]]:
    """Map global flags onto configuration overrides."""
    search = {
        "workers": args.workers,
        "nonpreemptive_max_jobs": args.oracle_max_jobs,
        "preemptive_max_jobs": args.oracle_max_jobs,
        "nonpreemptive_max_horizon": args.oracle_max_horizon,
        "preemptive_max_horizon": args.oracle_max_horizon,
        "ratio_state_budget": args.state_budget,
        "decide_state_budget": args.state_budget,
        "refine_scale_cap": args.refine_cap,
    }
    overrides: dict[str, dict[str, object]] = {
        "search": {key: value for key, value in search.items() if value is not None}
    }
    if args.log_level is not None:
        overrides["logging"] = {"level": args.log_level}
    return overrides


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command and return its exit code."""
    from lazybureaucrat.config.models import app, logging, search  # noqa: F401

    args = _parser().parse_args(argv)
    try:
        config = ConfigManager.reload(**_overrides(args))
    except ValidationError as e:
        print(f"error: invalid option: {e}", file=sys.stderr)
        return PreconditionError.exit_code
    LoggingFactory(config.app.name, config.logging.level_as_int)
    try:
        with timed(_logger, "command finished", command=args.command):
            return args.handler(args)
    except LbpError as e:
        _logger.debug("command failed", command=args.command, error=str(e))
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code


def main() -> None:
    """Entrypoint."""
    sys.exit(run())
