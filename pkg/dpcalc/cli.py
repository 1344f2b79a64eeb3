# -*- coding: utf-8 -*-
# BSD 3-Clause License
#
# Copyright (c) 2020-2025, Faster Speeding
# All rights reserved.
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# * Redistributions of source code must retain the above copyright notice, this
#   list of conditions and the following disclaimer.
#
# * Redistributions in binary form must reproduce the above copyright notice,
#   this list of conditions and the following disclaimer in the documentation
#   and/or other materials provided with the distribution.
#
# * Neither the name of the copyright holder nor the names of its
#   contributors may be used to endorse or promote products derived from
#   this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.
"""The `dpcalc` command line interface.

Every command writes one JSON record per line to stdout (or aligned
`key: value` blocks with `--pretty`). Logs go to stderr.
"""
from __future__ import annotations

__all__: list[str] = ["main"]

import dataclasses
import json
import logging
import math
import pathlib
import typing

import click

from . import config as config_
from . import converters
from . import errors
from . import shuffle as shuffle_
from . import subsample as subsample_
from . import verification
from .core import audits
from .core import budgets
from .core import distributions
from .core import files
from .core import mechanisms
from .ldp import composition
from .ldp import deletion
from .ldp import grouposition as grouposition_
from .ldp import purification as purification_
from .ldp import symmetric
from .utility import basic

if typing.TYPE_CHECKING:
    from collections import abc as collections

_LOGGER = logging.getLogger("dpcalc.cli")

EXIT_CHECK_FAILED: typing.Final[int] = 1
EXIT_INVALID: typing.Final[int] = 2

_EXISTING_FILE = click.Path(exists=True, dir_okay=False, path_type=pathlib.Path)
_OUTPUT = click.Path(dir_okay=False, writable=True, path_type=pathlib.Path)
_MODELS = ("replacement", "deletion", "central", "pure", "shuffle")
_TRADEOFF_POINTS = 11


class _InvalidInput(click.ClickException):
    exit_code = EXIT_INVALID


class _Group(click.Group):
    """Group which reports library errors as usage failures (exit code 2)."""

    def invoke(self, ctx: click.Context) -> typing.Any:
        try:
            return super().invoke(ctx)

        except (errors.DPCalcError, OSError, OverflowError) as exc:
            raise _InvalidInput(str(exc)) from None


@dataclasses.dataclass(kw_only=True, slots=True)
class _State:
    config: config_.FullConfig
    pretty: bool = False

    @property
    def limits(self) -> config_.EnumerationLimits:
        return self.config.limits

    def emit(self, record: collections.Mapping[str, typing.Any], /) -> None:
        record = verification.report.jsonable(dict(record))
        if self.pretty:
            click.echo(basic.prettify_record(record))

        else:
            click.echo(json.dumps(record, sort_keys=True))


def _budget_record(kind: str, budget: budgets.PrivacyBudget, /, **inputs: typing.Any) -> dict[str, typing.Any]:
    return {"type": kind, "inputs": inputs, **budget.to_mapping()}


def _load_neighbors(path: pathlib.Path, /) -> list[audits.NeighborPair]:
    try:
        data = json.loads(path.read_text(encoding="utf-8"))

    except json.JSONDecodeError as exc:
        raise errors.ValidationError(f"neighbors: invalid JSON at line {exc.lineno}: {exc.msg}") from None

    if not isinstance(data, list):
        raise errors.ValidationError("neighbors: expected an array of [left, right] pairs")

    pairs: list[audits.NeighborPair] = []
    for entry in typing.cast("list[typing.Any]", data):
        if not isinstance(entry, list) or len(typing.cast("list[typing.Any]", entry)) != 2:
            raise errors.ValidationError("neighbors: expected an array of [left, right] pairs")

        left, right = typing.cast("list[typing.Any]", entry)
        pairs.append(audits.NeighborPair(str(left), str(right)))

    return pairs


def _resolve_reference(mechanism: mechanisms.Mechanism, reference: str, /) -> distributions.Dist:
    """Parse `uniform`, `average`, `row:<label>` or the path of a JSON array of probabilities."""
    named = dict(audits.suggest_references(mechanism))
    if reference in named:
        return named[reference]

    if reference.startswith("row:"):
        return mechanism.row(reference.removeprefix("row:"))

    path = pathlib.Path(reference)
    if not path.is_file():
        raise errors.ValidationError(f"reference: expected uniform, average, row:<label> or a file, not {reference!r}")

    try:
        return distributions.Dist(json.loads(path.read_text(encoding="utf-8")))

    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise errors.ValidationError(f"reference: {exc}") from None


@click.group(cls=_Group)
@click.option("--pretty", is_flag=True, help="Render records as aligned text instead of JSON lines.")
@click.option("--config", "config_path", type=_EXISTING_FILE, default=None, help="YAML or JSON configuration file.")
@click.option("--log-level", default=None, help="Override the configured log level.")
@click.pass_context
def main(ctx: click.Context, pretty: bool, config_path: pathlib.Path | None, log_level: str | None) -> None:
    """Exact privacy audits, bounds and conversions for finite mechanisms."""
    config = config_.get_config_from_file(config_path) if config_path else config_.load_config()
    if log_level:
        config = dataclasses.replace(config, log_level=log_level.upper())

    logging.basicConfig(level=config.log_level or logging.INFO)
    ctx.obj = _State(config=config, pretty=pretty)


@main.command()
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--model", type=click.Choice(_MODELS), required=True, help="Neighbour relation to audit.")
@click.option("--eps", "eps_values", type=float, multiple=True, help="eps values to audit at (repeatable).")
@click.option("--delta", type=float, default=None, help="Find the smallest eps reaching this delta instead.")
@click.option("--reference", default=None, help="Deletion reference: uniform, average, row:<label> or a file.")
@click.option("--neighbors", type=_EXISTING_FILE, default=None, help="JSON array of [left, right] input pairs.")
@click.option("--n", type=int, default=None, help="Number of shuffled users.")
@click.pass_obj
def audit(
    state: _State,
    mechanism_path: pathlib.Path,
    model: str,
    eps_values: tuple[float, ...],
    delta: float | None,
    reference: str | None,
    neighbors: pathlib.Path | None,
    n: int | None,
) -> None:
    """Audit a mechanism file exactly."""
    mechanism = files.load_mechanism(mechanism_path)
    pairs = _load_neighbors(neighbors) if neighbors else None

    if model == "pure":
        state.emit({"type": "audit", "model": model, "eps": audits.audit_pure(mechanism, pairs)})
        return

    audit_at: collections.Callable[[float], float]
    match model:
        case "replacement":
            audit_at = lambda eps: audits.audit_replacement_ldp(mechanism, eps)  # noqa: E731

        case "deletion":
            if reference is None:
                raise click.UsageError("--reference is required for the deletion model")

            dist = _resolve_reference(mechanism, reference)
            audit_at = lambda eps: audits.audit_deletion_ldp(mechanism, dist, eps)  # noqa: E731

        case "central":
            if pairs is None:
                raise click.UsageError("--neighbors is required for the central model")

            audit_at = lambda eps: audits.audit_central(mechanism, pairs, eps)  # noqa: E731

        case _:
            if n is None:
                raise click.UsageError("--n is required for the shuffle model")

            audit_at = lambda eps: shuffle_.audit_shuffle(mechanism, n, eps, limits=state.limits)  # noqa: E731

    if not eps_values and delta is None:
        raise click.UsageError("Pass at least one --eps or a --delta")

    for eps, value in audits.tradeoff_curve(audit_at, eps_values) if eps_values else ():
        state.emit({"type": "audit", "model": model, "eps": eps, "delta": value})

    if delta is not None:
        state.emit({"type": "audit", "model": model, "eps": audits.eps_for_delta(audit_at, delta), "delta": delta})


@main.group(cls=_Group)
def bound() -> None:
    """Closed form privacy bounds."""


@bound.command("deletion-to-replacement")
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.pass_obj
def deletion_to_replacement(state: _State, eps: float, delta: float) -> None:
    """Replacement budget implied by a deletion budget."""
    budget = deletion.deletion_to_replacement_budget(eps, delta)
    state.emit(_budget_record("deletion-to-replacement", budget, eps=eps, delta=delta))


@bound.command()
@click.option("--k", type=int, required=True, help="Number of differing entries.")
@click.option("--eps", type=float, required=True)
@click.option("--delta-prime", type=float, required=True)
@click.option("--delta", type=float, default=0.0, help="Per-randomizer slack of approximate randomizers.")
@click.pass_obj
def grouposition(state: _State, k: int, eps: float, delta_prime: float, delta: float) -> None:
    """Group privacy of k differing entries."""
    params = grouposition_.GroupositionParams(k=k, eps=eps, delta_prime=delta_prime, delta=delta)
    budget = grouposition_.grouposition_budget(params)
    record = _budget_record("grouposition", budget, k=k, eps=eps, delta_prime=delta_prime, delta=delta)
    record["basic_eps"] = grouposition_.basic_grouposition_eps(k, eps)
    state.emit(record)


@bound.command()
@click.option("--eps1", type=float, required=True)
@click.option("--eps2", type=float, required=True)
@click.option("--grid", type=int, default=None, help="Also search a grid for the best achieved composition.")
@click.pass_obj
def compose(state: _State, eps1: float, eps2: float, grid: int | None) -> None:
    """Budget of post-processing one pure randomizer's output with another."""
    record: dict[str, typing.Any] = {
        "type": "compose",
        "inputs": {"eps1": eps1, "eps2": eps2},
        "eps": composition.compose_eps(eps1, eps2),
    }
    if grid is not None:
        record["achieved"] = composition.compose_tightness_search(eps1, eps2, grid)

    state.emit(record)


@bound.command()
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--n", type=int, required=True)
@click.option("--t", type=int, default=None, help="Number of rounds; the valid range is reported when omitted.")
@click.option("--bits", type=int, multiple=True, help="Random bits of each user's randomizer (repeatable).")
@click.pass_obj
def purification(state: _State, eps: float, delta: float, n: int, t: int | None, bits: tuple[int, ...]) -> None:
    """Guarantees of purifying an approximate local protocol."""
    first, last = purification_.feasible_rounds(eps, delta, n)
    record: dict[str, typing.Any] = {
        "type": "purification",
        "inputs": {"eps": eps, "delta": delta, "n": n, "t": t},
        "t_min": first,
        "t_max": math.inf if last is None else last,
    }
    if t is not None:
        params = purification_.PurificationParams(eps=eps, delta=delta, n=n, t=t, random_bits=bits or None)
        record.update(dataclasses.asdict(purification_.purification_bounds(params)))

    state.emit(record)


@bound.command()
@click.option("--n", type=int, required=True)
@click.option("--fail-prob", type=float, default=symmetric.DEFAULT_FAIL_PROB, show_default=True)
@click.pass_obj
def coupon(state: _State, n: int, fail_prob: float) -> None:
    """Users needed for every one of n randomizers to be drawn."""
    n_prime = symmetric.coupon_rounds(n, fail_prob)
    state.emit({"type": "coupon", "inputs": {"n": n, "fail_prob": fail_prob}, "n_prime": n_prime})


@bound.command("subsample")
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--p", type=float, required=True, help="Largest inclusion probability.")
@click.pass_obj
def subsample_bound(state: _State, eps: float, delta: float, p: float) -> None:
    """Budget of running a mechanism on a subsample."""
    state.emit(_budget_record("subsample", subsample_.subsample_budget(eps, delta, p), eps=eps, delta=delta, p=p))


@bound.command("pure-to-approx")
@click.option("--eps-total", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.pass_obj
def pure_to_approx(state: _State, eps_total: float, delta: float) -> None:
    """Approximate budget implied by a pure one."""
    budget = converters.pure_to_approx(eps_total, delta)
    state.emit(_budget_record("pure-to-approx", budget, eps_total=eps_total, delta=delta))


@bound.command("shuffle-to-ldp")
@click.option("--eps-s", type=float, required=True)
@click.option("--delta-s", type=float, required=True)
@click.option("--n", type=int, required=True)
@click.pass_obj
def shuffle_to_ldp(state: _State, eps_s: float, delta_s: float, n: int) -> None:
    """LDP budget of the randomizer of a shuffle DP protocol."""
    budget = shuffle_.shuffle_to_ldp_budget(eps_s, delta_s, n)
    state.emit(_budget_record("shuffle-to-ldp", budget, eps_s=eps_s, delta_s=delta_s, n=n))


@bound.command()
@click.option("--eps-l", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--n", type=int, required=True)
@click.option("--gamma", type=float, default=1.0, show_default=True, help="Fraction of honest users.")
@click.pass_obj
def amplification(state: _State, eps_l: float, delta: float, n: int, gamma: float) -> None:
    """Central budget of shuffling n eps_l-LDP reports."""
    params = shuffle_.AmplificationParams(eps_l=eps_l, delta=delta, n=n, gamma=gamma)
    state.emit(
        {
            "type": "amplification",
            "inputs": {"eps_l": eps_l, "delta": delta, "n": n, "gamma": gamma},
            "eps": shuffle_.amplification_eps(params),
            "delta": delta,
            "effective_n": params.effective_n,
            "cutoff": params.feasibility_cutoff,
        }
    )


@main.group(cls=_Group)
def convert() -> None:
    """Constructive conversions which write mechanism files."""


@convert.command("approx-to-pure")
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--eta", type=float, required=True, help="Weight of the uniform distribution.")
@click.option("--neighbors", type=_EXISTING_FILE, default=None, help="JSON array of [left, right] input pairs.")
@click.option("--out", type=_OUTPUT, required=True)
@click.pass_obj
def approx_to_pure(
    state: _State,
    mechanism_path: pathlib.Path,
    eps: float,
    delta: float,
    eta: float,
    neighbors: pathlib.Path | None,
    out: pathlib.Path,
) -> None:
    """Make an approximately private mechanism pure by mixing in the uniform distribution."""
    mechanism = files.load_mechanism(mechanism_path)
    pairs = _load_neighbors(neighbors) if neighbors else None
    mixed, eps_prime = converters.approx_to_pure_finite(mechanism, eps, delta, eta, neighbors=pairs)
    files.dump_mechanism(mixed, out)
    state.emit(
        {
            "type": "approx-to-pure",
            "inputs": {"eps": eps, "delta": delta, "eta": eta},
            "eps": eps_prime,
            "out": str(out),
        }
    )


@convert.command("rr-decompose")
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--x", "x", required=True, help="First input label.")
@click.option("--x-prime", "x_prime", required=True, help="Second input label.")
@click.option("--eps", type=float, default=None, help="Decompose at a looser budget than the tight one.")
@click.option("--out", type=_OUTPUT, required=True)
@click.pass_obj
def rr_decompose(
    state: _State, mechanism_path: pathlib.Path, x: str, x_prime: str, eps: float | None, out: pathlib.Path
) -> None:
    """Write two rows of a pure mechanism as post-processed randomized response."""
    mechanism = files.load_mechanism(mechanism_path)
    q = converters.rr_decompose_pure(mechanism, x, x_prime, eps=eps)
    files.dump_mechanism(q, out)
    tight = audits.audit_pure(mechanism.restrict((x, x_prime)))
    state.emit({"type": "rr-decompose", "inputs": {"x": x, "x_prime": x_prime}, "eps": tight if eps is None else eps})


@convert.command()
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--reference", required=True, help="uniform, average, row:<label> or a file.")
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--out", type=_OUTPUT, required=True)
@click.pass_obj
def trim(
    state: _State, mechanism_path: pathlib.Path, reference: str, eps: float, delta: float, out: pathlib.Path
) -> None:
    """Make a deletion LDP randomizer pure by moving each row at most delta."""
    mechanism = files.load_mechanism(mechanism_path)
    dist = _resolve_reference(mechanism, reference)
    trimmed = deletion.trim_to_pure_deletion(mechanism, dist, eps, delta)
    files.dump_mechanism(trimmed, out)
    moved = max(distributions.tv_distance(p, q) for p, q in zip(mechanism.rows, trimmed.rows, strict=True))
    state.emit({"type": "trim", "inputs": {"eps": eps, "delta": delta, "reference": reference}, "moved": moved})


@convert.command()
@click.argument("mechanism_paths", metavar="MECHANISM...", type=_EXISTING_FILE, nargs=-1, required=True)
@click.option("--coin", type=click.Choice([model.value for model in symmetric.CoinModel]), default="private")
@click.option("--fail-prob", type=float, default=symmetric.DEFAULT_FAIL_PROB, show_default=True)
@click.option("--out", type=_OUTPUT, required=True)
@click.pass_obj
def symmetrize(
    state: _State, mechanism_paths: tuple[pathlib.Path, ...], coin: str, fail_prob: float, out: pathlib.Path
) -> None:
    """Compile several randomizers into one every user can run."""
    randomizers = [files.load_mechanism(path) for path in mechanism_paths]
    compiled = symmetric.symmetrize(randomizers, coin, fail_prob=fail_prob)
    files.dump_mechanism(compiled.combined, out)
    state.emit(
        {
            "type": "symmetrize",
            "inputs": {"count": len(randomizers), "coin": coin, "fail_prob": fail_prob},
            "eps": audits.audit_pure(compiled.combined) if compiled.coin_model is symmetric.CoinModel.PRIVATE else None,
            "n_prime": compiled.n_prime,
        }
    )


@convert.command("replacement-to-deletion")
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--x0", required=True, help="Input whose row becomes the reference.")
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.pass_obj
def replacement_to_deletion(state: _State, mechanism_path: pathlib.Path, x0: str, eps: float, delta: float) -> None:
    """Deletion reference and budget of a replacement LDP randomizer."""
    mechanism = files.load_mechanism(mechanism_path)
    reference, budget = deletion.replacement_to_deletion(mechanism, x0, eps, delta)
    record = _budget_record("replacement-to-deletion", budget, x0=x0, eps=eps, delta=delta)
    record["reference"] = reference.mass.tolist()
    state.emit(record)


@convert.command()
@click.option("--eps", type=float, required=True)
@click.option("--delta", type=float, required=True)
@click.option("--out", type=_OUTPUT, required=True)
@click.pass_obj
def counterexample(state: _State, eps: float, delta: float, out: pathlib.Path) -> None:
    """Write the deletion LDP randomizer which breaks (2 eps, 2 delta)-replacement."""
    randomizer = deletion.build_counterexample(eps, delta)
    files.dump_mechanism(randomizer, out)
    state.emit(
        {
            "type": "counterexample",
            "inputs": {"eps": eps, "delta": delta},
            "deletion_delta": audits.audit_deletion_ldp(randomizer, distributions.uniform_dist(3), eps),
            "replacement_delta": audits.audit_replacement_ldp(randomizer, 2 * eps),
        }
    )


@convert.command("randomized-response")
@click.option("--eps", type=float, required=True)
@click.option("--k", type=int, default=2, show_default=True, help="Number of symbols.")
@click.option("--out", type=_OUTPUT, required=True)
@click.pass_obj
def randomized_response(state: _State, eps: float, k: int, out: pathlib.Path) -> None:
    """Write k-ary randomized response."""
    files.dump_mechanism(mechanisms.randomized_response(eps, k), out)
    state.emit({"type": "randomized-response", "inputs": {"eps": eps, "k": k}, "out": str(out)})


@main.group(cls=_Group)
def simulate() -> None:
    """Exact simulations of shuffled and subsampled protocols."""


def _default_eps_values(eps_l: float, /) -> list[float]:
    return basic.unit_grid(_TRADEOFF_POINTS, stop=eps_l if math.isfinite(eps_l) and eps_l > 0 else 1.0).tolist()


@simulate.command("shuffle")
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--n", type=int, required=True, help="Number of users.")
@click.option("--gamma", type=float, default=1.0, show_default=True, help="Fraction of honest users.")
@click.option("--eps", "eps_values", type=float, multiple=True, help="eps values to audit at (repeatable).")
@click.option("--delta", type=float, default=None, help="Find the smallest eps reaching this delta instead.")
@click.pass_obj
def simulate_shuffle(
    state: _State,
    mechanism_path: pathlib.Path,
    n: int,
    gamma: float,
    eps_values: tuple[float, ...],
    delta: float | None,
) -> None:
    """Exact tradeoff of shuffling n users' reports, next to the amplification bound."""
    randomizer = files.load_mechanism(mechanism_path)
    eps_l = audits.audit_pure(randomizer)

    def audit_at(eps: float, /) -> float:
        return shuffle_.audit_shuffle(randomizer, n, eps, limits=state.limits)

    if delta is None:
        for eps, value in audits.tradeoff_curve(audit_at, eps_values or _default_eps_values(eps_l)):
            state.emit({"type": "shuffle", "n": n, "eps": eps, "delta": value})

        return

    state.emit({"type": "shuffle", "n": n, "eps": audits.eps_for_delta(audit_at, delta), "delta": delta})
    record: dict[str, typing.Any] = {"type": "amplification", "eps_l": eps_l, "n": n, "gamma": gamma, "delta": delta}
    try:
        params = shuffle_.AmplificationParams(eps_l=eps_l, delta=delta, n=n, gamma=gamma)

    except errors.ValidationError as exc:
        record.update(eps=None, reason=exc.message)

    else:
        record["eps"] = shuffle_.amplification_eps(params)

    state.emit(record)


@simulate.command("subsample")
@click.argument("mechanism_path", metavar="MECHANISM", type=_EXISTING_FILE)
@click.option("--n", type=int, required=True, help="Dataset size.")
@click.option("--m", type=int, required=True, help="Sample size.")
@click.option("--eps", "eps_values", type=float, multiple=True, help="eps values to audit at (repeatable).")
@click.pass_obj
def simulate_subsample(
    state: _State, mechanism_path: pathlib.Path, n: int, m: int, eps_values: tuple[float, ...]
) -> None:
    """Exactly audit a base mechanism over m record datasets run on a size m sample of n records."""
    base = files.load_mechanism(mechanism_path)
    subsampled = subsample_.build_subsampled(base, n, m, limits=state.limits)
    base_eps = audits.audit_pure(base, subsample_.substitution_neighbors(base.inputs))
    neighbors = subsample_.substitution_neighbors(subsampled.inputs)
    state.emit(
        {
            "type": "subsample",
            "inputs": {"n": n, "m": m},
            "base_eps": base_eps,
            "eps": audits.audit_pure(subsampled, neighbors),
            "bound_eps": subsample_.subsample_budget(base_eps, 0.0, m / n).eps,
        }
    )
    for eps in eps_values:
        delta = audits.audit_central(subsampled, neighbors, eps)
        state.emit({"type": "subsample", "n": n, "m": m, "eps": eps, "delta": delta})


@main.group(cls=_Group, invoke_without_command=True)
@click.option(
    "--suite",
    type=click.Choice([verification.suites.ALL_SUITES, *verification.SUITES]),
    default=verification.suites.ALL_SUITES,
    show_default=True,
)
@click.option("--seed", type=int, default=None, help="Seed of the property suites (defaults to the configured seed).")
@click.option("--output", type=_OUTPUT, default=None, help="Write the report here instead of stdout.")
@click.option("--timing", is_flag=True, help="Include the wall time in the report.")
@click.pass_context
def verify(ctx: click.Context, suite: str, seed: int | None, output: pathlib.Path | None, timing: bool) -> None:
    """Run the property suites and write a JSON lines report."""
    if ctx.invoked_subcommand is not None:
        return

    state: _State = ctx.obj
    result = verification.run_suite(suite, state.config.seed if seed is None else seed, limits=state.limits)
    if output is not None:
        result.write(output, timing=timing)

    elif state.pretty:
        for entry in result.iter_mappings(timing=timing):
            state.emit(entry)

    else:
        click.echo(result.dumps(timing=timing), nl=False)

    if not result.passed:
        _LOGGER.error("%s of %s checks failed", len(result.failed), len(result.records))
        ctx.exit(EXIT_CHECK_FAILED)


@verify.command("subsample")
@click.option("--n", type=int, required=True, help="Dataset size.")
@click.option("--m", type=int, required=True, help="Sample size.")
@click.option("--eps", type=float, required=True)
@click.pass_context
def verify_subsample(ctx: click.Context, n: int, m: int, eps: float) -> None:
    """Check the subsampling bound is met exactly by its worst case base."""
    state: _State = ctx.obj
    result = subsample_.verify_subsample_tightness(eps, n, m, limits=state.limits)
    record = dataclasses.asdict(result)
    record.update(type="subsample-tightness", p=result.p, gap=result.gap, passed=result.passed)
    state.emit(record)
    if not result.passed:
        ctx.exit(EXIT_CHECK_FAILED)
