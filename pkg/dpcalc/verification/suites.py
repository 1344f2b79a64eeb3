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
"""Property suites checked by `dpcalc verify`.

Every check draws from its own generator seeded by the run seed and the
check id, so a check's outcome doesn't depend on which other checks ran.
"""
from __future__ import annotations

__all__: list[str] = ["SUITES", "check_rng", "run_suite", "subset_hockey_stick"]

import dataclasses
import logging
import math
import time
import typing
import zlib
from collections import abc as collections

import numpy

from .. import config as config_
from .. import converters
from .. import errors
from .. import shuffle
from .. import subsample
from ..core import audits
from ..core import budgets
from ..core import distributions
from ..core import mechanisms
from ..ldp import composition
from ..ldp import deletion
from ..ldp import grouposition
from ..ldp import purification
from ..ldp import symmetric
from ..utility import basic
from ..utility import constants
from . import report

if typing.TYPE_CHECKING:
    import numpy.typing as npt

    _Records = collections.Iterator[report.CheckRecord]

_LOGGER = logging.getLogger("dpcalc.verification")

_CheckT = collections.Callable[
    [numpy.random.Generator, config_.EnumerationLimits], collections.Iterable[report.CheckRecord]
]


@dataclasses.dataclass(frozen=True, slots=True)
class _Check:
    check_id: str
    callback: _CheckT


SUITES: dict[str, list[_Check]] = {
    "dp": [],
    "ldp": [],
    "counterexample": [],
    "appendix": [],
    "shuffle": [],
    "subsample": [],
}
"""Checks of each suite, in the order they run."""

ALL_SUITES: typing.Final[str] = "all"


def _check(suite: str, name: str, /) -> collections.Callable[[_CheckT], _CheckT]:
    def decorator(callback: _CheckT, /) -> _CheckT:
        SUITES[suite].append(_Check(f"{suite}.{name}", callback))
        return callback

    return decorator


def check_rng(seed: int, check_id: str, /) -> numpy.random.Generator:
    """PCG64 generator for one check, seeded by `(seed, crc32(check_id))`."""
    return numpy.random.default_rng([seed, zlib.crc32(check_id.encode("utf-8"))])


def run_suite(name: str, seed: int, /, *, limits: config_.EnumerationLimits | None = None) -> report.Report:
    """Run a suite (or `"all"` of them) and collect its report.

    Raises
    ------
    dpcalc.errors.ValidationError
        If the suite doesn't exist.
    """
    if limits is None:
        limits = config_.EnumerationLimits.from_env()

    if name == ALL_SUITES:
        checks = [check for suite in SUITES.values() for check in suite]

    elif name in SUITES:
        checks = SUITES[name]

    else:
        raise errors.ValidationError(f"Unknown suite {name!r}, expected one of {[ALL_SUITES, *SUITES]!r}")

    result = report.Report(suite=name, seed=seed)
    start = time.perf_counter()
    for check in checks:
        _LOGGER.info("running %s", check.check_id)
        for record in check.callback(check_rng(seed, check.check_id), limits):
            result.add(record)
            if not record.passed:
                _LOGGER.warning("%s failed with margin %s", record.check_id, record.margin)

    result.wall_time = time.perf_counter() - start
    return result


def _equality(
    check_id: str, claim: str, expected: float, achieved: float, /, **kwargs: typing.Any
) -> report.CheckRecord:
    tolerance = kwargs.pop("tolerance", constants.AUDIT_TOLERANCE)
    return report.CheckRecord(
        check_id=check_id,
        claim=claim,
        inputs=kwargs,
        expected=expected,
        achieved=achieved,
        margin=-abs(expected - achieved),
        tolerance=tolerance,
    )


def _upper_bound(
    check_id: str, claim: str, bound: float, achieved: float, /, **kwargs: typing.Any
) -> report.CheckRecord:
    tolerance = kwargs.pop("tolerance", constants.AUDIT_TOLERANCE)
    return report.CheckRecord(
        check_id=check_id,
        claim=claim,
        inputs=kwargs,
        expected=bound,
        achieved=achieved,
        margin=bound - achieved,
        tolerance=tolerance,
    )


def _random_mechanism(
    rng: numpy.random.Generator, inputs: tuple[int, int], outputs: tuple[int, int], /
) -> mechanisms.Mechanism:
    return mechanisms.random_mechanism(
        rng, int(rng.integers(inputs[0], inputs[1] + 1)), int(rng.integers(outputs[0], outputs[1] + 1))
    )


def _random_dist(rng: numpy.random.Generator, size: int, /) -> distributions.Dist:
    return distributions.Dist(rng.dirichlet(numpy.ones(size)))


def subset_hockey_stick(p: distributions.Dist, q: distributions.Dist, eps: float, /) -> float:
    """Largest `P[S] - e^eps Q[S]` over every subset `S` of the outputs (and 0 for the empty set)."""
    size = len(p)
    masks = ((numpy.arange(2**size)[:, None] >> numpy.arange(size)[None, :]) & 1).astype(numpy.float64)
    values: npt.NDArray[numpy.float64] = masks @ p.mass - math.exp(eps) * (masks @ q.mass)
    return max(0.0, float(values.max()))


# dp


@_check("dp", "hockey-stick-oracle")
def _hockey_stick_oracle(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(100):
        size = int(rng.integers(1, 13))
        p = _random_dist(rng, size)
        q = _random_dist(rng, size)
        for eps in (0.0, 0.3, 1.0, 3.0):
            margins.append(-abs(distributions.hockey_stick(p, q, eps) - subset_hockey_stick(p, q, eps)))

    yield report.CheckRecord.from_sweep(
        "dp.hockey-stick-oracle",
        "hockey-stick equals the subset maximum",
        margins,
        tolerance=constants.ORACLE_TOLERANCE,
    )


@_check("dp", "pure-to-approx")
def _pure_to_approx(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(200):
        mechanism = mechanisms.random_mechanism(rng, 3, 3)
        eps_total = audits.audit_pure(mechanism)
        for delta in sorted({0.01, 0.1, min(0.5, eps_total)}):
            if delta > eps_total:
                continue

            budget = converters.pure_to_approx(eps_total, delta)
            margins.append(budget.delta - audits.audit_replacement_ldp(mechanism, budget.eps))

    yield report.CheckRecord.from_sweep("dp.pure-to-approx", "pure eps + delta implies (eps, delta)", margins)


@_check("dp", "approx-to-pure")
def _approx_to_pure(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    distance: list[float] = []
    purity: list[float] = []
    binary: list[float] = []
    for _ in range(200):
        mechanism = _random_mechanism(rng, (2, 4), (2, 4))
        eps = float(rng.uniform(0.0, 1.5))
        delta = audits.audit_replacement_ldp(mechanism, eps)
        for eta in (0.05, 0.2):
            mixed, eps_prime = converters.approx_to_pure_finite(mechanism, eps, delta, eta, check=False)
            distance.append(
                eta - max(distributions.tv_distance(p, q) for p, q in zip(mechanism.rows, mixed.rows, strict=True))
            )
            audited = audits.audit_pure(mixed)
            purity.append(eps_prime - audited)
            if len(mechanism.outputs) == 2:
                binary.append(eps + 2 * delta / eta - audited)

    yield report.CheckRecord.from_sweep(
        "dp.approx-to-pure-distance", "uniform mixing moves rows by at most eta", distance
    )
    yield report.CheckRecord.from_sweep("dp.approx-to-pure-budget", "uniform mixing is pure at eps'", purity)
    yield report.CheckRecord.from_sweep(
        "dp.approx-to-pure-binary", "binary outputs are pure at eps + 2 delta / eta", binary
    )


@_check("dp", "rr-decompose")
def _rr_decompose(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(200):
        mechanism = mechanisms.random_mechanism(rng, 2, int(rng.integers(2, 6)))
        q = converters.rr_decompose_pure(mechanism, "0", "1")
        padded = converters.pad_leaky_rr(q, q.row_at(0), q.row_at(1))
        budget = budgets.PrivacyBudget(audits.audit_pure(mechanism))
        margins.append(-converters.verify_leaky_rr(mechanism, "0", "1", padded, budget).residual)

    yield report.CheckRecord.from_sweep("dp.rr-decompose", "pure pairs are post-processed randomized response", margins)


@_check("dp", "postprocess")
def _postprocess(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    eps_values = basic.unit_grid(13, stop=3.0)
    for _ in range(200):
        mechanism = mechanisms.random_mechanism(rng, int(rng.integers(2, 5)), int(rng.integers(2, 7)))
        targets = rng.integers(0, len(mechanism.outputs), size=len(mechanism.outputs))
        merged = mechanisms.postprocess(mechanism, dict(zip(mechanism.outputs, map(str, targets), strict=True)))
        margins.extend(
            audits.audit_replacement_ldp(mechanism, float(eps)) - audits.audit_replacement_ldp(merged, float(eps))
            for eps in eps_values
        )

    yield report.CheckRecord.from_sweep("dp.postprocess", "post-processing never increases the audit", margins)


# ldp


def _deletion_instance(rng: numpy.random.Generator, /) -> tuple[mechanisms.Mechanism, distributions.Dist, float, float]:
    randomizer = _random_mechanism(rng, (2, 3), (2, 4))
    reference = _random_dist(rng, len(randomizer.outputs))
    eps = float(rng.uniform(0.0, 1.5))
    return randomizer, reference, eps, audits.audit_deletion_ldp(randomizer, reference, eps)


@_check("ldp", "replacement-to-deletion")
def _replacement_to_deletion(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(200):
        randomizer = _random_mechanism(rng, (2, 4), (2, 4))
        delta = audits.audit_replacement_ldp(randomizer, 0.5)
        reference, budget = deletion.replacement_to_deletion(randomizer, "0", 0.5, delta)
        margins.append(budget.delta - audits.audit_deletion_ldp(randomizer, reference, budget.eps))

    yield report.CheckRecord.from_sweep(
        "ldp.replacement-to-deletion", "a fixed row is a deletion reference", margins, inputs={"eps": 0.5}
    )


@_check("ldp", "deletion-to-replacement")
def _deletion_to_replacement(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(500):
        randomizer, _reference, eps, delta = _deletion_instance(rng)
        budget = deletion.deletion_to_replacement_budget(eps, delta)
        margins.append(budget.delta - audits.audit_replacement_ldp(randomizer, budget.eps))

    yield report.CheckRecord.from_sweep(
        "ldp.deletion-to-replacement", "(eps, delta)-deletion implies (2 eps, (e^eps + 1) delta)-replacement", margins
    )


@_check("ldp", "trim")
def _trim(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    purity: list[float] = []
    distance: list[float] = []
    replacement: list[float] = []
    for _ in range(500):
        randomizer, reference, eps, delta = _deletion_instance(rng)
        trimmed = deletion.trim_to_pure_deletion(randomizer, reference, eps, delta)
        purity.append(-audits.audit_deletion_ldp(trimmed, reference, eps))
        distance.append(
            delta - max(distributions.tv_distance(p, q) for p, q in zip(randomizer.rows, trimmed.rows, strict=True))
        )
        budget = deletion.deletion_to_replacement_budget(eps, 0.0)
        replacement.append(-audits.audit_replacement_ldp(trimmed, budget.eps))

    yield report.CheckRecord.from_sweep("ldp.trim-pure", "trimmed randomizers are pure deletion LDP", purity)
    yield report.CheckRecord.from_sweep("ldp.trim-distance", "trimming moves rows by at most delta", distance)
    yield report.CheckRecord.from_sweep(
        "ldp.trim-replacement", "trimmed randomizers are 2 eps-replacement LDP", replacement
    )


@_check("ldp", "symmetrize")
def _symmetrize(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(100):
        inputs = int(rng.integers(2, 4))
        randomizers = [
            mechanisms.random_mechanism(rng, inputs, int(rng.integers(2, 4))) for _ in range(int(rng.integers(1, 5)))
        ]
        compiled = symmetric.symmetrize(randomizers, symmetric.CoinModel.PRIVATE)
        expected = max(audits.audit_pure(randomizer) for randomizer in randomizers)
        margins.append(-abs(audits.audit_pure(compiled.combined) - expected))

    yield report.CheckRecord.from_sweep("ldp.symmetrize", "private coin compilation keeps the pure budget", margins)


@_check("ldp", "coupon")
def _coupon(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    trials = 100_000
    fail_prob = symmetric.DEFAULT_FAIL_PROB
    slack = 3 * math.sqrt(fail_prob * (1 - fail_prob) / trials)
    for n in (10, 100):
        n_prime = symmetric.coupon_rounds(n, fail_prob)
        rate = symmetric.coupon_miss_rate(n, n_prime, trials, rng)
        yield _upper_bound(
            f"ldp.coupon-{n}", "coupon collector rounds", fail_prob + slack, rate, n=n, n_prime=n_prime, trials=trials
        )


@_check("ldp", "grouposition")
def _grouposition(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for eps in (0.2, 0.5):
        randomizer = mechanisms.randomized_response(eps)
        for k in range(1, 7):
            for delta_prime in (0.1, 0.01):
                params = grouposition.GroupositionParams(k=k, eps=eps, delta_prime=delta_prime)
                bound = grouposition.grouposition_eps(params)
                tail = grouposition.group_privacy_loss_tail(randomizer, "0", "1", k, bound, limits=limits)
                margins.append(delta_prime - tail)

    yield report.CheckRecord.from_sweep("ldp.grouposition", "privacy loss tail at eps' is at most delta'", margins)


@_check("ldp", "compose-tightness")
def _compose_tightness(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    values = (0.25, 0.5, 1.0, 2.0)
    below: list[float] = []
    close: list[float] = []
    for eps1 in values:
        for eps2 in values:
            bound = composition.compose_eps(eps1, eps2)
            achieved = composition.compose_tightness_search(eps1, eps2, 400)
            below.append(bound - achieved)
            close.append(1e-3 - abs(bound - achieved))

    yield report.CheckRecord.from_sweep("ldp.compose-below", "searched compositions never beat the bound", below)
    yield report.CheckRecord.from_sweep("ldp.compose-tight", "the composition bound is reached within 1e-3", close)


@_check("ldp", "purification")
def _purification(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    first, last = purification.feasible_rounds(0.1, 1e-8, 100)
    assert last is not None
    yield report.CheckRecord(
        check_id="ldp.purification-range",
        claim="T=12 is a valid number of rounds",
        inputs={"eps": 0.1, "delta": 1e-8, "n": 100, "first": first, "last": last},
        margin=float(min(12 - first, last - 12)),
    )

    try:
        purification.feasible_rounds(0.1, 1e-2, 100)

    except errors.InfeasibleParametersError:
        margin = 0.0

    else:
        margin = -1.0

    yield report.CheckRecord(
        check_id="ldp.purification-empty",
        claim="large delta leaves no valid number of rounds",
        inputs={"eps": 0.1, "delta": 1e-2, "n": 100},
        margin=margin,
    )


# counterexample


@_check("counterexample", "quarter-sixth")
def _counterexample(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    eps, delta = 0.25, 1 / 6
    randomizer = deletion.build_counterexample(eps, delta)
    reference = distributions.uniform_dist(3)
    zero, one = randomizer.matrix[0, 1], randomizer.matrix[1, 1]
    yield _upper_bound(
        "counterexample.deletion",
        "deletion LDP against the uniform reference",
        delta,
        audits.audit_deletion_ldp(randomizer, reference, eps),
        eps=eps,
        delta=delta,
    )
    yield _equality(
        "counterexample.outcome-2",
        "outcome 2 meets the replacement budget with equality",
        0.0,
        float(one - math.exp(2 * eps) * zero - delta * (1 + math.exp(eps))),
        eps=eps,
        delta=delta,
        tolerance=constants.ORACLE_TOLERANCE,
    )
    gap = float(one - math.exp(2 * eps) * zero - 2 * delta)
    yield report.CheckRecord(
        check_id="counterexample.refutation",
        claim="(2 eps, 2 delta)-replacement fails",
        inputs={"eps": eps, "delta": delta},
        expected=0.047,
        achieved=gap,
        margin=gap - 0.047,
    )


@_check("counterexample", "grid")
def _counterexample_grid(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    equality: list[float] = []
    replacement: list[float] = []
    refutation: list[float] = []
    exact: list[float] = []
    region: list[float] = []
    feasible = 0
    reference = distributions.uniform_dist(3)
    for eps in numpy.arange(1, 21) / 40:
        for delta in numpy.arange(1, 21) / 100:
            eps, delta = float(eps), float(delta)
            randomizer = deletion.build_counterexample(eps, delta)
            zero, one = randomizer.matrix[0, 1], randomizer.matrix[1, 1]
            budget = deletion.deletion_to_replacement_budget(eps, delta)
            equality.append(-abs(one - math.exp(2 * eps) * zero - budget.delta))
            replacement.append(-abs(audits.audit_replacement_ldp(randomizer, budget.eps) - budget.delta))
            refutation.append(float(one - math.exp(2 * eps) * zero - 2 * delta))
            audited = audits.audit_deletion_ldp(randomizer, reference, eps)
            exact.append(-abs(audited - deletion.counterexample_deletion_delta(eps, delta)))
            # Deletion LDP holds exactly below delta = (2 - e^eps) / 3.
            if delta <= (2.0 - math.exp(eps)) / 3:
                feasible += 1
                region.append(delta - audited)

            else:
                region.append(audited - delta)

    yield report.CheckRecord.from_sweep(
        "counterexample.grid-outcome-2",
        "outcome 2 meets the replacement budget with equality",
        equality,
        tolerance=constants.ORACLE_TOLERANCE,
    )
    yield report.CheckRecord.from_sweep(
        "counterexample.grid-replacement", "the replacement audit at 2 eps is exactly (e^eps + 1) delta", replacement
    )
    yield report.CheckRecord.from_sweep(
        "counterexample.grid-refutation", "(2 eps, 2 delta)-replacement fails", refutation, tolerance=0.0
    )
    yield report.CheckRecord.from_sweep(
        "counterexample.grid-deletion-exact",
        "the deletion audit against the uniform reference is max(delta, e^eps delta - (e^eps - 1)(2 - e^eps) / 3)",
        exact,
    )
    yield report.CheckRecord.from_sweep(
        "counterexample.grid-deletion",
        "deletion LDP against the uniform reference holds exactly when delta <= (2 - e^eps) / 3",
        region,
        inputs={"points": 400, "feasible": feasible},
    )


# appendix


@_check("appendix", "inequality-grid")
def _appendix(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    grid = basic.unit_grid(200, stop=5.0)
    holds = composition.appendix_inequality_grid(grid, grid)
    x, y = numpy.meshgrid(grid, grid, indexing="ij")
    composed = numpy.array([composition.compose_eps(float(a), float(b)) for a, b in zip(x.ravel(), y.ravel())])
    yield report.CheckRecord(
        check_id="appendix.inequality-grid",
        claim="(1 + e^(x + y)) / (e^x + e^y) <= e^(xy / 2)",
        inputs={"points": 200, "upper": 5.0},
        margin=0.0 if holds.all() else -1.0,
        count=int(holds.size),
        failures=int((~holds).sum()),
    )
    yield report.CheckRecord.from_sweep(
        "appendix.compose-min",
        "composition is no worse than either randomizer",
        numpy.minimum(x, y).ravel() - composed,
        inputs={"points": 200, "upper": 5.0},
    )


# shuffle


@_check("shuffle", "shuffle-to-ldp")
def _shuffle_to_ldp(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for _ in range(50):
        randomizer = mechanisms.random_mechanism(rng, 2, 3)
        n = int(rng.integers(2, 9))
        eps_s = float(rng.uniform(0.0, 2.0))
        delta_s = shuffle.audit_shuffle(randomizer, n, eps_s, limits=limits)
        budget = shuffle.shuffle_to_ldp_budget(eps_s, delta_s, n)
        margins.append(budget.delta - audits.audit_replacement_ldp(randomizer, budget.eps))

    yield report.CheckRecord.from_sweep("shuffle.shuffle-to-ldp", "shuffle DP implies LDP at eps_s + ln n", margins)


@_check("shuffle", "amplification")
def _amplification(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    for eps_l in (0.25, 0.5):
        for n in (50, 60):
            check = shuffle.check_amplification_vs_exact(mechanisms.randomized_response(eps_l), n, 0.2, limits=limits)
            yield _upper_bound(
                f"shuffle.amplification-{eps_l}-{n}",
                "exact shuffle audit at the amplification bound",
                check.target_delta,
                check.exact_delta,
                eps_l=eps_l,
                n=n,
                bound_eps=check.bound_eps,
            )

    try:
        shuffle.check_amplification_vs_exact(mechanisms.randomized_response(0.5), 40, 0.05, limits=limits)

    except errors.InfeasibleParametersError:
        margin = 0.0

    else:
        margin = -1.0

    yield report.CheckRecord(
        check_id="shuffle.amplification-infeasible",
        claim="the amplification bound rejects too few users",
        inputs={"eps_l": 0.5, "n": 40, "delta": 0.05},
        margin=margin,
    )


@_check("shuffle", "persistence")
def _persistence(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for eps_l in (0.25, 0.5):
        for n in (40, 60):
            margins.append(-shuffle.audit_shuffle(mechanisms.randomized_response(eps_l), n, eps_l, limits=limits))

    yield report.CheckRecord.from_sweep("shuffle.persistence", "shuffling keeps the randomizer's pure budget", margins)


@_check("shuffle", "monotone")
def _monotone(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    margins: list[float] = []
    for eps_l, k in ((0.5, 2), (1.0, 2), (2.0, 2), (1.0, 3)):
        randomizer = mechanisms.randomized_response(eps_l, k)
        for eps in (0.1, 0.25, 0.5):
            deltas = [shuffle.audit_shuffle(randomizer, n, eps, limits=limits) for n in range(1, 13)]
            margins.extend(smaller - larger for smaller, larger in zip(deltas, deltas[1:]))

    yield report.CheckRecord.from_sweep(
        "shuffle.monotone",
        "more users never weaken the shuffled guarantee of randomized response",
        margins,
        inputs={"eps_l": [0.5, 1.0, 2.0], "k": [2, 3], "eps": [0.1, 0.25, 0.5], "n": [1, 12]},
    )


# subsample


@_check("subsample", "tightness")
def _subsample_tightness(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    for n, m in ((2, 1), (3, 1), (4, 1), (4, 2)):
        for eps in (0.5, 1.0):
            result = subsample.verify_subsample_tightness(eps, n, m, limits=limits)
            yield _equality(
                f"subsample.tightness-{n}-{m}-{eps}",
                "the worst case base meets the subsampling bound",
                result.bound_eps,
                result.audited_eps,
                eps=eps,
                n=n,
                m=m,
            )


@_check("subsample", "soundness")
def _subsample_soundness(rng: numpy.random.Generator, limits: config_.EnumerationLimits, /) -> _Records:
    shapes = ((2, 1), (3, 1), (4, 1), (4, 2))
    margins: list[float] = []
    for _ in range(200):
        n, m = shapes[int(rng.integers(len(shapes)))]
        datasets = subsample.enumerate_datasets(("0", "1"), m, limits=limits)
        rows = rng.dirichlet(numpy.ones(int(rng.integers(2, 4))), size=len(datasets))
        base = mechanisms.Mechanism(datasets, mechanisms.labels(rows.shape[1]), rows)
        eps = float(rng.uniform(0.0, audits.audit_pure(base, subsample.substitution_neighbors(datasets))))
        delta = audits.audit_central(base, subsample.substitution_neighbors(datasets), eps)

        subsampled = subsample.build_subsampled(base, n, m, limits=limits)
        budget = subsample.subsample_budget(eps, delta, m / n)
        neighbors = subsample.substitution_neighbors(subsampled.inputs)
        margins.append(budget.delta - audits.audit_central(subsampled, neighbors, budget.eps))

    yield report.CheckRecord.from_sweep(
        "subsample.soundness", "subsampled mechanisms meet the subsampling bound", margins
    )
