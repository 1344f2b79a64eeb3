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
"""Constructive conversions between pure and approximate differential privacy."""
from __future__ import annotations

__all__: list[str] = [
    "LEAKY_RR_INPUTS",
    "LeakyRRCheck",
    "LeakyRRWeights",
    "PureApproxTrade",
    "approx_to_pure_finite",
    "leaky_rr_mixture",
    "pad_leaky_rr",
    "pure_to_approx",
    "rr_decompose_pure",
    "verify_leaky_rr",
]

import dataclasses
import logging
import math
import typing

import numpy

from . import errors
from .core import audits
from .core import budgets
from .core import distributions
from .core import mechanisms
from .utility import constants

if typing.TYPE_CHECKING:
    from collections import abc as collections
    from typing import Self

_LOGGER = logging.getLogger("dpcalc.converters")

LEAKY_RR_INPUTS: typing.Final[tuple[str, str, str, str]] = ("0", "1", "I am x", "I am x′")
"""Input alphabet of the mechanism a leaky randomized response post-processes."""


def pure_to_approx(eps_total: float, delta: float, /) -> budgets.PrivacyBudget:
    """Trade part of a pure budget for slack: `(eps_total, 0)` implies `(eps_total - delta, delta)`.

    Raises
    ------
    dpcalc.errors.ValidationError
        If `delta` is larger than `eps_total` or outside `[0, 1]`.
    """
    budgets.PrivacyBudget(eps_total)
    if delta > eps_total:
        raise errors.ValidationError(f"delta ({delta}) can't exceed the total budget ({eps_total})")

    return budgets.PrivacyBudget(eps_total - delta, delta)


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class PureApproxTrade:
    """A pure source budget and the approximate budget it implies."""

    source: budgets.PrivacyBudget
    target: budgets.PrivacyBudget

    def __post_init__(self) -> None:
        if not self.source.is_pure:
            raise errors.ValidationError("The source budget must be pure")

        if not math.isclose(self.source.eps, self.target.eps + self.target.delta, abs_tol=constants.WEIGHT_TOLERANCE):
            raise errors.ValidationError("The source eps must equal the target's eps + delta")

    @classmethod
    def build(cls, eps_total: float, delta: float, /) -> Self:
        return cls(source=budgets.PrivacyBudget(eps_total), target=pure_to_approx(eps_total, delta))


def approx_to_pure_finite(
    mechanism: mechanisms.Mechanism,
    eps: float,
    delta: float,
    eta: float,
    /,
    *,
    neighbors: collections.Iterable[audits.NeighborPair] | None = None,
    check: bool = True,
) -> tuple[mechanisms.Mechanism, float]:
    """Make an (eps, delta)-DP mechanism over a finite output space pure by uniform mixing.

    With probability `eta` the returned mechanism ignores its input and outputs
    a uniformly random symbol.

    Parameters
    ----------
    mechanism
        The approximately private mechanism.
    eps
        Its multiplicative budget.
    delta
        Its additive slack.
    eta
        Mixing weight of the uniform distribution, in `(0, 1]`.
    neighbors
        Neighbour pairs to check the precondition over. Every pair of inputs
        is used when this isn't passed.
    check
        Whether to audit that `mechanism` is (eps, delta)-DP first.

    Returns
    -------
    tuple[dpcalc.core.Mechanism, float]
        The mixed mechanism and its pure budget `eps + ln(1 + delta k e^-eps / eta)`
        where `k` is the size of the output alphabet.

    Raises
    ------
    dpcalc.errors.ValidationError
        If `eta` isn't in `(0, 1]` or the budget is invalid.
    dpcalc.errors.PreconditionError
        If `mechanism` isn't (eps, delta)-DP.
    """
    if not 0.0 < eta <= 1.0:
        raise errors.ValidationError(f"eta must be in (0, 1], not {eta!r}")

    budget = budgets.PrivacyBudget(eps, delta)
    if check:
        pairs = None if neighbors is None else list(neighbors)
        if pairs is None:
            audited = audits.audit_replacement_ldp(mechanism, budget.eps)

        else:
            audited = audits.audit_central(mechanism, pairs, budget.eps)

        if audited > budget.delta + constants.AUDIT_TOLERANCE:
            raise errors.PreconditionError(f"Mechanism is only ({eps}, {audited})-DP, not ({eps}, {delta})-DP")

    size = len(mechanism.outputs)
    matrix = (1.0 - eta) * mechanism.matrix + eta / size
    mixed = mechanisms.Mechanism(mechanism.inputs, mechanism.outputs, matrix)
    return mixed, budget.eps + math.log1p(budget.delta * size * math.exp(-budget.eps) / eta)


def rr_decompose_pure(
    mechanism: mechanisms.Mechanism, x: str, x_prime: str, /, *, eps: float | None = None
) -> mechanisms.Mechanism:
    """Write two rows of a pure mechanism as post-processed binary randomized response.

    Finds `q` with inputs `"0"` and `"1"` such that
    `r(x) = e^eps/(e^eps+1) q(0) + 1/(e^eps+1) q(1)` and the weights swap for `r(x_prime)`.

    Parameters
    ----------
    mechanism
        The mechanism to decompose.
    x
        Label of the first input.
    x_prime
        Label of the second input.
    eps
        Budget to decompose at, defaults to the tight pure budget of the two rows.
        Anything looser than the tight budget also works.

    Raises
    ------
    dpcalc.errors.NonNestedSupportError
        If the two rows aren't pure DP with respect to each other.
    dpcalc.errors.PreconditionError
        If `eps` is tighter than the rows allow.
    """
    pair = mechanism.restrict((x, x_prime))
    tight = audits.audit_pure(pair)
    if math.isinf(tight):
        raise errors.NonNestedSupportError(f"Rows {x!r} and {x_prime!r} don't have nested supports")

    if eps is None:
        eps = tight

    elif eps < tight - constants.AUDIT_TOLERANCE:
        raise errors.PreconditionError(f"The rows need eps >= {tight}, not {eps}")

    p, p_prime = pair.matrix
    if eps == 0.0:
        # Identical rows; any common q works.
        return mechanisms.Mechanism(("0", "1"), mechanism.outputs, [p, p])

    scale = math.exp(eps)
    q_0 = numpy.clip((scale * p - p_prime) / (scale - 1.0), 0.0, None)
    q_1 = numpy.clip((scale * p_prime - p) / (scale - 1.0), 0.0, None)
    return mechanisms.Mechanism(("0", "1"), mechanism.outputs, [q_0, q_1])


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class LeakyRRWeights:
    """Mixture weights of (eps, delta) leaky randomized response."""

    eps: float
    delta: float

    def __post_init__(self) -> None:
        budgets.PrivacyBudget(self.eps, self.delta)

    @classmethod
    def from_budget(cls, budget: budgets.PrivacyBudget, /) -> Self:
        return cls(eps=budget.eps, delta=budget.delta)

    @property
    def w_main(self) -> float:
        """Weight on the input's own coin, `(1 - delta) e^eps / (e^eps + 1)`."""
        if math.isinf(self.eps):
            return 1.0 - self.delta

        return (1.0 - self.delta) / (1.0 + math.exp(-self.eps))

    @property
    def w_cross(self) -> float:
        """Weight on the other input's coin, `(1 - delta) / (e^eps + 1)`."""
        if math.isinf(self.eps):
            return 0.0

        return (1.0 - self.delta) / (math.exp(self.eps) + 1.0)

    @property
    def w_leak(self) -> float:
        return self.delta


def _check_leaky_inputs(q: mechanisms.Mechanism, /) -> None:
    if set(q.inputs) != set(LEAKY_RR_INPUTS) or len(q.inputs) != len(LEAKY_RR_INPUTS):
        raise errors.AlphabetMismatchError(f"Expected the inputs {list(LEAKY_RR_INPUTS)!r}, got {list(q.inputs)!r}")


def leaky_rr_mixture(
    q: mechanisms.Mechanism, weights: LeakyRRWeights, side: typing.Literal["x", "x_prime"], /
) -> distributions.Dist:
    """The distribution leaky randomized response followed by `q` gives on one side of a pair.

    Raises
    ------
    dpcalc.errors.AlphabetMismatchError
        If `q`'s inputs aren't `LEAKY_RR_INPUTS`.
    """
    _check_leaky_inputs(q)
    zero, one, leak_x, leak_x_prime = (q.row(label).mass for label in LEAKY_RR_INPUTS)
    if side == "x":
        mass = weights.w_main * zero + weights.w_cross * one + weights.w_leak * leak_x

    else:
        mass = weights.w_cross * zero + weights.w_main * one + weights.w_leak * leak_x_prime

    return distributions.Dist(mass)


def pad_leaky_rr(
    q: mechanisms.Mechanism, leak_x: distributions.Dist, leak_x_prime: distributions.Dist, /
) -> mechanisms.Mechanism:
    """Extend a binary post-processing mechanism with the two "I am ..." rows."""
    if q.inputs != ("0", "1"):
        raise errors.AlphabetMismatchError("Expected a mechanism over the inputs '0' and '1'")

    return mechanisms.Mechanism(LEAKY_RR_INPUTS, q.outputs, [*q.rows, leak_x, leak_x_prime])


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class LeakyRRCheck:
    """Outcome of checking a leaky randomized response decomposition."""

    passed: bool
    residual: float


def verify_leaky_rr(
    mechanism: mechanisms.Mechanism, x: str, x_prime: str, q: mechanisms.Mechanism, budget: budgets.PrivacyBudget, /
) -> LeakyRRCheck:
    """Check that two rows of a mechanism are leaky randomized response post-processed by `q`.

    Returns
    -------
    LeakyRRCheck
        The largest per-symbol residual of either mixture identity and whether
        it's within 1e-9.

    Raises
    ------
    dpcalc.errors.AlphabetMismatchError
        If `q` isn't over `LEAKY_RR_INPUTS` or its outputs differ from `mechanism`'s.
    """
    _check_leaky_inputs(q)
    if q.outputs != mechanism.outputs:
        raise errors.AlphabetMismatchError("q must share the mechanism's output alphabet")

    weights = LeakyRRWeights.from_budget(budget)
    residual = max(
        float(numpy.abs(mechanism.row(x).mass - leaky_rr_mixture(q, weights, "x").mass).max()),
        float(numpy.abs(mechanism.row(x_prime).mass - leaky_rr_mixture(q, weights, "x_prime").mass).max()),
    )
    _LOGGER.debug("leaky randomized response residual for %r/%r: %s", x, x_prime, residual)
    return LeakyRRCheck(passed=residual <= constants.AUDIT_TOLERANCE, residual=residual)
