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
"""Moving between replacement and deletion local differential privacy."""
from __future__ import annotations

__all__: list[str] = [
    "COUNTEREXAMPLE_MAX_DELTA",
    "COUNTEREXAMPLE_MAX_EPS",
    "build_counterexample",
    "counterexample_deletion_delta",
    "deletion_to_replacement_budget",
    "replacement_to_deletion",
    "trim_to_pure_deletion",
]

import logging
import math
import typing

import numpy

from .. import errors
from ..core import audits
from ..core import budgets
from ..core import distributions
from ..core import mechanisms
from ..utility import basic
from ..utility import constants

if typing.TYPE_CHECKING:
    import numpy.typing as npt

_LOGGER = logging.getLogger("dpcalc.ldp.deletion")

COUNTEREXAMPLE_MAX_EPS: typing.Final[float] = 0.5
"""Largest eps for which every counterexample entry is a probability."""

COUNTEREXAMPLE_MAX_DELTA: typing.Final[float] = 0.2
"""Largest delta for which every counterexample entry is a probability."""


def replacement_to_deletion(
    randomizer: mechanisms.Mechanism, x0: str, eps: float, delta: float, /, *, check: bool = True
) -> tuple[distributions.Dist, budgets.PrivacyBudget]:
    """Use one row of a replacement LDP randomizer as its deletion reference.

    Returns
    -------
    tuple[dpcalc.core.Dist, dpcalc.core.PrivacyBudget]
        The reference `r(x0)` and the (unchanged) deletion budget.

    Raises
    ------
    dpcalc.errors.UnknownSymbolError
        If `x0` isn't an input.
    dpcalc.errors.PreconditionError
        If `check` is set and the randomizer isn't (eps, delta)-replacement LDP.
    """
    budget = budgets.PrivacyBudget(eps, delta)
    reference = randomizer.row(x0)
    if check:
        audited = audits.audit_replacement_ldp(randomizer, eps)
        if audited > delta + constants.AUDIT_TOLERANCE:
            raise errors.PreconditionError(f"Randomizer is only ({eps}, {audited})-replacement LDP")

    return reference, budget


def deletion_to_replacement_budget(eps: float, delta: float, /) -> budgets.PrivacyBudget:
    """The replacement budget `(2 eps, (e^eps + 1) delta)` implied by a deletion budget.

    The additive term is capped at 1.
    """
    budgets.PrivacyBudget(eps, delta)
    if delta == 0.0:
        return budgets.PrivacyBudget(2 * eps)

    return budgets.PrivacyBudget(2 * eps, min(1.0, (math.exp(eps) + 1.0) * delta) if math.isfinite(eps) else 1.0)


def build_counterexample(eps: float, delta: float, /) -> mechanisms.Mechanism:
    """A deletion LDP randomizer which isn't (2 eps, 2 delta)-replacement LDP.

    Inputs are `"0"` and `"1"`, outputs `"1"`, `"2"` and `"3"`; it is
    (eps, delta)-deletion LDP against the uniform reference.

    Raises
    ------
    dpcalc.errors.ValidationError
        If `eps` isn't in `[0, 1/2]` or `delta` isn't in `[0, 1/5]`.
    """
    if not 0.0 <= eps <= COUNTEREXAMPLE_MAX_EPS:
        raise errors.ValidationError(f"eps must be in [0, {COUNTEREXAMPLE_MAX_EPS}], not {eps!r}")

    if not 0.0 <= delta <= COUNTEREXAMPLE_MAX_DELTA:
        raise errors.ValidationError(f"delta must be in [0, {COUNTEREXAMPLE_MAX_DELTA}], not {delta!r}")

    up = math.exp(eps)
    down = math.exp(-eps)
    zero = [up / 3, down * (1 / 3 - delta)]
    one = [down / 3, up / 3 + delta]
    rows = [[*zero, 1.0 - sum(zero)], [*one, 1.0 - sum(one)]]
    return mechanisms.Mechanism(("0", "1"), ("1", "2", "3"), rows)


def counterexample_deletion_delta(eps: float, delta: float, /) -> float:
    """Exact deletion delta of `build_counterexample(eps, delta)` against the uniform reference.

    This is `max(delta, e^eps delta - (e^eps - 1)(2 - e^eps) / 3)`, so the
    randomizer is (eps, delta)-deletion LDP exactly when `delta <= (2 - e^eps) / 3`.
    """
    build_counterexample(eps, delta)
    scale = math.exp(eps)
    return min(1.0, max(delta, scale * delta - (scale - 1.0) * (2.0 - scale) / 3))


def _band(reference: npt.NDArray[numpy.float64], eps: float, /) -> tuple[npt.NDArray[numpy.float64], ...]:
    if math.isinf(eps):
        return numpy.zeros_like(reference), numpy.where(reference > 0.0, 1.0, 0.0)

    return math.exp(-eps) * reference, numpy.minimum(math.exp(eps) * reference, 1.0)


def _clip_into_band(
    row: npt.NDArray[numpy.float64], low: npt.NDArray[numpy.float64], high: npt.NDArray[numpy.float64], /
) -> npt.NDArray[numpy.float64]:
    clipped = numpy.clip(row, low, high)
    imbalance = 1.0 - clipped.sum()
    if imbalance > 0:
        room = high - clipped
        return clipped + imbalance * room / room.sum()

    if imbalance < 0:
        room = clipped - low
        return clipped + imbalance * room / room.sum()

    return clipped


def _mix_toward(
    row: distributions.Dist, reference: distributions.Dist, eps: float, /
) -> tuple[distributions.Dist, float]:
    def mixed(weight: float) -> distributions.Dist:
        return distributions.Dist((1.0 - weight) * row.mass + weight * reference.mass)

    def feasible(weight: float) -> bool:
        candidate = mixed(weight)
        forward = distributions.hockey_stick(candidate, reference, eps)
        return max(forward, distributions.hockey_stick(reference, candidate, eps)) <= constants.AUDIT_TOLERANCE

    weight = basic.bisect_threshold(feasible, 0.0, 1.0)
    return mixed(weight), weight


def trim_to_pure_deletion(
    randomizer: mechanisms.Mechanism, reference: distributions.Dist, eps: float, delta: float, /
) -> mechanisms.Mechanism:
    """Move each row by at most `delta` in total variation to make a randomizer eps-deletion LDP.

    Each row is clipped into `[e^-eps r0, e^eps r0]` and the clipped mass is
    redistributed over the symbols with room left in that band.

    Parameters
    ----------
    randomizer
        An (eps, delta)-deletion LDP randomizer.
    reference
        Its deletion reference distribution.
    eps
        Multiplicative budget.
    delta
        Additive slack to remove.

    Returns
    -------
    dpcalc.core.Mechanism
        A pure eps-deletion LDP randomizer against `reference`. Randomizers
        which already are are returned unchanged.

    Raises
    ------
    dpcalc.errors.PreconditionError
        If the randomizer isn't (eps, delta)-deletion LDP against `reference`.
    """
    budgets.PrivacyBudget(eps, delta)
    audited = audits.audit_deletion_ldp(randomizer, reference, eps)
    if audited > delta + constants.AUDIT_TOLERANCE:
        raise errors.PreconditionError(f"Randomizer is only ({eps}, {audited})-deletion LDP against this reference")

    if audited <= constants.AUDIT_TOLERANCE:
        return randomizer

    low, high = _band(reference.mass, eps)
    rows: list[distributions.Dist] = []
    for label, row in zip(randomizer.inputs, randomizer.rows):
        trimmed = distributions.Dist(_clip_into_band(row.mass, low, high))
        moved = distributions.tv_distance(row, trimmed)
        if moved > delta + constants.AUDIT_TOLERANCE:
            trimmed, weight = _mix_toward(row, reference, eps)
            moved = distributions.tv_distance(row, trimmed)
            _LOGGER.warning("clipping moved row %r too far, mixed %s of the reference in instead", label, weight)

            if moved > delta + constants.AUDIT_TOLERANCE:
                raise errors.PreconditionError(f"Couldn't trim row {label!r} within {delta} (needed {moved})")

        rows.append(trimmed)

    return mechanisms.Mechanism(randomizer.inputs, randomizer.outputs, rows)
