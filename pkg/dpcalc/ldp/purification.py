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
"""Calculator for purifying approximate local protocols with public randomness."""
from __future__ import annotations

__all__: list[str] = ["PurificationBounds", "PurificationParams", "feasible_rounds", "purification_bounds"]

import dataclasses
import math
import typing

from .. import errors

if typing.TYPE_CHECKING:
    from collections import abc as collections

MAX_EPS: typing.Final[float] = 0.25
"""Largest per-randomizer eps the purification bounds hold for."""

PURE_EPS_FACTOR: typing.Final[int] = 10
"""The purified randomizers are `PURE_EPS_FACTOR * eps`-LDP."""


def _round_range(eps: float, delta: float, n: int, /) -> tuple[float, float]:
    lower = 5 * math.log(1 / eps)
    if delta == 0.0:
        return lower, math.inf

    return lower, (1 - math.exp(-eps)) / (4 * delta * n * math.exp(eps))


def _validate(eps: float, delta: float, n: int, /) -> None:
    if not 0.0 < eps <= MAX_EPS:
        raise errors.ValidationError(f"eps must be in (0, {MAX_EPS}], not {eps!r}")

    if not 0.0 <= delta <= 1.0:
        raise errors.ValidationError(f"delta must be in [0, 1], not {delta!r}")

    if n < 1:
        raise errors.ValidationError(f"n must be positive, not {n!r}")


def feasible_rounds(eps: float, delta: float, n: int, /) -> tuple[int, int | None]:
    """Integer range of rounds `T` the purification bounds accept.

    Returns
    -------
    tuple[int, int | None]
        The smallest and largest valid `T`; the upper end is `None` when `delta` is 0.

    Raises
    ------
    dpcalc.errors.InfeasibleParametersError
        If no integer lies between `5 ln(1/eps)` and `(1 - e^-eps) / (4 delta n e^eps)`.
    """
    _validate(eps, delta, n)
    lower, upper = _round_range(eps, delta, n)
    first = max(1, math.ceil(lower))
    if math.isinf(upper):
        return first, None

    last = math.floor(upper)
    if last < first:
        raise errors.InfeasibleParametersError(f"No valid number of rounds: need {lower:.6g} <= T <= {upper:.6g}")

    return first, last


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class PurificationParams:
    """Inputs to the purification calculator.

    Parameters
    ----------
    eps
        Per-randomizer budget, in `(0, 1/4]`.
    delta
        Per-randomizer additive slack.
    n
        Number of users.
    t
        Number of rounds `T`.
    random_bits
        Optional random bit counts `r_i` of each user's randomizer.

    Raises
    ------
    dpcalc.errors.InfeasibleParametersError
        If `t` lies outside `feasible_rounds(eps, delta, n)`.
    """

    eps: float
    delta: float
    n: int
    t: int
    random_bits: collections.Sequence[int] | None = None

    def __post_init__(self) -> None:
        first, last = feasible_rounds(self.eps, self.delta, self.n)
        if self.t < first or (last is not None and self.t > last):
            raise errors.InfeasibleParametersError(
                f"T={self.t} is outside the valid range [{first}, {'inf' if last is None else last}]"
            )

        if self.random_bits is not None:
            if len(self.random_bits) != self.n:
                raise errors.ValidationError(f"Expected {self.n} random bit counts, got {len(self.random_bits)}")

            if any(bits < 0 for bits in self.random_bits):
                raise errors.ValidationError("Random bit counts must be non-negative")


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class PurificationBounds:
    """Guarantees of the purified protocol."""

    ldp_eps: float
    tv_bound: float
    comm_bits: float
    public_bits: int | None = None


def purification_bounds(params: PurificationParams, /) -> PurificationBounds:
    """Budget, output distance and communication of the purified protocol.

    The distance bound is `n ((1/2 + eps)^T + 6 T delta e^eps / (1 - e^-eps))`
    and each user sends `log2 T` bits.
    """
    eps = params.eps
    tail = (0.5 + eps) ** params.t
    leak = 6 * params.t * params.delta * math.exp(eps) / -math.expm1(-eps)
    public_bits = None if params.random_bits is None else params.t * sum(params.random_bits)
    return PurificationBounds(
        ldp_eps=PURE_EPS_FACTOR * eps,
        tv_bound=params.n * (tail + leak),
        comm_bits=math.log2(params.t),
        public_bits=public_bits,
    )
