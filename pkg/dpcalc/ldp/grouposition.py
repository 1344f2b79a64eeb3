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
"""Group privacy for local randomizers applied to several differing entries."""
from __future__ import annotations

__all__: list[str] = [
    "GroupositionParams",
    "basic_grouposition_eps",
    "group_privacy_loss_tail",
    "grouposition_budget",
    "grouposition_eps",
]

import dataclasses
import math

from .. import config as config_
from .. import errors
from ..core import budgets
from ..core import distributions
from ..core import mechanisms


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class GroupositionParams:
    """Parameters of the advanced group privacy bound.

    Parameters
    ----------
    k
        Number of differing entries.
    eps
        Per-randomizer budget.
    delta_prime
        Tail probability of the privacy loss, in `(0, 1]`.
    delta
        Per-randomizer additive slack for approximate randomizers.
    """

    k: int
    eps: float
    delta_prime: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise errors.ValidationError(f"k must be at least 1, not {self.k!r}")

        if not 0.0 < self.delta_prime <= 1.0:
            raise errors.ValidationError(f"delta_prime must be in (0, 1], not {self.delta_prime!r}")

        budgets.PrivacyBudget(self.eps, self.delta)


def grouposition_eps(params: GroupositionParams, /) -> float:
    """`k eps^2 / 2 + eps sqrt(2 k ln(1 / delta_prime))`."""
    return params.k * params.eps**2 / 2 + params.eps * math.sqrt(2 * params.k * math.log(1 / params.delta_prime))


def grouposition_budget(params: GroupositionParams, /) -> budgets.PrivacyBudget:
    """Budget for datasets differing in `k` entries.

    This is `(eps', delta_prime)` for pure randomizers and
    `(eps', delta + k delta_prime)` (capped at 1) for approximate ones.
    """
    eps = grouposition_eps(params)
    if params.delta == 0.0:
        return budgets.PrivacyBudget(eps, params.delta_prime)

    return budgets.PrivacyBudget(eps, min(1.0, params.delta + params.k * params.delta_prime))


def basic_grouposition_eps(k: int, eps: float, /) -> float:
    """The plain group privacy budget `k eps`."""
    if k < 1:
        raise errors.ValidationError(f"k must be at least 1, not {k!r}")

    return k * budgets.PrivacyBudget(eps).eps


def group_privacy_loss_tail(
    randomizer: mechanisms.Mechanism,
    left: str,
    right: str,
    k: int,
    threshold: float,
    /,
    *,
    limits: config_.EnumerationLimits | None = None,
) -> float:
    """Exact probability the privacy loss of `k` independent copies exceeds `threshold`.

    The neighbouring datasets hold `left` in every entry and `right` in every entry.

    Raises
    ------
    dpcalc.errors.EnumerationLimitError
        If the product output space is larger than `limits.max_enum`.
    """
    if limits is None:
        limits = config_.EnumerationLimits.from_env()

    if k < 1:
        raise errors.ValidationError(f"k must be at least 1, not {k!r}")

    size = len(randomizer.outputs) ** k
    if size > limits.max_enum:
        raise errors.EnumerationLimitError(f"{size} product outputs exceed the limit of {limits.max_enum}")

    joint = mechanisms.product([randomizer] * k)
    p = joint.row(mechanisms.PRODUCT_SEPARATOR.join([left] * k))
    q = joint.row(mechanisms.PRODUCT_SEPARATOR.join([right] * k))
    return distributions.privacy_loss_tail(p, q, threshold)
