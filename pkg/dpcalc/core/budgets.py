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
from __future__ import annotations

__all__: list[str] = ["PrivacyBudget", "TradeoffCurve"]

import dataclasses
import math
import typing

from .. import errors
from ..utility import constants

if typing.TYPE_CHECKING:
    from collections import abc as collections


@dataclasses.dataclass(frozen=True, slots=True)
class PrivacyBudget:
    """An (eps, delta) pair.

    Raises
    ------
    dpcalc.errors.ValidationError
        If `eps` is negative or `delta` lies outside `[0, 1]`.
    """

    eps: float
    delta: float = 0.0

    def __post_init__(self) -> None:
        if math.isnan(self.eps) or self.eps < 0:
            raise errors.ValidationError(f"eps must be non-negative, not {self.eps!r}")

        if not 0.0 <= self.delta <= 1.0:
            raise errors.ValidationError(f"delta must be in [0, 1], not {self.delta!r}")

    @property
    def is_pure(self) -> bool:
        return self.delta == 0.0

    def to_mapping(self) -> dict[str, float]:
        return {"eps": self.eps, "delta": self.delta}


@dataclasses.dataclass(frozen=True, slots=True)
class TradeoffCurve:
    """Sampled map eps -> delta(eps) for one mechanism and neighbour relation."""

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        for (eps, delta), (next_eps, next_delta) in zip(self.points, self.points[1:]):
            if next_eps <= eps:
                raise errors.ValidationError("Tradeoff curve eps values must be strictly increasing")

            if next_delta > delta + constants.AUDIT_TOLERANCE:
                raise errors.ValidationError("Tradeoff curve delta values must be non-increasing")

        for _, delta in self.points:
            if not 0.0 <= delta <= 1.0:
                raise errors.ValidationError(f"delta must be in [0, 1], not {delta!r}")

    @classmethod
    def from_audit(
        cls, audit: collections.Callable[[float], float], eps_values: collections.Iterable[float], /
    ) -> TradeoffCurve:
        """Sample an audit callback at each eps value (sorted, duplicates dropped)."""
        return cls(tuple((eps, audit(eps)) for eps in sorted(set(map(float, eps_values)))))

    def __iter__(self) -> collections.Iterator[tuple[float, float]]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def budgets(self) -> list[PrivacyBudget]:
        return [PrivacyBudget(eps, delta) for eps, delta in self.points]
