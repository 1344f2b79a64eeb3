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
"""Probability vectors over finite alphabets and the divergences between them."""
from __future__ import annotations

__all__: list[str] = ["Dist", "hockey_stick", "privacy_loss_tail", "tv_distance", "uniform_dist"]

import math
import typing

import numpy

from .. import errors
from ..utility import constants

if typing.TYPE_CHECKING:
    from collections import abc as collections
    from typing import Self

    import numpy.typing as npt

_NEGATIVE_NOISE = 1e-12
_MAX_EXP = 700.0


class Dist:
    """Immutable probability vector indexed by output symbol id.

    Parameters
    ----------
    values
        The probabilities. Vectors whose sum is within 1e-9 of 1 are
        renormalised, anything further off is rejected.

    Raises
    ------
    dpcalc.errors.InvalidDistributionError
        If an entry is negative, not finite or the entries don't sum to 1.
    """

    __slots__ = ("_mass",)

    def __init__(self, values: collections.Iterable[float] | npt.ArrayLike, /) -> None:
        mass = numpy.array(values, dtype=numpy.float64).reshape(-1)
        if mass.size == 0:
            raise errors.InvalidDistributionError("A distribution needs at least one symbol")

        if not numpy.all(numpy.isfinite(mass)):
            raise errors.InvalidDistributionError("Probabilities must be finite")

        if mass.min() < -_NEGATIVE_NOISE:
            raise errors.InvalidDistributionError(f"Negative probability {mass.min()!r}")

        mass = numpy.clip(mass, 0.0, None)
        total = float(mass.sum())
        if abs(total - 1.0) > constants.NORMALISATION_TOLERANCE:
            raise errors.InvalidDistributionError(f"Probabilities sum to {total!r}, not 1")

        mass /= total
        mass.setflags(write=False)
        self._mass = mass

    @classmethod
    def point(cls, index: int, size: int, /) -> Self:
        """Build the point mass on `index` over `size` symbols."""
        mass = numpy.zeros(size)
        mass[index] = 1.0
        return cls(mass)

    @property
    def mass(self) -> npt.NDArray[numpy.float64]:
        """Read-only view of the probabilities."""
        return self._mass

    def __len__(self) -> int:
        return int(self._mass.size)

    def __getitem__(self, index: int, /) -> float:
        return float(self._mass[index])

    def __iter__(self) -> collections.Iterator[float]:
        return iter(self._mass.tolist())

    def __repr__(self) -> str:
        return f"Dist({self._mass.tolist()!r})"

    def __eq__(self, other: object, /) -> bool:
        if not isinstance(other, Dist):
            return NotImplemented

        return self._mass.shape == other._mass.shape and bool(numpy.array_equal(self._mass, other._mass))

    def __hash__(self) -> int:
        return hash(self._mass.tobytes())

    def is_close(self, other: Dist, /, *, tolerance: float = constants.AUDIT_TOLERANCE) -> bool:
        _check_alphabet(self, other)
        return bool(numpy.max(numpy.abs(self._mass - other._mass)) <= tolerance)


def uniform_dist(size: int, /) -> Dist:
    """Uniform distribution over `size` symbols."""
    if size < 1:
        raise errors.InvalidDistributionError("A distribution needs at least one symbol")

    return Dist(numpy.full(size, 1.0 / size))


def _check_alphabet(p: Dist, q: Dist, /) -> None:
    if len(p) != len(q):
        raise errors.AlphabetMismatchError(f"Alphabet sizes differ ({len(p)} != {len(q)})")


def hockey_stick(p: Dist, q: Dist, eps: float, /) -> float:
    """Compute the eps-hockey-stick divergence between two distributions.

    This is the smallest delta for which `Pr[p in S] <= e^eps Pr[q in S] + delta`
    holds for every event `S`, i.e. `sum_y max(0, p(y) - e^eps q(y))`.

    Parameters
    ----------
    p
        The left distribution.
    q
        The right distribution.
    eps
        The multiplicative budget (non-negative, may be infinite).

    Returns
    -------
    float
        The divergence, clamped to `[0, 1]`.

    Raises
    ------
    dpcalc.errors.AlphabetMismatchError
        If the distributions have different alphabets.
    """
    _check_alphabet(p, q)
    if eps < 0 or math.isnan(eps):
        raise errors.ValidationError(f"eps must be non-negative, not {eps!r}")

    if math.isinf(eps):
        return float(p.mass[q.mass == 0.0].sum())

    # e^eps overflows past ~709 so large budgets are compared in log space.
    if eps > _MAX_EXP:
        support = p.mass > 0.0
        with numpy.errstate(divide="ignore"):
            loss = numpy.log(p.mass[support]) - numpy.log(q.mass[support])

        over = loss > eps
        return min(float((p.mass[support][over] * -numpy.expm1(eps - loss[over])).sum()), 1.0)

    delta = float(numpy.maximum(p.mass - math.exp(eps) * q.mass, 0.0).sum())
    return min(max(delta, 0.0), 1.0)


def tv_distance(p: Dist, q: Dist, /) -> float:
    """Total variation distance (half the L1 distance) between two distributions."""
    _check_alphabet(p, q)
    return min(0.5 * float(numpy.abs(p.mass - q.mass).sum()), 1.0)


def privacy_loss_tail(p: Dist, q: Dist, threshold: float, /) -> float:
    """Probability under `p` that the privacy loss `ln p(y)/q(y)` exceeds `threshold`.

    Symbols where `q(y) = 0 < p(y)` carry an infinite loss.
    """
    _check_alphabet(p, q)
    support = p.mass > 0.0
    with numpy.errstate(divide="ignore"):
        loss = numpy.log(p.mass[support]) - numpy.log(q.mass[support])

    return float(p.mass[support][loss > threshold].sum())
