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
"""Compiling asymmetric local protocols into symmetric ones."""
from __future__ import annotations

__all__: list[str] = ["CoinModel", "SymmetricCompilation", "coupon_miss_rate", "coupon_rounds", "symmetrize"]

import dataclasses
import enum
import logging
import math
import typing

import numpy

from .. import errors
from ..core import mechanisms
from ..utility import basic

if typing.TYPE_CHECKING:
    from collections import abc as collections

_LOGGER = logging.getLogger("dpcalc.ldp.symmetric")
_MISS_RATE_BATCH = 4096

DEFAULT_FAIL_PROB: typing.Final[float] = 1 / 6
"""Coupon collector failure probability used when none is given."""


class CoinModel(str, enum.Enum):
    """Where the shared user index is drawn from."""

    PRIVATE = "private"
    """Each user draws the index and reports it alongside the output."""

    PUBLIC = "public"
    """The index comes from public randomness and isn't reported."""


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class SymmetricCompilation:
    """A single randomizer every user can run in place of `n` different ones.

    Attributes
    ----------
    combined
        Private coins: a mechanism over the outputs `"j,y"` putting mass
        `r_j(x)(y) / n` on each. Public coins: a mechanism over the inputs
        `"j,x"` (seed `j`) whose row is `r_j(x)`.
    coin_model
        The coin model this was compiled for.
    members
        The original randomizers, indexed by seed `j - 1`.
    n_prime
        Users needed for every index to be drawn with the requested probability.
    """

    combined: mechanisms.Mechanism
    coin_model: CoinModel
    members: tuple[mechanisms.Mechanism, ...]
    n_prime: int


def coupon_rounds(n: int, fail_prob: float, /) -> int:
    """Uniform draws from `n` indices needed to see all of them except with probability `fail_prob`.

    This is `ceil(n ln(n / fail_prob))`, from the union bound `n (1 - 1/n)^n' <= n e^(-n'/n)`.
    """
    if n < 1:
        raise errors.ValidationError(f"n must be positive, not {n!r}")

    if not 0.0 < fail_prob < 1.0:
        raise errors.ValidationError(f"fail_prob must be in (0, 1), not {fail_prob!r}")

    return max(1, math.ceil(n * math.log(n / fail_prob)))


def coupon_miss_rate(n: int, n_prime: int, trials: int, rng: numpy.random.Generator, /) -> float:
    """Monte-Carlo estimate of the probability that `n_prime` uniform draws miss some index."""
    if n < 1 or n_prime < 1 or trials < 1:
        raise errors.ValidationError("n, n_prime and trials must be positive")

    misses = 0
    for batch in basic.chunk(iter(range(trials)), _MISS_RATE_BATCH):
        draws = rng.integers(n, size=(len(batch), n_prime))
        seen = numpy.zeros((len(batch), n), dtype=bool)
        seen[numpy.arange(len(batch))[:, None], draws] = True
        misses += int((~seen.all(axis=1)).sum())

    return misses / trials


def symmetrize(
    randomizers: collections.Sequence[mechanisms.Mechanism],
    coin_model: CoinModel | str,
    /,
    *,
    fail_prob: float = DEFAULT_FAIL_PROB,
) -> SymmetricCompilation:
    """Compile `n` local randomizers into one symmetric randomizer.

    Raises
    ------
    dpcalc.errors.ValidationError
        If `randomizers` is empty.
    dpcalc.errors.AlphabetMismatchError
        If the randomizers don't share an input alphabet (or output alphabet
        for public coins).
    """
    if not randomizers:
        raise errors.ValidationError("Need at least one randomizer to symmetrize")

    coin_model = CoinModel(coin_model)
    inputs = randomizers[0].inputs
    if any(randomizer.inputs != inputs for randomizer in randomizers):
        raise errors.AlphabetMismatchError("Randomizers must share their input alphabet")

    count = len(randomizers)
    seeds = mechanisms.labels(count, start=1)
    if coin_model is CoinModel.PRIVATE:
        outputs = [
            mechanisms.PRODUCT_SEPARATOR.join((seed, label))
            for seed, randomizer in zip(seeds, randomizers)
            for label in randomizer.outputs
        ]
        matrix = numpy.hstack([randomizer.matrix for randomizer in randomizers]) / count
        combined = mechanisms.Mechanism(inputs, outputs, matrix)

    else:
        outputs = randomizers[0].outputs
        if any(randomizer.outputs != outputs for randomizer in randomizers):
            raise errors.AlphabetMismatchError("Public coin randomizers must share their output alphabet")

        combined = mechanisms.Mechanism(
            [mechanisms.PRODUCT_SEPARATOR.join((seed, label)) for seed in seeds for label in inputs],
            outputs,
            numpy.vstack([randomizer.matrix for randomizer in randomizers]),
        )

    n_prime = coupon_rounds(count, fail_prob)
    _LOGGER.debug("symmetrized %s randomizers with %s coins for %s users", count, coin_model.value, n_prime)
    return SymmetricCompilation(combined=combined, coin_model=coin_model, members=tuple(randomizers), n_prime=n_prime)
