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
"""Exact simulation of the one-message shuffle model.

The shuffler outputs the users' reports in a uniformly random order, so the
analyzer only ever sees how many times each output symbol was reported. Every
distribution here is therefore over count vectors.
"""
from __future__ import annotations

__all__: list[str] = [
    "COUNT_SEPARATOR",
    "AmplificationCheck",
    "AmplificationParams",
    "CountVector",
    "ShuffleInstance",
    "ShuffledOutput",
    "amplification_eps",
    "audit_shuffle",
    "check_amplification_vs_exact",
    "count_vector_neighbors",
    "enumerate_count_vectors",
    "shuffle_to_ldp_budget",
    "shuffled_distribution",
    "shuffled_mechanism",
    "union_event_mass",
]

import dataclasses
import functools
import itertools
import logging
import math
import typing

import numpy
from scipy import special

from . import config as config_
from . import errors
from .core import audits
from .core import budgets
from .core import distributions
from .core import mechanisms
from .utility import constants

if typing.TYPE_CHECKING:
    from typing import Self

    import numpy.typing as npt

_LOGGER = logging.getLogger("dpcalc.shuffle")

COUNT_SEPARATOR: typing.Final[str] = "|"
"""Separator between the entries of a count vector's label."""


@dataclasses.dataclass(frozen=True, order=True, slots=True)
class CountVector:
    """How many times each symbol of an alphabet occurs."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts:
            raise errors.ValidationError("A count vector needs at least one symbol")

        if any(count < 0 for count in self.counts):
            raise errors.ValidationError(f"Counts must be non-negative, not {self.counts!r}")

    @classmethod
    def from_label(cls, label: str, /) -> Self:
        try:
            return cls(tuple(int(count) for count in label.split(COUNT_SEPARATOR)))

        except ValueError:
            raise errors.ValidationError(f"Invalid count vector {label!r}") from None

    @property
    def n(self) -> int:
        return sum(self.counts)

    @property
    def label(self) -> str:
        return COUNT_SEPARATOR.join(map(str, self.counts))


def enumerate_count_vectors(n: int, k: int, /) -> list[CountVector]:
    """Every count vector over `k` symbols totalling `n`, in a fixed order."""
    if n < 0 or k < 1:
        raise errors.ValidationError("n must be non-negative and k positive")

    vectors: list[CountVector] = []
    # Stars and bars: the bars' positions fix the counts.
    for bars in itertools.combinations(range(n + k - 1), k - 1):
        edges = (-1, *bars, n + k - 1)
        vectors.append(CountVector(tuple(right - left - 1 for left, right in itertools.pairwise(edges))))

    return vectors


def count_vector_neighbors(n: int, k: int, /) -> list[tuple[CountVector, CountVector]]:
    """Ordered pairs of count vectors which differ by substituting one entry."""
    pairs: list[tuple[CountVector, CountVector]] = []
    for vector in enumerate_count_vectors(n, k):
        for source, target in itertools.permutations(range(k), 2):
            if vector.counts[source]:
                counts = list(vector.counts)
                counts[source] -= 1
                counts[target] += 1
                pairs.append((vector, CountVector(tuple(counts))))

    return pairs


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class ShuffleInstance:
    """A randomizer and a dataset given as the number of users holding each input."""

    randomizer: mechanisms.Mechanism
    dataset: CountVector

    def __post_init__(self) -> None:
        if len(self.dataset.counts) != len(self.randomizer.inputs):
            raise errors.AlphabetMismatchError("The dataset must count the randomizer's inputs")

        if self.dataset.n < 1:
            raise errors.ValidationError("A shuffle instance needs at least one user")


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class ShuffledOutput:
    """Distribution of the shuffler's output over every possible count vector."""

    support: tuple[CountVector, ...]
    dist: distributions.Dist

    def probability(self, vector: CountVector, /) -> float:
        return self.dist[self.support.index(vector)]


def _check_limits(randomizer: mechanisms.Mechanism, n: int, limits: config_.EnumerationLimits, /) -> int:
    if n > limits.max_users:
        raise errors.EnumerationLimitError(f"{n} users exceed the limit of {limits.max_users}")

    k = len(randomizer.outputs)
    if k > limits.max_outputs:
        raise errors.EnumerationLimitError(f"{k} output symbols exceed the limit of {limits.max_outputs}")

    size = math.comb(n + k - 1, k - 1)
    if size > limits.max_enum:
        raise errors.EnumerationLimitError(f"{size} count vectors exceed the limit of {limits.max_enum}")

    return size


def _multinomial(
    row: npt.NDArray[numpy.float64], users: int, /
) -> tuple[npt.NDArray[numpy.int64], npt.NDArray[numpy.float64]]:
    vectors = numpy.array([vector.counts for vector in enumerate_count_vectors(users, len(row))], dtype=numpy.int64)
    log_pmf = (
        special.gammaln(users + 1)
        - special.gammaln(vectors + 1).sum(axis=1)
        + special.xlogy(vectors, row[None, :]).sum(axis=1)
    )
    # xlogy(c, 0) is -inf for c > 0, giving probability 0.
    return vectors, numpy.exp(log_pmf)


def _encode(vectors: npt.NDArray[numpy.int64], radix: int, /) -> npt.NDArray[numpy.int64]:
    return vectors @ (radix ** numpy.arange(vectors.shape[1], dtype=numpy.int64))


@functools.lru_cache(maxsize=1024)
def _shuffled_mass(randomizer: mechanisms.Mechanism, counts: tuple[int, ...], /) -> npt.NDArray[numpy.float64]:
    n = sum(counts)
    k = len(randomizer.outputs)
    vectors = numpy.zeros((1, k), dtype=numpy.int64)
    mass = numpy.ones(1)
    for row, users in zip(randomizer.matrix, counts):
        if not users:
            continue

        extra, extra_mass = _multinomial(row, users)
        vectors = (vectors[:, None, :] + extra[None, :, :]).reshape(-1, k)
        mass = numpy.outer(mass, extra_mass).reshape(-1)
        vectors, inverse = numpy.unique(vectors, axis=0, return_inverse=True)
        mass = numpy.bincount(inverse.reshape(-1), weights=mass, minlength=len(vectors))

    support = numpy.array([vector.counts for vector in enumerate_count_vectors(n, k)], dtype=numpy.int64)
    support_codes = _encode(support, n + 1)
    order = numpy.argsort(support_codes)
    positions = order[numpy.searchsorted(support_codes, _encode(vectors, n + 1), sorter=order)]
    dense = numpy.zeros(len(support))
    numpy.add.at(dense, positions, mass)
    return dense


def shuffled_distribution(
    instance: ShuffleInstance, /, *, limits: config_.EnumerationLimits | None = None
) -> ShuffledOutput:
    """Exact distribution of the shuffled reports of one dataset.

    Each input symbol contributes a multinomial over the reports of the users
    holding it; these are convolved together.

    Raises
    ------
    dpcalc.errors.EnumerationLimitError
        If the users, output symbols or count vectors exceed `limits`.
    """
    if limits is None:
        limits = config_.EnumerationLimits.from_env()

    n = instance.dataset.n
    size = _check_limits(instance.randomizer, n, limits)
    _LOGGER.debug("enumerating %s count vectors for %s users", size, n)
    mass = _shuffled_mass(instance.randomizer, instance.dataset.counts)
    support = tuple(enumerate_count_vectors(n, len(instance.randomizer.outputs)))
    return ShuffledOutput(support=support, dist=distributions.Dist(mass))


def shuffled_mechanism(
    randomizer: mechanisms.Mechanism, n: int, /, *, limits: config_.EnumerationLimits | None = None
) -> mechanisms.Mechanism:
    """The whole shuffle protocol for `n` users as a mechanism from datasets to count vectors.

    Inputs and outputs are labelled with `CountVector.label`.
    """
    if limits is None:
        limits = config_.EnumerationLimits.from_env()

    if n < 1:
        raise errors.ValidationError(f"n must be positive, not {n!r}")

    _check_limits(randomizer, n, limits)
    datasets = enumerate_count_vectors(n, len(randomizer.inputs))
    if len(datasets) > limits.max_enum:
        raise errors.EnumerationLimitError(f"{len(datasets)} datasets exceed the limit of {limits.max_enum}")

    outputs = [vector.label for vector in enumerate_count_vectors(n, len(randomizer.outputs))]
    rows = [_shuffled_mass(randomizer, dataset.counts) for dataset in datasets]
    return mechanisms.Mechanism([dataset.label for dataset in datasets], outputs, rows)


def audit_shuffle(
    randomizer: mechanisms.Mechanism, n: int, eps: float, /, *, limits: config_.EnumerationLimits | None = None
) -> float:
    """Smallest delta for which shuffling `n` users' reports is (eps, delta)-DP.

    Neighbouring datasets differ by substituting one user's input.
    """
    protocol = shuffled_mechanism(randomizer, n, limits=limits)
    neighbors = [
        audits.NeighborPair.from_counts(left.counts, right.counts)
        for left, right in count_vector_neighbors(n, len(randomizer.inputs))
    ]
    return audits.audit_central(protocol, neighbors, eps)


def shuffle_to_ldp_budget(eps_s: float, delta_s: float, n: int, /) -> budgets.PrivacyBudget:
    """LDP budget `(eps_s + ln n, delta_s)` of the randomizer in an (eps_s, delta_s)-DP shuffle protocol."""
    if n < 1:
        raise errors.ValidationError(f"n must be positive, not {n!r}")

    budgets.PrivacyBudget(eps_s, delta_s)
    return budgets.PrivacyBudget(eps_s + math.log(n), delta_s)


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class AmplificationParams:
    """Inputs to the amplification by shuffling bound.

    Parameters
    ----------
    eps_l
        The randomizer's LDP budget.
    delta
        Target additive slack, in `(0, 1)`.
    n
        Number of users.
    gamma
        Fraction of users assumed honest, in `(0, 1]`.

    Raises
    ------
    dpcalc.errors.InfeasibleParametersError
        If `eps_l` is above `feasibility_cutoff`.
    """

    eps_l: float
    delta: float
    n: int
    gamma: float = 1.0

    def __post_init__(self) -> None:
        budgets.PrivacyBudget(self.eps_l)
        if not 0.0 < self.delta < 1.0:
            raise errors.ValidationError(f"delta must be in (0, 1), not {self.delta!r}")

        if self.n < 1:
            raise errors.ValidationError(f"n must be positive, not {self.n!r}")

        if not 0.0 < self.gamma <= 1.0:
            raise errors.ValidationError(f"gamma must be in (0, 1], not {self.gamma!r}")

        cutoff = self.feasibility_cutoff
        if self.eps_l > cutoff:
            raise errors.InfeasibleParametersError(
                f"eps_l={self.eps_l} exceeds the cutoff {cutoff:.6g} for {self.effective_n} users at delta={self.delta}"
            )

    @property
    def effective_n(self) -> int:
        """`floor(gamma n)`."""
        return math.floor(self.gamma * self.n)

    @property
    def feasibility_cutoff(self) -> float:
        """Largest `eps_l` the bound holds for, `ln(n / (8 ln(2 / delta)) - 1)` (`-inf` when empty)."""
        argument = self.effective_n / (8 * math.log(2 / self.delta)) - 1
        return math.log(argument) if argument > 0 else -math.inf


def amplification_eps(params: AmplificationParams, /) -> float:
    """Central eps of shuffling `floor(gamma n)` honest eps_l-LDP reports, at the params' delta."""
    n = params.effective_n
    growth = math.expm1(params.eps_l)
    spread = math.sqrt(2 * math.log(4 / params.delta) / ((math.exp(params.eps_l) + 1) * n))
    return math.log1p(4 * growth * (spread + 1 / n))


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class AmplificationCheck:
    """Exact shuffle audit at the amplification bound's eps."""

    eps_l: float
    n: int
    gamma: float
    bound_eps: float
    target_delta: float
    exact_delta: float

    @property
    def margin(self) -> float:
        return self.target_delta - self.exact_delta

    @property
    def passed(self) -> bool:
        return self.exact_delta <= self.target_delta + constants.AUDIT_TOLERANCE


def check_amplification_vs_exact(
    randomizer: mechanisms.Mechanism,
    n: int,
    delta: float,
    /,
    *,
    gamma: float = 1.0,
    limits: config_.EnumerationLimits | None = None,
) -> AmplificationCheck:
    """Audit shuffling `n` users exactly at the eps the amplification bound gives.

    Raises
    ------
    dpcalc.errors.InfeasibleParametersError
        If the randomizer isn't pure or the bound doesn't apply for `n` and `delta`.
    """
    eps_l = audits.audit_pure(randomizer)
    if math.isinf(eps_l):
        raise errors.InfeasibleParametersError("The randomizer isn't pure LDP")

    params = AmplificationParams(eps_l=eps_l, delta=delta, n=n, gamma=gamma)
    bound = amplification_eps(params)
    exact = audit_shuffle(randomizer, n, bound, limits=limits)
    _LOGGER.debug("amplification bound %s for eps_l=%s, n=%s: exact delta %s", bound, eps_l, n, exact)
    return AmplificationCheck(eps_l=eps_l, n=n, gamma=gamma, bound_eps=bound, target_delta=delta, exact_delta=exact)


def union_event_mass(p: float, n: int, /, *, private_coin: bool) -> float:
    """Probability that one of `n` independent reports hits an event of probability `p` each.

    Public coins only give the union bound `min(1, n p)`; with private coins
    the reports are independent and this is exactly `1 - (1 - p)^n`.
    """
    if not 0.0 <= p <= 1.0:
        raise errors.ValidationError(f"p must be in [0, 1], not {p!r}")

    if n < 1:
        raise errors.ValidationError(f"n must be positive, not {n!r}")

    if private_coin:
        return -math.expm1(n * math.log1p(-p)) if p < 1.0 else 1.0

    return min(1.0, n * p)
