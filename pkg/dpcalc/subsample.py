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
"""Amplification by subsampling, as a bound and as an exactly audited construction."""
from __future__ import annotations

__all__: list[str] = [
    "SubsampleParams",
    "SubsampleTightness",
    "build_subsampled",
    "enumerate_datasets",
    "subsample_budget",
    "substitution_neighbors",
    "verify_subsample_tightness",
    "worst_case_base",
]

import dataclasses
import itertools
import logging
import math
import typing

import numpy

from . import config as config_
from . import errors
from .core import audits
from .core import budgets
from .core import mechanisms
from .utility import constants

if typing.TYPE_CHECKING:
    from collections import abc as collections

_LOGGER = logging.getLogger("dpcalc.subsample")

MARKED_RECORD: typing.Final[str] = "1"
"""The record `worst_case_base` reports the presence of."""


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class SubsampleParams:
    """Sizes of a fixed-size subsample.

    Parameters
    ----------
    n
        Dataset size.
    m
        Sample size.
    p
        Largest probability any one record is sampled, defaults to `m / n`.
    """

    n: int
    m: int
    p: float = math.nan

    def __post_init__(self) -> None:
        if not 1 <= self.m <= self.n:
            raise errors.ValidationError(f"Need 1 <= m <= n, not m={self.m}, n={self.n}")

        if math.isnan(self.p):
            object.__setattr__(self, "p", self.m / self.n)

        if not 0.0 < self.p <= 1.0:
            raise errors.ValidationError(f"p must be in (0, 1], not {self.p!r}")

    @property
    def is_constructive(self) -> bool:
        """Whether `p` is the inclusion probability of a uniform size `m` sample."""
        return abs(self.p - self.m / self.n) <= constants.ORACLE_TOLERANCE


def subsample_budget(eps: float, delta: float, p: float, /) -> budgets.PrivacyBudget:
    """Budget `(ln(1 + p (e^eps - 1)), p delta)` of running an (eps, delta)-DP mechanism on a subsample."""
    budget = budgets.PrivacyBudget(eps, delta)
    if not 0.0 < p <= 1.0:
        raise errors.ValidationError(f"p must be in (0, 1], not {p!r}")

    if p == 1.0:
        return budget

    if math.isinf(eps):
        return budgets.PrivacyBudget(math.inf, p * delta)

    return budgets.PrivacyBudget(math.log1p(p * math.expm1(eps)), p * delta)


def _join(records: collections.Iterable[str], /) -> str:
    return mechanisms.PRODUCT_SEPARATOR.join(records)


def enumerate_datasets(
    records: collections.Sequence[str], n: int, /, *, limits: config_.EnumerationLimits | None = None
) -> list[str]:
    """Labels of every dataset of `n` records drawn from `records` (entries joined by `","`).

    Raises
    ------
    dpcalc.errors.EnumerationLimitError
        If the record alphabet, dataset size or dataset count exceed `limits`.
    """
    if limits is None:
        limits = config_.EnumerationLimits.from_env()

    if not records or n < 1:
        raise errors.ValidationError("Need at least one record and a positive dataset size")

    if any(mechanisms.PRODUCT_SEPARATOR in record for record in records):
        raise errors.ValidationError(f"Records can't contain {mechanisms.PRODUCT_SEPARATOR!r}")

    if len(records) > limits.max_records:
        raise errors.EnumerationLimitError(f"{len(records)} records exceed the limit of {limits.max_records}")

    if n > limits.max_dataset_size:
        raise errors.EnumerationLimitError(f"Datasets of {n} records exceed the limit of {limits.max_dataset_size}")

    if len(records) ** n > limits.max_enum:
        raise errors.EnumerationLimitError(f"{len(records) ** n} datasets exceed the limit of {limits.max_enum}")

    return [_join(dataset) for dataset in itertools.product(records, repeat=n)]


def substitution_neighbors(datasets: collections.Iterable[str], /) -> list[audits.NeighborPair]:
    """Ordered pairs of the given datasets which differ in exactly one entry."""
    split = [(label, label.split(mechanisms.PRODUCT_SEPARATOR)) for label in datasets]
    return [
        audits.NeighborPair(left, right)
        for (left, left_records), (right, right_records) in itertools.permutations(split, 2)
        if len(left_records) == len(right_records)
        and sum(a != b for a, b in zip(left_records, right_records)) == 1
    ]


def build_subsampled(
    base: mechanisms.Mechanism, n: int, m: int, /, *, limits: config_.EnumerationLimits | None = None
) -> mechanisms.Mechanism:
    """Run `base` on a uniformly random size `m` sample of an `n` record dataset.

    The sampled records keep their order in the dataset, so each row is the
    average of `base` over every size `m` subset of positions.

    Parameters
    ----------
    base
        Mechanism whose inputs are every `m` record dataset over some record
        alphabet, labelled as by `enumerate_datasets`.
    n
        Size of the datasets the result takes.
    m
        Sample size.

    Raises
    ------
    dpcalc.errors.UnknownSymbolError
        If `base` doesn't cover every `m` record dataset.
    dpcalc.errors.EnumerationLimitError
        If the datasets or samples exceed `limits`.
    """
    if limits is None:
        limits = config_.EnumerationLimits.from_env()

    SubsampleParams(n=n, m=m)
    split = (label.split(mechanisms.PRODUCT_SEPARATOR) for label in base.inputs)
    records = list(dict.fromkeys(itertools.chain.from_iterable(split)))
    expected = enumerate_datasets(records, m, limits=limits)
    missing = set(expected).difference(base.inputs)
    if missing:
        raise errors.UnknownSymbolError(f"The base mechanism is missing the datasets {sorted(missing)!r}")

    datasets = enumerate_datasets(records, n, limits=limits)
    if math.comb(n, m) > limits.max_enum:
        raise errors.EnumerationLimitError(f"{math.comb(n, m)} samples exceed the limit of {limits.max_enum}")

    subsets = numpy.array(list(itertools.combinations(range(n), m)), dtype=numpy.int64)

    record_index = {record: index for index, record in enumerate(records)}
    data = numpy.array(
        [[record_index[record] for record in label.split(mechanisms.PRODUCT_SEPARATOR)] for label in datasets],
        dtype=numpy.int64,
    )
    # Position of each m record dataset in `expected` (itertools.product order).
    weights = len(records) ** numpy.arange(m - 1, -1, -1, dtype=numpy.int64)
    base_rows = numpy.array([base.index_of(label) for label in expected], dtype=numpy.int64)
    rows = numpy.empty((len(datasets), len(base.outputs)))
    for index, dataset in enumerate(data):
        samples = dataset[subsets] @ weights
        rows[index] = base.matrix[base_rows[samples]].mean(axis=0)

    _LOGGER.debug("subsampled %s datasets over %s samples", len(datasets), len(subsets))
    return mechanisms.Mechanism(datasets, base.outputs, rows)


def worst_case_base(eps: float, m: int, /) -> mechanisms.Mechanism:
    """Randomized response on whether an `m` record binary dataset holds the marked record `"1"`."""
    response = mechanisms.randomized_response(eps)
    datasets = [_join(dataset) for dataset in itertools.product(("0", MARKED_RECORD), repeat=m)]
    rows = [response.row_at(int(MARKED_RECORD in label.split(mechanisms.PRODUCT_SEPARATOR))) for label in datasets]
    return mechanisms.Mechanism(datasets, response.outputs, rows)


@dataclasses.dataclass(frozen=True, kw_only=True, slots=True)
class SubsampleTightness:
    """How close an exactly audited subsampled mechanism gets to the subsampling bound."""

    eps: float
    n: int
    m: int
    bound_eps: float
    audited_eps: float

    @property
    def p(self) -> float:
        return self.m / self.n

    @property
    def gap(self) -> float:
        return self.bound_eps - self.audited_eps

    @property
    def passed(self) -> bool:
        return self.audited_eps <= self.bound_eps + constants.AUDIT_TOLERANCE and self.gap <= constants.AUDIT_TOLERANCE


def verify_subsample_tightness(
    eps: float, n: int, m: int, /, *, limits: config_.EnumerationLimits | None = None
) -> SubsampleTightness:
    """Audit the subsampled `worst_case_base` against `subsample_budget`."""
    params = SubsampleParams(n=n, m=m)
    subsampled = build_subsampled(worst_case_base(eps, m), n, m, limits=limits)
    audited = audits.audit_pure(subsampled, substitution_neighbors(subsampled.inputs))
    bound = subsample_budget(eps, 0.0, params.p).eps
    return SubsampleTightness(eps=eps, n=n, m=m, bound_eps=bound, audited_eps=audited)
