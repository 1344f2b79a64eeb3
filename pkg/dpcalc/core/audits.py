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
"""Exact (eps, delta) audits of finite mechanisms.

Every audit here is an exact enumeration: the returned delta is the smallest
value for which the relevant differential privacy inequality holds for every
event, and the returned pure eps is the log of the largest likelihood ratio.
"""
from __future__ import annotations

__all__: list[str] = [
    "NeighborPair",
    "audit_central",
    "audit_deletion_ldp",
    "audit_pure",
    "audit_replacement_ldp",
    "eps_for_delta",
    "suggest_references",
    "tradeoff_curve",
]

import dataclasses
import logging
import math
import typing

import numpy

from .. import errors
from ..utility import basic
from . import budgets
from . import distributions

if typing.TYPE_CHECKING:
    from collections import abc as collections
    from typing import Self

    import numpy.typing as npt

    from . import mechanisms

_LOGGER = logging.getLogger("dpcalc.audits")
_EPS_SEARCH_CEILING = 64.0
_DIRECT_EPS_CEILING = 700.0


@dataclasses.dataclass(frozen=True, slots=True)
class NeighborPair:
    """Two neighbouring inputs, identified by their input labels."""

    left: str
    right: str

    @classmethod
    def from_counts(cls, left: collections.Sequence[int], right: collections.Sequence[int], /) -> Self:
        """Pair two count vectors which differ by moving a single entry.

        Count vectors are labelled like `CountVector.label` (`"2|0|1"`).

        Raises
        ------
        dpcalc.errors.ValidationError
            If the totals differ or the L1 distance of the counts isn't 2.
        """
        if len(left) != len(right):
            raise errors.AlphabetMismatchError("Count vectors must share their alphabet")

        if sum(left) != sum(right):
            raise errors.ValidationError("Neighbouring count vectors must have the same total")

        if sum(abs(a - b) for a, b in zip(left, right)) != 2:
            raise errors.ValidationError("Neighbouring count vectors must differ by a single substitution")

        return cls("|".join(map(str, left)), "|".join(map(str, right)))

    def swapped(self) -> NeighborPair:
        return NeighborPair(self.right, self.left)


def _pairwise_hockey_stick(matrix: npt.NDArray[numpy.float64], eps: float, /) -> npt.NDArray[numpy.float64]:
    scale = math.exp(eps)
    # [i, j] = sum_y max(0, M[i, y] - e^eps M[j, y])
    return numpy.maximum(matrix[:, None, :] - scale * matrix[None, :, :], 0.0).sum(axis=2)


def audit_replacement_ldp(randomizer: mechanisms.Mechanism, eps: float, /) -> float:
    """Smallest delta for which a randomizer is (eps, delta)-replacement LDP.

    Parameters
    ----------
    randomizer
        The local randomizer.
    eps
        The multiplicative budget.

    Returns
    -------
    float
        Max over ordered input pairs of the eps-hockey-stick divergence.

    Raises
    ------
    dpcalc.errors.ValidationError
        If the randomizer has fewer than 2 inputs.
    """
    if len(randomizer.inputs) < 2:
        raise errors.ValidationError("A replacement audit needs at least 2 inputs")

    if eps < 0 or math.isnan(eps):
        raise errors.ValidationError(f"eps must be non-negative, not {eps!r}")

    if eps > _DIRECT_EPS_CEILING:
        rows = randomizer.rows
        return max(distributions.hockey_stick(p, q, eps) for p in rows for q in rows)

    delta = float(_pairwise_hockey_stick(randomizer.matrix, eps).max())
    return min(max(delta, 0.0), 1.0)


def audit_deletion_ldp(randomizer: mechanisms.Mechanism, reference: distributions.Dist, eps: float, /) -> float:
    """Smallest delta for which a randomizer is (eps, delta)-deletion LDP against a reference.

    Both directions of the two-sided definition are checked for every input.

    Raises
    ------
    dpcalc.errors.AlphabetMismatchError
        If the reference isn't over the randomizer's output alphabet.
    """
    if len(reference) != len(randomizer.outputs):
        raise errors.AlphabetMismatchError("The reference must be over the randomizer's output alphabet")

    return max(
        max(distributions.hockey_stick(row, reference, eps), distributions.hockey_stick(reference, row, eps))
        for row in randomizer.rows
    )


def _resolve_pairs(
    mechanism: mechanisms.Mechanism, neighbors: collections.Iterable[NeighborPair], /
) -> list[tuple[int, int]]:
    return [(mechanism.index_of(pair.left), mechanism.index_of(pair.right)) for pair in neighbors]


def _column_log_ratio(column: npt.NDArray[numpy.float64], /) -> float:
    positive = column > 0.0
    if not positive.any():
        return 0.0

    if not positive.all():
        return math.inf

    return float(numpy.log(column.max()) - numpy.log(column.min()))


def audit_pure(
    randomizer: mechanisms.Mechanism, /, neighbors: collections.Iterable[NeighborPair] | None = None
) -> float:
    """Smallest eps for which the audit returns delta = 0.

    Parameters
    ----------
    randomizer
        The mechanism to audit.
    neighbors
        If provided, only these pairs (in both orientations) are compared;
        otherwise every pair of inputs is (replacement LDP).

    Returns
    -------
    float
        The log of the largest likelihood ratio, `math.inf` when some
        pair doesn't have nested supports.
    """
    matrix = randomizer.matrix
    if neighbors is None:
        if len(randomizer.inputs) < 2:
            raise errors.ValidationError("A replacement audit needs at least 2 inputs")

        return max(_column_log_ratio(matrix[:, column]) for column in range(matrix.shape[1]))

    result = 0.0
    for left, right in _resolve_pairs(randomizer, neighbors):
        pair = matrix[[left, right]]
        result = max(result, max(_column_log_ratio(pair[:, column]) for column in range(pair.shape[1])))

    return result


def audit_central(
    mechanism: mechanisms.Mechanism, neighbors: collections.Iterable[NeighborPair], eps: float, /
) -> float:
    """Smallest delta for which a mechanism is (eps, delta)-DP over an explicit neighbour list.

    Inputs of `mechanism` are whole-dataset encodings supplied by the caller.

    Raises
    ------
    dpcalc.errors.UnknownSymbolError
        If a pair references an unknown input.
    """
    pairs = _resolve_pairs(mechanism, neighbors)
    delta = 0.0
    for left, right in pairs:
        p = mechanism.row_at(left)
        q = mechanism.row_at(right)
        delta = max(delta, distributions.hockey_stick(p, q, eps), distributions.hockey_stick(q, p, eps))

    _LOGGER.debug("audited %s neighbour pairs at eps=%s: delta=%s", len(pairs), eps, delta)
    return delta


def tradeoff_curve(
    audit: collections.Callable[[float], float], eps_values: collections.Iterable[float], /
) -> budgets.TradeoffCurve:
    """Sample an audit at each eps to build a tradeoff curve."""
    return budgets.TradeoffCurve.from_audit(audit, eps_values)


def eps_for_delta(audit: collections.Callable[[float], float], delta: float, /, *, tolerance: float = 1e-12) -> float:
    """Smallest eps for which `audit(eps) <= delta` (bisection on the non-increasing audit).

    Returns `math.inf` if no eps up to 64 reaches `delta`.
    """
    if not 0.0 <= delta <= 1.0:
        raise errors.ValidationError(f"delta must be in [0, 1], not {delta!r}")

    upper = 1.0
    while audit(upper) > delta:
        upper *= 2
        if upper > _EPS_SEARCH_CEILING:
            return math.inf

    iterations = max(1, math.ceil(math.log2(max(upper, tolerance) / tolerance)))
    return basic.bisect_threshold(lambda eps: audit(eps) <= delta, 0.0, upper, iterations=iterations)


def suggest_references(randomizer: mechanisms.Mechanism, /) -> list[tuple[str, distributions.Dist]]:
    """Candidate reference distributions for a deletion audit.

    Returns the uniform distribution, the average of the rows and each row
    (named `"uniform"`, `"average"` and `"row:<label>"`).
    """
    candidates = [
        ("uniform", distributions.uniform_dist(len(randomizer.outputs))),
        ("average", distributions.Dist(randomizer.matrix.mean(axis=0))),
    ]
    candidates.extend((f"row:{label}", randomizer.row(label)) for label in randomizer.inputs)
    return candidates
