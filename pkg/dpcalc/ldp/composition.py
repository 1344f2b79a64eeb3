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
"""Sequential composition of two pure local randomizers (post-processing one with the other)."""
from __future__ import annotations

__all__: list[str] = [
    "appendix_inequality_check",
    "appendix_inequality_grid",
    "compose_eps",
    "compose_tightness_search",
]

import logging
import math
import typing

import numpy

from .. import errors
from ..core import audits
from ..core import mechanisms
from ..utility import basic
from ..utility import constants

if typing.TYPE_CHECKING:
    import numpy.typing as npt

_LOGGER = logging.getLogger("dpcalc.ldp.composition")
_INEQUALITY_SLACK = 1e-12
_LARGEST_EPS = 700.0


def _check_eps(*values: float) -> None:
    for value in values:
        if math.isnan(value) or value < 0:
            raise errors.ValidationError(f"eps must be non-negative, not {value!r}")


def _compose_log(
    eps1: npt.NDArray[numpy.float64] | float, eps2: npt.NDArray[numpy.float64] | float, /
) -> npt.NDArray[numpy.float64]:
    return numpy.logaddexp(numpy.add(eps1, eps2), 0.0) - numpy.logaddexp(eps1, eps2)


def compose_eps(eps1: float, eps2: float, /) -> float:
    """Pure budget of an eps2-LDP randomizer run on the output of an eps1-LDP one.

    This is `ln((e^(eps1 + eps2) + 1) / (e^eps1 + e^eps2))`.
    """
    _check_eps(eps1, eps2)
    if math.isinf(eps1) or math.isinf(eps2):
        return min(eps1, eps2)

    return max(0.0, float(_compose_log(eps1, eps2)))


def _composed_log_ratio(
    p0: npt.NDArray[numpy.float64], p1: npt.NDArray[numpy.float64], keep: float, /
) -> npt.NDArray[numpy.float64]:
    a0 = keep * p0 + (1.0 - keep) * (1.0 - p0)
    a1 = keep * p1 + (1.0 - keep) * (1.0 - p1)
    with numpy.errstate(divide="ignore", invalid="ignore"):
        ratios = numpy.stack(
            [
                numpy.log(a0) - numpy.log(a1),
                numpy.log(a1) - numpy.log(a0),
                numpy.log1p(-a0) - numpy.log1p(-a1),
                numpy.log1p(-a1) - numpy.log1p(-a0),
            ]
        )

    # Both sides 0 on one output.
    return numpy.nan_to_num(ratios, nan=0.0, posinf=numpy.inf).max(axis=0)


def _feasible(
    p0: npt.NDArray[numpy.float64], p1: npt.NDArray[numpy.float64], eps1: float, /
) -> npt.NDArray[numpy.bool_]:
    scale = math.exp(eps1)
    slack = constants.ORACLE_TOLERANCE
    return (
        (p0 <= scale * p1 + slack)
        & (p1 <= scale * p0 + slack)
        & (1.0 - p0 <= scale * (1.0 - p1) + slack)
        & (1.0 - p1 <= scale * (1.0 - p0) + slack)
    )


def _search(
    axis0: npt.NDArray[numpy.float64], axis1: npt.NDArray[numpy.float64], eps1: float, keep: float, /
) -> tuple[float, int, int]:
    p0, p1 = numpy.meshgrid(axis0, axis1, indexing="ij")
    values = numpy.where(_feasible(p0, p1, eps1), _composed_log_ratio(p0, p1, keep), -numpy.inf)
    index0, index1 = numpy.unravel_index(int(numpy.argmax(values)), values.shape)
    return float(values[index0, index1]), int(index0), int(index1)


def _edge_search(axis1: npt.NDArray[numpy.float64], eps1: float, keep: float, /) -> tuple[float, int, float]:
    # Largest p0 allowed for each p1; the optimum sits on this edge (mirror cases give the same ratios).
    scale = math.exp(eps1)
    p0 = numpy.clip(numpy.minimum(scale * axis1, 1.0 - (1.0 - axis1) / scale), 0.0, 1.0)
    values = numpy.where(_feasible(p0, axis1, eps1), _composed_log_ratio(p0, axis1, keep), -numpy.inf)
    index = int(numpy.argmax(values))
    return float(values[index]), index, float(p0[index])


def compose_tightness_search(eps1: float, eps2: float, grid: int, /) -> float:
    """Largest pure budget a binary eps1-LDP randomizer followed by randomized response achieves.

    Searches a `grid` x `grid` lattice of first-stage rows `(p0, 1 - p0)` and
    `(p1, 1 - p1)` satisfying eps1-LDP along with the edge of largest feasible `p0`
    for each `p1`, refining each once around its best point.

    Returns
    -------
    float
        The audited pure budget of the best composition found. This never
        exceeds `compose_eps(eps1, eps2)`.
    """
    _check_eps(eps1, eps2)
    if grid < 2:
        raise errors.ValidationError(f"grid must be at least 2, not {grid!r}")

    eps1 = min(eps1, _LARGEST_EPS)

    second = mechanisms.randomized_response(eps2)
    keep = float(second.matrix[0, 0])
    axis = basic.unit_grid(grid)
    _, index0, index1 = _search(axis, axis, eps1, keep)

    lower0, upper0 = axis[max(index0 - 1, 0)], axis[min(index0 + 1, grid - 1)]
    lower1, upper1 = axis[max(index1 - 1, 0)], axis[min(index1 + 1, grid - 1)]
    fine0 = basic.unit_grid(grid, start=lower0, stop=upper0)
    fine1 = basic.unit_grid(grid, start=lower1, stop=upper1)
    value, index0, index1 = _search(fine0, fine1, eps1, keep)
    p0 = float(fine0[index0])
    p1 = float(fine1[index1])

    _, index, _ = _edge_search(axis, eps1, keep)
    edge_axis = basic.unit_grid(grid, start=axis[max(index - 1, 0)], stop=axis[min(index + 1, grid - 1)])
    edge_value, index, edge_p0 = _edge_search(edge_axis, eps1, keep)
    if edge_value > value:
        value, p0, p1 = edge_value, edge_p0, float(edge_axis[index])

    first = mechanisms.Mechanism(("0", "1"), ("0", "1"), [[p0, 1.0 - p0], [p1, 1.0 - p1]])
    achieved = audits.audit_pure(mechanisms.compose(first, second))
    _LOGGER.debug("best composition at p0=%s p1=%s: searched %s, audited %s", p0, p1, value, achieved)
    return achieved


def appendix_inequality_check(x: float, y: float, /) -> bool:
    """Whether `(1 + e^(x + y)) / (e^x + e^y) <= e^(xy / 2)` holds within 1e-12."""
    _check_eps(x, y)
    return bool(appendix_inequality_grid(numpy.array([x]), numpy.array([y])).all())


def appendix_inequality_grid(
    xs: npt.NDArray[numpy.float64], ys: npt.NDArray[numpy.float64], /
) -> npt.NDArray[numpy.bool_]:
    """`appendix_inequality_check` over every pair of the outer grid `xs` x `ys`."""
    x, y = numpy.meshgrid(xs, ys, indexing="ij")
    # Compared in log space so large x and y don't overflow.
    bound = numpy.logaddexp(x * y / 2, math.log(_INEQUALITY_SLACK))
    return _compose_log(x, y) <= bound
