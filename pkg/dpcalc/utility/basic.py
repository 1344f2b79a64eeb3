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

__all__: list[str] = ["bisect_threshold", "chunk", "prettify_record", "prettify_value", "unit_grid"]

import typing

import numpy

if typing.TYPE_CHECKING:
    from collections import abc as collections

    import numpy.typing as npt

    _ValueT = typing.TypeVar("_ValueT")


def chunk(iterator: collections.Iterator[_ValueT], max_value: int, /) -> collections.Iterator[list[_ValueT]]:
    chunk: list[_ValueT] = []
    for entry in iterator:
        chunk.append(entry)
        if len(chunk) == max_value:
            yield chunk
            chunk = []

    if chunk:
        yield chunk


def unit_grid(points: int, /, *, start: float = 0.0, stop: float = 1.0) -> npt.NDArray[numpy.float64]:
    """Evenly spaced points over `[start, stop]` including both endpoints."""
    if points < 2:
        raise ValueError("A grid needs at least 2 points")

    return numpy.linspace(start, stop, points, dtype=numpy.float64)


def bisect_threshold(
    predicate: collections.Callable[[float], bool], low: float, high: float, /, *, iterations: int = 100
) -> float:
    """Find the smallest value in `[low, high]` where a monotone predicate turns true.

    `predicate(high)` must hold; the returned value always satisfies the predicate.
    """
    if predicate(low):
        return low

    for _ in range(iterations):
        middle = (low + high) / 2
        if middle in (low, high):
            break

        if predicate(middle):
            high = middle

        else:
            low = middle

    return high


def prettify_value(value: typing.Any, /) -> str:
    if isinstance(value, float):
        return f"{value:.6g}"

    if isinstance(value, dict):
        return "{" + ", ".join(f"{key}={prettify_value(entry)}" for key, entry in value.items()) + "}"

    if isinstance(value, list):
        return "[" + ", ".join(map(prettify_value, value)) + "]"

    return str(value)


def prettify_record(record: collections.Mapping[str, typing.Any], /) -> str:
    """Render a JSON record as aligned `key: value` lines."""
    width = max(map(len, record), default=0)
    return "\n".join(f"{key.ljust(width)}  {prettify_value(value)}" for key, value in record.items()) + "\n"
