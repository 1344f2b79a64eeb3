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
"""Reading and writing the JSON mechanism file format.

A mechanism file is a UTF-8 JSON object with the fields `inputs`, `outputs`
and `rows` where row `i` is the output distribution for input `i`.
"""
from __future__ import annotations

__all__: list[str] = ["dump_mechanism", "load_mechanism", "mechanism_from_mapping", "mechanism_to_mapping"]

import json
import logging
import math
import pathlib
import typing

from .. import errors
from . import distributions
from . import mechanisms

if typing.TYPE_CHECKING:
    from collections import abc as collections

_LOGGER = logging.getLogger("dpcalc.files")


def _labels(mapping: collections.Mapping[str, typing.Any], field: str, /) -> list[str]:
    value = mapping.get(field)
    if value is None:
        raise errors.MechanismFileError(field, "missing")

    if not isinstance(value, list) or not value:
        raise errors.MechanismFileError(field, "expected a non-empty array of strings")

    value = typing.cast("list[typing.Any]", value)
    if not all(isinstance(label, str) for label in value):
        raise errors.MechanismFileError(field, "every label must be a string")

    return typing.cast("list[str]", value)


def _rows(mapping: collections.Mapping[str, typing.Any], width: int, /) -> list[list[float]]:
    value = mapping.get("rows")
    if value is None:
        raise errors.MechanismFileError("rows", "missing")

    if not isinstance(value, list):
        raise errors.MechanismFileError("rows", "expected an array of arrays")

    rows: list[list[float]] = []
    for index, row in enumerate(typing.cast("list[typing.Any]", value)):
        if not isinstance(row, list) or len(typing.cast("list[typing.Any]", row)) != width:
            raise errors.MechanismFileError(f"rows[{index}]", f"expected an array of {width} numbers")

        row = typing.cast("list[typing.Any]", row)
        if not all(isinstance(entry, (int, float)) and not isinstance(entry, bool) for entry in row):
            raise errors.MechanismFileError(f"rows[{index}]", "every probability must be a number")

        if not all(math.isfinite(entry) for entry in row):
            raise errors.MechanismFileError(f"rows[{index}]", "probabilities must be finite")

        rows.append([float(entry) for entry in row])

    return rows


def mechanism_from_mapping(mapping: collections.Mapping[str, typing.Any], /) -> mechanisms.Mechanism:
    """Build a mechanism from a decoded mechanism file.

    Raises
    ------
    dpcalc.errors.MechanismFileError
        If a field is missing or malformed, including rows which aren't distributions.
    """
    inputs = _labels(mapping, "inputs")
    outputs = _labels(mapping, "outputs")
    rows = _rows(mapping, len(outputs))
    if len(rows) != len(inputs):
        raise errors.MechanismFileError("rows", f"expected {len(inputs)} rows, one per input, got {len(rows)}")

    for index, row in enumerate(rows):
        try:
            distributions.Dist(row)

        except errors.InvalidDistributionError as exc:
            raise errors.MechanismFileError(f"rows[{index}]", exc.message) from None

    try:
        return mechanisms.Mechanism(inputs, outputs, rows)

    except errors.ValidationError as exc:
        raise errors.MechanismFileError("inputs/outputs", exc.message) from None


def mechanism_to_mapping(mechanism: mechanisms.Mechanism, /) -> dict[str, typing.Any]:
    return {
        "inputs": list(mechanism.inputs),
        "outputs": list(mechanism.outputs),
        "rows": mechanism.matrix.tolist(),
    }


def load_mechanism(path: pathlib.Path | str, /) -> mechanisms.Mechanism:
    """Load a mechanism file.

    Raises
    ------
    dpcalc.errors.MechanismFileError
        If the file can't be read, isn't JSON or isn't a valid mechanism.
    """
    path = pathlib.Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))

    except OSError as exc:
        raise errors.MechanismFileError("path", f"couldn't read {path}: {exc.strerror}") from None

    except json.JSONDecodeError as exc:
        raise errors.MechanismFileError("document", f"invalid JSON at line {exc.lineno}: {exc.msg}") from None

    if not isinstance(data, dict):
        raise errors.MechanismFileError("document", "expected a JSON object")

    mechanism = mechanism_from_mapping(typing.cast("dict[str, typing.Any]", data))
    _LOGGER.debug("loaded %s input, %s output mechanism from %s", *mechanism.matrix.shape, path)
    return mechanism


def dump_mechanism(mechanism: mechanisms.Mechanism, path: pathlib.Path | str, /) -> None:
    """Write a mechanism file."""
    pathlib.Path(path).write_text(json.dumps(mechanism_to_mapping(mechanism), indent=2) + "\n", encoding="utf-8")
