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
"""Line-delimited JSON reports of verification runs."""
from __future__ import annotations

__all__: list[str] = ["CheckRecord", "Report", "jsonable"]

import dataclasses
import json
import math
import pathlib
import typing

import numpy

from ..utility import constants

if typing.TYPE_CHECKING:
    from collections import abc as collections
    from typing import Self


def jsonable(value: typing.Any, /) -> typing.Any:
    """Make a value JSON safe: numpy scalars become Python numbers, non-finite floats strings."""
    if isinstance(value, numpy.generic):
        value = typing.cast("typing.Any", value).item()

    if isinstance(value, float) and not math.isfinite(value):
        return "nan" if math.isnan(value) else ("inf" if value > 0 else "-inf")

    if isinstance(value, dict):
        return {str(key): jsonable(entry) for key, entry in typing.cast("dict[typing.Any, typing.Any]", value).items()}

    if isinstance(value, (list, tuple)):
        return [jsonable(entry) for entry in typing.cast("collections.Iterable[typing.Any]", value)]

    return value


@dataclasses.dataclass(kw_only=True, slots=True)
class CheckRecord:
    """The outcome of one verification check.

    A check passes when its margin is at least `-tolerance` and none of the
    cases of a sweep failed.

    Attributes
    ----------
    check_id
        Unique, stable identifier (`"<suite>.<name>"`).
    claim
        Short name of the property being checked.
    inputs
        The parameters the check was run with.
    expected
        The bound or value the property promises, if a single one exists.
    achieved
        The audited value, if a single one exists.
    margin
        How far inside the bound the achieved value lies (worst case for sweeps).
    tolerance
        Numerical slack allowed on the margin.
    count
        How many cases the check covers.
    failures
        How many of those cases fell outside the tolerance.
    """

    check_id: str
    claim: str
    inputs: dict[str, typing.Any] = dataclasses.field(default_factory=dict[str, typing.Any])
    expected: float | None = None
    achieved: float | None = None
    margin: float
    tolerance: float = constants.AUDIT_TOLERANCE
    count: int = 1
    failures: int = 0

    @classmethod
    def from_sweep(
        cls,
        check_id: str,
        claim: str,
        margins: collections.Iterable[float],
        /,
        *,
        inputs: dict[str, typing.Any] | None = None,
        tolerance: float = constants.AUDIT_TOLERANCE,
    ) -> Self:
        """Summarise many cases of one property by their worst margin."""
        values = numpy.fromiter(margins, dtype=numpy.float64)
        if values.size == 0:
            raise ValueError("A sweep needs at least one case")

        return cls(
            check_id=check_id,
            claim=claim,
            inputs=inputs or {},
            margin=float(values.min()),
            tolerance=tolerance,
            count=int(values.size),
            failures=int((values < -tolerance).sum()),
        )

    @property
    def passed(self) -> bool:
        return self.margin >= -self.tolerance and self.failures == 0

    def to_mapping(self) -> dict[str, typing.Any]:
        return jsonable(
            {
                "type": "check",
                "check_id": self.check_id,
                "claim": self.claim,
                "inputs": self.inputs,
                "expected": self.expected,
                "achieved": self.achieved,
                "margin": self.margin,
                "tolerance": self.tolerance,
                "count": self.count,
                "failures": self.failures,
                "passed": self.passed,
            }
        )


@dataclasses.dataclass(kw_only=True, slots=True)
class Report:
    """Every check of one verification run."""

    suite: str
    seed: int
    records: list[CheckRecord] = dataclasses.field(default_factory=list[CheckRecord])
    wall_time: float | None = None

    def add(self, record: CheckRecord, /) -> Self:
        self.records.append(record)
        return self

    @property
    def passed(self) -> bool:
        return all(record.passed for record in self.records)

    @property
    def failed(self) -> list[CheckRecord]:
        return [record for record in self.records if not record.passed]

    def iter_mappings(self, *, timing: bool = False) -> collections.Iterator[dict[str, typing.Any]]:
        """Header, one record per check ordered by check id, then a summary."""
        yield {"type": "header", "suite": self.suite, "seed": self.seed}
        for record in sorted(self.records, key=lambda record: record.check_id):
            yield record.to_mapping()

        summary: dict[str, typing.Any] = {
            "type": "summary",
            "checks": len(self.records),
            "failed": len(self.failed),
            "passed": self.passed,
        }
        if timing and self.wall_time is not None:
            summary["wall_time"] = self.wall_time

        yield summary

    def dumps(self, *, timing: bool = False) -> str:
        return "".join(json.dumps(entry, sort_keys=True) + "\n" for entry in self.iter_mappings(timing=timing))

    def write(self, path: pathlib.Path | str, /, *, timing: bool = False) -> None:
        pathlib.Path(path).write_text(self.dumps(timing=timing), encoding="utf-8")
