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
import json
import math
import pathlib

import pytest

from dpcalc import errors
from dpcalc import verification
from dpcalc.verification import report
from dpcalc.verification import suites


def test_jsonable():
    result = report.jsonable({"a": math.inf, "b": [math.nan, -math.inf, 1.5], "c": (1, "x")})

    assert result == {"a": "inf", "b": ["nan", "-inf", 1.5], "c": [1, "x"]}


def test_check_record_from_sweep():
    record = report.CheckRecord.from_sweep("dp.example", "example", [0.5, 0.1, -1e-12, -0.2], inputs={"n": 4})

    assert record.count == 4
    assert record.failures == 1
    assert record.margin == -0.2
    assert not record.passed
    assert record.to_mapping()["inputs"] == {"n": 4}


def test_check_record_from_empty_sweep():
    with pytest.raises(ValueError):
        report.CheckRecord.from_sweep("dp.example", "example", [])


def test_report_mappings():
    result = report.Report(suite="dp", seed=3, wall_time=1.5)
    result.add(report.CheckRecord(check_id="dp.b", claim="b", margin=0.0))
    result.add(report.CheckRecord(check_id="dp.a", claim="a", margin=-1.0))

    entries = list(result.iter_mappings())

    assert entries[0] == {"type": "header", "suite": "dp", "seed": 3}
    assert [entry["check_id"] for entry in entries[1:3]] == ["dp.a", "dp.b"]
    assert entries[-1] == {"type": "summary", "checks": 2, "failed": 1, "passed": False}
    assert list(result.iter_mappings(timing=True))[-1]["wall_time"] == 1.5


def test_report_write(tmp_path: pathlib.Path):
    result = report.Report(suite="dp", seed=3)
    result.add(report.CheckRecord(check_id="dp.a", claim="a", expected=math.inf, margin=0.0))
    path = tmp_path / "report.jsonl"

    result.write(path)

    lines = [json.loads(line) for line in path.read_text().splitlines()]
    assert len(lines) == 3
    assert lines[1]["expected"] == "inf"
    assert lines[1]["passed"] is True


def test_check_rng_is_stable_per_check():
    first = suites.check_rng(5, "dp.a").random(3)

    assert (first == suites.check_rng(5, "dp.a").random(3)).all()
    assert not (first == suites.check_rng(5, "dp.b").random(3)).all()
    assert not (first == suites.check_rng(6, "dp.a").random(3)).all()


def test_run_suite_unknown():
    with pytest.raises(errors.ValidationError):
        verification.run_suite("nope", 0)


def test_check_ids_are_unique():
    check_ids = [check.check_id for checks in suites.SUITES.values() for check in checks]

    assert len(check_ids) == len(set(check_ids))
    assert all(checks for checks in suites.SUITES.values())


@pytest.mark.parametrize("suite", list(suites.SUITES))
def test_suites_pass(suite: str):
    result = verification.run_suite(suite, 0)

    assert result.records
    assert [record.check_id for record in result.failed] == []


def test_seeded_suite_results_are_reproducible():
    first = verification.run_suite("dp", 42)
    second = verification.run_suite("dp", 42)

    assert first.dumps() == second.dumps()
    other = verification.run_suite("dp", 43)
    assert [record.to_mapping() for record in first.records] != [record.to_mapping() for record in other.records]
