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
import pathlib

import pytest

from dpcalc import errors
from dpcalc.core import files
from dpcalc.core import mechanisms


def test_dump_then_load(tmp_path: pathlib.Path):
    mechanism = mechanisms.randomized_response(1.0, k=3)
    path = tmp_path / "rr.json"

    files.dump_mechanism(mechanism, path)

    assert files.load_mechanism(path) == mechanism
    assert json.loads(path.read_text())["inputs"] == ["0", "1", "2"]


def test_mechanism_from_mapping_keeps_labels():
    mechanism = files.mechanism_from_mapping(
        {"inputs": ["yes", "no"], "outputs": ["a", "b"], "rows": [[1, 0], [0.5, 0.5]]}
    )

    assert mechanism.inputs == ("yes", "no")
    assert mechanism.row("yes")[0] == 1.0


@pytest.mark.parametrize(
    ("document", "field"),
    [
        ({"outputs": ["a"], "rows": [[1.0]]}, "inputs"),
        ({"inputs": [], "outputs": ["a"], "rows": []}, "inputs"),
        ({"inputs": ["x"], "outputs": [1], "rows": [[1.0]]}, "outputs"),
        ({"inputs": ["x"], "outputs": ["a"]}, "rows"),
        ({"inputs": ["x", "y"], "outputs": ["a"], "rows": [[1.0]]}, "rows"),
        ({"inputs": ["x"], "outputs": ["a", "b"], "rows": [[1.0]]}, "rows[0]"),
        ({"inputs": ["x"], "outputs": ["a", "b"], "rows": [[0.7, 0.7]]}, "rows[0]"),
        ({"inputs": ["x"], "outputs": ["a", "b"], "rows": [["0.5", 0.5]]}, "rows[0]"),
        ({"inputs": ["x", "x"], "outputs": ["a"], "rows": [[1.0], [1.0]]}, "inputs/outputs"),
    ],
)
def test_mechanism_from_mapping_names_the_bad_field(document: dict[str, object], field: str):
    with pytest.raises(errors.MechanismFileError) as exc_info:
        files.mechanism_from_mapping(document)

    assert exc_info.value.field == field
    assert str(exc_info.value).startswith(f"{field}: ")


def test_load_mechanism_invalid_json(tmp_path: pathlib.Path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")

    with pytest.raises(errors.MechanismFileError) as exc_info:
        files.load_mechanism(path)

    assert exc_info.value.field == "document"


def test_load_mechanism_not_an_object(tmp_path: pathlib.Path):
    path = tmp_path / "list.json"
    path.write_text("[]")

    with pytest.raises(errors.MechanismFileError) as exc_info:
        files.load_mechanism(path)

    assert exc_info.value.field == "document"


def test_load_mechanism_missing_file(tmp_path: pathlib.Path):
    with pytest.raises(errors.MechanismFileError) as exc_info:
        files.load_mechanism(tmp_path / "missing.json")

    assert exc_info.value.field == "path"
