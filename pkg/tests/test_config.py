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
import logging
import pathlib

import pytest

from dpcalc import config


def test_enumeration_limits_defaults():
    limits = config.EnumerationLimits()

    assert limits.max_users == 60
    assert limits.max_outputs == 6
    assert limits.max_enum == 200_000


def test_enumeration_limits_from_mapping():
    limits = config.EnumerationLimits.from_mapping({"max_users": "10", "max_enum": 50})

    assert limits.max_users == 10
    assert limits.max_enum == 50
    assert limits.max_records == 3


def test_enumeration_limits_rejects_non_positive():
    with pytest.raises(ValueError, match="positive"):
        config.EnumerationLimits.from_mapping({"max_users": 0})


def test_enumeration_limits_from_env(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("DPCALC_MAX_USERS", "12")
    monkeypatch.setenv("DPCALC_MAX_DATASET_SIZE", "4")

    limits = config.EnumerationLimits.from_env()

    assert limits.max_users == 12
    assert limits.max_dataset_size == 4


def test_full_config_from_mapping():
    result = config.FullConfig.from_mapping({"log_level": "debug", "seed": 9, "limits": {"max_outputs": 4}})

    assert result.log_level == "DEBUG"
    assert result.seed == 9
    assert result.limits.max_outputs == 4


def test_full_config_from_mapping_rejects_bad_log_level():
    with pytest.raises(TypeError):
        config.FullConfig.from_mapping({"log_level": [1]})


def test_full_config_from_env(monkeypatch: pytest.MonkeyPatch, tmp_path: pathlib.Path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("DPCALC_SEED", "31")
    monkeypatch.setenv("DPCALC_LOG_LEVEL", "10")

    result = config.FullConfig.from_env()

    assert result.seed == 31
    assert result.log_level == logging.DEBUG


def test_get_config_from_yaml_file(tmp_path: pathlib.Path):
    path = tmp_path / "dpcalc.yaml"
    path.write_text("seed: 4\nlimits:\n  max_users: 20\n")

    result = config.get_config_from_file(path)

    assert result.seed == 4
    assert result.limits.max_users == 20


def test_load_config_finds_json_file(monkeypatch: pytest.MonkeyPatch, tmp_path: pathlib.Path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("DPCALC_CONFIG_FILE", raising=False)
    (tmp_path / "dpcalc.json").write_text(json.dumps({"seed": 77}))

    assert config.load_config().seed == 77


def test_load_config_from_environment_path(monkeypatch: pytest.MonkeyPatch, tmp_path: pathlib.Path):
    path = tmp_path / "custom.yaml"
    path.write_text("seed: 5\n")
    monkeypatch.setenv("DPCALC_CONFIG_FILE", str(path))

    assert config.load_config().seed == 5


def test_load_config_missing_environment_path(monkeypatch: pytest.MonkeyPatch, tmp_path: pathlib.Path):
    monkeypatch.setenv("DPCALC_CONFIG_FILE", str(tmp_path / "missing.yaml"))

    with pytest.raises(RuntimeError):
        config.load_config()


def test_load_config_falls_back_to_env(monkeypatch: pytest.MonkeyPatch, tmp_path: pathlib.Path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("DPCALC_CONFIG_FILE", raising=False)
    monkeypatch.delenv("DPCALC_SEED", raising=False)

    assert config.load_config().seed == 0
