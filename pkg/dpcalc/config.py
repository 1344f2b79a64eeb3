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

__all__: list[str] = ["EnumerationLimits", "FullConfig", "get_config_from_file", "load_config"]

import abc
import dataclasses
import logging
import os
import pathlib
import types
import typing
from collections import abc as collections

import dotenv

if typing.TYPE_CHECKING:
    from typing import Self

DefaultT = typing.TypeVar("DefaultT")
ValueT = typing.TypeVar("ValueT")


@typing.overload
def _cast_or_else(
    data: collections.Mapping[str, typing.Any], key: str, cast: collections.Callable[[typing.Any], ValueT]
) -> ValueT: ...


@typing.overload
def _cast_or_else(
    data: collections.Mapping[str, typing.Any],
    key: str,
    cast: collections.Callable[[typing.Any], ValueT],
    default: DefaultT,
) -> ValueT | DefaultT: ...


def _cast_or_else(
    data: collections.Mapping[str, typing.Any],
    key: str,
    cast: collections.Callable[[typing.Any], ValueT],
    default: DefaultT | types.EllipsisType = ...,
) -> ValueT | DefaultT:
    try:
        return cast(data[key])
    except KeyError:
        if default is not ...:
            return default

    raise KeyError(f"{key!r} required environment/config key missing")


def _positive_int(value: typing.Any, /) -> int:
    result = int(value)
    if result < 1:
        raise ValueError(f"{value!r} is not a positive integer")

    return result


def _parse_log_level(value: typing.Any, /) -> int | str:
    if isinstance(value, int):
        return value

    value = str(value)
    return int(value) if value.isdigit() else value.upper()


class Config(abc.ABC):
    __slots__ = ()

    @classmethod
    @abc.abstractmethod
    def from_env(cls) -> Self:
        raise NotImplementedError

    @classmethod
    @abc.abstractmethod
    def from_mapping(cls, mapping: collections.Mapping[str, typing.Any], /) -> Self:
        raise NotImplementedError


def _maybe_up(string: str, up: bool) -> str:
    return string.upper() if up else string


@dataclasses.dataclass(kw_only=True, repr=False, slots=True, frozen=True)
class EnumerationLimits(Config):
    """Caps on the exact enumerations performed by the shuffle and subsample labs.

    Parameters
    ----------
    max_users
        Largest number of shuffle-model users.
    max_outputs
        Largest randomizer output alphabet accepted by shuffle audits.
    max_enum
        Largest number of enumerated objects (count vectors, datasets or samples).
    max_records
        Largest record alphabet for dataset enumeration.
    max_dataset_size
        Largest number of records per dataset.
    """

    max_users: int = 60
    max_outputs: int = 6
    max_enum: int = 200_000
    max_records: int = 3
    max_dataset_size: int = 6

    @classmethod
    def from_env(cls) -> Self:
        return cls.from_mapping(os.environ, _up_case=True)

    @classmethod
    def from_mapping(cls, mapping: collections.Mapping[str, typing.Any], /, *, _up_case: bool = False) -> Self:
        prefix = "dpcalc_" if _up_case else ""
        return cls(
            max_users=_cast_or_else(mapping, _maybe_up(f"{prefix}max_users", _up_case), _positive_int, 60),
            max_outputs=_cast_or_else(mapping, _maybe_up(f"{prefix}max_outputs", _up_case), _positive_int, 6),
            max_enum=_cast_or_else(mapping, _maybe_up(f"{prefix}max_enum", _up_case), _positive_int, 200_000),
            max_records=_cast_or_else(mapping, _maybe_up(f"{prefix}max_records", _up_case), _positive_int, 3),
            max_dataset_size=_cast_or_else(
                mapping, _maybe_up(f"{prefix}max_dataset_size", _up_case), _positive_int, 6
            ),
        )


@dataclasses.dataclass(kw_only=True, repr=False, slots=True, frozen=True)
class FullConfig(Config):
    limits: EnumerationLimits = dataclasses.field(default_factory=EnumerationLimits)
    log_level: int | str | None = logging.INFO
    seed: int = 0

    @classmethod
    def from_env(cls) -> Self:
        dotenv.load_dotenv()

        return cls(
            limits=EnumerationLimits.from_env(),
            log_level=_cast_or_else(os.environ, "DPCALC_LOG_LEVEL", _parse_log_level, logging.INFO),
            seed=_cast_or_else(os.environ, "DPCALC_SEED", int, 0),
        )

    @classmethod
    def from_mapping(cls, mapping: collections.Mapping[str, typing.Any], /) -> Self:
        log_level = mapping.get("log_level", logging.INFO)
        if not isinstance(log_level, (str, int)):
            raise TypeError("Invalid log level found in config")

        return cls(
            limits=_cast_or_else(mapping, "limits", EnumerationLimits.from_mapping, EnumerationLimits()),
            log_level=_parse_log_level(log_level),
            seed=int(mapping.get("seed", 0)),
        )


def get_config_from_file(path: pathlib.Path | None = None, /) -> FullConfig:
    import yaml

    if path is None:
        path = pathlib.Path("dpcalc.json")
        path = pathlib.Path("dpcalc.yaml") if not path.exists() else path

        if not path.exists():
            raise RuntimeError("Couldn't find valid yaml or json configuration file")

    data = path.read_text(encoding="utf-8")
    return FullConfig.from_mapping(yaml.safe_load(data) or {})


def load_config() -> FullConfig:
    """Load the configuration used by the CLI.

    A file named by `DPCALC_CONFIG_FILE` takes priority, then `dpcalc.json`
    or `dpcalc.yaml` in the working directory, otherwise the environment.
    """
    config_location = os.getenv("DPCALC_CONFIG_FILE")
    config_path = pathlib.Path(config_location) if config_location else None

    if config_path and not config_path.exists():
        raise RuntimeError("Invalid configuration given in environment variables")

    if config_path is None and not any(pathlib.Path(name).exists() for name in ("dpcalc.json", "dpcalc.yaml")):
        return FullConfig.from_env()

    return get_config_from_file(config_path)
