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
"""Exceptions raised by dpcalc."""
from __future__ import annotations

__all__: list[str] = [
    "AlphabetMismatchError",
    "DPCalcError",
    "EnumerationLimitError",
    "InfeasibleParametersError",
    "InvalidDistributionError",
    "MechanismFileError",
    "NonNestedSupportError",
    "PreconditionError",
    "UnknownSymbolError",
    "ValidationError",
]


class DPCalcError(Exception):
    """Base class for all errors raised by dpcalc."""

    def __init__(self, message: str, /) -> None:
        self.message = message

    def __str__(self) -> str:
        return self.message


class ValidationError(DPCalcError, ValueError):
    """Raised when an input value breaks a documented invariant."""


class AlphabetMismatchError(ValidationError):
    """Raised when two distributions or mechanisms don't share an alphabet."""


class InvalidDistributionError(ValidationError):
    """Raised when a probability vector is negative or doesn't sum to 1."""


class UnknownSymbolError(ValidationError):
    """Raised when a symbol label isn't part of the relevant alphabet."""


class PreconditionError(ValidationError):
    """Raised when a mechanism doesn't meet the privacy budget an operation assumes."""


class InfeasibleParametersError(ValidationError):
    """Raised when a parameter combination lies outside a bound's validity range."""


class MechanismFileError(ValidationError):
    """Raised when a mechanism file can't be parsed.

    Parameters
    ----------
    field
        Name of the offending field.
    message
        Description of the problem.
    """

    def __init__(self, field: str, message: str, /) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field


class EnumerationLimitError(DPCalcError):
    """Raised when an exact enumeration would exceed the configured limits."""


class NonNestedSupportError(DPCalcError):
    """Raised when a construction needs a finite pure privacy loss but the supports aren't nested."""
