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
"""Calculus of local differential privacy: deletion, symmetry, groups, composition and purification."""
from __future__ import annotations

__all__: list[str] = [
    "CoinModel",
    "GroupositionParams",
    "PurificationBounds",
    "PurificationParams",
    "SymmetricCompilation",
    "appendix_inequality_check",
    "appendix_inequality_grid",
    "basic_grouposition_eps",
    "build_counterexample",
    "compose_eps",
    "compose_tightness_search",
    "composition",
    "counterexample_deletion_delta",
    "coupon_miss_rate",
    "coupon_rounds",
    "deletion",
    "deletion_to_replacement_budget",
    "feasible_rounds",
    "group_privacy_loss_tail",
    "grouposition",
    "grouposition_budget",
    "grouposition_eps",
    "purification",
    "purification_bounds",
    "replacement_to_deletion",
    "symmetric",
    "symmetrize",
    "trim_to_pure_deletion",
]

from . import composition
from . import deletion
from . import grouposition
from . import purification
from . import symmetric
from .composition import appendix_inequality_check
from .composition import appendix_inequality_grid
from .composition import compose_eps
from .composition import compose_tightness_search
from .deletion import build_counterexample
from .deletion import counterexample_deletion_delta
from .deletion import deletion_to_replacement_budget
from .deletion import replacement_to_deletion
from .deletion import trim_to_pure_deletion
from .grouposition import GroupositionParams
from .grouposition import basic_grouposition_eps
from .grouposition import group_privacy_loss_tail
from .grouposition import grouposition_budget
from .grouposition import grouposition_eps
from .purification import PurificationBounds
from .purification import PurificationParams
from .purification import feasible_rounds
from .purification import purification_bounds
from .symmetric import CoinModel
from .symmetric import SymmetricCompilation
from .symmetric import coupon_miss_rate
from .symmetric import coupon_rounds
from .symmetric import symmetrize
