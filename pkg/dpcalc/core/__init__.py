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
"""Finite distributions, mechanisms and their exact privacy audits."""
from __future__ import annotations

__all__: list[str] = [
    "Dist",
    "Mechanism",
    "NeighborPair",
    "PrivacyBudget",
    "TradeoffCurve",
    "audit_central",
    "audit_deletion_ldp",
    "audit_pure",
    "audit_replacement_ldp",
    "audits",
    "budgets",
    "compose",
    "constant_mechanism",
    "distributions",
    "dump_mechanism",
    "eps_for_delta",
    "files",
    "hockey_stick",
    "load_mechanism",
    "mechanism_from_mapping",
    "mechanism_to_mapping",
    "mechanisms",
    "mix",
    "postprocess",
    "privacy_loss_tail",
    "product",
    "random_mechanism",
    "randomized_response",
    "suggest_references",
    "tradeoff_curve",
    "tv_distance",
    "uniform_dist",
]

from . import audits
from . import budgets
from . import distributions
from . import files
from . import mechanisms
from .audits import NeighborPair
from .audits import audit_central
from .audits import audit_deletion_ldp
from .audits import audit_pure
from .audits import audit_replacement_ldp
from .audits import eps_for_delta
from .audits import suggest_references
from .audits import tradeoff_curve
from .budgets import PrivacyBudget
from .budgets import TradeoffCurve
from .distributions import Dist
from .distributions import hockey_stick
from .distributions import privacy_loss_tail
from .distributions import tv_distance
from .distributions import uniform_dist
from .files import dump_mechanism
from .files import load_mechanism
from .files import mechanism_from_mapping
from .files import mechanism_to_mapping
from .mechanisms import Mechanism
from .mechanisms import compose
from .mechanisms import constant_mechanism
from .mechanisms import mix
from .mechanisms import postprocess
from .mechanisms import product
from .mechanisms import random_mechanism
from .mechanisms import randomized_response
