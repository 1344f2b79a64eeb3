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
import math

import numpy
import pytest

from dpcalc import errors
from dpcalc.core import audits
from dpcalc.core import mechanisms
from dpcalc.ldp import composition


def test_compose_eps():
    assert composition.compose_eps(math.log(3), math.log(3)) == pytest.approx(math.log(10 / 6))
    assert composition.compose_eps(0.0, 2.0) == 0.0
    assert composition.compose_eps(math.inf, 1.0) == 1.0
    assert composition.compose_eps(1.5, math.inf) == 1.5


def test_compose_eps_large_values_stay_finite():
    assert composition.compose_eps(1000.0, 2.0) == pytest.approx(2.0)


def test_compose_eps_is_below_either_budget():
    grid = numpy.linspace(0, 5, 26)
    for eps1 in grid:
        for eps2 in grid:
            assert composition.compose_eps(eps1, eps2) <= min(eps1, eps2) + 1e-12


def test_compose_eps_matches_randomized_response_chain():
    for eps1, eps2 in [(0.5, 0.5), (1.0, 2.0), (3.0, 0.25)]:
        chain = mechanisms.compose(mechanisms.randomized_response(eps1), mechanisms.randomized_response(eps2))

        assert audits.audit_pure(chain) == pytest.approx(composition.compose_eps(eps1, eps2))


def test_compose_eps_rejects_negative():
    with pytest.raises(errors.ValidationError):
        composition.compose_eps(-1.0, 1.0)


_BUDGETS = (0.25, 0.5, 1.0, 2.0)


@pytest.mark.parametrize("eps1", _BUDGETS)
@pytest.mark.parametrize("eps2", _BUDGETS)
def test_compose_tightness_search(eps1: float, eps2: float):
    bound = composition.compose_eps(eps1, eps2)

    achieved = composition.compose_tightness_search(eps1, eps2, 400)

    assert achieved <= bound + 1e-9
    assert achieved >= bound - 1e-3


def test_compose_tightness_search_reaches_bound_on_constraint_edge():
    bound = composition.compose_eps(1.0, 2.0)

    assert composition.compose_tightness_search(1.0, 2.0, 400) == pytest.approx(bound, abs=1e-4)


def test_compose_tightness_search_without_first_budget():
    assert composition.compose_tightness_search(0.0, 1.0, 16) == pytest.approx(0.0, abs=1e-12)


def test_compose_tightness_search_on_coarse_grid():
    bound = composition.compose_eps(0.3, 2.0)

    assert composition.compose_tightness_search(0.3, 2.0, 8) <= bound + 1e-9


def test_compose_tightness_search_rejects_small_grids():
    with pytest.raises(errors.ValidationError):
        composition.compose_tightness_search(1.0, 1.0, 1)


def test_appendix_inequality_check():
    assert composition.appendix_inequality_check(1.0, 1.0)
    assert composition.appendix_inequality_check(0.1, 0.1)
    assert composition.appendix_inequality_check(0.0, 3.0)


def test_appendix_inequality_grid():
    values = numpy.linspace(0, 10, 101)

    assert composition.appendix_inequality_grid(values, values).all()
