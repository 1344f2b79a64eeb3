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
from dpcalc.core import distributions


def test_dist_renormalises_small_drift():
    dist = distributions.Dist([0.5, 0.5 + 1e-10])

    assert math.isclose(float(dist.mass.sum()), 1.0, abs_tol=1e-15)
    assert len(dist) == 2


@pytest.mark.parametrize("values", [[0.5, 0.6], [1.2, -0.2], [], [math.nan, 1.0], [math.inf, 0.0]])
def test_dist_rejects_invalid_vectors(values: list[float]):
    with pytest.raises(errors.InvalidDistributionError):
        distributions.Dist(values)


def test_dist_is_read_only():
    dist = distributions.Dist([0.25, 0.75])

    with pytest.raises(ValueError, match="read-only"):
        dist.mass[0] = 1.0


def test_dist_point():
    assert distributions.Dist.point(2, 3) == distributions.Dist([0.0, 0.0, 1.0])


def test_uniform_dist():
    assert numpy.allclose(distributions.uniform_dist(4).mass, 0.25)

    with pytest.raises(errors.InvalidDistributionError):
        distributions.uniform_dist(0)


def test_hockey_stick():
    p = distributions.Dist([0.75, 0.25])
    q = distributions.Dist([0.25, 0.75])

    assert distributions.hockey_stick(p, q, 0.0) == pytest.approx(0.5)
    assert distributions.hockey_stick(p, q, math.log(2)) == pytest.approx(0.25)
    assert distributions.hockey_stick(p, q, math.log(3)) == pytest.approx(0.0, abs=1e-15)


def test_hockey_stick_at_infinite_eps_counts_mass_outside_support():
    p = distributions.Dist([0.5, 0.3, 0.2])
    q = distributions.Dist([0.0, 1.0, 0.0])

    assert distributions.hockey_stick(p, q, math.inf) == pytest.approx(0.7)


def test_hockey_stick_at_huge_eps():
    p = distributions.Dist([0.5, 0.5])
    q = distributions.Dist([1.0, 1e-305])
    loss = math.log(0.5) - math.log(1e-305)

    assert distributions.hockey_stick(p, q, 701.0) == pytest.approx(0.5 * -math.expm1(701.0 - loss), rel=1e-9)
    assert distributions.hockey_stick(p, q, 710.0) == 0.0


def test_hockey_stick_rejects_negative_eps():
    p = distributions.uniform_dist(2)

    with pytest.raises(errors.ValidationError):
        distributions.hockey_stick(p, p, -0.1)


def test_hockey_stick_rejects_mismatched_alphabets():
    with pytest.raises(errors.AlphabetMismatchError):
        distributions.hockey_stick(distributions.uniform_dist(2), distributions.uniform_dist(3), 0.0)


def test_tv_distance_is_hockey_stick_at_zero():
    rng = numpy.random.default_rng(7)
    for _ in range(20):
        p = distributions.Dist(rng.dirichlet(numpy.ones(5)))
        q = distributions.Dist(rng.dirichlet(numpy.ones(5)))

        assert distributions.tv_distance(p, q) == pytest.approx(distributions.hockey_stick(p, q, 0.0))


def test_privacy_loss_tail():
    p = distributions.Dist([0.75, 0.25])
    q = distributions.Dist([0.25, 0.75])

    assert distributions.privacy_loss_tail(p, q, 0.0) == pytest.approx(0.75)
    assert distributions.privacy_loss_tail(p, q, math.log(3)) == 0.0


def test_privacy_loss_tail_counts_infinite_loss():
    p = distributions.Dist([0.5, 0.5])
    q = distributions.Dist([1.0, 0.0])

    assert distributions.privacy_loss_tail(p, q, 100.0) == pytest.approx(0.5)
