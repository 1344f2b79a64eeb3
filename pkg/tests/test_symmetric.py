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
from dpcalc.ldp import symmetric


def test_coupon_rounds():
    assert symmetric.coupon_rounds(10, 1 / 6) == math.ceil(10 * math.log(60))
    assert symmetric.coupon_rounds(100, 1 / 6) == math.ceil(100 * math.log(600))
    assert symmetric.coupon_rounds(1, 0.5) == 1


@pytest.mark.parametrize(("n", "fail_prob"), [(0, 0.1), (5, 0.0), (5, 1.0)])
def test_coupon_rounds_rejects_invalid(n: int, fail_prob: float):
    with pytest.raises(errors.ValidationError):
        symmetric.coupon_rounds(n, fail_prob)


def test_coupon_miss_rate_is_below_the_failure_probability():
    rng = numpy.random.default_rng(1)
    n_prime = symmetric.coupon_rounds(10, symmetric.DEFAULT_FAIL_PROB)

    assert symmetric.coupon_miss_rate(10, n_prime, 5000, rng) <= symmetric.DEFAULT_FAIL_PROB


def test_coupon_miss_rate_with_too_few_rounds():
    rng = numpy.random.default_rng(1)

    assert symmetric.coupon_miss_rate(10, 5, 100, rng) == 1.0


def test_symmetrize_private_coins():
    first = mechanisms.randomized_response(math.log(3))
    second = mechanisms.randomized_response(1.0)

    compiled = symmetric.symmetrize([first, second], "private")

    assert compiled.coin_model is symmetric.CoinModel.PRIVATE
    assert compiled.combined.inputs == ("0", "1")
    assert compiled.combined.outputs == ("1,0", "1,1", "2,0", "2,1")
    assert compiled.combined.row("0")[0] == pytest.approx(0.375)
    assert audits.audit_pure(compiled.combined) == pytest.approx(math.log(3))
    assert compiled.n_prime == symmetric.coupon_rounds(2, symmetric.DEFAULT_FAIL_PROB)
    assert compiled.members == (first, second)


def test_symmetrize_private_coins_keeps_each_members_budget():
    rng = numpy.random.default_rng(6)
    randomizers = [mechanisms.random_mechanism(rng, 3, 2 + index) for index in range(4)]

    compiled = symmetric.symmetrize(randomizers, symmetric.CoinModel.PRIVATE, fail_prob=0.01)

    assert audits.audit_pure(compiled.combined) <= max(map(audits.audit_pure, randomizers)) + 1e-12
    assert compiled.n_prime == symmetric.coupon_rounds(4, 0.01)


def test_symmetrize_public_coins():
    first = mechanisms.randomized_response(math.log(3))
    second = mechanisms.randomized_response(1.0)

    compiled = symmetric.symmetrize([first, second], symmetric.CoinModel.PUBLIC)

    assert compiled.combined.inputs == ("1,0", "1,1", "2,0", "2,1")
    assert compiled.combined.outputs == ("0", "1")
    assert compiled.combined.row("2,1") == second.row("1")


def test_symmetrize_errors():
    with pytest.raises(errors.ValidationError):
        symmetric.symmetrize([], "private")

    with pytest.raises(errors.AlphabetMismatchError):
        symmetric.symmetrize(
            [mechanisms.randomized_response(1.0), mechanisms.randomized_response(1.0, k=3)], "private"
        )

    relabelled = mechanisms.Mechanism(["0", "1"], ["a", "b"], [[0.5, 0.5], [0.5, 0.5]])
    with pytest.raises(errors.AlphabetMismatchError):
        symmetric.symmetrize([mechanisms.randomized_response(1.0), relabelled], "public")

    with pytest.raises(ValueError):
        symmetric.symmetrize([mechanisms.randomized_response(1.0)], "shared")
