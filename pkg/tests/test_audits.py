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
from dpcalc.core import distributions
from dpcalc.core import mechanisms
from dpcalc.verification import suites


def test_audit_replacement_ldp_randomized_response():
    rr = mechanisms.randomized_response(math.log(3))

    assert audits.audit_replacement_ldp(rr, 0.0) == pytest.approx(0.5)
    assert audits.audit_replacement_ldp(rr, math.log(2)) == pytest.approx(0.25)
    assert audits.audit_replacement_ldp(rr, math.log(3)) == pytest.approx(0.0, abs=1e-12)


def test_audit_replacement_ldp_matches_subset_oracle():
    rng = numpy.random.default_rng(11)
    for _ in range(25):
        mechanism = mechanisms.random_mechanism(rng, 3, 4)
        eps = float(rng.uniform(0, 2))
        expected = max(
            suites.subset_hockey_stick(p, q, eps) for p in mechanism.rows for q in mechanism.rows
        )

        assert audits.audit_replacement_ldp(mechanism, eps) == pytest.approx(expected, abs=1e-12)


def test_audit_replacement_ldp_needs_two_inputs():
    mechanism = mechanisms.Mechanism(["a"], ["0", "1"], [[0.5, 0.5]])

    with pytest.raises(errors.ValidationError):
        audits.audit_replacement_ldp(mechanism, 1.0)


def test_audit_deletion_ldp_checks_both_directions():
    rr = mechanisms.randomized_response(math.log(3))
    uniform = distributions.uniform_dist(2)

    assert audits.audit_deletion_ldp(rr, uniform, 0.0) == pytest.approx(0.25)
    # 0.75 <= 1.5 * 0.5 holds but 0.5 <= 1.5 * 0.25 doesn't.
    assert audits.audit_deletion_ldp(rr, uniform, math.log(1.5)) == pytest.approx(0.125)
    assert audits.audit_deletion_ldp(rr, uniform, math.log(2)) == pytest.approx(0.0, abs=1e-12)


def test_audit_deletion_ldp_rejects_mismatched_reference():
    with pytest.raises(errors.AlphabetMismatchError):
        audits.audit_deletion_ldp(mechanisms.randomized_response(1.0), distributions.uniform_dist(3), 1.0)


def test_audit_pure():
    assert audits.audit_pure(mechanisms.randomized_response(math.log(3))) == pytest.approx(math.log(3))
    assert audits.audit_pure(mechanisms.randomized_response(0.0)) == 0.0


def test_audit_pure_non_nested_supports():
    mechanism = mechanisms.Mechanism(["a", "b"], ["0", "1"], [[1.0, 0.0], [0.5, 0.5]])

    assert audits.audit_pure(mechanism) == math.inf


def test_audit_pure_ignores_outputs_nobody_reports():
    mechanism = mechanisms.Mechanism(["a", "b"], ["0", "1", "2"], [[0.75, 0.25, 0.0], [0.25, 0.75, 0.0]])

    assert audits.audit_pure(mechanism) == pytest.approx(math.log(3))


def test_audit_pure_over_neighbors():
    mechanism = mechanisms.Mechanism(
        ["a", "b", "c"], ["0", "1"], [[0.5, 0.5], [0.6, 0.4], [1.0, 0.0]]
    )

    assert audits.audit_pure(mechanism, [audits.NeighborPair("a", "b")]) == pytest.approx(math.log(1.25))
    assert audits.audit_pure(mechanism) == math.inf


def test_audit_central_uses_only_listed_pairs():
    mechanism = mechanisms.Mechanism(
        ["a", "b", "c"], ["0", "1"], [[0.5, 0.5], [0.6, 0.4], [1.0, 0.0]]
    )

    assert audits.audit_central(mechanism, [audits.NeighborPair("a", "b")], 0.0) == pytest.approx(0.1)
    assert audits.audit_central(mechanism, [audits.NeighborPair("a", "c")], 0.0) == pytest.approx(0.5)

    with pytest.raises(errors.UnknownSymbolError):
        audits.audit_central(mechanism, [audits.NeighborPair("a", "d")], 0.0)


def test_neighbor_pair_from_counts():
    pair = audits.NeighborPair.from_counts((2, 0, 1), (1, 1, 1))

    assert pair == audits.NeighborPair("2|0|1", "1|1|1")
    assert pair.swapped() == audits.NeighborPair("1|1|1", "2|0|1")


@pytest.mark.parametrize(("left", "right"), [((2, 0), (2, 1)), ((2, 0), (0, 2)), ((1, 1), (1, 1))])
def test_neighbor_pair_from_counts_rejects_non_neighbors(left: tuple[int, ...], right: tuple[int, ...]):
    with pytest.raises(errors.ValidationError):
        audits.NeighborPair.from_counts(left, right)


def test_tradeoff_curve():
    rr = mechanisms.randomized_response(math.log(3))

    curve = audits.tradeoff_curve(lambda eps: audits.audit_replacement_ldp(rr, eps), [1.0, 0.0, 0.5, 0.5])

    assert [eps for eps, _ in curve] == [0.0, 0.5, 1.0]
    assert len(curve) == 3
    assert curve.budgets()[0].delta == pytest.approx(0.5)


def test_eps_for_delta_finds_pure_budget():
    rr = mechanisms.randomized_response(math.log(3))

    result = audits.eps_for_delta(lambda eps: audits.audit_replacement_ldp(rr, eps), 0.0)

    assert result == pytest.approx(math.log(3), abs=1e-9)


def test_eps_for_delta_is_inf_without_nested_supports():
    identity = mechanisms.randomized_response(math.inf)

    assert audits.eps_for_delta(lambda eps: audits.audit_replacement_ldp(identity, eps), 0.5) == math.inf


def test_eps_for_delta_rejects_invalid_delta():
    with pytest.raises(errors.ValidationError):
        audits.eps_for_delta(lambda eps: 0.0, 1.5)


def test_suggest_references():
    rr = mechanisms.randomized_response(math.log(3))

    references = dict(audits.suggest_references(rr))

    assert list(references) == ["uniform", "average", "row:0", "row:1"]
    assert references["average"].is_close(distributions.uniform_dist(2))
    assert references["row:1"] == rr.row("1")
