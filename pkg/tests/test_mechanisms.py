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
from dpcalc.ldp import deletion


def test_mechanism_validates_rows():
    with pytest.raises(errors.ValidationError, match="Expected 2 rows"):
        mechanisms.Mechanism(["a", "b"], ["0", "1"], [[0.5, 0.5]])

    with pytest.raises(errors.AlphabetMismatchError):
        mechanisms.Mechanism(["a"], ["0", "1"], [[0.2, 0.3, 0.5]])

    with pytest.raises(errors.InvalidDistributionError):
        mechanisms.Mechanism(["a"], ["0", "1"], [[0.2, 0.3]])


def test_mechanism_rejects_duplicate_labels():
    with pytest.raises(errors.ValidationError, match="duplicate"):
        mechanisms.Mechanism(["a", "a"], ["0"], [[1.0], [1.0]])


def test_mechanism_row_lookup():
    mechanism = mechanisms.Mechanism(["a", "b"], ["0", "1"], [[0.1, 0.9], [0.6, 0.4]])

    assert mechanism.row("b") == distributions.Dist([0.6, 0.4])
    assert mechanism.row_at(0) == distributions.Dist([0.1, 0.9])
    assert mechanism.index_of("b") == 1

    with pytest.raises(errors.UnknownSymbolError):
        mechanism.row("c")


def test_mechanism_restrict_and_relabel():
    mechanism = mechanisms.randomized_response(1.0, k=3)

    restricted = mechanism.restrict(["2", "0"])
    relabelled = restricted.with_inputs(["x", "y"])

    assert restricted.inputs == ("2", "0")
    assert numpy.array_equal(restricted.matrix, mechanism.matrix[[2, 0]])
    assert relabelled.inputs == ("x", "y")
    assert numpy.array_equal(relabelled.matrix, restricted.matrix)


def test_randomized_response():
    mechanism = mechanisms.randomized_response(math.log(3))

    assert mechanism.inputs == ("0", "1")
    assert numpy.allclose(mechanism.matrix, [[0.75, 0.25], [0.25, 0.75]])


def test_randomized_response_k_ary():
    mechanism = mechanisms.randomized_response(math.log(2), k=3)

    assert numpy.allclose(mechanism.matrix.diagonal(), 0.5)
    assert numpy.allclose(mechanism.matrix[0, 1:], 0.25)


def test_randomized_response_edge_budgets():
    assert numpy.allclose(mechanisms.randomized_response(0.0).matrix, 0.5)
    assert numpy.array_equal(mechanisms.randomized_response(math.inf, k=3).matrix, numpy.eye(3))

    with pytest.raises(errors.ValidationError):
        mechanisms.randomized_response(-1.0)

    with pytest.raises(errors.ValidationError):
        mechanisms.randomized_response(1.0, k=1)


def test_postprocess_merges_outputs():
    mechanism = mechanisms.randomized_response(math.log(2), k=3)

    merged = mechanisms.postprocess(mechanism, {"0": "low", "1": "low", "2": "high"})

    assert merged.outputs == ("low", "high")
    assert numpy.allclose(merged.matrix[:, 0], [0.75, 0.75, 0.5])


def test_postprocess_with_callable():
    mechanism = mechanisms.randomized_response(math.log(2), k=3)

    merged = mechanisms.postprocess(mechanism, lambda label: str(int(label) % 2))

    assert merged.outputs == ("0", "1")
    assert numpy.allclose(merged.matrix.sum(axis=1), 1.0)


def test_postprocess_identity_and_constant_maps():
    mechanism = mechanisms.randomized_response(1.0, k=3)

    identity = mechanisms.postprocess(mechanism, {label: label for label in mechanism.outputs})
    assert identity.outputs == mechanism.outputs
    assert identity.is_close(mechanism, tolerance=1e-12)

    constant = mechanisms.postprocess(mechanism, lambda _: "all")
    for eps in (0.0, 0.5, 2.0):
        assert audits.audit_replacement_ldp(constant, eps) == 0.0


def test_postprocess_merging_counterexample_outputs_does_not_raise_delta():
    randomizer = deletion.build_counterexample(0.25, 1 / 6)

    merged = mechanisms.postprocess(randomizer, {"1": "1", "2": "23", "3": "23"})

    assert merged.outputs == ("1", "23")
    assert audits.audit_replacement_ldp(merged, 0.5) <= audits.audit_replacement_ldp(randomizer, 0.5) + 1e-9


def test_postprocess_never_increases_the_audit():
    rng = numpy.random.default_rng(11)
    eps_values = numpy.linspace(0.0, 3.0, 13)
    for _ in range(50):
        mechanism = mechanisms.random_mechanism(rng, int(rng.integers(2, 5)), int(rng.integers(2, 7)))
        targets = rng.integers(0, len(mechanism.outputs), size=len(mechanism.outputs))
        merged = mechanisms.postprocess(mechanism, dict(zip(mechanism.outputs, map(str, targets), strict=True)))

        for eps in eps_values:
            before = audits.audit_replacement_ldp(mechanism, float(eps))
            assert audits.audit_replacement_ldp(merged, float(eps)) <= before + 1e-9


def test_postprocess_rejects_partial_mapping():
    with pytest.raises(errors.UnknownSymbolError):
        mechanisms.postprocess(mechanisms.randomized_response(1.0), {"0": "a"})


def test_mix():
    first = mechanisms.randomized_response(0.0)
    second = mechanisms.randomized_response(math.inf)

    mixed = mechanisms.mix([(0.5, first), (0.5, second)])

    assert numpy.allclose(mixed.matrix, [[0.75, 0.25], [0.25, 0.75]])

    with pytest.raises(errors.ValidationError):
        mechanisms.mix([(0.7, first), (0.7, second)])

    with pytest.raises(errors.AlphabetMismatchError):
        mechanisms.mix([(0.5, first), (0.5, mechanisms.randomized_response(1.0, k=3))])


def test_compose():
    first = mechanisms.randomized_response(math.log(3))

    composed = mechanisms.compose(first, first)

    assert numpy.allclose(composed.matrix, [[0.625, 0.375], [0.375, 0.625]])

    with pytest.raises(errors.AlphabetMismatchError):
        mechanisms.compose(first, mechanisms.randomized_response(1.0, k=3))


def test_product():
    rr = mechanisms.randomized_response(math.log(3))

    joint = mechanisms.product([rr, rr])

    assert joint.inputs == ("0,0", "0,1", "1,0", "1,1")
    assert joint.outputs == joint.inputs
    assert joint.row("0,1")[1] == pytest.approx(0.75 * 0.75)


def test_constant_mechanism():
    mechanism = mechanisms.constant_mechanism(["a", "b"], distributions.Dist([0.2, 0.8]))

    assert mechanism.outputs == ("0", "1")
    assert mechanism.row("a") == mechanism.row("b")


def test_random_mechanism():
    mechanism = mechanisms.random_mechanism(numpy.random.default_rng(3), 4, 5)

    assert mechanism.matrix.shape == (4, 5)
    assert numpy.allclose(mechanism.matrix.sum(axis=1), 1.0)


def test_mechanism_equality_and_hash():
    first = mechanisms.randomized_response(1.0)
    second = mechanisms.randomized_response(1.0)

    assert first == second
    assert hash(first) == hash(second)
    assert first.is_close(mechanisms.randomized_response(1.0 + 1e-12))
