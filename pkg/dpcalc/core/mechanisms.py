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
"""Finite mechanisms: row-stochastic matrices with labelled alphabets."""
from __future__ import annotations

__all__: list[str] = [
    "Mechanism",
    "compose",
    "constant_mechanism",
    "labels",
    "mix",
    "postprocess",
    "product",
    "random_mechanism",
    "randomized_response",
]

import functools
import itertools
import math
import typing
from collections import abc as collections

import numpy

from .. import errors
from ..utility import constants
from . import distributions

if typing.TYPE_CHECKING:
    import numpy.typing as npt

PRODUCT_SEPARATOR: typing.Final[str] = ","
"""Separator used when joining per-coordinate labels of product alphabets."""


def labels(count: int, /, *, start: int = 0) -> tuple[str, ...]:
    """Default symbol labels `"0"`, `"1"`, ..."""
    return tuple(str(index) for index in range(start, start + count))


def _unique(values: collections.Iterable[str], kind: str, /) -> tuple[str, ...]:
    result = tuple(map(str, values))
    if not result:
        raise errors.ValidationError(f"The {kind} alphabet can't be empty")

    if len(set(result)) != len(result):
        raise errors.ValidationError(f"The {kind} alphabet contains duplicate labels")

    return result


class Mechanism:
    """A map from a finite input alphabet to distributions over a shared output alphabet.

    Parameters
    ----------
    inputs
        Labels of the input symbols.
    outputs
        Labels of the output symbols.
    rows
        One probability vector per input symbol, in input order.

    Raises
    ------
    dpcalc.errors.ValidationError
        If the row count doesn't match the inputs, a row doesn't match the
        outputs or a row isn't a valid distribution.
    """

    __slots__ = ("_input_index", "_inputs", "_matrix", "_outputs")

    def __init__(
        self,
        inputs: collections.Iterable[str],
        outputs: collections.Iterable[str],
        rows: collections.Iterable[collections.Iterable[float] | distributions.Dist] | npt.ArrayLike,
        /,
    ) -> None:
        self._inputs = _unique(inputs, "input")
        self._outputs = _unique(outputs, "output")
        dists = [
            row if isinstance(row, distributions.Dist) else distributions.Dist(row)
            for row in typing.cast("collections.Iterable[typing.Any]", rows)
        ]
        if len(dists) != len(self._inputs):
            raise errors.ValidationError(f"Expected {len(self._inputs)} rows, got {len(dists)}")

        for index, dist in enumerate(dists):
            if len(dist) != len(self._outputs):
                raise errors.AlphabetMismatchError(
                    f"Row {index} has {len(dist)} entries but there are {len(self._outputs)} outputs"
                )

        matrix = numpy.array([dist.mass for dist in dists], dtype=numpy.float64)
        matrix.setflags(write=False)
        self._matrix = matrix
        self._input_index = {label: index for index, label in enumerate(self._inputs)}

    @property
    def inputs(self) -> tuple[str, ...]:
        return self._inputs

    @property
    def outputs(self) -> tuple[str, ...]:
        return self._outputs

    @property
    def matrix(self) -> npt.NDArray[numpy.float64]:
        """Read-only row-stochastic matrix (inputs x outputs)."""
        return self._matrix

    @property
    def rows(self) -> tuple[distributions.Dist, ...]:
        return tuple(distributions.Dist(row) for row in self._matrix)

    def __repr__(self) -> str:
        return f"Mechanism(inputs={self._inputs!r}, outputs={self._outputs!r}, rows={self._matrix.tolist()!r})"

    def __eq__(self, other: object, /) -> bool:
        if not isinstance(other, Mechanism):
            return NotImplemented

        return (
            self._inputs == other._inputs
            and self._outputs == other._outputs
            and bool(numpy.array_equal(self._matrix, other._matrix))
        )

    def __hash__(self) -> int:
        return hash((self._inputs, self._outputs, self._matrix.tobytes()))

    def index_of(self, label: str, /) -> int:
        """Get the row index of an input label.

        Raises
        ------
        dpcalc.errors.UnknownSymbolError
            If the label isn't an input of this mechanism.
        """
        try:
            return self._input_index[label]

        except KeyError:
            raise errors.UnknownSymbolError(f"Unknown input symbol {label!r}") from None

    def row(self, label: str, /) -> distributions.Dist:
        return distributions.Dist(self._matrix[self.index_of(label)])

    def row_at(self, index: int, /) -> distributions.Dist:
        return distributions.Dist(self._matrix[index])

    def restrict(self, inputs: collections.Iterable[str], /) -> Mechanism:
        """Sub-mechanism over the given input symbols (in the given order)."""
        inputs = tuple(inputs)
        return Mechanism(inputs, self._outputs, self._matrix[[self.index_of(label) for label in inputs]])

    def with_inputs(self, inputs: collections.Iterable[str], /) -> Mechanism:
        """Re-label the input symbols, keeping the rows in place."""
        return Mechanism(inputs, self._outputs, self._matrix)

    def is_close(self, other: Mechanism, /, *, tolerance: float = constants.AUDIT_TOLERANCE) -> bool:
        if self._matrix.shape != other._matrix.shape:
            return False

        return bool(numpy.max(numpy.abs(self._matrix - other._matrix)) <= tolerance)


def postprocess(
    mechanism: Mechanism, mapping: collections.Mapping[str, str] | collections.Callable[[str], str], /
) -> Mechanism:
    """Push each row of a mechanism forward through a deterministic output map.

    The new output alphabet lists the mapped labels in order of first appearance.

    Raises
    ------
    dpcalc.errors.UnknownSymbolError
        If a mapping doesn't cover every output label.
    """
    if isinstance(mapping, collections.Mapping):
        missing = [label for label in mechanism.outputs if label not in mapping]
        if missing:
            raise errors.UnknownSymbolError(f"Output map is missing {missing!r}")

        targets = [str(mapping[label]) for label in mechanism.outputs]

    else:
        targets = [str(mapping(label)) for label in mechanism.outputs]

    new_outputs = tuple(dict.fromkeys(targets))
    target_index = {label: index for index, label in enumerate(new_outputs)}
    pushforward = numpy.zeros((len(mechanism.outputs), len(new_outputs)))
    for source, target in enumerate(targets):
        pushforward[source, target_index[target]] = 1.0

    return Mechanism(mechanism.inputs, new_outputs, mechanism.matrix @ pushforward)


def mix(components: collections.Sequence[tuple[float, Mechanism]], /) -> Mechanism:
    """Convex combination of mechanisms over shared alphabets.

    Raises
    ------
    dpcalc.errors.ValidationError
        If a weight is negative or the weights don't sum to 1 within 1e-9.
    dpcalc.errors.AlphabetMismatchError
        If the mechanisms don't share their input and output alphabets.
    """
    if not components:
        raise errors.ValidationError("Can't mix an empty list of mechanisms")

    weights = numpy.array([weight for weight, _ in components], dtype=numpy.float64)
    if weights.min() < 0:
        raise errors.ValidationError("Mixture weights must be non-negative")

    if abs(weights.sum() - 1.0) > constants.NORMALISATION_TOLERANCE:
        raise errors.ValidationError(f"Mixture weights sum to {weights.sum()!r}, not 1")

    first = components[0][1]
    for _, mechanism in components[1:]:
        if mechanism.inputs != first.inputs or mechanism.outputs != first.outputs:
            raise errors.AlphabetMismatchError("Mixed mechanisms must share their alphabets")

    matrix = sum((weight * mechanism.matrix for weight, mechanism in components), numpy.zeros_like(first.matrix))
    return Mechanism(first.inputs, first.outputs, matrix)


def compose(first: Mechanism, second: Mechanism, /) -> Mechanism:
    """Run `second` on the output of `first`.

    Raises
    ------
    dpcalc.errors.AlphabetMismatchError
        If `second`'s inputs aren't `first`'s outputs.
    """
    if second.inputs != first.outputs:
        raise errors.AlphabetMismatchError("The second mechanism's inputs must be the first's outputs")

    return Mechanism(first.inputs, second.outputs, first.matrix @ second.matrix)


def _join(values: tuple[str, ...], /) -> str:
    return PRODUCT_SEPARATOR.join(values)


def product(mechanisms: collections.Sequence[Mechanism], /) -> Mechanism:
    """Independent product: coordinate `i` of the input is randomised by `mechanisms[i]`.

    Tuple labels are joined with `","`.
    """
    if not mechanisms:
        raise errors.ValidationError("Can't take the product of no mechanisms")

    inputs = [_join(values) for values in itertools.product(*(mechanism.inputs for mechanism in mechanisms))]
    outputs = [_join(values) for values in itertools.product(*(mechanism.outputs for mechanism in mechanisms))]
    matrix = functools.reduce(numpy.kron, (mechanism.matrix for mechanism in mechanisms))
    return Mechanism(inputs, outputs, matrix)


def randomized_response(eps: float, /, k: int = 2) -> Mechanism:
    """k-ary randomized response reporting the truth with probability `e^eps / (e^eps + k - 1)`."""
    if k < 2:
        raise errors.ValidationError("Randomized response needs at least 2 symbols")

    if math.isnan(eps) or eps < 0:
        raise errors.ValidationError(f"eps must be non-negative, not {eps!r}")

    if math.isinf(eps):
        return Mechanism(labels(k), labels(k), numpy.eye(k))

    # Dividing through by e^eps keeps large budgets finite.
    keep = 1.0 / (1.0 + (k - 1) * math.exp(-eps))
    matrix = numpy.full((k, k), (1.0 - keep) / (k - 1))
    numpy.fill_diagonal(matrix, keep)
    return Mechanism(labels(k), labels(k), matrix)


def constant_mechanism(inputs: collections.Iterable[str], row: distributions.Dist, /) -> Mechanism:
    """Mechanism whose every row is `row` (output labels default to `"0"`, `"1"`, ...)."""
    inputs = tuple(inputs)
    return Mechanism(inputs, labels(len(row)), [row] * len(inputs))


def random_mechanism(
    rng: numpy.random.Generator, inputs: int, outputs: int, /, *, concentration: float = 1.0
) -> Mechanism:
    """Mechanism with Dirichlet(concentration) rows, drawn from `rng`."""
    rows = rng.dirichlet(numpy.full(outputs, concentration), size=inputs)
    return Mechanism(labels(inputs), labels(outputs), rows)
