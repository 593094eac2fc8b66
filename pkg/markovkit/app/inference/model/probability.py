#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from markovkit.app.inference.model.label_space import LabelSpace
from markovkit.common.exception import errors
from markovkit.core.conf import settings


def _frozen_array(values, ndim: int) -> np.ndarray:
    array = np.array(values, dtype=np.float64)
    if array.ndim != ndim:
        raise ValueError(f'expected a {ndim}-d array, got {array.ndim}-d')
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ProbVector:
    """
    Probability distribution over a label space

    The constructor stores entries as given; use ``validate_prob_vector`` for checked construction.
    """

    space: LabelSpace
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'entries', _frozen_array(self.entries, 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProbVector):
            return NotImplemented
        return self.space == other.space and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.space, self.entries.tobytes()))

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, index: int) -> float:
        return float(self.entries[index])

    def value(self, label: str) -> float:
        return float(self.entries[self.space.index(label)])

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.space.labels, self.entries.tolist()))

    def push_forward(self, matrix: 'StochasticMatrix') -> 'ProbVector':
        """
        Weights times matrix rows, summed: the vector-matrix product p·M

        :param matrix: row-stochastic matrix whose rows are this vector's space
        :return:
        """
        if matrix.rows != self.space:
            raise errors.SpaceMismatchError(msg='Vector space does not match the matrix rows')
        return validate_prob_vector(self.entries @ matrix.entries, matrix.cols)


@dataclass(frozen=True, eq=False)
class StochasticMatrix:
    """Row-stochastic matrix from a row label space to a column label space"""

    rows: LabelSpace
    cols: LabelSpace
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, 'entries', _frozen_array(self.entries, 2))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StochasticMatrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and np.array_equal(self.entries, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries.tobytes()))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows.size, self.cols.size

    def __getitem__(self, index: tuple[int, int]) -> float:
        return float(self.entries[index])

    def row(self, index: int) -> ProbVector:
        return ProbVector(space=self.cols, entries=self.entries[index])


def _check_entry(value: float, index: tuple[int, ...]) -> None:
    if not math.isfinite(value) or value > 1.0:
        raise errors.EntryOutOfRangeError(index=index, value=value)
    if value < 0.0:
        raise errors.NegativeEntryError(index=index, value=value)


def validate_prob_vector(
    entries: Sequence[float] | np.ndarray,
    space: LabelSpace,
    *,
    tolerance: float | None = None,
) -> ProbVector:
    """
    Checked construction of a probability vector, entries are kept bit-exact

    :param entries: one probability per label
    :param space: label space
    :param tolerance: allowed |sum - 1|, default to settings.PROB_TOLERANCE
    :return:
    """
    tolerance = settings.PROB_TOLERANCE if tolerance is None else tolerance
    if np.ndim(entries) != 1:
        raise errors.ShapeMismatchError(expected=(space.size,), actual=np.shape(entries))
    values = [float(v) for v in entries]
    if len(values) != space.size:
        raise errors.LengthMismatchError(expected=space.size, actual=len(values))
    for i, value in enumerate(values):
        _check_entry(value, (i,))
    actual_sum = math.fsum(values)
    if abs(actual_sum - 1.0) > tolerance:
        raise errors.SumNotOneError(actual_sum=actual_sum)
    return ProbVector(space=space, entries=values)


def validate_stochastic_matrix(
    entries: Sequence[Sequence[float]] | np.ndarray,
    rows: LabelSpace,
    cols: LabelSpace,
    *,
    check_row_sums: bool = True,
    tolerance: float | None = None,
) -> StochasticMatrix:
    """
    Checked construction of a row-stochastic matrix, entries are kept bit-exact

    :param entries: rows.size x cols.size probabilities
    :param rows: source label space
    :param cols: target label space
    :param check_row_sums: only flattened factorial emissions skip the row sum check
    :param tolerance: allowed |row sum - 1|, default to settings.PROB_TOLERANCE
    :return:
    """
    tolerance = settings.PROB_TOLERANCE if tolerance is None else tolerance
    expected = (rows.size, cols.size)
    if len(entries) != rows.size:
        raise errors.ShapeMismatchError(expected=expected, actual=np.shape(entries))
    matrix = []
    for i, row in enumerate(entries):
        if np.ndim(row) != 1 or len(row) != cols.size:
            raise errors.ShapeMismatchError(expected=(cols.size,), actual=np.shape(row), index=(i,))
        values = [float(v) for v in row]
        for j, value in enumerate(values):
            _check_entry(value, (i, j))
        if check_row_sums:
            actual_sum = math.fsum(values)
            if abs(actual_sum - 1.0) > tolerance:
                raise errors.RowSumNotOneError(row=i, actual_sum=actual_sum)
        matrix.append(values)
    return StochasticMatrix(rows=rows, cols=cols, entries=matrix)
