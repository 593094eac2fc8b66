#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from dataclasses import dataclass
from typing import Iterator, Sequence

from markovkit.app.inference.model.label_space import LabelSpace
from markovkit.common.exception import errors
from markovkit.utils.request_parse import split_labels


@dataclass(frozen=True)
class _LabelSequence:
    space: LabelSpace
    indices: tuple[int, ...]

    def __post_init__(self):
        indices = tuple(int(i) for i in self.indices)
        if not indices:
            self._raise_empty()
        for position, index in enumerate(indices, start=1):
            if not 0 <= index < self.space.size:
                raise errors.UsageError(
                    msg=f'Element {position} has index {index + 1} outside 1..{self.space.size}',
                    index=(position - 1,),
                )
        object.__setattr__(self, 'indices', indices)

    def _raise_empty(self) -> None:
        raise errors.EmptySequenceError()

    @classmethod
    def from_labels(cls, space: LabelSpace, labels: Sequence[str]):
        return cls(space=space, indices=tuple(space.index(label) for label in labels))

    @classmethod
    def parse(cls, space: LabelSpace, text: str):
        """
        Parse a comma-separated label list, e.g. ``"dry,wet,wet"``

        :param space: label space of the sequence
        :param text: comma-separated labels
        :return:
        """
        return cls.from_labels(space, split_labels(text))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.space.labels[i] for i in self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __getitem__(self, item: int) -> int:
        return self.indices[item]

    def __str__(self) -> str:
        return ','.join(self.labels)


class StateSequence(_LabelSequence):
    """Hidden or visible state path q_1..q_T"""


class ObsSequence(_LabelSequence):
    """Observation sequence x_1..x_T"""

    def _raise_empty(self) -> None:
        raise errors.EmptyObservationSequenceError()


@dataclass(frozen=True)
class VectorStateSequence:
    """One state path per factorial component, all of the same length"""

    per_component: tuple[StateSequence, ...]

    def __post_init__(self):
        per_component = tuple(self.per_component)
        if not per_component:
            raise errors.EmptySequenceError(msg='Vector state sequence needs at least one component')
        lengths = tuple(len(q) for q in per_component)
        for i, length in enumerate(lengths):
            if length != lengths[0]:
                raise errors.ShapeMismatchError(expected=(lengths[0],), actual=(length,), index=(i,))
        object.__setattr__(self, 'per_component', per_component)

    @property
    def length(self) -> int:
        return len(self.per_component[0])

    def __len__(self) -> int:
        return len(self.per_component)
