#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from dataclasses import dataclass, field
from typing import Iterator

from markovkit.common.exception import errors


@dataclass(frozen=True)
class LabelSpace:
    """Ordered set of distinct labels, e.g. the weather states or the stone observations"""

    labels: tuple[str, ...]
    _positions: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(self.labels)
        if not labels:
            raise errors.LabelSpaceError(msg='Label space must contain at least one label')
        for position, label in enumerate(labels, start=1):
            if not isinstance(label, str) or not label.strip():
                raise errors.LabelSpaceError(msg=f'Label {position} must be a non-empty string')
        if len(set(labels)) != len(labels):
            duplicates = sorted({label for label in labels if labels.count(label) > 1})
            raise errors.LabelSpaceError(msg=f'Duplicate labels: {", ".join(duplicates)}')
        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, '_positions', {label: i for i, label in enumerate(labels)})

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        """
        0-based index of a label

        :param label: label
        :return:
        """
        try:
            return self._positions[label]
        except KeyError:
            raise errors.UnknownLabelError(label=label, labels=self.labels)

    def label(self, index: int) -> str:
        return self.labels[index]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[str]:
        return iter(self.labels)

    def __contains__(self, label: object) -> bool:
        return label in self._positions
