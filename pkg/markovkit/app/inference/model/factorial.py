#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from dataclasses import dataclass, field

from markovkit.app.inference.model.chain import MarkovChainModel
from markovkit.app.inference.model.label_space import LabelSpace
from markovkit.app.inference.model.probability import StochasticMatrix
from markovkit.common.exception import errors


@dataclass(frozen=True)
class FactorialHmmModel:
    """
    Independent component chains sharing one observation stream

    Component i emits through emissions[i]; the joint emission is the plain product over components.
    """

    components: tuple[MarkovChainModel, ...]
    observations: LabelSpace
    emissions: tuple[StochasticMatrix, ...]
    name: str | None = field(default=None, compare=False)
    description: str | None = field(default=None, compare=False)

    def __post_init__(self):
        components = tuple(self.components)
        emissions = tuple(self.emissions)
        if not components:
            raise errors.LengthMismatchError(expected=1, actual=0, what='components at least')
        if len(emissions) != len(components):
            raise errors.LengthMismatchError(expected=len(components), actual=len(emissions), what='emission matrices')
        for i, (component, emission) in enumerate(zip(components, emissions), start=1):
            if emission.rows != component.states:
                raise errors.SpaceMismatchError(msg=f'Emission {i} rows must be the states of component {i}')
            if emission.cols != self.observations:
                raise errors.SpaceMismatchError(msg=f'Emission {i} columns must be the shared observations')
        object.__setattr__(self, 'components', components)
        object.__setattr__(self, 'emissions', emissions)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(component.size for component in self.components)

    def __len__(self) -> int:
        return len(self.components)
