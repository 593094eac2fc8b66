#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from dataclasses import dataclass, field, replace

from markovkit.app.inference.model.label_space import LabelSpace
from markovkit.app.inference.model.probability import ProbVector, StochasticMatrix
from markovkit.common.exception import errors


@dataclass(frozen=True)
class MarkovChainModel:
    """Time-homogeneous Markov chain: states, transition matrix A and initial distribution"""

    states: LabelSpace
    transition: StochasticMatrix
    initial: ProbVector
    name: str | None = field(default=None, compare=False)
    description: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.transition.rows != self.states or self.transition.cols != self.states:
            raise errors.SpaceMismatchError(msg='Transition matrix must map the states onto themselves')
        if self.initial.space != self.states:
            raise errors.SpaceMismatchError(msg='Initial distribution must be over the states')

    @property
    def size(self) -> int:
        return self.states.size

    def with_initial(self, initial: ProbVector) -> 'MarkovChainModel':
        """Same chain started from another distribution"""
        return replace(self, initial=initial)


@dataclass(frozen=True)
class HmmModel:
    """Hidden Markov model: a chain plus the emission matrix B onto the observations"""

    chain: MarkovChainModel
    observations: LabelSpace
    emission: StochasticMatrix
    name: str | None = field(default=None, compare=False)
    description: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.emission.rows != self.chain.states:
            raise errors.SpaceMismatchError(msg='Emission rows must be the hidden states')
        if self.emission.cols != self.observations:
            raise errors.SpaceMismatchError(msg='Emission columns must be the observations')

    @property
    def states(self) -> LabelSpace:
        return self.chain.states

    @property
    def transition(self) -> StochasticMatrix:
        return self.chain.transition

    @property
    def initial(self) -> ProbVector:
        return self.chain.initial

    def with_initial(self, initial: ProbVector) -> 'HmmModel':
        """Same model with the hidden chain started from another distribution"""
        return replace(self, chain=self.chain.with_initial(initial))
