#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import itertools

from functools import reduce

import numpy as np

from markovkit.app.inference.model import (
    FactorialHmmModel,
    HmmModel,
    LabelSpace,
    MarkovChainModel,
    ObsSequence,
    ProbVector,
    VectorStateSequence,
    validate_prob_vector,
    validate_stochastic_matrix,
)
from markovkit.app.inference.service.evolution_service import evolution_service, path_weight
from markovkit.app.inference.service.vmm_service import vmm_service
from markovkit.common.exception import errors
from markovkit.common.log import log
from markovkit.utils.enumeration import ensure_enumerable, enumeration_size, index_sequences

# Joins component labels of a flattened state, e.g. "sunny|high"
FLAT_LABEL_SEPARATOR = '|'


def _check_vector_sequence(model: FactorialHmmModel, q: VectorStateSequence) -> None:
    if len(q) != len(model):
        raise errors.ShapeMismatchError(expected=(len(model),), actual=(len(q),))
    for i, (component, seq) in enumerate(zip(model.components, q.per_component)):
        if seq.space != component.states:
            raise errors.ShapeMismatchError(expected=(component.size,), actual=(seq.space.size,), index=(i,))


def _emission_product(model: FactorialHmmModel, obs, paths) -> float:
    value = 1.0
    for emission, states in zip(model.emissions, paths):
        b = emission.entries
        for state, symbol in zip(states, obs):
            value *= b[state, symbol]
    return float(value)


def _state_product(model: FactorialHmmModel, paths) -> float:
    value = 1.0
    for component, states in zip(model.components, paths):
        value *= path_weight(component, states)
    return value


class FhmmService:
    """Factorial hidden Markov model queries with product-form emissions"""

    @staticmethod
    def fhmm_state_jpd(*, model: FactorialHmmModel, q: VectorStateSequence) -> float:
        """
        Product of the component path weights

        :param model: factorial model
        :param q: one state path per component
        :return:
        """
        _check_vector_sequence(model, q)
        value = 1.0
        for component, seq in zip(model.components, q.per_component):
            value *= vmm_service.vmm_jpd(model=component, q=seq)
        return value

    @staticmethod
    def fhmm_emission_likelihood(*, model: FactorialHmmModel, y: ObsSequence, q: VectorStateSequence) -> float:
        """
        Product over components and time of b^i(q^i_t, y_t), never renormalized

        :param model: factorial model
        :param y: shared observations
        :param q: one state path per component
        :return:
        """
        _check_vector_sequence(model, q)
        if y.space != model.observations:
            raise errors.SpaceMismatchError(msg='Observation sequence is not over the model observations')
        if len(y) != q.length:
            raise errors.ShapeMismatchError(expected=(q.length,), actual=(len(y),))
        return _emission_product(model, y.indices, [seq.indices for seq in q.per_component])

    @staticmethod
    def fhmm_sequence_likelihood(*, model: FactorialHmmModel, y: ObsSequence, cap: int | None = None) -> float:
        """
        Emission times state weight summed over every vector state path

        :param model: factorial model
        :param y: shared observations
        :param cap: enumeration cap override
        :return:
        """
        if y.space != model.observations:
            raise errors.SpaceMismatchError(msg='Observation sequence is not over the model observations')
        length = len(y)
        ensure_enumerable(enumeration_size(model.sizes, length), cap)
        log.debug(f'Factorial enumeration over sizes {model.sizes}, T={length}')
        total = 0.0
        for paths in itertools.product(*(index_sequences(n, length) for n in model.sizes)):
            total += _emission_product(model, y.indices, paths) * _state_product(model, paths)
        return total

    @staticmethod
    def flatten(*, model: FactorialHmmModel) -> HmmModel:
        """
        Equivalent flat HMM over the Cartesian product of component states, first component most significant

        The emission rows are products of component rows and in general do not sum to one.

        :param model: factorial model
        :return:
        """
        states = LabelSpace(
            labels=tuple(
                FLAT_LABEL_SEPARATOR.join(labels)
                for labels in itertools.product(*(component.states.labels for component in model.components))
            )
        )
        transition = reduce(np.kron, (component.transition.entries for component in model.components))
        initial = reduce(np.kron, (component.initial.entries for component in model.components))
        emission = reduce(
            lambda left, right: (left[:, np.newaxis, :] * right[np.newaxis, :, :]).reshape(-1, right.shape[1]),
            (emission.entries for emission in model.emissions),
        )
        chain = MarkovChainModel(
            states=states,
            transition=validate_stochastic_matrix(transition, states, states),
            initial=validate_prob_vector(initial, states),
        )
        return HmmModel(
            chain=chain,
            observations=model.observations,
            emission=validate_stochastic_matrix(emission, states, model.observations, check_row_sums=False),
            name=model.name,
            description=model.description,
        )

    @staticmethod
    def component_evolution(
        *, model: FactorialHmmModel, steps: int, expanded: bool = False, cap: int | None = None
    ) -> list[ProbVector]:
        """
        Evolve every component chain independently

        :param model: factorial model
        :param steps: number of transitions
        :param expanded: sum path weights per component (``expanded_mef``) instead of pushing forward
        :param cap: enumeration cap override, per component
        :return:
        """
        if expanded:
            return [
                evolution_service.expanded_mef(model=component, horizon_T=steps + 1, cap=cap)
                for component in model.components
            ]
        return [evolution_service.evolve(model=component, steps=steps) for component in model.components]


fhmm_service: FhmmService = FhmmService()
