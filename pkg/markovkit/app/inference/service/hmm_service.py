#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from itertools import islice
from typing import Sequence

import numpy as np

from markovkit.app.inference.model import (
    HmmModel,
    ObsSequence,
    PosteriorMarginals,
    PriorMarginals,
    ProbVector,
    StateSequence,
    validate_prob_vector,
)
from markovkit.app.inference.service.evolution_service import check_space, evolution_service, path_weight
from markovkit.common.exception import errors
from markovkit.common.log import log
from markovkit.core.conf import settings
from markovkit.utils.enumeration import ensure_enumerable, enumeration_size, index_sequences


def emission_product(model: HmmModel, obs: Sequence[int], states: Sequence[int]) -> float:
    b = model.emission.entries
    value = 1.0
    for state, symbol in zip(states, obs):
        value *= b[state, symbol]
    return float(value)


def joint_product(model: HmmModel, obs: Sequence[int], states: Sequence[int]) -> float:
    return emission_product(model, obs, states) * path_weight(model.chain, states)


def tie_floor(best: float | np.ndarray, *, log_space: bool = False) -> float | np.ndarray:
    """
    Smallest value still counted as equal to ``best``

    Products of the same factors in another order differ in the last bits, so path values
    within ``TIE_TOLERANCE`` (relative) of each other are ties.

    :param best: maximum, a probability or a natural log
    :param log_space: ``best`` is a log value
    :return:
    """
    if log_space:
        return best - settings.TIE_TOLERANCE
    return best * (1.0 - settings.TIE_TOLERANCE)


def check_observations(model: HmmModel, x: ObsSequence) -> None:
    if x.space != model.observations:
        raise errors.SpaceMismatchError(msg='Observation sequence is not over the model observations')


class HmmService:
    """Hidden Markov model queries by explicit enumeration"""

    @staticmethod
    def emission_likelihood(*, model: HmmModel, x: ObsSequence, q: StateSequence) -> float:
        """
        P(x | q): product of the emission entries along the path

        :param model: hidden Markov model
        :param x: observations
        :param q: hidden states, same length as x
        :return:
        """
        check_observations(model, x)
        check_space(model.chain, q)
        if len(x) != len(q):
            raise errors.LengthMismatchError(expected=len(q), actual=len(x), what='observations')
        return emission_product(model, x.indices, q.indices)

    @staticmethod
    def joint_likelihood(*, model: HmmModel, x: ObsSequence, q: StateSequence) -> float:
        """
        P(x, q) = P(x | q) P(q)

        :param model: hidden Markov model
        :param x: observations
        :param q: hidden states, same length as x
        :return:
        """
        emission = hmm_service.emission_likelihood(model=model, x=x, q=q)
        return emission * path_weight(model.chain, q.indices)

    @staticmethod
    def sequence_likelihood(*, model: HmmModel, x: ObsSequence, cap: int | None = None) -> float:
        """
        P(x): joint likelihood summed over every hidden path in lexicographic order

        :param model: hidden Markov model
        :param x: observations
        :param cap: enumeration cap override
        :return:
        """
        check_observations(model, x)
        n = model.states.size
        ensure_enumerable(enumeration_size([n], len(x)), cap)
        total = 0.0
        for states in index_sequences(n, len(x)):
            total += joint_product(model, x.indices, states)
        return total

    @staticmethod
    def observation_distribution(*, model: HmmModel, t: int) -> ProbVector:
        """
        Distribution of the observation at time t, the state distribution pushed through B

        :param model: hidden Markov model
        :param t: 1-based time
        :return:
        """
        if t < 1:
            raise errors.UsageError(msg=f'Time must be at least 1, got {t}')
        p = evolution_service.evolve(model=model.chain, steps=t - 1)
        return p.push_forward(model.emission)

    @staticmethod
    def bayes_reverse(*, model: HmmModel, observed: int | str, state_prior: ProbVector) -> ProbVector:
        """
        State distribution after seeing one observation

        :param model: hidden Markov model
        :param observed: observation index or label
        :param state_prior: prior over the hidden states
        :return:
        """
        if state_prior.space != model.states:
            raise errors.SpaceMismatchError(msg='Prior is not over the model states')
        if isinstance(observed, str):
            symbol = model.observations.index(observed)
        elif 0 <= observed < model.observations.size:
            symbol = observed
        else:
            raise errors.UsageError(msg=f'Observation index {observed} outside 0..{model.observations.size - 1}')
        b = model.emission.entries
        weights = [float(b[i, symbol] * state_prior.entries[i]) for i in range(model.states.size)]
        evidence = 0.0
        for weight in weights:
            evidence += weight
        if evidence == 0.0:
            raise errors.ZeroEvidenceError(
                msg=f'Observation {model.observations.label(symbol)!r} has zero probability under the prior'
            )
        return validate_prob_vector([weight / evidence for weight in weights], model.states)

    @staticmethod
    def posterior_marginals(*, model: HmmModel, x: ObsSequence, cap: int | None = None) -> PosteriorMarginals:
        """
        P(q_t = i | x) for every t by enumeration of the hidden paths

        :param model: hidden Markov model
        :param x: observations
        :param cap: enumeration cap override
        :return:
        """
        check_observations(model, x)
        n, length = model.states.size, len(x)
        ensure_enumerable(enumeration_size([n], length), cap)
        numerators = [[0.0] * n for _ in range(length)]
        evidence = 0.0
        for states in index_sequences(n, length):
            joint = joint_product(model, x.indices, states)
            evidence += joint
            for t, state in enumerate(states):
                numerators[t][state] += joint
        if evidence == 0.0:
            raise errors.ZeroEvidenceError(msg=f'Observations {x} have zero probability under the model')
        log.debug(f'Posterior marginals over {n}^{length} paths, evidence {evidence!r}')
        return PosteriorMarginals(
            per_time=tuple(validate_prob_vector([v / evidence for v in row], model.states) for row in numerators)
        )

    @staticmethod
    def map_path_bruteforce(
        *, model: HmmModel, x: ObsSequence, cap: int | None = None
    ) -> tuple[StateSequence, float]:
        """
        Most likely hidden path by enumeration

        Paths within ``TIE_TOLERANCE`` of the maximum are ties and the lexicographically
        smallest of them wins.

        :param model: hidden Markov model
        :param x: observations
        :param cap: enumeration cap override
        :return:
        """
        check_observations(model, x)
        n = model.states.size
        ensure_enumerable(enumeration_size([n], len(x)), cap)
        joints = [joint_product(model, x.indices, states) for states in index_sequences(n, len(x))]
        floor = tie_floor(max(joints))
        first = next(position for position, joint in enumerate(joints) if joint >= floor)
        best_states = next(islice(index_sequences(n, len(x)), first, None))
        return StateSequence(space=model.states, indices=best_states), joints[first]

    @staticmethod
    def prior_marginals(*, model: HmmModel, horizon_T: int) -> PriorMarginals:
        """
        State and observation distributions at t = 1..T with nothing observed

        :param model: hidden Markov model
        :param horizon_T: number of time steps
        :return:
        """
        if horizon_T < 1:
            raise errors.UsageError(msg=f'Horizon must be at least 1, got {horizon_T}')
        states, observations = [], []
        p = model.initial
        for t in range(horizon_T):
            if t:
                p = p.push_forward(model.transition)
            states.append(p)
            observations.append(p.push_forward(model.emission))
        return PriorMarginals(states=tuple(states), observations=tuple(observations))


hmm_service: HmmService = HmmService()
