#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Iterator, Sequence

from markovkit.app.inference.model import (
    ChainWeight,
    MarkovChainModel,
    ProbVector,
    StateSequence,
    validate_prob_vector,
)
from markovkit.common.exception import errors
from markovkit.common.log import log
from markovkit.utils.enumeration import ensure_enumerable, enumeration_size, index_sequences


def path_weight(model: MarkovChainModel, indices: Sequence[int]) -> float:
    """π of the first state times every transition along the path, multiplied left to right"""
    a = model.transition.entries
    weight = model.initial.entries[indices[0]]
    for prev, cur in zip(indices, indices[1:]):
        weight *= a[prev, cur]
    return float(weight)


def check_space(model: MarkovChainModel, q: StateSequence) -> None:
    if q.space != model.states:
        raise errors.SpaceMismatchError(msg='State sequence is not over the model states')


class EvolutionService:
    """Distribution evolution and state-path weights of a Markov chain"""

    @staticmethod
    def evolve(*, model: MarkovChainModel, steps: int) -> ProbVector:
        """
        Evolve the initial distribution, ``evolve(model, t - 1)`` is the distribution at time t

        :param model: Markov chain
        :param steps: number of transitions, 0 returns the initial distribution
        :return:
        """
        if steps < 0:
            raise errors.UsageError(msg=f'Steps must be non-negative, got {steps}')
        p = model.initial
        for _ in range(steps):
            p = p.push_forward(model.transition)
        return p

    @staticmethod
    def chain_weight(*, model: MarkovChainModel, q: StateSequence) -> ChainWeight:
        """
        Weight of a state path: π(q_1) a(q_1, q_2) ... a(q_T-1, q_T)

        :param model: Markov chain
        :param q: state path
        :return:
        """
        check_space(model, q)
        return ChainWeight(value=path_weight(model, q.indices))

    @staticmethod
    def chain_weight_compose(*, model: MarkovChainModel, q: StateSequence, split_t: int) -> tuple[float, float]:
        """
        Split a path weight at a 1-based time into the head weight up to ``split_t`` and the tail
        transition product from ``split_t`` on

        :param model: Markov chain
        :param q: state path
        :param split_t: split time, 1 < split_t < T
        :return:
        """
        check_space(model, q)
        length = len(q)
        if not 1 < split_t < length:
            raise errors.SplitOutOfRangeError(split=split_t, length=length)
        head = path_weight(model, q.indices[:split_t])
        a = model.transition.entries
        tail = 1.0
        for k in range(split_t - 1, length - 1):
            tail *= a[q[k], q[k + 1]]
        return head, float(tail)

    @staticmethod
    def expanded_mef(*, model: MarkovChainModel, horizon_T: int, cap: int | None = None) -> ProbVector:
        """
        Distribution at time T as the sum of path weights over every prefix q_1..q_T-1

        :param model: Markov chain
        :param horizon_T: time T >= 1
        :param cap: enumeration cap override
        :return:
        """
        if horizon_T < 1:
            raise errors.UsageError(msg=f'Horizon must be at least 1, got {horizon_T}')
        n = model.size
        ensure_enumerable(enumeration_size([n], horizon_T - 1), cap)
        totals = [0.0] * n
        for prefix in index_sequences(n, horizon_T - 1):
            for last in range(n):
                totals[last] += path_weight(model, prefix + (last,))
        return validate_prob_vector(totals, model.states)

    @staticmethod
    def enumerate_chain_weights(
        *, model: MarkovChainModel, horizon_T: int, cap: int | None = None
    ) -> Iterator[tuple[StateSequence, float]]:
        """
        Every length-T state path with its weight, in lexicographic order

        :param model: Markov chain
        :param horizon_T: path length T >= 1
        :param cap: enumeration cap override
        :return:
        """
        if horizon_T < 1:
            raise errors.UsageError(msg=f'Horizon must be at least 1, got {horizon_T}')
        ensure_enumerable(enumeration_size([model.size], horizon_T), cap)
        log.debug(f'Enumerating chain weights over {model.size} states, T={horizon_T}')
        return (
            (StateSequence(space=model.states, indices=indices), path_weight(model, indices))
            for indices in index_sequences(model.size, horizon_T)
        )


evolution_service: EvolutionService = EvolutionService()
