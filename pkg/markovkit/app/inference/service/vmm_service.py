#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from markovkit.app.inference.model import MarkovChainModel, StateSequence
from markovkit.app.inference.service.evolution_service import check_space, evolution_service
from markovkit.common.exception import errors


class VmmService:
    """Visible Markov model queries"""

    @staticmethod
    def vmm_jpd(*, model: MarkovChainModel, q: StateSequence) -> float:
        """
        Joint probability of a fully observed state sequence

        :param model: Markov chain
        :param q: observed states
        :return:
        """
        return evolution_service.chain_weight(model=model, q=q).value

    @staticmethod
    def conditional_chain(*, model: MarkovChainModel, given_state: int | str, future: StateSequence) -> float:
        """
        Probability of the future states given the current one, the product of transitions only

        :param model: Markov chain
        :param given_state: current state, index or label
        :param future: following states
        :return:
        """
        check_space(model, future)
        prev = model.states.index(given_state) if isinstance(given_state, str) else given_state
        if not 0 <= prev < model.size:
            raise errors.UsageError(msg=f'State index {prev + 1} outside 1..{model.size}')
        a = model.transition.entries
        value = 1.0
        for cur in future:
            value *= a[prev, cur]
            prev = cur
        return float(value)


vmm_service: VmmService = VmmService()
