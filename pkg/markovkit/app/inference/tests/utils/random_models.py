#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import numpy as np

from markovkit.app.inference.model import (
    FactorialHmmModel,
    HmmModel,
    LabelSpace,
    MarkovChainModel,
    validate_prob_vector,
    validate_stochastic_matrix,
)


def label_space(prefix: str, size: int) -> LabelSpace:
    return LabelSpace(labels=tuple(f'{prefix}{i}' for i in range(1, size + 1)))


def random_chain(rng: np.random.Generator, n: int, prefix: str = 's') -> MarkovChainModel:
    states = label_space(prefix, n)
    return MarkovChainModel(
        states=states,
        transition=validate_stochastic_matrix(rng.dirichlet(np.ones(n), size=n), states, states),
        initial=validate_prob_vector(rng.dirichlet(np.ones(n)), states),
    )


def random_hmm(rng: np.random.Generator, n: int, k: int) -> HmmModel:
    chain = random_chain(rng, n)
    observations = label_space('o', k)
    return HmmModel(
        chain=chain,
        observations=observations,
        emission=validate_stochastic_matrix(rng.dirichlet(np.ones(k), size=n), chain.states, observations),
    )


def random_fhmm(rng: np.random.Generator, sizes: tuple[int, ...], k: int) -> FactorialHmmModel:
    observations = label_space('o', k)
    components = tuple(random_chain(rng, n, prefix=f'c{i}s') for i, n in enumerate(sizes, start=1))
    emissions = tuple(
        validate_stochastic_matrix(rng.dirichlet(np.ones(k), size=component.size), component.states, observations)
        for component in components
    )
    return FactorialHmmModel(components=components, observations=observations, emissions=emissions)


def random_model_cases(count: int, *, max_states: int = 4, max_obs: int = 3, max_length: int = 6, seed: int = 0):
    """
    Seeded (model, observation indices) pairs, one generator per case

    :param count: number of cases
    :param max_states: largest N
    :param max_obs: largest K
    :param max_length: largest T
    :param seed: base seed
    :return:
    """
    for case in range(count):
        rng = np.random.default_rng(seed + case)
        n = int(rng.integers(1, max_states + 1))
        k = int(rng.integers(1, max_obs + 1))
        length = int(rng.integers(1, max_length + 1))
        model = random_hmm(rng, n, k)
        yield model, tuple(int(i) for i in rng.integers(0, k, size=length))
