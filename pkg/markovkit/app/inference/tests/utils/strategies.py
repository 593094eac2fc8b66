#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import hypothesis.extra.numpy as npst
import numpy as np

from hypothesis import strategies as st

from markovkit.app.inference.model import (
    MarkovChainModel,
    StateSequence,
    validate_prob_vector,
    validate_stochastic_matrix,
)
from markovkit.app.inference.tests.utils.random_models import label_space


def _rows(draw, rows: int, cols: int) -> np.ndarray:
    weights = draw(
        npst.arrays(
            dtype=np.float64,
            shape=(rows, cols),
            elements=st.floats(min_value=0.01, max_value=1e3, allow_nan=False, allow_infinity=False),
        )
    )
    return weights / weights.sum(axis=1, keepdims=True)


@st.composite
def markov_chains(draw, min_size: int = 1, max_size: int = 4) -> MarkovChainModel:
    """Chains with strictly positive, row-normalized transitions"""
    n = draw(st.integers(min_value=min_size, max_value=max_size))
    states = label_space('s', n)
    return MarkovChainModel(
        states=states,
        transition=validate_stochastic_matrix(_rows(draw, n, n), states, states),
        initial=validate_prob_vector(_rows(draw, 1, n)[0], states),
    )


@st.composite
def chains_with_paths(draw, min_length: int = 1, max_length: int = 6) -> tuple[MarkovChainModel, StateSequence]:
    chain = draw(markov_chains())
    length = draw(st.integers(min_value=min_length, max_value=max_length))
    indices = draw(st.lists(st.integers(min_value=0, max_value=chain.size - 1), min_size=length, max_size=length))
    return chain, StateSequence(space=chain.states, indices=tuple(indices))
