#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest

from hypothesis import given, settings
from hypothesis import strategies as st

from markovkit.app.inference.model import MarkovChainModel, StateSequence, validate_prob_vector
from markovkit.app.inference.service.evolution_service import evolution_service
from markovkit.app.inference.service.vmm_service import vmm_service
from markovkit.app.inference.tests.utils.random_models import label_space
from markovkit.app.inference.tests.utils.strategies import chains_with_paths, markov_chains
from markovkit.common.exception import errors
from markovkit.utils.enumeration import index_sequences

pytestmark = pytest.mark.property


@given(chains_with_paths(min_length=3))
def test_compose_matches_chain_weight(case: tuple[MarkovChainModel, StateSequence]) -> None:
    chain, q = case
    whole = evolution_service.chain_weight(model=chain, q=q).value
    for split_t in range(2, len(q)):
        head, tail = evolution_service.chain_weight_compose(model=chain, q=q, split_t=split_t)
        assert head * tail == pytest.approx(whole, rel=1e-12)


@given(chains_with_paths(max_length=4))
def test_chain_weight_is_a_probability(case: tuple[MarkovChainModel, StateSequence]) -> None:
    chain, q = case
    assert 0.0 <= evolution_service.chain_weight(model=chain, q=q).value <= 1.0


@settings(max_examples=50, deadline=None)
@given(markov_chains(), st.integers(min_value=1, max_value=4))
def test_vmm_jpd_sums_to_one(chain: MarkovChainModel, length: int) -> None:
    total = 0.0
    for indices in index_sequences(chain.size, length):
        total += vmm_service.vmm_jpd(model=chain, q=StateSequence(space=chain.states, indices=indices))
    assert total == pytest.approx(1.0, abs=1e-9)


@settings(deadline=None)
@given(markov_chains(), st.integers(min_value=0, max_value=20))
def test_evolve_stays_normalized(chain: MarkovChainModel, steps: int) -> None:
    p = evolution_service.evolve(model=chain, steps=steps)
    assert math.fsum(p.entries) == pytest.approx(1.0, abs=1e-9)
    assert (p.entries >= 0.0).all()


@given(st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=6))
def test_validation_accepts_iff_sum_is_one(entries: list[float]) -> None:
    space = label_space('s', len(entries))
    if abs(math.fsum(entries) - 1.0) <= 1e-9:
        assert validate_prob_vector(entries, space).entries.tolist() == entries
    else:
        with pytest.raises(errors.SumNotOneError):
            validate_prob_vector(entries, space)


@given(
    st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=2, max_size=6),
    st.data(),
)
def test_validation_rejects_negative_entries(entries: list[float], data: st.DataObject) -> None:
    position = data.draw(st.integers(min_value=0, max_value=len(entries) - 1))
    entries[position] = -data.draw(st.floats(min_value=1e-6, max_value=1.0))
    with pytest.raises(errors.NegativeEntryError) as e:
        validate_prob_vector(entries, label_space('s', len(entries)))
    assert e.value.index == (position,)


@given(st.floats(allow_nan=True, allow_infinity=True).filter(lambda v: math.isnan(v) or v > 1.0))
def test_validation_rejects_out_of_range_entries(value: float) -> None:
    with pytest.raises(errors.EntryOutOfRangeError):
        validate_prob_vector([value, 0.0], label_space('s', 2))


@settings(deadline=None)
@given(markov_chains(min_size=2))
def test_push_forward_is_linear(chain: MarkovChainModel) -> None:
    half = np.full(chain.size, 1.0 / chain.size)
    mixed = validate_prob_vector(0.5 * chain.initial.entries + 0.5 * half, chain.states)
    uniform = validate_prob_vector(half, chain.states)
    expected = 0.5 * chain.initial.push_forward(chain.transition).entries + 0.5 * uniform.push_forward(
        chain.transition
    ).entries
    np.testing.assert_allclose(mixed.push_forward(chain.transition).entries, expected, rtol=0, atol=1e-12)
