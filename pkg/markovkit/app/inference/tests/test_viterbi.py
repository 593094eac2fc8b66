#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest

from markovkit.app.inference.model import (
    PSI_SENTINEL,
    HmmModel,
    LabelSpace,
    MarkovChainModel,
    ObsSequence,
    ProbVector,
    ViterbiTrellis,
    validate_prob_vector,
    validate_stochastic_matrix,
)
from markovkit.app.inference.service.hmm_service import hmm_service, joint_product
from markovkit.app.inference.service.viterbi_service import viterbi_service
from markovkit.app.inference.tests.utils.random_models import random_model_cases
from markovkit.common.exception import errors
from markovkit.utils.enumeration import index_sequences

DRY_WET_WET = 'dry,wet,wet'


def _decode(model: HmmModel, observations: str) -> ViterbiTrellis:
    return viterbi_service.viterbi_decode(model=model, x=ObsSequence.parse(model.observations, observations))


def test_viterbi_delta_table(weather_stone: HmmModel) -> None:
    trellis = _decode(weather_stone, DRY_WET_WET)
    expected = [
        [0.3, 0.2 / 3, 0.7 / 3],
        [0.024, 0.056, 0.035],
        [0.00192, 0.02688, 0.00525],
    ]
    np.testing.assert_allclose(trellis.delta, expected, rtol=0, atol=1e-12)
    assert trellis.length == 3


def test_viterbi_psi_table(weather_stone: HmmModel) -> None:
    trellis = _decode(weather_stone, DRY_WET_WET)
    labels = weather_stone.states.labels
    assert trellis.psi[0].tolist() == [PSI_SENTINEL] * 3
    assert [labels[i] for i in trellis.psi[1]] == ['sunny', 'foggy', 'foggy']
    assert [labels[i] for i in trellis.psi[2]] == ['sunny', 'rainy', 'foggy']


def test_viterbi_best_path(weather_stone: HmmModel) -> None:
    trellis = _decode(weather_stone, DRY_WET_WET)
    assert trellis.best_path.labels == ('foggy', 'rainy', 'rainy')
    assert trellis.best_value == pytest.approx(0.02688, abs=1e-12)
    assert trellis.path_probability == trellis.best_value
    assert not trellis.is_impossible


def test_viterbi_log_space(weather_stone: HmmModel) -> None:
    x = ObsSequence.parse(weather_stone.observations, DRY_WET_WET)
    plain = viterbi_service.viterbi_decode(model=weather_stone, x=x)
    logged = viterbi_service.viterbi_decode(model=weather_stone, x=x, log_space=True)
    assert logged.log_space
    assert logged.best_path == plain.best_path
    assert logged.psi.tolist() == plain.psi.tolist()
    np.testing.assert_allclose(np.exp(logged.delta), plain.delta, rtol=1e-12, atol=0)
    assert logged.best_value == pytest.approx(math.log(0.02688), rel=1e-12)
    assert logged.path_probability == pytest.approx(0.02688, rel=1e-12)


def test_viterbi_single_step(weather_stone: HmmModel) -> None:
    trellis = _decode(weather_stone, 'dry')
    assert trellis.best_path.labels == ('sunny',)
    assert trellis.best_value == pytest.approx(0.3, abs=1e-15)
    assert trellis.psi.tolist() == [[PSI_SENTINEL] * 3]


def test_viterbi_scaled_initial_scales_deltas(weather_stone: HmmModel) -> None:
    x = ObsSequence.parse(weather_stone.observations, DRY_WET_WET)
    doubled = weather_stone.with_initial(
        ProbVector(space=weather_stone.states, entries=weather_stone.initial.entries * 2.0)
    )
    plain = viterbi_service.viterbi_decode(model=weather_stone, x=x)
    scaled = viterbi_service.viterbi_decode(model=doubled, x=x)
    assert scaled.best_path == plain.best_path
    assert scaled.psi.tolist() == plain.psi.tolist()
    np.testing.assert_allclose(scaled.delta, plain.delta * 2.0, rtol=1e-12, atol=0)


def test_viterbi_impossible_observations() -> None:
    states = LabelSpace(labels=('a', 'b'))
    observations = LabelSpace(labels=('A', 'B'))
    chain = MarkovChainModel(
        states=states,
        transition=validate_stochastic_matrix([[1.0, 0.0], [0.0, 1.0]], states, states),
        initial=validate_prob_vector([1.0, 0.0], states),
    )
    model = HmmModel(
        chain=chain,
        observations=observations,
        emission=validate_stochastic_matrix([[1.0, 0.0], [0.0, 1.0]], states, observations),
    )
    x = ObsSequence.parse(observations, 'A,B')
    trellis = viterbi_service.viterbi_decode(model=model, x=x)
    assert trellis.is_impossible
    logged = viterbi_service.viterbi_decode(model=model, x=x, log_space=True)
    assert logged.best_value == -math.inf
    assert logged.is_impossible
    assert logged.best_path == trellis.best_path


def test_viterbi_tie_takes_first_state() -> None:
    states = LabelSpace(labels=('left', 'right'))
    observations = LabelSpace(labels=('o',))
    chain = MarkovChainModel(
        states=states,
        transition=validate_stochastic_matrix([[0.5, 0.5], [0.5, 0.5]], states, states),
        initial=validate_prob_vector([0.5, 0.5], states),
    )
    model = HmmModel(
        chain=chain,
        observations=observations,
        emission=validate_stochastic_matrix([[1.0], [1.0]], states, observations),
    )
    trellis = viterbi_service.viterbi_decode(model=model, x=ObsSequence.parse(observations, 'o,o,o,o'))
    assert trellis.best_path.labels == ('left',) * 4
    assert trellis.psi[1:].tolist() == [[0, 0]] * 3


def test_viterbi_reordered_factors_tie() -> None:
    states = LabelSpace(labels=('a', 'b'))
    observations = LabelSpace(labels=('o',))
    chain = MarkovChainModel(
        states=states,
        transition=validate_stochastic_matrix([[0.2, 0.8], [0.5, 0.5]], states, states),
        initial=validate_prob_vector([1.0, 0.0], states),
    )
    model = HmmModel(
        chain=chain,
        observations=observations,
        emission=validate_stochastic_matrix([[1.0], [1.0]], states, observations),
    )
    x = ObsSequence.parse(observations, 'o,o,o,o,o')
    # a,b,a,b,a and a,b,a,b,b and a,b,b,a,b all weigh 0.8 * 0.5 * 0.8 * 0.5
    path, value = hmm_service.map_path_bruteforce(model=model, x=x)
    assert path.labels == ('a', 'b', 'a', 'b', 'a')
    assert value == pytest.approx(0.16, rel=1e-12)
    for log_space in (False, True):
        trellis = viterbi_service.viterbi_decode(model=model, x=x, log_space=log_space)
        assert trellis.best_path == path
        assert trellis.path_probability == pytest.approx(0.16, rel=1e-12)


def test_viterbi_space_mismatch(weather_stone: HmmModel) -> None:
    x = ObsSequence.parse(LabelSpace(labels=('dry', 'wet', 'damp')), 'dry')
    with pytest.raises(errors.SpaceMismatchError):
        viterbi_service.viterbi_decode(model=weather_stone, x=x)


@pytest.mark.property
def test_viterbi_agrees_with_bruteforce() -> None:
    for model, obs in random_model_cases(200):
        x = ObsSequence(space=model.observations, indices=obs)
        path, value = hmm_service.map_path_bruteforce(model=model, x=x)
        trellis = viterbi_service.viterbi_decode(model=model, x=x)
        logged = viterbi_service.viterbi_decode(model=model, x=x, log_space=True)
        assert trellis.best_value == pytest.approx(value, rel=1e-12)
        assert trellis.best_path == path
        assert logged.best_path == path
        assert logged.path_probability == pytest.approx(value, rel=1e-9)


@pytest.mark.property
def test_viterbi_delta_is_best_prefix_joint() -> None:
    for model, obs in random_model_cases(60, max_length=5, seed=1000):
        n = model.states.size
        trellis = viterbi_service.viterbi_decode(model=model, x=ObsSequence(space=model.observations, indices=obs))
        for t in range(len(obs)):
            best = [0.0] * n
            for prefix in index_sequences(n, t + 1):
                best[prefix[-1]] = max(best[prefix[-1]], joint_product(model, obs[: t + 1], prefix))
            np.testing.assert_allclose(trellis.delta[t], best, rtol=1e-12, atol=0)
