#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import pytest

from markovkit.app.inference.model import FactorialHmmModel, HmmModel, MarkovChainModel, validate_prob_vector
from markovkit.app.inference.service.document_service import document_service

# Bundled documents
PYTEST_WEATHER = 'weather.json'
PYTEST_WEATHER_STONE = 'weather-stone.json'
PYTEST_WEATHER_PRESSURE = 'weather-pressure-fhmm.json'


@pytest.fixture(scope='module')
def weather() -> MarkovChainModel:
    return document_service.read_model(path=PYTEST_WEATHER)


@pytest.fixture(scope='module')
def weather_sunny(weather: MarkovChainModel) -> MarkovChainModel:
    """Weather chain started on a sunny day"""
    return weather.with_initial(validate_prob_vector([1.0, 0.0, 0.0], weather.states))


@pytest.fixture(scope='module')
def weather_stone() -> HmmModel:
    return document_service.read_model(path=PYTEST_WEATHER_STONE)


@pytest.fixture(scope='module')
def weather_pressure() -> FactorialHmmModel:
    return document_service.read_model(path=PYTEST_WEATHER_PRESSURE)
