#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from markovkit.app.inference.model.chain import HmmModel, MarkovChainModel
from markovkit.app.inference.model.factorial import FactorialHmmModel
from markovkit.app.inference.model.label_space import LabelSpace
from markovkit.app.inference.model.probability import (
    ProbVector,
    StochasticMatrix,
    validate_prob_vector,
    validate_stochastic_matrix,
)
from markovkit.app.inference.model.result import (
    PSI_SENTINEL,
    ChainWeight,
    PosteriorMarginals,
    PriorMarginals,
    ViterbiTrellis,
)
from markovkit.app.inference.model.sequence import ObsSequence, StateSequence, VectorStateSequence
