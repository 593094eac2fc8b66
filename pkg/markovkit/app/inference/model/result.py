#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math

from dataclasses import dataclass

import numpy as np

from markovkit.app.inference.model.probability import ProbVector
from markovkit.app.inference.model.sequence import StateSequence

# Backpointer stored at the first time step, rendered as "-"
PSI_SENTINEL = -1


@dataclass(frozen=True)
class ChainWeight:
    """Probability of one fixed state path, initial probability included"""

    value: float

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class PosteriorMarginals:
    """P(q_t = i | x) for every time step"""

    per_time: tuple[ProbVector, ...]

    def __len__(self) -> int:
        return len(self.per_time)


@dataclass(frozen=True)
class PriorMarginals:
    """State and observation distributions per time step, with nothing observed"""

    states: tuple[ProbVector, ...]
    observations: tuple[ProbVector, ...]

    def __len__(self) -> int:
        return len(self.states)


@dataclass(frozen=True, eq=False)
class ViterbiTrellis:
    """
    Delta and psi tables of a Viterbi run, stored one row per time step

    In log space ``delta`` and ``best_value`` hold natural logs with -inf for impossible paths.
    """

    delta: np.ndarray
    psi: np.ndarray
    best_value: float
    best_path: StateSequence
    log_space: bool = False

    def __post_init__(self):
        delta = np.array(self.delta, dtype=np.float64)
        psi = np.array(self.psi, dtype=np.int64)
        delta.setflags(write=False)
        psi.setflags(write=False)
        object.__setattr__(self, 'delta', delta)
        object.__setattr__(self, 'psi', psi)

    @property
    def length(self) -> int:
        return self.delta.shape[0]

    @property
    def path_probability(self) -> float:
        """Probability of the best path, 0.0 when every path is impossible"""
        if self.log_space:
            return math.exp(self.best_value) if self.best_value != -math.inf else 0.0
        return self.best_value

    @property
    def is_impossible(self) -> bool:
        return self.path_probability == 0.0
