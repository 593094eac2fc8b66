#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Callable

import numpy as np

from markovkit.app.inference.model import PSI_SENTINEL, HmmModel, ObsSequence, StateSequence, ViterbiTrellis
from markovkit.app.inference.service.hmm_service import check_observations, tie_floor
from markovkit.common.exception import errors
from markovkit.common.log import log


def first_tied(values: np.ndarray, *, log_space: bool, axis: int | None = None) -> np.ndarray | int:
    """Smallest index whose value ties with the maximum along ``axis``"""
    best = values.max(axis=axis)
    return np.argmax(values >= tie_floor(best, log_space=log_space), axis=axis)


def smallest_best_path(
    delta: np.ndarray,
    a: np.ndarray,
    emitted: np.ndarray,
    combine: Callable[[np.ndarray, np.ndarray], np.ndarray],
    log_space: bool,
) -> tuple[int, ...]:
    """
    Lexicographically smallest path among the tied optimal ones

    ``best_after[t, i]`` is the best score of the steps after t given state i at t. Walking
    forward, each step keeps the smallest state whose best completion still ties.

    :param delta: Viterbi delta table
    :param a: transition entries, same space as delta
    :param emitted: ``emitted[t, j]``, emission entry of state j for the observation at t
    :param combine: ``np.multiply`` or ``np.add`` in log space
    :param log_space: values are natural logs
    :return:
    """
    length = delta.shape[0]
    best_after = np.empty_like(delta)
    best_after[-1] = 0.0 if log_space else 1.0
    for t in range(length - 2, -1, -1):
        best_after[t] = combine(a, combine(emitted[t + 1], best_after[t + 1])[np.newaxis, :]).max(axis=1)

    path: list[int] = []
    reach = delta[0]
    for t in range(length):
        if t:
            reach = combine(reach[path[-1]], combine(a[path[-1]], emitted[t]))
        path.append(int(first_tied(combine(reach, best_after[t]), log_space=log_space)))
    return tuple(path)


class ViterbiService:
    """Viterbi decoding"""

    @staticmethod
    def viterbi_decode(*, model: HmmModel, x: ObsSequence, log_space: bool = False) -> ViterbiTrellis:
        """
        Most likely hidden path with the full delta/psi trellis

        Scores within ``TIE_TOLERANCE`` of each other are ties. Every psi entry takes the
        smallest tied state, and the best path is the lexicographically smallest of the tied
        optimal paths, the same one ``map_path_bruteforce`` returns. In log space zero
        probabilities become -inf and the returned deltas are natural logs.

        :param model: hidden Markov model
        :param x: observations
        :param log_space: sum logs instead of multiplying probabilities
        :return:
        """
        if len(x) == 0:
            raise errors.EmptyObservationSequenceError()
        check_observations(model, x)

        pi, a, b = model.initial.entries, model.transition.entries, model.emission.entries
        if log_space:
            with np.errstate(divide='ignore'):
                pi, a, b = np.log(pi), np.log(a), np.log(b)
        combine = np.add if log_space else np.multiply

        length, n = len(x), model.states.size
        log.debug(f'Viterbi trellis {length}x{n}, log_space={log_space}')
        emitted = b[:, list(x.indices)].T
        delta = np.empty((length, n), dtype=np.float64)
        psi = np.full((length, n), PSI_SENTINEL, dtype=np.int64)

        delta[0] = combine(pi, emitted[0])
        for t in range(1, length):
            # scores[i, j]: best path into i at t-1, then i -> j
            scores = combine(delta[t - 1][:, np.newaxis], a)
            psi[t] = first_tied(scores, log_space=log_space, axis=0)
            delta[t] = combine(scores.max(axis=0), emitted[t])

        path = smallest_best_path(delta, a, emitted, combine, log_space)
        return ViterbiTrellis(
            delta=delta,
            psi=psi,
            best_value=float(delta[-1][path[-1]]),
            best_path=StateSequence(space=model.states, indices=path),
            log_space=log_space,
        )


viterbi_service: ViterbiService = ViterbiService()
