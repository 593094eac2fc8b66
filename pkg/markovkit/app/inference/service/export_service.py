#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from graphviz import Digraph

from markovkit.app.inference.model import (
    PSI_SENTINEL,
    FactorialHmmModel,
    HmmModel,
    MarkovChainModel,
    ViterbiTrellis,
)
from markovkit.common.exception import errors
from markovkit.core.conf import settings
from markovkit.utils.serializers import format_significant


def _digraph(model: MarkovChainModel | HmmModel | FactorialHmmModel) -> Digraph:
    return Digraph(name=model.name or 'unrolled', graph_attr={'rankdir': settings.DOT_RANKDIR})


class ExportService:
    """Text renderings: unrolled network graphs and Viterbi trellises"""

    @staticmethod
    def export_dot(*, model: MarkovChainModel | HmmModel | FactorialHmmModel, horizon_T: int) -> str:
        """
        DOT source of the model unrolled over T time steps

        :param model: any model
        :param horizon_T: number of time steps, at least 1
        :return:
        """
        if horizon_T < 1:
            raise errors.UsageError(msg=f'Horizon must be at least 1, got {horizon_T}')
        times = range(1, horizon_T + 1)
        dot = _digraph(model)

        if isinstance(model, MarkovChainModel):
            for t in times:
                dot.node(f'q_{t}', shape=settings.DOT_OBSERVED_SHAPE)
            for t in times[:-1]:
                dot.edge(f'q_{t}', f'q_{t + 1}')
            return dot.source

        if isinstance(model, HmmModel):
            chains, observed = [''], 'x'
        else:
            chains, observed = [str(i) for i in range(1, len(model) + 1)], 'y'

        for chain in chains:
            for t in times:
                dot.node(f'q{chain}_{t}', shape=settings.DOT_HIDDEN_SHAPE)
        for t in times:
            dot.node(f'{observed}_{t}', shape=settings.DOT_OBSERVED_SHAPE)
        for chain in chains:
            for t in times[:-1]:
                dot.edge(f'q{chain}_{t}', f'q{chain}_{t + 1}')
        for t in times:
            for chain in chains:
                dot.edge(f'q{chain}_{t}', f'{observed}_{t}')
        return dot.source

    @staticmethod
    def dump_trellis(*, trellis: ViterbiTrellis) -> str:
        """
        One line per time step: ``t | deltas | psi labels``, psi is "-" at t=1

        :param trellis: Viterbi result
        :return:
        """
        labels = trellis.best_path.space.labels
        lines = []
        for t, (deltas, pointers) in enumerate(zip(trellis.delta, trellis.psi), start=1):
            delta_text = ' '.join(format_significant(float(v)) for v in deltas)
            psi_text = ' '.join('-' if p == PSI_SENTINEL else labels[p] for p in pointers)
            lines.append(f'{t} | {delta_text} | {psi_text}')
        return '\n'.join(lines) + '\n'


export_service: ExportService = ExportService()
