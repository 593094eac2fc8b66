#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Annotated, Generator, Sequence

import cappa

from markovkit import get_version
from markovkit.app.inference.model import (
    FactorialHmmModel,
    HmmModel,
    MarkovChainModel,
    ObsSequence,
    ProbVector,
    StateSequence,
    VectorStateSequence,
    validate_prob_vector,
)
from markovkit.app.inference.service.document_service import AnyModel, document_service
from markovkit.app.inference.service.evolution_service import evolution_service
from markovkit.app.inference.service.export_service import export_service
from markovkit.app.inference.service.fhmm_service import fhmm_service
from markovkit.app.inference.service.hmm_service import hmm_service
from markovkit.app.inference.service.viterbi_service import viterbi_service
from markovkit.app.inference.service.vmm_service import vmm_service
from markovkit.common.enums import ExitCode, ModelKind
from markovkit.common.exception import errors
from markovkit.common.exception.errors import BaseExceptionMixin
from markovkit.common.log import log, set_custom_logfile, setup_logging
from markovkit.core.conf import settings
from markovkit.utils.console import echo, echo_error
from markovkit.utils.request_parse import split_numbers
from markovkit.utils.serializers import format_fixed, format_scientific

ModelArg = Annotated[
    str,
    cappa.Arg(long=True, help='Model document (JSON); bundled documents such as `weather.json` are found by name'),
]
InitArg = Annotated[
    str | None,
    cappa.Arg(long=True, default=None, help='Replace the initial distribution, e.g. "1,0,0"'),
]
ObsArg = Annotated[str, cappa.Arg(long=True, help='Comma-separated observation labels, e.g. "dry,wet,wet"')]
SeqArg = Annotated[str, cappa.Arg(long=True, help='Comma-separated state labels, e.g. "sunny,foggy,rainy"')]


@contextmanager
def cli_errors() -> Generator[None, None, None]:
    """Print library errors on stderr and exit with their code"""
    try:
        yield
    except BaseExceptionMixin as e:
        log.debug(f'{type(e).__name__}: {e.msg}')
        echo_error(e.msg)
        raise cappa.Exit(code=e.code)


def load_model(path: str, init: str | None = None, flag: str = '--init') -> AnyModel:
    model = document_service.read_model(path=path)
    if init is None:
        return model
    if isinstance(model, FactorialHmmModel):
        raise errors.UsageError(msg=f'{flag} is not supported for factorial models')
    try:
        initial = validate_prob_vector(split_numbers(init), model.states)
    except errors.UsageError as e:
        raise e.locate(flag)
    return model.with_initial(initial)


def require_chain(model: AnyModel) -> MarkovChainModel:
    if isinstance(model, MarkovChainModel):
        return model
    if isinstance(model, HmmModel):
        return model.chain
    expected = f'{ModelKind.markov.value} or {ModelKind.hmm.value}'
    raise errors.ModelKindError(kind=ModelKind.fhmm.value, expected=expected)


def require_hmm(model: AnyModel) -> HmmModel:
    if isinstance(model, HmmModel):
        return model
    kind = ModelKind.markov.value if isinstance(model, MarkovChainModel) else ModelKind.fhmm.value
    raise errors.ModelKindError(kind=kind, expected=ModelKind.hmm.value)


def require_fhmm(model: AnyModel) -> FactorialHmmModel:
    if isinstance(model, FactorialHmmModel):
        return model
    kind = ModelKind.markov.value if isinstance(model, MarkovChainModel) else ModelKind.hmm.value
    raise errors.ModelKindError(kind=kind, expected=ModelKind.fhmm.value)


def distribution_lines(p: ProbVector) -> str:
    return '\n'.join(f'{label} {format_fixed(value)}' for label, value in p.as_dict().items())


def inline_distribution(p: ProbVector) -> str:
    return ' '.join(f'{label}={format_fixed(value)}' for label, value in p.as_dict().items())


def describe(model: AnyModel) -> str:
    if isinstance(model, MarkovChainModel):
        return f'{ModelKind.markov.value} model: {model.size} states'
    if isinstance(model, HmmModel):
        return f'{ModelKind.hmm.value} model: {model.states.size} states, {model.observations.size} observations'
    sizes = 'x'.join(str(n) for n in model.sizes)
    observations = model.observations.size
    return f'{ModelKind.fhmm.value} model: {len(model)} components ({sizes} states), {observations} observations'


@cappa.command(name='validate', help='Validate a model document')
@dataclass
class Validate:
    model: ModelArg
    canonical: Annotated[
        bool,
        cappa.Arg(long=True, default=False, help='Print the canonical form of the document'),
    ]

    def __call__(self):
        with cli_errors():
            model = document_service.read_model(path=self.model)
            if self.canonical:
                echo(document_service.serialize_model(model=model), end='')
            else:
                echo(f'valid {describe(model)}')


@cappa.command(name='evolve', help='Evolve the state distribution by a number of transitions')
@dataclass
class Evolve:
    model: ModelArg
    steps: Annotated[int, cappa.Arg(long=True, help='Number of transitions; 0 prints the initial distribution')]
    init: InitArg
    expanded: Annotated[
        bool,
        cappa.Arg(long=True, default=False, help='Sum path weights over every state prefix instead'),
    ]

    def __call__(self):
        with cli_errors():
            model = load_model(self.model, self.init)
            if self.expanded and self.steps < 0:
                raise errors.UsageError(msg=f'Steps must be non-negative, got {self.steps}')
            if isinstance(model, FactorialHmmModel):
                distributions = fhmm_service.component_evolution(model=model, steps=self.steps, expanded=self.expanded)
                for i, p in enumerate(distributions, start=1):
                    echo(f'component {i}')
                    echo(distribution_lines(p))
                return
            chain = require_chain(model)
            if self.expanded:
                p = evolution_service.expanded_mef(model=chain, horizon_T=self.steps + 1)
            else:
                p = evolution_service.evolve(model=chain, steps=self.steps)
            echo(distribution_lines(p))


@cappa.command(name='chain-prob', help='Probability of a fully observed state sequence')
@dataclass
class ChainProb:
    model: ModelArg
    seq: SeqArg
    init: InitArg
    given: Annotated[
        str | None,
        cappa.Arg(long=True, default=None, help='Condition on this current state, the initial distribution is unused'),
    ]
    split: Annotated[
        int | None,
        cappa.Arg(long=True, default=None, help='Print the head and tail weights split at this 1-based time'),
    ]

    def __call__(self):
        with cli_errors():
            chain = require_chain(load_model(self.model, self.init))
            q = StateSequence.parse(chain.states, self.seq)
            if self.given is not None:
                echo(format_scientific(vmm_service.conditional_chain(model=chain, given_state=self.given, future=q)))
            elif self.split is not None:
                head, tail = evolution_service.chain_weight_compose(model=chain, q=q, split_t=self.split)
                echo(f'head: {format_scientific(head)}')
                echo(f'tail: {format_scientific(tail)}')
            else:
                echo(format_scientific(vmm_service.vmm_jpd(model=chain, q=q)))


@cappa.command(name='joint', help='Joint probability of observations and a hidden state sequence')
@dataclass
class Joint:
    model: ModelArg
    obs: ObsArg
    seq: SeqArg
    init: InitArg

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.init))
            x = ObsSequence.parse(hmm.observations, self.obs)
            q = StateSequence.parse(hmm.states, self.seq)
            echo(format_scientific(hmm_service.joint_likelihood(model=hmm, x=x, q=q)))


@cappa.command(name='likelihood', help='Probability of an observation sequence, by enumeration')
@dataclass
class Likelihood:
    model: ModelArg
    obs: ObsArg
    init: InitArg

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.init))
            x = ObsSequence.parse(hmm.observations, self.obs)
            echo(format_scientific(hmm_service.sequence_likelihood(model=hmm, x=x)))


@cappa.command(name='viterbi', help='Most likely hidden state sequence (Viterbi)')
@dataclass
class Viterbi:
    model: ModelArg
    obs: ObsArg
    init: InitArg
    log_space: Annotated[bool, cappa.Arg(long=True, default=False, help='Decode with natural-log probabilities')]
    dump_trellis: Annotated[bool, cappa.Arg(long=True, default=False, help='Print the delta/psi trellis')]

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.init))
            x = ObsSequence.parse(hmm.observations, self.obs)
            trellis = viterbi_service.viterbi_decode(model=hmm, x=x, log_space=self.log_space)
            echo(f'path: {trellis.best_path}')
            echo(f'value: {format_scientific(trellis.path_probability)}')
            if self.log_space:
                echo(f'log-value: {format_fixed(trellis.best_value)}')
            if self.dump_trellis:
                echo(export_service.dump_trellis(trellis=trellis), end='')


@cappa.command(name='posterior', help='Posterior state marginals per time step, by enumeration')
@dataclass
class Posterior:
    model: ModelArg
    obs: ObsArg
    init: InitArg

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.init))
            x = ObsSequence.parse(hmm.observations, self.obs)
            marginals = hmm_service.posterior_marginals(model=hmm, x=x)
            for t, p in enumerate(marginals.per_time, start=1):
                echo(f'{t} {inline_distribution(p)}')


@cappa.command(name='map-brute', help='Most likely hidden state sequence, by enumeration')
@dataclass
class MapBrute:
    model: ModelArg
    obs: ObsArg
    init: InitArg

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.init))
            x = ObsSequence.parse(hmm.observations, self.obs)
            path, value = hmm_service.map_path_bruteforce(model=hmm, x=x)
            echo(f'path: {path}')
            echo(f'value: {format_scientific(value)}')


@cappa.command(name='prior', help='State and observation distributions per time step, nothing observed')
@dataclass
class Prior:
    model: ModelArg
    horizon: Annotated[int, cappa.Arg(long=True, help='Number of time steps')]
    init: InitArg

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.init))
            marginals = hmm_service.prior_marginals(model=hmm, horizon_T=self.horizon)
            for t, (states, observations) in enumerate(zip(marginals.states, marginals.observations), start=1):
                echo(f'{t} {inline_distribution(states)} | {inline_distribution(observations)}')


@cappa.command(name='bayes', help='State distribution after a single observation')
@dataclass
class Bayes:
    model: ModelArg
    obs: Annotated[str, cappa.Arg(long=True, help='One observation label, e.g. "dry"')]
    prior: Annotated[
        str | None,
        cappa.Arg(long=True, default=None, help='State prior, e.g. "0.5,0.3,0.2"; default the initial distribution'),
    ]

    def __call__(self):
        with cli_errors():
            hmm = require_hmm(load_model(self.model, self.prior, '--prior'))
            echo(distribution_lines(hmm_service.bayes_reverse(model=hmm, observed=self.obs, state_prior=hmm.initial)))


@cappa.command(name='fhmm-likelihood', help='Probability of an observation sequence under a factorial model')
@dataclass
class FhmmLikelihood:
    model: ModelArg
    obs: ObsArg
    seq: Annotated[
        list[str] | None,
        cappa.Arg(
            long=True,
            default=None,
            help='State sequence of one component, repeat per component; prints the emission and state weights',
        ),
    ]

    def __call__(self):
        with cli_errors():
            fhmm = require_fhmm(load_model(self.model))
            y = ObsSequence.parse(fhmm.observations, self.obs)
            if not self.seq:
                echo(format_scientific(fhmm_service.fhmm_sequence_likelihood(model=fhmm, y=y)))
                return
            if len(self.seq) != len(fhmm):
                raise errors.LengthMismatchError(expected=len(fhmm), actual=len(self.seq), what='--seq values')
            q = VectorStateSequence(
                per_component=tuple(
                    StateSequence.parse(component.states, text) for component, text in zip(fhmm.components, self.seq)
                )
            )
            emission = fhmm_service.fhmm_emission_likelihood(model=fhmm, y=y, q=q)
            echo(f'emission: {format_scientific(emission)}')
            echo(f'states: {format_scientific(fhmm_service.fhmm_state_jpd(model=fhmm, q=q))}')


@cappa.command(name='export-dot', help='Unrolled network graph of a model in DOT format')
@dataclass
class ExportDot:
    model: ModelArg
    horizon: Annotated[int, cappa.Arg(long=True, default=3, help='Number of time steps to unroll')]

    def __call__(self):
        with cli_errors():
            model = load_model(self.model)
            echo(export_service.export_dot(model=model, horizon_T=self.horizon), end='')


@cappa.command(name='markovkit', help='Exact inference on Markov chains and hidden Markov models')
@dataclass
class MarkovCli:
    version: Annotated[
        bool,
        cappa.Arg(short='-V', long=True, default=False, show_default=False, help='Print the current version number'),
    ]
    subcmd: cappa.Subcommands[
        Validate
        | Evolve
        | ChainProb
        | Joint
        | Likelihood
        | Viterbi
        | Posterior
        | MapBrute
        | Prior
        | Bayes
        | FhmmLikelihood
        | ExportDot
        | None
    ] = None

    def __call__(self):
        if self.version:
            get_version()


def run_cli(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line and return its exit code

    :param argv: arguments without the program name, default to sys.argv[1:]
    :return:
    """
    setup_logging()
    if settings.LOG_FILE_ENABLED:
        set_custom_logfile()
    output = cappa.Output(error_format='[red]Error[/]: {message}\n\nFor more information, try "[cyan]--help[/]"')
    try:
        cappa.invoke(MarkovCli, argv=None if argv is None else list(argv), output=output)
    except cappa.Exit as e:
        return ExitCode.usage if e.code is None else int(e.code)
    except SystemExit as e:
        if e.code is None:
            return ExitCode.success
        return e.code if isinstance(e.code, int) else ExitCode.usage
    return ExitCode.success


def main() -> None:
    raise SystemExit(run_cli())
