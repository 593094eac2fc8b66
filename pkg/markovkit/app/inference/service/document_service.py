#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from contextlib import contextmanager
from typing import Generator

from pydantic import ValidationError

from markovkit.app.inference.model import (
    FactorialHmmModel,
    HmmModel,
    LabelSpace,
    MarkovChainModel,
    validate_prob_vector,
    validate_stochastic_matrix,
)
from markovkit.app.inference.schema.model_document import (
    KIND_SECTIONS,
    OPTIONAL_SECTIONS,
    ComponentSection,
    ModelDocument,
)
from markovkit.common.enums import ModelKind
from markovkit.common.exception import errors
from markovkit.common.log import log
from markovkit.utils.file_ops import read_text, resolve_model_path
from markovkit.utils.re_verify import json_error_position
from markovkit.utils.serializers import canonical_json

AnyModel = MarkovChainModel | HmmModel | FactorialHmmModel


def json_path(loc: tuple[str | int, ...]) -> str:
    """
    Render a pydantic error location as a JSON path, e.g. ``$.transition[1][2]``

    :param loc: error location
    :return:
    """
    return '$' + ''.join(f'[{part}]' if isinstance(part, int) else f'.{part}' for part in loc)


def _convert_validation_error(exc: ValidationError) -> errors.UsageError:
    error = exc.errors()[0]
    if error['type'] == 'json_invalid':
        reason = str(error.get('ctx', {}).get('error', error['msg']))
        line, column = json_error_position(reason) or (1, 1)
        return errors.ParseError(line=line, column=column, reason=reason)
    return errors.SchemaError(path=json_path(tuple(error['loc'])), reason=error['msg'])


@contextmanager
def at_path(path: str) -> Generator[None, None, None]:
    """Attach a document path to validation errors raised inside the block"""
    try:
        yield
    except errors.UsageError as e:
        if e.path is None:
            e.locate(path)
        raise


def _build_chain(section: ModelDocument | ComponentSection, prefix: str = '$') -> MarkovChainModel:
    with at_path(f'{prefix}.states'):
        states = LabelSpace(labels=tuple(section.states))
    with at_path(f'{prefix}.transition'):
        transition = validate_stochastic_matrix(section.transition, states, states)
    with at_path(f'{prefix}.initial'):
        initial = validate_prob_vector(section.initial, states)
    return MarkovChainModel(states=states, transition=transition, initial=initial, name=section.name)


def _check_sections(document: ModelDocument) -> None:
    required = KIND_SECTIONS[document.kind]
    for key in OPTIONAL_SECTIONS:
        present = getattr(document, key) is not None
        if key in required and not present:
            raise errors.SchemaError(path=f'$.{key}', reason=f'Field required for kind {document.kind}')
        if key not in required and present:
            raise errors.SchemaError(path=f'$.{key}', reason=f'Field not allowed for kind {document.kind}')


def build_model(document: ModelDocument) -> AnyModel:
    """
    Turn a schema-valid document into a validated model

    :param document: model document
    :return:
    """
    _check_sections(document)
    if document.kind == ModelKind.markov:
        chain = _build_chain(document)
        return MarkovChainModel(
            states=chain.states,
            transition=chain.transition,
            initial=chain.initial,
            name=document.name,
            description=document.description,
        )

    with at_path('$.observations'):
        observations = LabelSpace(labels=tuple(document.observations))

    if document.kind == ModelKind.hmm:
        chain = _build_chain(document)
        with at_path('$.emission'):
            emission = validate_stochastic_matrix(document.emission, chain.states, observations)
        return HmmModel(
            chain=chain,
            observations=observations,
            emission=emission,
            name=document.name,
            description=document.description,
        )

    if not document.components:
        raise errors.SchemaError(path='$.components', reason='At least one component is required')
    components, emissions = [], []
    for i, section in enumerate(document.components):
        prefix = f'$.components[{i}]'
        component = _build_chain(section, prefix)
        with at_path(f'{prefix}.emission'):
            emissions.append(validate_stochastic_matrix(section.emission, component.states, observations))
        components.append(component)
    return FactorialHmmModel(
        components=tuple(components),
        observations=observations,
        emissions=tuple(emissions),
        name=document.name,
        description=document.description,
    )


def _chain_fields(chain: MarkovChainModel) -> dict:
    return {
        'states': list(chain.states.labels),
        'initial': chain.initial.entries.tolist(),
        'transition': chain.transition.entries.tolist(),
    }


def to_document(model: AnyModel) -> ModelDocument:
    """
    Describe a model as a document

    :param model: any model
    :return:
    """
    meta = {'name': model.name, 'description': model.description}
    if isinstance(model, MarkovChainModel):
        return ModelDocument(kind=ModelKind.markov, **meta, **_chain_fields(model))
    if isinstance(model, HmmModel):
        return ModelDocument(
            kind=ModelKind.hmm,
            **meta,
            observations=list(model.observations.labels),
            emission=model.emission.entries.tolist(),
            **_chain_fields(model.chain),
        )
    return ModelDocument(
        kind=ModelKind.fhmm,
        **meta,
        observations=list(model.observations.labels),
        components=[
            ComponentSection(name=component.name, emission=emission.entries.tolist(), **_chain_fields(component))
            for component, emission in zip(model.components, model.emissions)
        ],
    )


class DocumentService:
    """Model document parsing and canonical serialization"""

    @staticmethod
    def parse_model(*, document: str | bytes) -> AnyModel:
        """
        Parse and validate a JSON model document

        :param document: UTF-8 JSON text
        :return:
        """
        try:
            parsed = ModelDocument.model_validate_json(document)
        except ValidationError as e:
            raise _convert_validation_error(e)
        log.debug(f'Parsed {parsed.kind} model document')
        return build_model(parsed)

    @staticmethod
    def serialize_model(*, model: AnyModel) -> str:
        """
        Canonical JSON of a model, parsing it back gives an equal model

        :param model: any model
        :return:
        """
        return canonical_json(to_document(model).model_dump(mode='json', exclude_none=True))

    @staticmethod
    def read_model(*, path: str) -> AnyModel:
        """
        Read a model document, bundled documents are found by file name

        :param path: document path
        :return:
        """
        resolved = resolve_model_path(path)
        log.debug(f'Reading model document {resolved}')
        return document_service.parse_model(document=read_text(resolved))


document_service: DocumentService = DocumentService()
