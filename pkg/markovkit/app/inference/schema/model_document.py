#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pydantic import Field

from markovkit.common.enums import ModelKind
from markovkit.common.schema import Label, Probability, SchemaBase

Vector = list[Probability]
Matrix = list[list[Probability]]


class ComponentSection(SchemaBase):
    """One chain of a factorial model, with its own emission matrix"""

    name: str | None = None
    states: list[Label]
    initial: Vector
    transition: Matrix
    emission: Matrix


class ModelDocument(SchemaBase):
    """
    JSON model document

    Which optional sections are required depends on ``kind``; the builder checks that.
    """

    kind: ModelKind
    name: str | None = None
    description: str | None = None
    states: list[Label] | None = None
    observations: list[Label] | None = None
    initial: Vector | None = None
    transition: Matrix | None = None
    emission: Matrix | None = None
    components: list[ComponentSection] | None = Field(default=None, description='factorial components')


# Sections each kind needs; every other optional section must be absent
KIND_SECTIONS: dict[str, tuple[str, ...]] = {
    ModelKind.markov.value: ('states', 'initial', 'transition'),
    ModelKind.hmm.value: ('states', 'observations', 'initial', 'transition', 'emission'),
    ModelKind.fhmm.value: ('observations', 'components'),
}

OPTIONAL_SECTIONS: tuple[str, ...] = ('states', 'observations', 'initial', 'transition', 'emission', 'components')
