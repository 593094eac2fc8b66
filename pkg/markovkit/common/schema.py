#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, StringConstraints

Label = Annotated[str, StringConstraints(min_length=1)]

Probability = Annotated[float, Field(description='probability entry')]


class SchemaBase(BaseModel):
    """Basic Model Configuration"""

    model_config = ConfigDict(
        use_enum_values=True,
        extra='forbid',
        strict=True,
        frozen=True,
    )
