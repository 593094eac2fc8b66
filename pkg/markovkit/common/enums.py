#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from enum import Enum
from enum import IntEnum as SourceIntEnum


class IntEnum(SourceIntEnum):
    """Integer Enumeration Base Class"""

    pass


class StrEnum(str, Enum):
    """String Enumeration Base Class"""

    pass


class ModelKind(StrEnum):
    """Model document kind"""

    markov = 'markov'
    hmm = 'hmm'
    fhmm = 'fhmm'


class ExitCode(IntEnum):
    """Process exit code"""

    success = 0
    domain = 1  # inference-time failure, e.g. zero evidence
    usage = 2  # bad flags, unreadable or invalid model documents
