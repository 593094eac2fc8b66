#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import itertools
import math

from typing import Iterator, Sequence

from markovkit.common.exception import errors
from markovkit.common.log import log
from markovkit.core.conf import settings


def enumeration_size(sizes: Sequence[int], length: int) -> int:
    """
    Number of sequences of the given length over a product space

    :param sizes: size of every factor space
    :param length: sequence length
    :return:
    """
    return math.prod(sizes) ** length


def ensure_enumerable(required: int, cap: int | None = None) -> None:
    """
    Refuse enumerations larger than the cap

    :param required: number of sequences the enumeration would visit
    :param cap: largest allowed count, default to settings.ENUMERATION_CAP
    :return:
    """
    cap = settings.ENUMERATION_CAP if cap is None else cap
    if required > cap:
        raise errors.EnumerationTooLargeError(required=required, cap=cap)
    log.debug(f'Enumerating {required} sequences (cap {cap})')


def index_sequences(size: int, length: int) -> Iterator[tuple[int, ...]]:
    """
    All index sequences in lexicographic order, e.g. (0, 0), (0, 1), (1, 0), (1, 1)

    :param size: number of labels
    :param length: sequence length
    :return:
    """
    return itertools.product(range(size), repeat=length)
