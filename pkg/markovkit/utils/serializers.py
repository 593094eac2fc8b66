#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import math

from typing import Any

from msgspec import json

from markovkit.core.conf import settings


def canonical_json(content: Any) -> str:
    """
    Serialize data into canonical JSON text using the high-performance msgspec library

    Dict insertion order is kept and floats use the shortest representation that round-trips.

    :param content: JSON-compatible data
    :return:
    """
    return json.format(json.encode(content), indent=2).decode('utf-8') + '\n'


def format_fixed(value: float, decimals: int | None = None) -> str:
    """
    Fixed notation, e.g. ``0.115000000``

    :param value: number to format
    :param decimals: digits after the point, default to settings.OUTPUT_DECIMALS
    :return:
    """
    if math.isinf(value):
        return '-inf' if value < 0 else 'inf'
    return f'{value:.{settings.OUTPUT_DECIMALS if decimals is None else decimals}f}'


def format_scientific(value: float, decimals: int | None = None) -> str:
    """
    Scientific notation with an unpadded exponent, e.g. ``2.688000000e-2``

    :param value: number to format
    :param decimals: digits after the point, default to settings.OUTPUT_DECIMALS
    :return:
    """
    if math.isinf(value):
        return '-inf' if value < 0 else 'inf'
    mantissa, exponent = f'{value:.{settings.OUTPUT_DECIMALS if decimals is None else decimals}e}'.split('e')
    return f'{mantissa}e{int(exponent)}'


def format_significant(value: float, digits: int | None = None) -> str:
    """
    Fixed notation down to 1e-3, scientific with ``digits`` significant digits below

    ``0.3`` stays ``0.300000000`` while ``3.0433622863e-08`` becomes ``3.04336229e-8``.

    :param value: number to format
    :param digits: significant digits below 1e-3, default to settings.OUTPUT_DECIMALS
    :return:
    """
    digits = settings.OUTPUT_DECIMALS if digits is None else digits
    if value == 0.0 or math.isinf(value) or abs(value) >= 1e-3:
        return format_fixed(value, digits)
    return format_scientific(value, digits - 1)
