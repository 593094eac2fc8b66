#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from markovkit.common.exception import errors


def split_labels(text: str) -> list[str]:
    """
    Split a comma-separated label list, e.g. ``"dry, wet, wet"``

    :param text: comma-separated labels
    :return:
    """
    if not text or not text.strip():
        return []
    return [item.strip() for item in text.split(',')]


def split_numbers(text: str) -> list[float]:
    """
    Split a comma-separated number list, e.g. ``"1,0,0"``

    :param text: comma-separated numbers
    :return:
    """
    numbers = []
    for position, item in enumerate(split_labels(text), start=1):
        try:
            numbers.append(float(item))
        except ValueError:
            raise errors.UsageError(msg=f'Item {position} of {text!r} is not a number: {item!r}')
    return numbers
