#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import re

JSON_POSITION = re.compile(r'line (?P<line>\d+) column (?P<column>\d+)')


def json_error_position(text: str) -> tuple[int, int] | None:
    """
    Extract the line and column of a JSON decoder message

    :param text: decoder message, e.g. ``expected value at line 3 column 5``
    :return:
    """
    match = JSON_POSITION.search(text)
    if not match:
        return None
    return int(match.group('line')), int(match.group('column'))
