#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pathlib import Path

from markovkit.common.exception import errors
from markovkit.core.path_conf import DATA_DIR


def resolve_model_path(path: str) -> Path:
    """
    Resolve a model document path, falling back to the bundled data directory

    :param path: path given on the command line, e.g. ``weather.json``
    :return:
    """
    candidate = Path(path)
    if candidate.is_file():
        return candidate
    bundled = DATA_DIR / candidate.name
    if bundled.is_file():
        return bundled
    raise errors.UsageError(msg=f'Model file not found: {path}')


def read_text(path: Path) -> str:
    """
    Read a UTF-8 document

    :param path: file path
    :return:
    """
    try:
        return path.read_text(encoding='utf-8')
    except (OSError, UnicodeDecodeError) as e:
        raise errors.UsageError(msg=f'Cannot read {path}: {e}')
