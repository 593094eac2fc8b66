#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import inspect
import logging
import sys

from loguru import logger

from markovkit.core.conf import settings
from markovkit.core.path_conf import LOG_DIR


class InterceptHandler(logging.Handler):
    """
    Forward stdlib logging records (graphviz, hypothesis) to loguru

    Reference: https://loguru.readthedocs.io/en/stable/overview.html#entirely-compatible-with-standard-logging
    """

    def emit(self, record: logging.LogRecord) -> None:
        try:
            level: str | int = logger.level(record.levelname).name
        except ValueError:
            level = record.levelno

        # Skip the frames of the logging module itself
        frame, depth = inspect.currentframe(), 0
        while frame and (depth == 0 or frame.f_code.co_filename == logging.__file__):
            frame = frame.f_back
            depth += 1

        logger.opt(depth=depth, exception=record.exc_info).log(level, record.getMessage())


def default_formatter(record) -> str:
    """Log line format, newline terminated"""
    return settings.LOG_FORMAT if settings.LOG_FORMAT.endswith('\n') else f'{settings.LOG_FORMAT}\n'


def setup_logging() -> None:
    """
    Route all logging to a single stderr sink

    stdout carries command results only.
    """
    logging.root.handlers = [InterceptHandler()]
    logging.root.setLevel(settings.LOG_STD_LEVEL)
    for name in list(logging.root.manager.loggerDict):
        logging.getLogger(name).handlers = []
        logging.getLogger(name).propagate = True

    logger.remove()
    logger.configure(
        handlers=[
            {
                'sink': sys.stderr,
                'level': settings.LOG_STD_LEVEL,
                'format': default_formatter,
            }
        ]
    )


def set_custom_logfile() -> int:
    """
    Add the rotating run log under LOG_DIR

    :return: loguru sink id
    """
    LOG_DIR.mkdir(parents=True, exist_ok=True)

    # https://loguru.readthedocs.io/en/stable/api/logger.html#loguru._logger.Logger.add
    return logger.add(
        str(LOG_DIR / settings.LOG_FILENAME),
        level=settings.LOG_FILE_LEVEL,
        format=default_formatter,
        rotation=settings.LOG_FILE_ROTATION,
        retention=settings.LOG_FILE_RETENTION,
        enqueue=True,
        backtrace=True,
        diagnose=False,
    )


log = logger
