#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from rich import get_console
from rich.console import Console
from rich.markup import escape

console = get_console()

# Resolves sys.stderr on every write
err_console = Console(stderr=True)


def echo(text: str, end: str = '\n') -> None:
    """
    Print plain result text to stdout, without markup, highlighting or wrapping

    :param text: text to print
    :param end: line terminator
    :return:
    """
    console.print(text, markup=False, highlight=False, emoji=False, soft_wrap=True, end=end)


def echo_error(msg: str) -> None:
    """
    Print a diagnostic to stderr

    :param msg: error message
    :return:
    """
    err_console.print(f'[red]Error[/]: {escape(msg)}', highlight=False, soft_wrap=True)
