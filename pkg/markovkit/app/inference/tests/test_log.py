#!/usr/bin/env python3
# -*- coding: utf-8 -*-
import logging

from pathlib import Path

import pytest

from markovkit.common import log as log_module
from markovkit.core.conf import settings


def test_stdlib_logging_reaches_stderr(capsys: pytest.CaptureFixture[str]) -> None:
    log_module.setup_logging()
    logging.getLogger('graphviz.backend').warning('dot not found')
    captured = capsys.readouterr()
    assert captured.out == ''
    assert 'dot not found' in captured.err


def test_debug_is_quiet_by_default(capsys: pytest.CaptureFixture[str]) -> None:
    log_module.setup_logging()
    log_module.log.debug('enumerating')
    assert capsys.readouterr().err == ''


def test_run_log_file(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setattr(log_module, 'LOG_DIR', tmp_path / 'log')
    log_module.setup_logging()
    sink_id = log_module.set_custom_logfile()
    log_module.log.debug('Enumerating 27 sequences')
    log_module.log.remove(sink_id)
    text = (tmp_path / 'log' / settings.LOG_FILENAME).read_text(encoding='utf-8')
    assert 'Enumerating 27 sequences' in text
