#!/usr/bin/env python3
# -*- coding: utf-8 -*-
from pathlib import Path

# Project root directory
BASE_PATH = Path(__file__).resolve().parent.parent

# Bundled model documents
DATA_DIR = BASE_PATH / 'data'

# Log file path
LOG_DIR = BASE_PATH / 'log'
