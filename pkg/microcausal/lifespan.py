"""
Microcausal Run Lifespan

Entry and exit of one CLI run: settings are installed, logging goes to
stderr so stdout carries only reports.
"""

import logging
import sys
from contextlib import contextmanager
from typing import Iterator

import microcausal.globals as g
from microcausal.settings import Settings

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


@contextmanager
def run_context(settings: Settings) -> Iterator[Settings]:
    """
    Manage one run.

    Startup:
        - Configure logging on stderr at settings.log_level
        - Install the settings for get_settings()

    Shutdown:
        - Clear the settings
    """
    logging.basicConfig(stream=sys.stderr, level=settings.log_level, format=LOG_FORMAT, force=True)
    g.settings = settings
    try:
        yield settings
    finally:
        g.settings = None
