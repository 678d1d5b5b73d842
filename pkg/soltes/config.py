import logging
import os


log = logging.getLogger(__name__)

WORKERS_VARIABLE = 'SOLTES_WORKERS'


def default_workers():
    """The number of search processes to use when the caller does not say."""
    value = os.environ.get(WORKERS_VARIABLE)
    if not value:
        return 1
    try:
        workers = int(value)
    except ValueError:
        log.warning('Ignoring %s=%r: expected a positive integer', WORKERS_VARIABLE, value)
        return 1
    if workers < 1:
        log.warning('Ignoring %s=%r: expected a positive integer', WORKERS_VARIABLE, value)
        return 1
    return workers
