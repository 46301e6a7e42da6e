"""Configuration readers.

Defaults live on the SENTRANK settings dict, which already merges the
OS environment and the SENTRANK_CONFIG file. A command's --config file
is layered on top of them with the same precedence: OS environment over
file, file over defaults.
"""

# Django
from django.conf import settings

# Utilities
import os
from typing import Dict, Optional

import environ

# Exceptions
from sentrank.utils.exceptions import ConfigurationError

PREFIX = 'SENTRANK_'

# SENTRANK settings key -> django-environ cast.
SCHEMA = {
    'METHOD': 'str',
    'STRUCTURE': 'str',
    'WINDOW_SWG': 'int',
    'WINDOW_SPG': 'int',
    'DELTA_SWG': 'float',
    'DELTA_SPG': 'float',
    'GAMMA_PCT': 'float',
    'DAMPING_FACTOR': 'float',
    'TOL': 'float',
    'MAX_ITER': 'int',
    'RBF_GAMMA': 'float',
    'CLUSTER_CAP': 'int',
    'CLUSTERER': 'str',
    'AP_DAMPING': 'float',
    'AP_MAX_ITER': 'int',
    'AP_STABLE_ITERS': 'int',
    'WMD_CAP': 'int',
    'ABLATE': 'list',
    'LANGUAGE': 'str',
    'STOP_WORDS_PATH': 'str',
    'POS_LEXICON_PATH': 'str',
    'ABBREVIATIONS_PATH': 'str',
    'EMBEDDINGS': 'str',
    'PHRASES': 'str',
    'DUMP_DIR': 'str',
    'BUDGET_WORDS': 'int',
    'BUDGET_CHARS': 'int',
    'BUDGET_SENTENCES': 'int',
    'LAYERS': 'int',
    'SELECT_PCT': 'float',
    'REFERENCES': 'str',
    'WORKERS': 'int',
    'BASELINES': 'bool',
    'VERBOSE': 'bool',
}


def read_config_file(path: str) -> Dict[str, str]:
    """Returns the raw KEY=value pairs of a config file, leaving os.environ untouched."""

    if not os.path.isfile(path):
        raise ConfigurationError(f'Config file {path!r} does not exist.')

    reader = type('ConfigFileEnv', (environ.Env,), {'ENVIRON': {}})
    reader.read_env(path)
    return dict(reader.ENVIRON)


def load_options(config_path: Optional[str] = None) -> dict:
    """Returns the SENTRANK options, with a config file layered over the settings."""

    options = dict(settings.SENTRANK)
    if not config_path:
        return options

    values = read_config_file(config_path)
    unknown = sorted(key for key in values if key.startswith(PREFIX) and key[len(PREFIX):] not in SCHEMA)
    if unknown:
        raise ConfigurationError(f'Unknown configuration keys: {", ".join(unknown)}.')

    reader = environ.Env()
    reader.ENVIRON = {**values, **os.environ}

    for key, cast in SCHEMA.items():
        name = PREFIX + key
        if name not in values or name in os.environ:
            continue
        try:
            options[key] = getattr(reader, cast)(name)
        except ValueError as error:
            raise ConfigurationError(f'{name}: {error}')

    return options
