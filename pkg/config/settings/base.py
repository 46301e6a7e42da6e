"""
Base settings to build other settings files upon.
"""

import environ

ROOT_DIR = (
    environ.Path(__file__) - 3
)  # (sentrank/config/settings/base.py - 3 = sentrank/)
APPS_DIR = ROOT_DIR.path("sentrank")

env = environ.Env()

READ_DOT_ENV_FILE = env.bool("DJANGO_READ_DOT_ENV_FILE", default=False)
if READ_DOT_ENV_FILE:
    # OS environment variables take precedence over variables from .env
    env.read_env(str(ROOT_DIR.path(".env")))

# A flat KEY=value file with the SENTRANK_* keys below.
SENTRANK_CONFIG = env("SENTRANK_CONFIG", default=None)
if SENTRANK_CONFIG:
    # OS environment variables take precedence over the config file
    env.read_env(SENTRANK_CONFIG)

# GENERAL
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#debug
DEBUG = env.bool("DJANGO_DEBUG", False)
TIME_ZONE = "GMT"
# https://docs.djangoproject.com/en/dev/ref/settings/#language-code
LANGUAGE_CODE = "en-us"
# https://docs.djangoproject.com/en/dev/ref/settings/#use-i18n
USE_I18N = False
# https://docs.djangoproject.com/en/dev/ref/settings/#use-tz
USE_TZ = True

# APPS
# ------------------------------------------------------------------------------
THIRD_PARTY_APPS = [
    "rest_framework",
]
LOCAL_APPS = [
    "sentrank.documents.apps.DocumentsAppConfig",
    "sentrank.ranking.apps.RankingAppConfig",
    "sentrank.evaluation.apps.EvaluationAppConfig",
]
# https://docs.djangoproject.com/en/dev/ref/settings/#installed-apps
INSTALLED_APPS = LOCAL_APPS + THIRD_PARTY_APPS

# FIXTURES
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#fixture-dirs
FIXTURE_DIRS = (str(APPS_DIR.path("fixtures")),)

# LOGGING
# ------------------------------------------------------------------------------
# https://docs.djangoproject.com/en/dev/ref/settings/#logging
# Everything goes to stderr; stdout is reserved for command output.
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "%(levelname)s %(asctime)s %(module)s "
            "%(process)d %(thread)d %(message)s"
        }
    },
    "handlers": {
        "console": {
            "level": "DEBUG",
            "class": "logging.StreamHandler",
            "formatter": "verbose",
        },
    },
    "loggers": {
        "sentrank": {
            "handlers": ["console"],
            "level": env("SENTRANK_LOG_LEVEL", default="WARNING"),
            "propagate": False,
        },
    },
}

# SENTRANK
# ------------------------------------------------------------------------------
# Pipeline defaults. Command flags override these values.
DATA_DIR = APPS_DIR.path("data")

SENTRANK = {
    "METHOD": env("SENTRANK_METHOD", default="ssr"),
    "STRUCTURE": env("SENTRANK_STRUCTURE", default="inverted_pyramid"),
    # Sliding windows for co-occurrence
    "WINDOW_SWG": env.int("SENTRANK_WINDOW_SWG", default=2),
    "WINDOW_SPG": env.int("SENTRANK_WINDOW_SPG", default=3),
    # Cosine thresholds for semantic edges
    "DELTA_SWG": env.float("SENTRANK_DELTA_SWG", default=0.65),
    "DELTA_SPG": env.float("SENTRANK_DELTA_SPG", default=0.6),
    # Percentage of sentence pairs kept as semantic SSG edges
    "GAMMA_PCT": env.float("SENTRANK_GAMMA_PCT", default=30.0),
    # PageRank
    "DAMPING_FACTOR": env.float("SENTRANK_DAMPING_FACTOR", default=0.85),
    "TOL": env.float("SENTRANK_TOL", default=1e-8),
    "MAX_ITER": env.int("SENTRANK_MAX_ITER", default=100),
    # Clustering
    "RBF_GAMMA": env.float("SENTRANK_RBF_GAMMA", default=1.0),
    "CLUSTER_CAP": env.int("SENTRANK_CLUSTER_CAP", default=8),
    "CLUSTERER": env("SENTRANK_CLUSTERER", default=""),
    "AP_DAMPING": env.float("SENTRANK_AP_DAMPING", default=0.5),
    "AP_MAX_ITER": env.int("SENTRANK_AP_MAX_ITER", default=200),
    "AP_STABLE_ITERS": env.int("SENTRANK_AP_STABLE_ITERS", default=15),
    # Sentence bags
    "WMD_CAP": env.int("SENTRANK_WMD_CAP", default=30),
    "ABLATE": env.list("SENTRANK_ABLATE", default=[]),
    # Text analysis
    "LANGUAGE": env("SENTRANK_LANGUAGE", default="english"),
    "STOP_WORDS_PATH": env(
        "SENTRANK_STOP_WORDS_PATH", default=str(DATA_DIR.path("stopwords_en.txt"))
    ),
    "POS_LEXICON_PATH": env(
        "SENTRANK_POS_LEXICON_PATH", default=str(DATA_DIR.path("pos_lexicon_en.tsv"))
    ),
    "ABBREVIATIONS_PATH": env(
        "SENTRANK_ABBREVIATIONS_PATH",
        default=str(DATA_DIR.path("abbreviations_en.txt")),
    ),
    # Command inputs
    "EMBEDDINGS": env("SENTRANK_EMBEDDINGS", default=None),
    "PHRASES": env("SENTRANK_PHRASES", default=None),
    "DUMP_DIR": env("SENTRANK_DUMP_DIR", default=None),
    # Summary budgets, one of them at most
    "BUDGET_WORDS": env.int("SENTRANK_BUDGET_WORDS", default=None),
    "BUDGET_CHARS": env.int("SENTRANK_BUDGET_CHARS", default=None),
    "BUDGET_SENTENCES": env.int("SENTRANK_BUDGET_SENTENCES", default=None),
    "LAYERS": env.int("SENTRANK_LAYERS", default=None),
    # Evaluation
    "SELECT_PCT": env.float("SENTRANK_SELECT_PCT", default=10.0),
    "REFERENCES": env("SENTRANK_REFERENCES", default="combined"),
    "WORKERS": env.int("SENTRANK_WORKERS", default=None),
    "BASELINES": env.bool("SENTRANK_BASELINES", default=False),
    "VERBOSE": env.bool("SENTRANK_VERBOSE", default=False),
}
