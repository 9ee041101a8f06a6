"""
Django settings for the qsub workbench.

Only the pieces a command-line verification tool needs are kept: the ORM for
run records, management commands, logging and the workbench knobs.
"""

from pathlib import Path

import dj_database_url
from decouple import config

BASE_DIR = Path(__file__).resolve().parent.parent

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = config('SECRET_KEY', default='django-insecure-qsub-workbench-development-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = config('ALLOWED_HOSTS', default='localhost,127.0.0.1', cast=lambda v: [s.strip() for s in v.split(',')])


# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'qsub',
]

MIDDLEWARE = []


# Database
# SQLite by default; set DATABASE_URL for PostgreSQL

DATABASES = {
    'default': dj_database_url.config(
        default=f"sqlite:///{BASE_DIR / 'db.sqlite3'}",
        conn_max_age=config('DATABASE_CONN_MAX_AGE', default=0, cast=int),
    )
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True


# Workbench settings

# Ambient dimension cap for H; tensor intermediates may reach cap**3 entries
QSUB_DIMENSION_CAP = config('QSUB_DIMENSION_CAP', default=64, cast=int)

QSUB_DEFAULT_SEED = config('QSUB_DEFAULT_SEED', default=20240611, cast=int)

QSUB_SUITE_WORKERS = config('QSUB_SUITE_WORKERS', default=4, cast=int)

QSUB_SPEC_DIR = Path(config('QSUB_SPEC_DIR', default=str(BASE_DIR / 'specs')))

QSUB_LOG_FILE = config('QSUB_LOG_FILE', default=str(BASE_DIR / 'qsub.log'))


# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {process:d} {thread:d} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'simple',
        },
        'file': {
            'class': 'logging.FileHandler',
            'filename': QSUB_LOG_FILE,
            'formatter': 'verbose',
            'delay': True,
        },
    },
    'loggers': {
        'django': {
            'handlers': ['console'] if DEBUG else ['file'],
            'level': 'INFO' if DEBUG else 'WARNING',
            'propagate': True,
        },
        'qsub': {
            'handlers': ['console', 'file'] if DEBUG else ['file'],
            'level': 'DEBUG' if DEBUG else 'INFO',
            'propagate': False,
        },
    },
}
