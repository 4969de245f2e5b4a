from pathlib import Path
import os
from dotenv import load_dotenv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

load_dotenv()

# Nothing is served; the key only satisfies Django's startup checks.
SECRET_KEY = os.getenv('SUPERCONG_SECRET_KEY', 'supercong-local-only-not-secret')

DEBUG = os.getenv('SUPERCONG_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'rest_framework',

    # Engine apps
    'padic',
    'seqlib',
    'quadform',
    'sums',
    'wzcert',
    'registry',
    'cli',
]

MIDDLEWARE = []

# No persistent storage: every result is recomputed from exact arithmetic.
DATABASES = {}


def _optional_int(name):
    value = os.getenv(name)
    if value in (None, ''):
        return None
    return int(value)


# Engine configuration
SUPERCONG = {
    # None means auto: N = max(6, e + 3) for the largest exponent e checked
    'PRECISION': _optional_int('SUPERCONG_PRECISION'),
    'THREADS': _optional_int('SUPERCONG_THREADS') or os.cpu_count() or 1,
    'SEED': int(os.getenv('SUPERCONG_SEED', '20240601')),
    'SAMPLES_PER_PARITY': int(os.getenv('SUPERCONG_SAMPLES', '20')),
    'INVERSE_TABLE_CAP': int(os.getenv('SUPERCONG_INVERSE_TABLE_CAP', '4096')),
    # primes whose sequence tables stay cached at once
    'SEQ_CACHE_PRIMES': int(os.getenv('SUPERCONG_SEQ_CACHE_PRIMES', '8')),
    'ORACLE_PRIME_LIMIT': 50,
}

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': ['rest_framework.renderers.JSONRenderer'],
    'UNAUTHENTICATED_USER': None,
}

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {name} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'root': {
        'handlers': ['console'],
        'level': os.getenv('SUPERCONG_LOG_LEVEL', 'WARNING'),
    },
    'loggers': {
        'registry': {
            'handlers': ['console'],
            'level': os.getenv('SUPERCONG_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
        'wzcert': {
            'handlers': ['console'],
            'level': os.getenv('SUPERCONG_LOG_LEVEL', 'WARNING'),
            'propagate': False,
        },
    },
}


# Internationalization

LANGUAGE_CODE = 'en-us'

TIME_ZONE = 'UTC'

USE_I18N = False

USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
