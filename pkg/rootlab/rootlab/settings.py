import os
from fractions import Fraction

# Build paths inside the project like this: os.path.join(BASE_DIR, ...)
BASE_DIR = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

# SECURITY WARNING: keep the secret key used in production secret!
SECRET_KEY = os.getenv(
    'ROOTLAB_SECRET_KEY', 'rootlab-dev-3v#q8k1z!m0p^t7w2x9b@c4n6h5j')

# SECURITY WARNING: don't run with debug turned on in production!
DEBUG = os.getenv('ROOTLAB_DEBUG', 'True') == 'True'

ALLOWED_HOSTS = ['*']

# Application definition

INSTALLED_APPS = [
    'django.contrib.contenttypes',
    'django.contrib.auth',
    'rest_framework',
    'roots.apps.RootsConfig',
    'polytopes.apps.PolytopesConfig',
    'verifier.apps.VerifierConfig',
    'api.apps.ApiConfig',
]

MIDDLEWARE = [
    'django.middleware.security.SecurityMiddleware',
    'django.middleware.common.CommonMiddleware',
]

ROOT_URLCONF = 'rootlab.urls'

TEMPLATES = [
    {
        'BACKEND': 'django.template.backends.django.DjangoTemplates',
        'DIRS': [],
        'APP_DIRS': True,
        'OPTIONS': {
            'context_processors': [
                'django.template.context_processors.debug',
                'django.template.context_processors.request',
            ],
        },
    },
]

WSGI_APPLICATION = 'rootlab.wsgi.application'

# Database

DATABASES = {
    'default': {
        'ENGINE': 'django.db.backends.sqlite3',
        'NAME': os.path.join(BASE_DIR, 'db.sqlite3'),
    }
}

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Internationalization

LANGUAGE_CODE = 'ru-ru'

TIME_ZONE = 'UTC'

USE_I18N = True

USE_TZ = True

REST_FRAMEWORK = {
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
    'DEFAULT_PARSER_CLASSES': [
        'rest_framework.parsers.JSONParser',
    ],
    'DEFAULT_AUTHENTICATION_CLASSES': [],
    'DEFAULT_PERMISSION_CLASSES': [
        'rest_framework.permissions.AllowAny',
    ],
    'UNAUTHENTICATED_USER': None,
    'EXCEPTION_HANDLER': 'api.exceptions.rootlab_exception_handler',
}

# Вычислительные пределы, см. roots/conf.py

ROOTLAB = {
    'FULL_GROUP_MAX_RANK': 4,
    'ARRANGEMENT_MAX_RANK': 6,
    'SUBSET_SUM_MAX_GENERATORS': 20,
    'BRUTE_FORCE_SUPPORT_MAX': 12,
    'LP_MAX_GENERATORS': 64,
    'LEMMA_MAX_RANK': 4,
    'RANDOM_SEED': 20,
    'SCALE_EPSILON': Fraction(1, 1000),
}

LOG_LEVEL = os.getenv('ROOTLAB_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'rootlab': {
            'format': '%(levelname)s %(name)s: %(message)s',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'rootlab',
        },
    },
    'loggers': {
        name: {'handlers': ['console'], 'level': LOG_LEVEL}
        for name in ('roots', 'polytopes', 'verifier', 'api')
    },
}
