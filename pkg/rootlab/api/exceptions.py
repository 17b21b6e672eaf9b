import logging

from rest_framework.exceptions import ValidationError
from rest_framework.views import exception_handler

from roots.exceptions import RootLabError

logger = logging.getLogger(__name__)


def rootlab_exception_handler(exc, context):
    """Ошибки предусловий библиотеки отдаются как 400 с полем detail."""
    if isinstance(exc, RootLabError):
        logger.warning('%s: %s', type(exc).__name__, exc)
        exc = ValidationError({
            'detail': str(exc), 'error': type(exc).__name__,
        })
    return exception_handler(exc, context)
