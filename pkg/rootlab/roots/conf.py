from fractions import Fraction

from django.conf import settings

DEFAULTS = {
    'FULL_GROUP_MAX_RANK': 4,
    'ARRANGEMENT_MAX_RANK': 6,
    'SUBSET_SUM_MAX_GENERATORS': 20,
    'BRUTE_FORCE_SUPPORT_MAX': 12,
    'LP_MAX_GENERATORS': 64,
    'LEMMA_MAX_RANK': 4,
    'LEMMA_WORD_MAX_LENGTH': 8,
    'LEMMA_POINTS_PER_WORD': 5,
    'LEMMA_WORDS_PER_SYSTEM': 12,
    'RANDOM_SEED': 20,
    'SCALE_EPSILON': Fraction(1, 1000),
}


class RootLabSettings:
    """Настройки проекта с умолчаниями, переопределяются через ROOTLAB."""

    def __getattr__(self, attr):
        if attr not in DEFAULTS:
            raise AttributeError(f'Неизвестная настройка rootlab: {attr}')
        user_settings = getattr(settings, 'ROOTLAB', {}) or {}
        return user_settings.get(attr, DEFAULTS[attr])


rootlab_settings = RootLabSettings()
