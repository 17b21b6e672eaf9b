from django.urls import include, path
from rest_framework import routers

from .views import (OrbitsViewSet, PolarViewSet, RootsViewSet,
                    VerifyViewSet, ZonotopeCheckViewSet)

TYPED = r'(?P<family>[A-Ga-g])/(?P<rank>\d+)'

router_v1 = routers.DefaultRouter()
router_v1.register(rf'roots/{TYPED}', RootsViewSet, basename='roots')
router_v1.register(rf'orbits/{TYPED}', OrbitsViewSet, basename='orbits')
router_v1.register(rf'polar/{TYPED}', PolarViewSet, basename='polar')
router_v1.register(rf'zonotope-check/{TYPED}', ZonotopeCheckViewSet,
                   basename='zonotope-check')
router_v1.register(r'verify', VerifyViewSet, basename='verify')

urlpatterns = [
    path('v1/', include(router_v1.urls)),
]
