from rest_framework import viewsets
from rest_framework.response import Response

from .serializers import CliConfigSerializer

LOCAL_ONLY = ('subcommand', 'format', 'output')


class BaseComputeViewSet(viewsets.ViewSet):
    """Только чтение: параметры из пути и строки запроса, ответ из compute()."""
    subcommand = None

    def get_config(self, request, **kwargs):
        data = {
            key: value for key, value in request.query_params.items()
            if key in CliConfigSerializer().fields and key not in LOCAL_ONLY
        }
        data.update(kwargs, subcommand=self.subcommand, format='json')
        serializer = CliConfigSerializer(data=data)
        serializer.is_valid(raise_exception=True)
        return serializer.validated_data

    def list(self, request, **kwargs):
        return Response(self.compute(self.get_config(request, **kwargs)))

    def compute(self, config):
        raise NotImplementedError
