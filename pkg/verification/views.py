from django.db import transaction
from rest_framework import generics
from rest_framework.permissions import AllowAny

from .models import VerificationRun
from .serializers import VerificationRunListSerializer, VerificationRunSerializer
from .tasks import run_suite_task


class VerificationRunListCreateView(generics.ListCreateAPIView):
    """
    GET lists the recorded runs; POST queues a suite on the Celery worker.
    """
    queryset = VerificationRun.objects.all()
    permission_classes = [AllowAny]

    def get_serializer_class(self):
        if self.request.method == 'GET':
            return VerificationRunListSerializer
        return VerificationRunSerializer

    def perform_create(self, serializer):
        instance = serializer.save()
        # queue only once the run row is visible to the worker
        transaction.on_commit(lambda: run_suite_task.delay(instance.id))


class VerificationRunDetailView(generics.RetrieveAPIView):
    queryset = VerificationRun.objects.all()
    serializer_class = VerificationRunSerializer
    permission_classes = [AllowAny]
