from django.contrib import admin

from .models import VerificationRun


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ('id', 'suite', 'status', 'checks', 'failures', 'created_at', 'finished_at')
    list_filter = ('status', 'suite')
    search_fields = ['suite']
    readonly_fields = ('report', 'checks', 'failures', 'created_at', 'started_at', 'finished_at')
