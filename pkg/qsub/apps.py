from django.apps import AppConfig


class QsubConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'qsub'
    verbose_name = 'Quantum Subgroup Workbench'
