from django.core.management.base import BaseCommand

from algebra.chartab import character_table

from ._common import add_common_arguments, add_group_argument, emit, input_errors, load_entry, seed_of


class Command(BaseCommand):
    help = 'Выводит таблицу обыкновенных характеров группы (метод Диксона–Шнайдера)'

    def add_arguments(self, parser):
        add_group_argument(parser)
        add_common_arguments(parser, formats=('text',))

    def handle(self, *args, **options):
        entry = load_entry(options['group'])
        with input_errors():
            table = character_table(entry.group, seed_of(options))
        emit(self, f'group: {entry.name}\n' + table.export(), options['out'])
