import json

from django.core.management.base import BaseCommand

from algebra.chartab import character_table
from modular.brauer import brauer_data_from_fixture, derive_ibr_rows

from ._common import add_group_argument, emit, input_errors, load_entry, prime, seed_of


class Command(BaseCommand):
    help = (
        'Ищет таблицу IBr группы, не являющейся p-разрешимой, перебором '
        '{-1,0,1}-комбинаций ограничений χ⁰ и печатает её в формате каталога'
    )

    def add_arguments(self, parser):
        add_group_argument(parser)
        parser.add_argument('-p', '--prime', type=prime, required=True, help='Простое число p')
        parser.add_argument('--seed', type=int, default=None, help='Сид (по умолчанию BLOCKFORGE_SEED)')
        parser.add_argument('--out', type=str, default=None, help='Записать результат в файл')

    def handle(self, *args, **options):
        entry = load_entry(options['group'])
        p = options['prime']
        seed = seed_of(options)
        self.stderr.write(f'Поиск IBr для {entry.name} (|G|={entry.group.order}), p={p}...')
        with input_errors():
            rows = derive_ibr_rows(entry.group, p, seed)
            data = brauer_data_from_fixture(entry.group, p, rows, seed)
        payload = {
            'group': entry.name,
            'irr_order': list(character_table(entry.group, seed).degrees),
            'prime': p,
            'degrees': [int(d) for d in data.degrees],
            'rows': rows,
        }
        emit(self, json.dumps(payload, indent=2) + '\n', options['out'])
        self.stderr.write(self.style.SUCCESS(f'Степени IBr: {payload["degrees"]}'))
