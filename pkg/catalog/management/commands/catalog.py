from django.core.management.base import BaseCommand
from rest_framework.renderers import JSONRenderer

from catalog.filters import VerificationRunFilter
from catalog.models import VerificationRun
from catalog.registry import load_catalog
from catalog.serializers import VerificationRunSerializer

from ._common import emit, input_errors


class Command(BaseCommand):
    help = 'Каталог групп (list) и журнал прогонов проверок (history)'

    def add_arguments(self, parser):
        parser.add_argument('action', choices=['list', 'history'], help='Действие')
        parser.add_argument('--group', type=str, help='Фильтр журнала: группа')
        parser.add_argument('--prime', type=int, help='Фильтр журнала: простое p')
        parser.add_argument('--kind', type=str, help='Фильтр журнала: вид проверки')
        parser.add_argument('--verdict', type=str, help='Фильтр журнала: вердикт')
        parser.add_argument('--limit', type=int, default=50, help='Максимум записей журнала')
        parser.add_argument('--format', choices=['text', 'json'], default='text', help='Формат вывода')
        parser.add_argument('--out', type=str, default=None, help='Записать результат в файл')

    def handle(self, *args, **options):
        if options['action'] == 'list':
            with input_errors():
                text = self.list_catalog()
        else:
            text = self.history(options)
        emit(self, text, options['out'])

    def list_catalog(self):
        lines = []
        for entry in load_catalog():
            G = entry.group
            primes = ','.join(str(p) for p in entry.prime_list())
            line = f'{entry.name:<8} order {G.order:<4} degree {G.degree:<2} primes {primes:<6} {entry.description}'
            tags = [
                f'{kind}@{p}={tag}'
                for kind, by_prime in sorted(entry.expected.items())
                for p, tag in sorted(by_prime.items())
                if tag != 'pass'
            ]
            if tags:
                line += ' [' + ' '.join(tags) + ']'
            lines.append(line.rstrip())
        return '\n'.join(lines) + '\n'

    def history(self, options):
        data = {
            key: options[key]
            for key in ('group', 'prime', 'kind', 'verdict')
            if options.get(key) is not None
        }
        runs = VerificationRunFilter(data, queryset=VerificationRun.objects.all()).qs[:options['limit']]
        if options['format'] == 'json':
            payload = VerificationRunSerializer(runs, many=True).data
            return JSONRenderer().render(payload, renderer_context={'indent': 2}).decode('utf-8') + '\n'
        lines = [
            f'{run.created_at:%Y-%m-%d %H:%M:%S} {run.group} p={run.prime} {run.kind}: {run.verdict}'
            + ('' if run.matched else f' (ожидалось {run.expected})')
            for run in runs
        ]
        if not lines:
            return 'Журнал пуст\n'
        return '\n'.join(lines) + '\n'
