from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from catalog.registry import load_catalog
from catalog.runner import KINDS, record_outcomes, run_pair
from verification.reports import render_text
from verification.serializers import VerificationReportSerializer

from ._common import add_common_arguments, add_group_argument, emit, input_errors, load_entry, prime, seed_of


class Command(BaseCommand):
    help = (
        'Проверяет делимость степеней и размерностей блоков и сопутствующие '
        'утверждения для групп каталога; код 1 при неожиданном вердикте'
    )

    def add_arguments(self, parser):
        parser.add_argument('kind', choices=KINDS + ('all',), help='Вид проверки')
        add_group_argument(parser, required=False)
        parser.add_argument(
            '-p', '--prime',
            type=prime,
            default=None,
            help='Простое число p (по умолчанию все делители порядка)',
        )
        parser.add_argument(
            '--record',
            action='store_true',
            help='Сохранить результаты в журнал прогонов',
        )
        parser.add_argument(
            '--timings',
            action='store_true',
            help='Добавить elapsed_ms в отчёты',
        )
        add_common_arguments(parser)

    def handle(self, *args, **options):
        kinds = KINDS if options['kind'] == 'all' else (options['kind'],)
        seed = seed_of(options)
        if options['group']:
            entries = [load_entry(options['group'])]
        elif options['kind'] == 'all':
            entries = load_catalog()
        else:
            raise CommandError('group is required unless the kind is "all"', returncode=2)

        reports = []
        unexpected = []
        for entry in entries:
            with input_errors():
                primes = [options['prime']] if options['prime'] else entry.prime_list()
                for p in primes:
                    report, outcomes = run_pair(entry, p, kinds, seed, options['timings'])
                    reports.append(report)
                    unexpected.extend(o for o in outcomes if not o.matched)
                    if options['record']:
                        record_outcomes(outcomes, seed)

        if options['format'] == 'json':
            data = VerificationReportSerializer(reports, many=True).data
            text = JSONRenderer().render(data, renderer_context={'indent': 2}).decode('utf-8') + '\n'
        else:
            text = '\n'.join(render_text(report) for report in reports)
        emit(self, text, options['out'])

        if unexpected:
            for o in unexpected:
                self.stderr.write(self.style.ERROR(
                    f'{o.entry.name} p={o.prime} {o.kind}: {o.verdict} (ожидалось {o.expected})'
                ))
            raise CommandError(f'{len(unexpected)} unexpected verdict(s)', returncode=1)
        self.stderr.write(self.style.SUCCESS(f'Все вердикты ожидаемые ({len(reports)} отчётов)'))
