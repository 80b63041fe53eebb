from django.core.management.base import BaseCommand

from algebra.permgroup import p_part
from modular.blocks import brauer_correspondent
from verification.reports import BlockRecord, VerificationReport, render_text
from verification.serializers import render_json
from verification.verifiers import GroupContext

from ._common import add_common_arguments, add_group_argument, emit, input_errors, load_entry, prime, seed_of


class Command(BaseCommand):
    help = 'Выводит p-блоки группы: степени, дефекты, соответствие Брауэра, размерности'

    def add_arguments(self, parser):
        add_group_argument(parser)
        parser.add_argument('-p', '--prime', type=prime, required=True, help='Простое число p')
        parser.add_argument(
            '--decomposition',
            action='store_true',
            help='Добавить матрицу разложения (p-разрешимая группа или таблица IBr каталога)',
        )
        add_common_arguments(parser)

    def handle(self, *args, **options):
        entry = load_entry(options['group'])
        p = options['prime']
        seed = seed_of(options)
        with input_errors():
            ctx = GroupContext(entry.group, p, entry.name, seed, entry.ibr_rows(p))
            records = []
            for B in ctx.blocks:
                b = brauer_correspondent(B)
                records.append(BlockRecord(
                    id=B.label,
                    degrees=list(B.degrees),
                    defect=B.defect,
                    defect_group_order=p ** B.defect,
                    correspondent=b.label,
                    dim_B=B.dim,
                    dim_b=b.dim,
                    dim_divides=B.dim % b.dim == 0,
                    dim_p_part_divides=p_part(B.dim, p) % p_part(b.dim, p) == 0,
                ))
            report = VerificationReport(
                group=entry.name,
                order=entry.group.order,
                prime=p,
                p_solvable=ctx.p_solvable,
                blocks=records,
                seed=seed,
            )
            brauer = ctx.brauer if options['decomposition'] else None

        if options['format'] == 'json':
            text = render_json(report)
        else:
            text = render_text(report)
            if brauer is not None:
                text += f'decomposition ({brauer.source}):\n' + brauer.export()
        emit(self, text, options['out'])
