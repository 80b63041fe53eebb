"""Общие аргументы и обработка ошибок команд."""

import argparse
from contextlib import contextmanager
from pathlib import Path

from django.conf import settings
from django.core.management.base import CommandError
from sympy import isprime

from algebra.exceptions import DomainError, InputError, PreconditionError
from catalog.registry import resolve_group


def add_group_argument(parser, required=True):
    parser.add_argument(
        'group',
        nargs=None if required else '?',
        help='Группа: catalog:ИМЯ или путь к файлу образующих',
    )


def add_common_arguments(parser, formats=('text', 'json')):
    parser.add_argument(
        '--format',
        choices=formats,
        default=formats[0],
        help='Формат вывода',
    )
    parser.add_argument(
        '--seed',
        type=int,
        default=None,
        help='Сид (по умолчанию BLOCKFORGE_SEED)',
    )
    parser.add_argument(
        '--out',
        type=str,
        default=None,
        help='Записать результат в файл вместо stdout',
    )


def seed_of(options):
    return settings.BLOCKFORGE_SEED if options['seed'] is None else options['seed']


@contextmanager
def input_errors():
    """Ошибки ввода и предусловий -> CommandError с кодом 2."""
    try:
        yield
    except (InputError, DomainError, PreconditionError) as exc:
        raise CommandError(str(exc), returncode=2) from exc


def load_entry(reference):
    with input_errors():
        return resolve_group(reference)


def emit(command, text, out=None):
    if out:
        Path(out).write_text(text, encoding='utf-8')
        command.stderr.write(f'Записано: {out}')
    else:
        command.stdout.write(text, ending='')


def prime(text):
    """Тип аргумента -p: простое число."""
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f'{text!r} is not an integer')
    if not isprime(value):
        raise argparse.ArgumentTypeError(f'{value} is not a prime')
    return value
