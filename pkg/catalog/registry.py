"""
Каталог групп: записи catalog.json, чтение файлов образующих, ожидаемые
вердикты и вспомогательные подгруппы для утверждений.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path

from django.conf import settings
from sympy import primefactors

from algebra.exceptions import InputError
from algebra.permgroup import is_p_solvable, parse_cycles, parse_group, subgroup
from verification.reports import HYPOTHESIS_NOT_MET

logger = logging.getLogger(__name__)

CATALOG_PREFIX = 'catalog:'

# Проверки, гипотеза которых: p-разрешимость G
P_SOLVABLE_KINDS = ('glauberman', 'navarro', 'fong', 'q35', 'extension')


def catalog_dir():
    return Path(settings.BLOCKFORGE_CATALOG_DIR)


@dataclass
class CatalogEntry:
    """Группа каталога с простыми числами, ожиданиями и данными для утверждений"""
    name: str
    file: str
    description: str = ''
    primes: list = None
    expected: dict = field(default_factory=dict)
    normal_subgroups: list = field(default_factory=list)
    navarro_cases: list = field(default_factory=list)
    ibr_fixture: str = None

    @property
    def path(self):
        return catalog_dir() / self.file

    @cached_property
    def group(self):
        return load_group_file(self.path)

    def prime_list(self):
        if self.primes:
            return list(self.primes)
        return primefactors(self.group.order)

    def expected_tag(self, kind, prime):
        tag = self.expected.get(kind, {}).get(str(prime))
        if tag is not None:
            return tag
        if kind in P_SOLVABLE_KINDS and not is_p_solvable(self.group, prime):
            return HYPOTHESIS_NOT_MET
        return 'pass'

    def normal_subgroup_groups(self):
        return [
            subgroup(self.group, [parse_cycles(text, self.group.degree) for text in spec['generators']])
            for spec in self.normal_subgroups
        ]

    def documented_cases(self, prime):
        """Задокументированные случаи (U, P, ожидаемые поля записи) для данного p."""
        G = self.group
        cases = []
        for case in self.navarro_cases:
            if case['prime'] != prime:
                continue
            U = subgroup(G, [parse_cycles(text, G.degree) for text in case['U']])
            P = subgroup(G, [parse_cycles(text, G.degree) for text in case['P']])
            cases.append((U, P, case['expected']))
        return cases

    def ibr_rows(self, prime):
        if not self.ibr_fixture:
            return None
        data = json.loads((catalog_dir() / self.ibr_fixture).read_text(encoding='utf-8'))
        entry = data['primes'].get(str(prime))
        return entry['rows'] if entry else None


def load_catalog():
    """Записи каталога в порядке catalog.json."""
    path = catalog_dir() / 'catalog.json'
    data = json.loads(path.read_text(encoding='utf-8'))
    return [CatalogEntry(**entry) for entry in data['entries']]


def get_entry(name):
    for entry in load_catalog():
        if entry.name == name:
            return entry
    raise InputError(f'unknown catalog entry {name!r}')


def load_group_file(path):
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as exc:
        raise InputError(f'cannot read group file {path}: {exc.strerror}') from exc
    try:
        return parse_group(text)
    except InputError as exc:
        raise InputError(f'{path}: {exc.message}', exc.line, exc.column) from exc


def resolve_group(reference):
    """
    `catalog:NAME` -> запись каталога; путь к файлу -> временная запись без
    ожиданий (все теги по умолчанию).
    """
    if reference.startswith(CATALOG_PREFIX):
        return get_entry(reference[len(CATALOG_PREFIX):])
    path = Path(reference)
    group = load_group_file(path)
    entry = CatalogEntry(name=path.stem, file=str(path.resolve()))
    entry.group = group
    logger.debug('Группа %s порядка %s из файла %s', entry.name, group.order, path)
    return entry
