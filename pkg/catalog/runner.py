"""Запуск проверок для записей каталога и сверка вердиктов с ожидаемыми тегами."""

import json
import logging
import time
from dataclasses import dataclass

from verification import verifiers
from verification.reports import matches_tag, merge_reports
from verification.serializers import render_json

from .models import VerificationRun

logger = logging.getLogger(__name__)

KINDS = ('am', 'dim', 'glauberman', 'navarro', 'regular', 'fong', 'q35', 'extension')


def run_kind(entry, kind, prime, seed=0):
    G = entry.group
    name = entry.name
    if kind == 'am':
        return verifiers.verify_theorem_A(G, prime, name, seed, ibr_fixture=entry.ibr_rows(prime))
    if kind == 'dim':
        return verifiers.verify_theorem_B(G, prime, name, seed)
    if kind == 'glauberman':
        return verifiers.verify_glauberman(G, prime, name, seed)
    if kind == 'navarro':
        return verifiers.verify_navarro(G, prime, name, seed, documented=entry.documented_cases(prime))
    if kind == 'regular':
        return verifiers.verify_regular(G, prime, entry.normal_subgroup_groups(), name, seed)
    if kind == 'fong':
        return verifiers.verify_fong(G, prime, name, seed)
    if kind == 'q35':
        return verifiers.explore_decomposition_compatibility(G, prime, name, seed)
    if kind == 'extension':
        return verifiers.verify_extension(G, prime, name, seed)
    raise ValueError(f'unknown verification kind {kind!r}')


@dataclass
class Outcome:
    """Итог одного вида проверки: отчёт, ожидаемый тег и совпадение."""
    entry: object
    kind: str
    prime: int
    report: object
    expected: str
    matched: bool

    @property
    def verdict(self):
        return self.report.verdicts[self.kind]


def run_pair(entry, prime, kinds, seed=0, timings=False):
    """Выполняет виды проверок по очереди; возвращает объединённый отчёт и итоги."""
    outcomes = []
    for kind in kinds:
        started = time.perf_counter()
        report = run_kind(entry, kind, prime, seed)
        if timings:
            report.elapsed_ms = round((time.perf_counter() - started) * 1000)
        expected = entry.expected_tag(kind, prime)
        matched = matches_tag(report.verdicts[kind], expected)
        if not matched:
            logger.warning(
                '%s p=%s %s: вердикт %s, ожидался %s',
                entry.name, prime, kind, report.verdicts[kind], expected,
            )
        outcomes.append(Outcome(entry, kind, prime, report, expected, matched))
    merged = merge_reports(o.report for o in outcomes)
    return merged, outcomes


def record_outcomes(outcomes, seed=0):
    runs = []
    for outcome in outcomes:
        report = outcome.report
        runs.append(VerificationRun.objects.create(
            group=outcome.entry.name,
            order=report.order,
            prime=outcome.prime,
            kind=outcome.kind,
            verdict=outcome.verdict,
            expected=outcome.expected,
            matched=outcome.matched,
            seed=seed,
            elapsed_ms=report.elapsed_ms,
            report=json.loads(render_json(report)),
        ))
    return runs
