"""Отчёты проверок: записи по блокам, вердикты, утверждения, текстовый вывод."""

from dataclasses import dataclass, field

PASS = 'pass'
FAIL = 'fail'
HYPOTHESIS_NOT_MET = 'hypothesis-not-met'
INCONCLUSIVE = 'inconclusive'

# Метка отчёта для группы, не удовлетворяющей гипотезе p-разрешимости
HYPOTHESIS_LABEL = 'not met'

VERDICTS = (PASS, FAIL, HYPOTHESIS_NOT_MET, INCONCLUSIVE)

# Ожидаемые метки каталога и вердикты, которые им соответствуют
EXPECTED_TAGS = {
    'pass': PASS,
    'expected-fail': FAIL,
    'hypothesis-not-met': HYPOTHESIS_NOT_MET,
    'inconclusive': INCONCLUSIVE,
}

PROPOSITION_KEYS = (
    'glauberman', 'navarro', 'regular_covering', 'fong_block',
    'fong_reynolds', 'extension', 'question35',
)


def combine(verdicts):
    """Сводный вердикт: fail, затем inconclusive, затем pass."""
    verdicts = list(verdicts)
    for verdict in (FAIL, INCONCLUSIVE):
        if verdict in verdicts:
            return verdict
    if verdicts and all(v == HYPOTHESIS_NOT_MET for v in verdicts):
        return HYPOTHESIS_NOT_MET
    return PASS


def matches_tag(verdict, tag):
    return EXPECTED_TAGS.get(tag) == verdict


@dataclass
class BlockRecord:
    id: str
    degrees: list
    defect: int
    defect_group_order: int
    correspondent: str = None
    irr0_left: list = None
    irr0_right: list = None
    irr0_matching: object = None
    ibr0_left: list = None
    ibr0_right: list = None
    ibr0_matching: object = None
    dim_B: int = None
    dim_b: int = None
    dim_divides: bool = None
    dim_p_part_divides: bool = None

    def update(self, other):
        for name in self.__dataclass_fields__:
            value = getattr(other, name)
            if value is not None:
                setattr(self, name, value)


@dataclass
class VerificationReport:
    """Результат проверки для пары (G, p): вердикты по видам, записи по блокам, утверждения."""
    group: str
    order: int
    prime: int
    p_solvable: bool
    verdicts: dict = field(default_factory=dict)
    blocks: list = field(default_factory=list)
    propositions: dict = field(default_factory=dict)
    seed: int = 0
    elapsed_ms: int = None
    hypothesis: str = None

    @property
    def verdict(self):
        return combine(self.verdicts.values())

    def block(self, block_id):
        return next(b for b in self.blocks if b.id == block_id)


def merge_reports(reports):
    """Объединяет отчёты одной пары (G, p) в порядке следования."""
    reports = list(reports)
    first = reports[0]
    merged = VerificationReport(
        group=first.group,
        order=first.order,
        prime=first.prime,
        p_solvable=first.p_solvable,
        seed=first.seed,
    )
    for report in reports:
        if (report.group, report.prime) != (first.group, first.prime):
            raise ValueError('reports of different (group, prime) pairs')
        merged.verdicts.update(report.verdicts)
        for record in report.blocks:
            existing = next((b for b in merged.blocks if b.id == record.id), None)
            if existing is None:
                merged.blocks.append(BlockRecord(**{
                    name: getattr(record, name) for name in record.__dataclass_fields__
                }))
            else:
                existing.update(record)
        for key, records in report.propositions.items():
            merged.propositions.setdefault(key, []).extend(records)
    merged.hypothesis = next((r.hypothesis for r in reports if r.hypothesis), None)
    if all(r.elapsed_ms is not None for r in reports):
        merged.elapsed_ms = sum(r.elapsed_ms for r in reports)
    return merged


def _degrees(values):
    return '{' + ', '.join(str(v) for v in values) + '}'


def _matching_text(matching):
    if matching is None:
        return 'n/a'
    if matching.perfect:
        return 'matched ' + ', '.join(f'{a}->{b}' for a, b in matching.degree_pairs())
    violator = matching.violator.as_dict(matching.left, matching.right)
    if violator['reason'] == 'size':
        return f'violator: size mismatch {len(matching.left)} vs {len(matching.right)}'
    return (
        f"violator: {violator['side']} {_degrees(violator['degrees'])} "
        f"has neighbours {_degrees(violator['neighbour_degrees'])}"
    )


def _value(value):
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (list, tuple)):
        return _degrees(value)
    return str(value)


def render_text(report):
    lines = [
        f'group: {report.group}',
        f'order: {report.order}',
        f'prime: {report.prime}',
        f'p_solvable: {_value(report.p_solvable)}',
        f'seed: {report.seed}',
    ]
    if report.hypothesis:
        lines.append(f'hypothesis: {report.hypothesis}')
    if report.elapsed_ms is not None:
        lines.append(f'elapsed_ms: {report.elapsed_ms}')
    for kind, verdict in report.verdicts.items():
        lines.append(f'verdict {kind}: {verdict}')
    for record in report.blocks:
        lines.append(
            f'block {record.id}: degrees {_degrees(record.degrees)} defect {record.defect} '
            f'|D|={record.defect_group_order} correspondent {record.correspondent or "n/a"}'
        )
        if record.irr0_left is not None:
            lines.append(f'  Irr0: {_degrees(record.irr0_left)} vs {_degrees(record.irr0_right)}: '
                         f'{_matching_text(record.irr0_matching)}')
        if record.ibr0_left is not None:
            lines.append(f'  IBr0: {_degrees(record.ibr0_left)} vs {_degrees(record.ibr0_right)}: '
                         f'{_matching_text(record.ibr0_matching)}')
        if record.dim_B is not None:
            relation = 'divides' if record.dim_divides else 'does not divide'
            lines.append(
                f'  dim: {record.dim_b} {relation} {record.dim_B}; '
                f'p-part divides: {_value(record.dim_p_part_divides)}'
            )
    for key in PROPOSITION_KEYS:
        for entry in report.propositions.get(key, []):
            body = ' '.join(f'{name}={_value(value)}' for name, value in entry.items())
            lines.append(f'{key}: {body}')
    return '\n'.join(lines) + '\n'
