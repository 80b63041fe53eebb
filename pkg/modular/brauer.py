"""
Характеры Брауэра p-разрешимых групп по теореме Фонга–Суона: ограничение
на p-регулярные классы, выбор IBr, матрица разложения, высоты и
распределение IBr по блокам.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import networkx as nx
from sympy import multiplicity

from algebra.chartab import character_table
from algebra.cyclotomic import Cyclotomic
from algebra.exceptions import DomainError, InternalError, PreconditionError
from algebra.linalg import rank, solve
from algebra.permgroup import is_p_solvable, power

logger = logging.getLogger(__name__)


def p_regular_classes(G, p):
    return tuple(cls.index for cls in G.classes if cls.element_order % p)


@dataclass(frozen=True)
class BrauerCharacter:
    """Функция на p-регулярных классах группы (значения в порядке p_regular_classes)."""
    group: object
    prime: int
    values: tuple

    def __repr__(self):
        return f'<BrauerCharacter degree={self.degree}>'

    @property
    def degree(self):
        return int(self.values[0].to_rational())

    @property
    def regular_classes(self):
        return p_regular_classes(self.group, self.prime)

    def value_at(self, x):
        k = self.group.class_of(x)
        try:
            return self.values[self.regular_classes.index(k)]
        except ValueError:
            raise DomainError('Brauer characters are defined on p-regular elements only') from None

    def vector(self):
        """Рациональные координаты всех значений в общем круговом поле группы."""
        e = self.group.exponent
        return tuple(c for v in self.values for c in v.embed(e).coords)

    def sort_key(self):
        return (self.degree, tuple(v.sort_key() for v in self.values))

    def __add__(self, other):
        return BrauerCharacter(self.group, self.prime, tuple(a + b for a, b in zip(self.values, other.values)))

    def __mul__(self, scalar):
        return BrauerCharacter(self.group, self.prime, tuple(a * scalar for a in self.values))

    __rmul__ = __mul__


def p_regular_restriction(chi, p):
    """χ⁰: значения χ на p-регулярных классах."""
    regular = p_regular_classes(chi.group, p)
    return BrauerCharacter(chi.group, p, tuple(chi.values[k] for k in regular))


def linear_combination(G, p, characters, coefficients):
    e = G.exponent
    values = [Cyclotomic.rational(0, e) for _ in p_regular_classes(G, p)]
    for psi, c in zip(characters, coefficients):
        if c:
            values = [a + b * c for a, b in zip(values, psi.values)]
    return BrauerCharacter(G, p, tuple(values))


def n_combination(target, basis):
    """
    Неотрицательные целые c_i с Σ c_i basis_i = target или None.
    Перебор в глубину; c_i не превосходит отношения степеней.
    """
    vectors = [b.vector() for b in basis]
    degrees = [b.degree for b in basis]

    def search(i, rest):
        if not any(rest):
            return [0] * (len(basis) - i)
        if i == len(basis):
            return None
        for c in range(int(rest[0]) // degrees[i], -1, -1):
            remaining = [r - c * x for r, x in zip(rest, vectors[i])]
            found = search(i + 1, remaining)
            if found is not None:
                return [c] + found
        return None

    return search(0, list(target.vector()))


@dataclass(frozen=True)
class BrauerBlock:
    """IBr(B), высоты и множество IBr_0(B)."""
    block: object
    members: tuple
    heights: dict = field(compare=False)
    irr0: tuple = ()


@dataclass(frozen=True, eq=False)
class BrauerData:
    """IBr(G) и матрица разложения d_{χφ} (строки по Irr(G), столбцы по IBr(G))."""
    group: object
    prime: int
    table: object
    regular_classes: tuple
    ibr: tuple
    decomposition: tuple
    source: str = 'fong-swan'

    @property
    def degrees(self):
        return tuple(phi.degree for phi in self.ibr)

    def column(self, j):
        return tuple(row[j] for row in self.decomposition)

    def export(self):
        """Матрица разложения: строки подписаны степенями Irr, столбцы степенями IBr."""
        header = 'chi\\phi ' + ' '.join(str(d) for d in self.degrees)
        lines = [header]
        for chi_degree, row in zip(self.table.degrees, self.decomposition):
            lines.append(f'{chi_degree} ' + ' '.join(str(v) for v in row))
        return '\n'.join(lines) + '\n'


def _distinct_restrictions(table, p):
    candidates = []
    for chi in table.irreducibles:
        restricted = p_regular_restriction(chi, p)
        if restricted not in candidates:
            candidates.append(restricted)
    return sorted(candidates, key=BrauerCharacter.sort_key)


def decomposition_matrix(G, p, table, ibr):
    """Единственное решение χ⁰ = Σ d_{χφ} φ для каждого χ; все d неотрицательны и целы."""
    columns = [phi.vector() for phi in ibr]
    rows = []
    for chi in table.irreducibles:
        solution = solve(columns, p_regular_restriction(chi, p).vector())
        if solution is None:
            raise InternalError('χ⁰ is not a combination of IBr')
        if any(c.denominator != 1 or c < 0 for c in solution):
            raise InternalError(f'decomposition row {solution} is not a nonnegative integer vector')
        rows.append(tuple(int(c) for c in solution))
    return tuple(rows)


@lru_cache(maxsize=None)
def ibr_fong_swan(G, p, seed=0):
    """
    IBr(G) для p-разрешимой G: кандидаты χ⁰ без повторов по возрастанию
    степени; кандидат принимается, если он не является N-комбинацией уже
    принятых.
    """
    if not is_p_solvable(G, p):
        raise PreconditionError(f'group of order {G.order} is not {p}-solvable')
    table = character_table(G, seed)
    regular = p_regular_classes(G, p)
    accepted = []
    for candidate in _distinct_restrictions(table, p):
        if n_combination(candidate, accepted) is None:
            accepted.append(candidate)
    if len(accepted) != len(regular):
        raise InternalError(f'selected {len(accepted)} Brauer characters for {len(regular)} p-regular classes')
    if rank([phi.vector() for phi in accepted]) != len(accepted):
        raise InternalError('selected Brauer characters are linearly dependent')
    logger.debug('IBr |G|=%s, p=%s: степени %s', G.order, p, [phi.degree for phi in accepted])
    return BrauerData(
        group=G,
        prime=p,
        table=table,
        regular_classes=regular,
        ibr=tuple(accepted),
        decomposition=decomposition_matrix(G, p, table, accepted),
    )


def brauer_data_from_fixture(G, p, rows, seed=0):
    """
    Данные Брауэра из таблицы: каждая строка содержит целые коэффициенты при χ⁰
    в порядке Irr(G).
    """
    table = character_table(G, seed)
    regular = p_regular_classes(G, p)
    if any(len(row) != len(table.irreducibles) for row in rows):
        raise DomainError('fixture row length differs from the number of irreducible characters')
    restrictions = [p_regular_restriction(chi, p) for chi in table.irreducibles]
    ibr = [linear_combination(G, p, restrictions, row) for row in rows]
    if len(ibr) != len(regular):
        raise DomainError(f'fixture has {len(ibr)} rows, expected {len(regular)}')
    ibr.sort(key=BrauerCharacter.sort_key)
    return BrauerData(
        group=G,
        prime=p,
        table=table,
        regular_classes=regular,
        ibr=tuple(ibr),
        decomposition=decomposition_matrix(G, p, table, ibr),
        source='fixture',
    )


def ibr_blocks_and_heights(data, blocks):
    """
    φ принадлежит блоку B, если d_{χφ} > 0 для некоторого χ ∈ B;
    ht(φ) = v_p(φ(1)) - v_p(|G|) + d(B).
    """
    owner = {}
    for j in range(len(data.ibr)):
        linked = [B for B in blocks if any(data.decomposition[i][j] for i in B.members)]
        if len(linked) != 1:
            raise InternalError(f'Brauer character {j} is linked to {len(linked)} blocks')
        owner[j] = linked[0]
    full = multiplicity(data.prime, data.group.order)
    result = []
    for B in blocks:
        members = tuple(j for j in range(len(data.ibr)) if owner[j] == B)
        heights = {
            j: multiplicity(data.prime, data.ibr[j].degree) - full + B.defect for j in members
        }
        if any(h < 0 for h in heights.values()):
            raise InternalError(f'negative Brauer height in {B.label}')
        result.append(BrauerBlock(
            block=B,
            members=members,
            heights=heights,
            irr0=tuple(j for j in members if heights[j] == 0),
        ))
    return tuple(result)


def brauer_block_of(brauer_blocks, B):
    return next(bb for bb in brauer_blocks if bb.block == B)


def brauer_graph_partition(data):
    """Компоненты связности графа Брауэра: χ и φ соединены, если d_{χφ} > 0."""
    graph = nx.Graph()
    graph.add_nodes_from(('chi', i) for i in range(len(data.decomposition)))
    for i, row in enumerate(data.decomposition):
        for j, d in enumerate(row):
            if d:
                graph.add_edge(('chi', i), ('phi', j))
    components = [
        tuple(sorted(i for kind, i in component if kind == 'chi'))
        for component in nx.connected_components(graph)
    ]
    return sorted(components)


def induce_brauer(phi, G):
    """φ^G(x) = |G| / (|H| |C_x|) · Σ_{y ∈ x^G ∩ H} φ(y) на p-регулярных классах G."""
    H = phi.group
    if not H.is_subgroup_of(G):
        raise DomainError('induction to a group not containing H')
    regular = p_regular_classes(G, phi.prime)
    position = {k: n for n, k in enumerate(regular)}
    sums = [Cyclotomic.rational(0) for _ in regular]
    for y in H.elements:
        k = G.class_of(y)
        if k in position:
            sums[position[k]] = sums[position[k]] + phi.value_at(y)
    return BrauerCharacter(G, phi.prime, tuple(
        total * Fraction(G.order, H.order * G.classes[k].size)
        for total, k in zip(sums, regular)
    ))


def oracle_ibr(G, p, seed=0):
    """
    Независимая проверка: различный χ⁰ лежит в IBr(G), если он не является
    N-комбинацией остальных различных χ⁰ (G p-разрешима).
    """
    if not is_p_solvable(G, p):
        raise PreconditionError(f'group of order {G.order} is not {p}-solvable')
    table = character_table(G, seed)
    candidates = _distinct_restrictions(table, p)
    atoms = []
    for n, candidate in enumerate(candidates):
        others = candidates[:n] + candidates[n + 1:]
        if n_combination(candidate, others) is None:
            atoms.append(candidate)
    return tuple(atoms)


def is_eigenvalue_feasible(psi):
    """
    На каждом p-регулярном x порядка o кратности μ_m = (1/o) Σ_l ψ(x^l) ζ_o^{-ml}
    должны быть неотрицательными целыми.
    """
    G = psi.group
    for k in psi.regular_classes:
        cls = G.classes[k]
        o = cls.element_order
        values = [psi.value_at(power(cls.representative, l)) for l in range(o)]
        for m in range(o):
            total = Cyclotomic.rational(0)
            for l, value in enumerate(values):
                total = total + value * Cyclotomic.root_of_unity(o, -m * l)
            mu = total / o
            if not mu.is_rational():
                return False
            mu = mu.to_rational()
            if mu < 0 or mu.denominator != 1:
                return False
    return True


def derive_ibr_rows(G, p, seed=0):
    """
    Поиск таблицы IBr для группы, не являющейся p-разрешимой: среди
    {-1, 0, 1}-комбинаций различных χ⁰ с допустимыми кратностями собственных
    значений выбирается базис размера l(G), в котором каждый χ⁰ является
    N-комбинацией, с наименьшей суммой степеней. Строки возвращаются как
    коэффициенты при χ⁰ в порядке Irr(G).
    """
    table = character_table(G, seed)
    restrictions = [p_regular_restriction(chi, p) for chi in table.irreducibles]
    distinct = []
    for n, restricted in enumerate(restrictions):
        if all(restricted != restrictions[m] for m, _ in distinct):
            distinct.append((n, restricted))
    size = len(p_regular_classes(G, p))

    feasible = []
    for coefficients in itertools.product((-1, 0, 1), repeat=len(distinct)):
        if not any(coefficients):
            continue
        psi = linear_combination(G, p, [r for _, r in distinct], coefficients)
        if psi.degree <= 0 or not is_eigenvalue_feasible(psi):
            continue
        row = [0] * len(restrictions)
        for (n, _), c in zip(distinct, coefficients):
            row[n] = c
        feasible.append((psi.degree, tuple(row), psi.vector()))
    feasible.sort(key=lambda item: item[:2])
    logger.info('Допустимых кандидатов: %s, нужен базис размера %s', len(feasible), size)

    targets = [r.vector() for _, r in distinct]
    best = None
    for subset in itertools.combinations(feasible, size):
        total = sum(degree for degree, _, _ in subset)
        if best is not None and total >= best[0]:
            continue
        columns = [vector for _, _, vector in subset]
        if rank(columns) != size:
            continue
        if all(_is_natural(solve(columns, target)) for target in targets):
            best = (total, [row for _, row, _ in subset])
    if best is None:
        raise InternalError('no Brauer character basis among the candidates')
    return best[1]


def _is_natural(solution):
    return solution is not None and all(c >= 0 and c.denominator == 1 for c in solution)
