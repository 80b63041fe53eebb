"""
p-блоки над фиксированным максимальным идеалом: разбиение Irr(G) по
центральным характерам, дефекты и высоты, идемпотенты блоков, группы
дефекта через гомоморфизм Брауэра, индуцирование блоков, соответствие
Брауэра и накрытие блоков нормальной подгруппы.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from sympy import multiplicity

from algebra.chartab import character_table, structure_constants
from algebra.cyclotomic import Cyclotomic
from algebra.exceptions import DomainError, InternalError
from algebra.permgroup import (
    are_conjugate, centralizer, normalizer, subgroup_centralizer, subgroups_of_order,
    sylow_subgroup, trivial_subgroup,
)
from algebra.reduction import build_reduction

logger = logging.getLogger(__name__)


def central_character(table, i):
    """ω_χ(Ĉ_k) = |C_k| χ(x_k) / χ(1) для всех классов."""
    chi = table.irreducibles[i]
    degree = chi.degree
    values = tuple(v * cls.size / degree for v, cls in zip(chi.values, table.classes))
    for v in values:
        if not v.is_algebraic_integer():
            raise InternalError(f'central character value {v} is not an algebraic integer')
    return values


def reduction_for(G, p, seed=0):
    """Редукция для группы G с кондуктором, равным экспоненте G."""
    return build_reduction(G.exponent, p, seed)


def class_algebra_product(G, a, b):
    """Произведение элементов центра Σ a_i Ĉ_i и Σ b_j Ĉ_j в базисе сумм классов."""
    constants = structure_constants(G)
    r = len(G.classes)
    result = [a[0] * 0 for _ in range(r)]
    for i in range(r):
        if not a[i]:
            continue
        for j in range(r):
            if not b[j]:
                continue
            coefficient = a[i] * b[j]
            for k in range(r):
                if constants[i][j][k]:
                    result[k] = result[k] + coefficient * constants[i][j][k]
    return result


@dataclass(frozen=True)
class HeightData:
    """Высоты характеров блока и множество характеров высоты 0."""
    heights: dict = field(compare=False)
    irr0: tuple


@dataclass(frozen=True)
class Block:
    """p-блок группы: номера характеров, дефект, центральный характер λ_B."""
    group: object
    prime: int
    members: tuple
    index: int = field(compare=False)
    defect: int = field(compare=False)
    central_character: tuple = field(compare=False, repr=False)
    table: object = field(compare=False, repr=False)
    reduction: object = field(compare=False, repr=False)
    seed: int = field(default=0, compare=False)

    @property
    def label(self):
        return f'B{self.index}'

    @property
    def degrees(self):
        return tuple(self.table.degrees[i] for i in self.members)

    @property
    def dim(self):
        return block_dim(self)

    @cached_property
    def heights(self):
        return heights(self)

    @cached_property
    def idempotent(self):
        return block_idempotent(self)

    @cached_property
    def defect_group(self):
        return defect_groups(self)

    def is_principal(self):
        return 0 in self.members


@lru_cache(maxsize=None)
def block_partition(G, p, reduction=None, seed=0):
    """
    χ и χ' в одном блоке, если редукции их центральных характеров совпадают
    на всех классах. Блоки нумеруются по наименьшему номеру характера.
    """
    reduction = reduction or reduction_for(G, p)
    table = character_table(G, seed)
    groups = {}
    for i in range(len(table.irreducibles)):
        key = tuple(reduction.reduce(w) for w in central_character(table, i))
        groups.setdefault(key, []).append(i)
    full = multiplicity(p, G.order)
    blocks = []
    for index, (key, members) in enumerate(groups.items()):
        defect = full - min(multiplicity(p, table.degrees[i]) for i in members)
        blocks.append(Block(
            group=G,
            prime=p,
            members=tuple(members),
            index=index,
            defect=defect,
            central_character=key,
            table=table,
            reduction=reduction,
            seed=seed,
        ))
    logger.debug('Блоки |G|=%s, p=%s: %s', G.order, p, [b.members for b in blocks])
    return tuple(blocks)


def block_of(blocks, i):
    return next(b for b in blocks if i in b.members)


def block_idempotent(B):
    """
    Коэффициенты e_B = Σ_{χ ∈ B} χ(1)/|G| · χ(g^-1) по классам, редуцированные
    как p-локальные числа.
    """
    table = B.table
    order = B.group.order
    coefficients = []
    for k in range(len(table.classes)):
        total = Cyclotomic.rational(0)
        for i in B.members:
            chi = table.irreducibles[i]
            total = total + chi.values[k].conjugate() * chi.degree
        try:
            coefficients.append(B.reduction.reduce_local(total / order))
        except DomainError as exc:
            raise InternalError(f'idempotent coefficient is not p-local: {exc}') from exc
    return tuple(coefficients)


def _brauer_image_nonzero(B, Q):
    """Br_Q(e_B) ≠ 0: носитель e_B пересекает C_G(Q)."""
    G = B.group
    C = subgroup_centralizer(G, Q)
    support = [k for k, c in enumerate(B.idempotent) if c]
    return any(not G.classes[k].members.isdisjoint(C.element_set) for k in support)


def defect_groups(B):
    """Группа дефекта: подгруппа порядка p^d силовской с ненулевым образом Брауэра e_B."""
    G, p = B.group, B.prime
    if B.defect == 0:
        return trivial_subgroup(G)
    candidates = [
        Q for Q in subgroups_of_order(G, p ** B.defect, B.seed)
        if _brauer_image_nonzero(B, Q)
    ]
    if len(candidates) != 1:
        raise InternalError(
            f'expected one defect group candidate of order {p ** B.defect}, found {len(candidates)}'
        )
    return candidates[0]


def defect_group_by_class(B):
    """Метод классов дефекта: p-регулярный класс K с λ_B(K̂) ≠ 0 и ненулевым коэффициентом e_B."""
    G, p = B.group, B.prime
    for k, cls in enumerate(G.classes):
        if cls.element_order % p == 0:
            continue
        if B.central_character[k] and B.idempotent[k]:
            return sylow_subgroup(centralizer(G, cls.representative), p, B.seed)
    raise InternalError('block has no defect class')


def heights(B):
    base = multiplicity(B.prime, B.group.order) - B.defect
    values = {i: multiplicity(B.prime, B.table.degrees[i]) - base for i in B.members}
    if any(h < 0 for h in values.values()):
        raise InternalError('negative height')
    return HeightData(heights=values, irr0=tuple(i for i in B.members if values[i] == 0))


def block_dim(B):
    return sum(d * d for d in B.degrees)


def induced_central_character(b, G):
    """λ^G(Ĉ) = λ_b(Σ_{x ∈ C ∩ H} x), по H-классам внутри C."""
    H = b.group
    field_ = b.reduction.field
    values = [field_.zero for _ in G.classes]
    for cls in H.classes:
        k = G.class_of(cls.representative)
        values[k] = values[k] + b.central_character[cls.index]
    return values


def is_multiplicative(G, values):
    constants = structure_constants(G)
    r = len(G.classes)
    for i in range(r):
        for j in range(i, r):
            right = values[0] * 0
            for k in range(r):
                if constants[i][j][k]:
                    right = right + values[k] * constants[i][j][k]
            if values[i] * values[j] != right:
                return False
    return True


def induced_block(b, G, blocks=None):
    """b^G или None, если λ^G не мультипликативен."""
    H = b.group
    if not H.is_subgroup_of(G):
        raise DomainError('block of a group that is not a subgroup')
    values = induced_central_character(b, G)
    if not is_multiplicative(G, values):
        return None
    blocks = blocks or block_partition(G, b.prime, b.reduction, b.seed)
    key = tuple(values)
    return next((B for B in blocks if B.central_character == key), None)


def brauer_correspondent(B):
    """Единственный блок b группы N_G(D) с группой дефекта D и b^G = B."""
    G = B.group
    D = B.defect_group
    N = normalizer(G, D)
    blocks_G = block_partition(G, B.prime, B.reduction, B.seed)
    candidates = [
        b for b in block_partition(N, B.prime, B.reduction, B.seed)
        if b.defect == B.defect and b.defect_group == D and induced_block(b, G, blocks_G) == B
    ]
    if len(candidates) != 1:
        raise InternalError(f'Brauer correspondence produced {len(candidates)} candidates for {B.label}')
    return candidates[0]


def covered_blocks(B, N):
    """Блоки N, содержащие составляющие χ_N для χ ∈ B."""
    if not N.is_normal_in(B.group):
        raise DomainError('N is not normal in G')
    blocks_N = block_partition(N, B.prime, B.reduction, B.seed)
    table_N = blocks_N[0].table
    covered = []
    for i in B.members:
        restricted = B.table.irreducibles[i].restrict(N)
        for j, _ in table_N.constituents(restricted):
            b = block_of(blocks_N, j)
            if b not in covered:
                covered.append(b)
    return sorted(covered, key=lambda b: b.index)


def conjugate_block(b, g):
    """b^g для блока нормальной подгруппы: блок, содержащий ϑ^g при ϑ ∈ b."""
    blocks = block_partition(b.group, b.prime, b.reduction, b.seed)
    theta = b.table.irreducibles[b.members[0]].conjugate_by(g)
    return block_of(blocks, b.table.index_of(theta))


def block_orbit(b, G):
    orbit = [b]
    frontier = [b]
    while frontier:
        c = frontier.pop()
        for g in G.generators:
            d = conjugate_block(c, g)
            if d not in orbit:
                orbit.append(d)
                frontier.append(d)
    return sorted(orbit, key=lambda c: c.index)


def is_conjugate_defect(B, D):
    return are_conjugate(B.group, B.defect_group, D)
