"""
Теория Фонга для p-разрешимых групп: (B,D)-хорошие характеры нормальной
p'-подгруппы, соответствие Фонга–Рейнольдса, блоки над G-инвариантными
характерами O_{p'}(G) и продолжение характеров O_p(G).
"""

import logging
from dataclasses import dataclass

from sympy import multiplicity

from algebra.chartab import character_table, inertia_group
from algebra.exceptions import DomainError, InternalError, PreconditionError
from algebra.permgroup import are_conjugate, p_core, p_prime_core
from modular.blocks import block_of, block_partition, induced_block
from modular.brauer import brauer_block_of, ibr_blocks_and_heights, ibr_fong_swan, induce_brauer

from .reports import FAIL, PASS

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GoodCharacter:
    """(B,D)-хороший ϑ ∈ Irr(L), его группа инерции и соответствующий блок B_ϑ."""
    L: object
    index: int
    theta: object
    inertia: object
    block: object


def _lies_over(chi, L, theta):
    return bool(chi.restrict(L).inner_product(theta))


def fong_reynolds_correspondent(B, L, theta, T):
    """Блок T = G_ϑ над ϑ, индуцирующий B (единственный по Фонгу–Рейнольдсу)."""
    candidates = [
        b for b in block_partition(T, B.prime, B.reduction, B.seed)
        if any(_lies_over(b.table.irreducibles[i], L, theta) for i in b.members)
        and induced_block(b, B.group) == B
    ]
    if len(candidates) != 1:
        raise InternalError(f'{len(candidates)} Fong–Reynolds correspondents for {B.label}')
    return candidates[0]


def _good_character(B, L, table_L, j):
    """GoodCharacter для ϑ = Irr(L)[j] или None, если ϑ не (B,D)-хороший."""
    G = B.group
    theta = table_L.irreducibles[j]
    if not all(_lies_over(B.table.irreducibles[i], L, theta) for i in B.members):
        return None
    T = inertia_group(G, L, theta)
    if not B.defect_group.is_subgroup_of(T):
        return None
    b = fong_reynolds_correspondent(B, L, theta, T)
    if not are_conjugate(T, b.defect_group, B.defect_group):
        return None
    return GoodCharacter(L=L, index=j, theta=theta, inertia=T, block=b)


def _check_normal_p_prime(B, L):
    if not L.is_normal_in(B.group):
        raise PreconditionError('L is not normal in G')
    if L.order % B.prime == 0:
        raise PreconditionError(f'L is not a {B.prime}\'-group')


def find_good_character(B, L):
    """
    ϑ ∈ Irr(L) с Irr(B) ⊆ Irr(G|ϑ), для которого D является группой дефекта
    соответствующего блока группы инерции.
    """
    _check_normal_p_prime(B, L)
    table_L = character_table(L, B.seed)
    constituents = set()
    for i in B.members:
        constituents.update(j for j, _ in table_L.constituents(B.table.irreducibles[i].restrict(L)))
    for j in sorted(constituents):
        good = _good_character(B, L, table_L, j)
        if good is not None:
            return good
    raise InternalError(f'no (B,D)-good character for {B.label}')


def good_character_of(B, L, theta):
    """Проверяет, что заданный ϑ ∈ Irr(L) является (B,D)-хорошим."""
    _check_normal_p_prime(B, L)
    table_L = character_table(L, B.seed)
    good = _good_character(B, L, table_L, table_L.index_of(theta))
    if good is None:
        raise PreconditionError(f'character of degree {theta.degree} is not ({B.label},D)-good')
    return good


def _height(block, degree):
    return multiplicity(block.prime, degree) - multiplicity(block.prime, block.group.order) + block.defect


def verify_fong_reynolds(B, L, theta=None, brauer=True):
    """
    Индукция ψ ↦ ψ^G должна давать биекцию Irr(B_ϑ) -> Irr(B), сохраняющую
    высоты; для p-разрешимой G то же проверяется для IBr. Без theta берётся
    первый (B,D)-хороший характер L.
    """
    G = B.group
    good = find_good_character(B, L) if theta is None else good_character_of(B, L, theta)
    b = good.block
    images = []
    heights_kept = True
    for i in b.members:
        psi = b.table.irreducibles[i]
        induced = psi.induce(G)
        try:
            k = B.table.index_of(induced)
        except DomainError:
            k = None
        images.append(k)
        if k is not None and _height(b, int(psi.degree)) != _height(B, B.table.degrees[k]):
            heights_kept = False
    bijective = None not in images and sorted(images) == sorted(B.members)
    record = {
        'block': B.label,
        'theta_degree': int(good.theta.degree),
        'inertia_order': good.inertia.order,
        'correspondent': b.label,
        'ordinary_bijection': bijective,
        'heights_preserved': heights_kept,
    }
    passed = bijective and heights_kept

    if brauer:
        T = good.inertia
        data_G = ibr_fong_swan(G, B.prime, B.seed)
        data_T = ibr_fong_swan(T, B.prime, B.seed)
        ibr_B = brauer_block_of(ibr_blocks_and_heights(data_G, block_partition(G, B.prime, B.reduction, B.seed)), B)
        ibr_b = brauer_block_of(ibr_blocks_and_heights(data_T, block_partition(T, B.prime, B.reduction, B.seed)), b)
        brauer_images = []
        brauer_heights = True
        for j in ibr_b.members:
            induced = induce_brauer(data_T.ibr[j], G)
            k = data_G.ibr.index(induced) if induced in data_G.ibr else None
            brauer_images.append(k)
            if k is not None and ibr_b.heights[j] != ibr_B.heights.get(k):
                brauer_heights = False
        brauer_bijective = None not in brauer_images and sorted(brauer_images) == sorted(ibr_B.members)
        record['brauer_bijection'] = brauer_bijective
        record['brauer_heights_preserved'] = brauer_heights
        passed = passed and brauer_bijective and brauer_heights

    record['verdict'] = PASS if passed else FAIL
    return record


def verify_fong_block(G, p, seed=0):
    """
    Для каждого G-инвариантного ϑ ∈ Irr(O_{p'}(G)) множество Irr(G|ϑ) образует
    ровно один блок, и его группы дефекта силовские.
    """
    L = p_prime_core(G, p)
    table_L = character_table(L, seed)
    table_G = character_table(G, seed)
    blocks = block_partition(G, p, None, seed)
    sylow_defect = multiplicity(p, G.order)
    records = []
    for j, theta in enumerate(table_L.irreducibles):
        if any(theta.conjugate_by(g) != theta for g in G.generators):
            continue
        over = sorted(i for i, chi in enumerate(table_G.irreducibles) if _lies_over(chi, L, theta))
        owners = {block_of(blocks, i) for i in over}
        one_block = len(owners) == 1 and sorted(next(iter(owners)).members) == over
        maximal = one_block and next(iter(owners)).defect == sylow_defect
        records.append({
            'theta': j,
            'theta_degree': int(theta.degree),
            'characters': [table_G.degrees[i] for i in over],
            'one_block': one_block,
            'sylow_defect': maximal,
            'verdict': PASS if one_block and maximal else FAIL,
        })
    return records


def verify_opg_extension(G, p, seed=0):
    """
    Для блоков максимального дефекта: если Irr_0(B|κ) не пусто для κ ∈ Irr(O_p(G)),
    то κ линеен и продолжается на свою группу инерции.
    """
    K = p_core(G, p)
    table_K = character_table(K, seed)
    table_G = character_table(G, seed)
    blocks = block_partition(G, p, None, seed)
    sylow_defect = multiplicity(p, G.order)
    records = []
    for B in blocks:
        if B.defect != sylow_defect:
            continue
        irr0 = B.heights.irr0
        for j, kappa in enumerate(table_K.irreducibles):
            over = [i for i in irr0 if _lies_over(table_G.irreducibles[i], K, kappa)]
            if not over:
                continue
            linear = kappa.degree == 1
            T = inertia_group(G, K, kappa)
            extends = linear and any(
                psi.degree == 1 and psi.restrict(K) == kappa
                for psi in character_table(T, seed).irreducibles
            )
            records.append({
                'block': B.label,
                'kappa': j,
                'kappa_degree': int(kappa.degree),
                'inertia_order': T.order,
                'linear': linear,
                'extends': extends,
                'verdict': PASS if linear and extends else FAIL,
            })
    return records
