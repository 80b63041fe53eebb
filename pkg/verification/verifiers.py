"""
Проверки утверждений для пары (G, p): делимость степеней в соответствии
Альперина–Маккея, делимость размерностей блоков, подъём Глаубермана,
Фонг–Рейнольдс, делимость индексов нормализаторов, регулярный характер
блока над нормальной подгруппой и поиск совместимых чисел разложения.
"""

import logging
import random
from functools import cached_property

from django.conf import settings

from algebra.chartab import ClassFunction, character_table, irr_over
from algebra.exceptions import PreconditionError
from algebra.permgroup import (
    all_subgroups, intersection, is_p_power, is_p_solvable, join, normalizer,
    p_part, p_prime_core, p_prime_p_core, sylow_subgroup,
)
from modular.blocks import block_orbit, block_partition, brauer_correspondent, covered_blocks, reduction_for
from modular.brauer import brauer_block_of, brauer_data_from_fixture, ibr_blocks_and_heights, ibr_fong_swan

from .fong import verify_fong_block, verify_fong_reynolds, verify_opg_extension
from .glauberman import check_coprime_action, glauberman_correspondent, invariant_characters
from .matching import divisibility_matching
from .reports import (
    FAIL, HYPOTHESIS_LABEL, HYPOTHESIS_NOT_MET, INCONCLUSIVE, PASS, BlockRecord, VerificationReport, combine,
)

logger = logging.getLogger(__name__)


class GroupContext:
    """Общие данные одной пары (G, p): блоки, данные Брауэра, сид."""

    def __init__(self, G, p, name='G', seed=0, ibr_fixture=None):
        self.G = G
        self.p = p
        self.name = name
        self.seed = seed
        self.ibr_fixture = ibr_fixture

    @cached_property
    def p_solvable(self):
        return is_p_solvable(self.G, self.p)

    @cached_property
    def reduction(self):
        return reduction_for(self.G, self.p)

    @cached_property
    def blocks(self):
        return block_partition(self.G, self.p, self.reduction, self.seed)

    @cached_property
    def brauer(self):
        if self.p_solvable:
            return ibr_fong_swan(self.G, self.p, self.seed)
        if self.ibr_fixture is not None:
            return brauer_data_from_fixture(self.G, self.p, self.ibr_fixture, self.seed)
        return None

    def brauer_for(self, H):
        if H == self.G:
            return self.brauer
        if is_p_solvable(H, self.p):
            return ibr_fong_swan(H, self.p, self.seed)
        return None

    def brauer_block(self, data, block):
        blocks = block_partition(block.group, self.p, self.reduction, self.seed)
        return brauer_block_of(ibr_blocks_and_heights(data, blocks), block)

    def report(self, kind, verdict, blocks=(), propositions=None, hypothesis=None):
        logger.info('%s p=%s %s: %s', self.name, self.p, kind, verdict)
        return VerificationReport(
            group=self.name,
            order=self.G.order,
            prime=self.p,
            p_solvable=self.p_solvable,
            verdicts={kind: verdict},
            blocks=list(blocks),
            propositions=propositions or {},
            seed=self.seed,
            hypothesis=hypothesis,
        )

    def hypothesis_label(self):
        """Метка для проверок, которые выполняются и без p-разрешимости."""
        return None if self.p_solvable else HYPOTHESIS_LABEL


def _block_record(B, b):
    return BlockRecord(
        id=B.label,
        degrees=list(B.degrees),
        defect=B.defect,
        defect_group_order=B.prime ** B.defect,
        correspondent=b.label,
    )


def _irr0_degrees(block):
    return sorted(block.table.degrees[i] for i in block.heights.irr0)


def verify_theorem_A(G, p, name='G', seed=0, ibr_fixture=None):
    """
    Для каждого блока B: соответствие Брауэра b, затем сопоставления по
    делимости Irr_0(B) -> Irr_0(b) и IBr_0(B) -> IBr_0(b).
    """
    ctx = GroupContext(G, p, name, seed, ibr_fixture)
    records = []
    verdicts = []
    for B in ctx.blocks:
        b = brauer_correspondent(B)
        record = _block_record(B, b)
        record.irr0_left = _irr0_degrees(B)
        record.irr0_right = _irr0_degrees(b)
        record.irr0_matching = divisibility_matching(record.irr0_left, record.irr0_right)
        verdicts.append(PASS if record.irr0_matching.perfect else FAIL)

        data_G, data_N = ctx.brauer, ctx.brauer_for(b.group)
        if data_G is None or data_N is None:
            verdicts.append(INCONCLUSIVE)
        else:
            left = ctx.brauer_block(data_G, B)
            right = ctx.brauer_block(data_N, b)
            record.ibr0_left = sorted(data_G.ibr[j].degree for j in left.irr0)
            record.ibr0_right = sorted(data_N.ibr[j].degree for j in right.irr0)
            record.ibr0_matching = divisibility_matching(record.ibr0_left, record.ibr0_right)
            verdicts.append(PASS if record.ibr0_matching.perfect else FAIL)
        records.append(record)
    return ctx.report('am', combine(verdicts), blocks=records, hypothesis=ctx.hypothesis_label())


def verify_theorem_B(G, p, name='G', seed=0):
    """dim(b) | dim(B) для каждого блока; p-части делятся всегда."""
    ctx = GroupContext(G, p, name, seed)
    records = []
    verdicts = []
    for B in ctx.blocks:
        b = brauer_correspondent(B)
        record = _block_record(B, b)
        record.dim_B = B.dim
        record.dim_b = b.dim
        record.dim_divides = B.dim % b.dim == 0
        record.dim_p_part_divides = p_part(B.dim, p) % p_part(b.dim, p) == 0
        if not record.dim_p_part_divides:
            logger.warning('%s p=%s %s: p-часть dim(b) не делит p-часть dim(B)', name, p, B.label)
        verdicts.append(PASS if record.dim_divides and record.dim_p_part_divides else FAIL)
        records.append(record)
    return ctx.report('dim', combine(verdicts), blocks=records, hypothesis=ctx.hypothesis_label())


def _restrict_brauer(phi, L):
    return ClassFunction(L, [phi.value_at(cls.representative) for cls in L.classes])


def _ibr_over(data, L, theta):
    return [
        j for j, phi in enumerate(data.ibr)
        if _restrict_brauer(phi, L).inner_product(theta)
    ]


def _p_prime(degrees, p):
    return [d for d in degrees if d % p]


def verify_glauberman_lift(G, L, Q, theta, p, seed=0):
    """
    Сравнивает Irr(G|ϑ) с Irr(N_G(Q)|f_Q(ϑ)) (и IBr для p-разрешимой G)
    сопоставлениями по делимости, целиком и на подмножествах p'-степени.
    """
    if not L.is_normal_in(G):
        raise PreconditionError('L is not normal in G')
    if L.order % p == 0:
        raise PreconditionError(f"L is not a {p}'-group")
    check_coprime_action(L, Q, p)
    if not join(L, Q).is_normal_in(G):
        raise PreconditionError('LQ is not normal in G')
    record = {'L_order': L.order, 'Q_order': Q.order, 'theta_degree': int(theta.degree)}
    if any(theta.conjugate_by(g) != theta for g in G.generators):
        record['verdict'] = HYPOTHESIS_NOT_MET
        return record

    instance = glauberman_correspondent(L, Q, theta, p, seed)
    N = normalizer(G, Q)
    C = instance.centralizer
    f = instance.correspondent
    table_G = character_table(G, seed)
    table_N = character_table(N, seed)
    left = sorted(table_G.degrees[i] for i in irr_over(G, L, theta, seed))
    right = sorted(table_N.degrees[i] for i in irr_over(N, C, f, seed))
    matchings = [
        divisibility_matching(left, right),
        divisibility_matching(_p_prime(left, p), _p_prime(right, p)),
    ]
    record.update({
        'f_degree': int(f.degree),
        'normalizer_order': N.order,
        'irr_left': left,
        'irr_right': right,
        'irr_matched': matchings[0].perfect,
        'irr_p_prime_matched': matchings[1].perfect,
    })
    if is_p_solvable(G, p):
        data_G = ibr_fong_swan(G, p, seed)
        data_N = ibr_fong_swan(N, p, seed)
        brauer_left = sorted(data_G.ibr[j].degree for j in _ibr_over(data_G, L, theta))
        brauer_right = sorted(data_N.ibr[j].degree for j in _ibr_over(data_N, C, f))
        matchings += [
            divisibility_matching(brauer_left, brauer_right),
            divisibility_matching(_p_prime(brauer_left, p), _p_prime(brauer_right, p)),
        ]
        record.update({
            'ibr_left': brauer_left,
            'ibr_right': brauer_right,
            'ibr_matched': matchings[2].perfect,
            'ibr_p_prime_matched': matchings[3].perfect,
        })
    record['verdict'] = PASS if all(m.perfect for m in matchings) else FAIL
    return record


def glauberman_instances(G, p, seed=0):
    """L = O_{p'}(G), Q ∈ Syl_p(O_{p',p}(G)) и все G-инвариантные ϑ ∈ Irr(L)."""
    L = p_prime_core(G, p)
    Q = sylow_subgroup(p_prime_p_core(G, p), p, seed)
    table = character_table(L, seed)
    return [(L, Q, table.irreducibles[j]) for j in invariant_characters(L, G, seed)]


def verify_glauberman(G, p, name='G', seed=0):
    ctx = GroupContext(G, p, name, seed)
    if not ctx.p_solvable:
        return ctx.report('glauberman', HYPOTHESIS_NOT_MET)
    records = [
        verify_glauberman_lift(G, L, Q, theta, p, seed)
        for L, Q, theta in glauberman_instances(G, p, seed)
    ]
    return ctx.report(
        'glauberman',
        combine(r['verdict'] for r in records),
        propositions={'glauberman': records},
    )


def verify_sylow_normalizer_divisibility(G, p, U, P):
    """|U : N_U(P ∩ U)| делит |G : N_G(P)| при P ∩ U ∈ Syl_p(U)."""
    if not is_p_power(P.order, p):
        raise PreconditionError(f'P of order {P.order} is not a {p}-group')
    Q = intersection(P, U)
    hypothesis = Q.order == p_part(U.order, p)
    left = U.order // normalizer(U, Q).order
    right = G.order // normalizer(G, P).order
    divides = right % left == 0
    if not hypothesis:
        verdict = HYPOTHESIS_NOT_MET
    else:
        verdict = PASS if divides else FAIL
    return {
        'U_order': U.order,
        'P_order': P.order,
        'left_index': left,
        'right_index': right,
        'hypothesis': hypothesis,
        'divides': divides,
        'verdict': verdict,
    }


def navarro_samples(G, p, count, seed=0):
    """
    Пары (U, P) с P ∩ U ∈ Syl_p(U). Если их не больше count, берутся все,
    иначе берётся выборка, определяемая seed.
    """
    subgroups = all_subgroups(G)
    p_subgroups = [P for P in subgroups if is_p_power(P.order, p)]
    pairs = [
        (U, P) for U in subgroups for P in p_subgroups
        if intersection(P, U).order == p_part(U.order, p)
    ]
    if len(pairs) <= count:
        return pairs
    chosen = sorted(random.Random(seed).sample(range(len(pairs)), count))
    return [pairs[i] for i in chosen]


def verify_navarro(G, p, name='G', seed=0, documented=(), samples=None):
    """
    Выборочная проверка делимости индексов для p-разрешимой G и
    воспроизведение задокументированных случаев (U, P, ожидание).
    """
    ctx = GroupContext(G, p, name, seed)
    samples = samples if samples is not None else settings.BLOCKFORGE_NAVARRO_SAMPLES
    records = []
    verdicts = []
    if ctx.p_solvable:
        for U, P in navarro_samples(G, p, samples, seed):
            record = verify_sylow_normalizer_divisibility(G, p, U, P)
            records.append(record)
            verdicts.append(record['verdict'])
    reproduced = True
    for U, P, expected in documented:
        record = verify_sylow_normalizer_divisibility(G, p, U, P)
        record['documented'] = True
        record['reproduced'] = all(record[key] == value for key, value in expected.items())
        reproduced = reproduced and record['reproduced']
        records.append(record)
    if not reproduced:
        verdict = FAIL
    elif not ctx.p_solvable:
        verdict = HYPOTHESIS_NOT_MET
    else:
        verdict = combine(v for v in verdicts if v != HYPOTHESIS_NOT_MET)
    return ctx.report('navarro', verdict, propositions={'navarro': records})


def regular_block_character(block):
    """ρ_B = Σ_{χ ∈ B} χ(1) χ"""
    table = block.table
    total = None
    for i in block.members:
        term = table.irreducibles[i] * table.degrees[i]
        total = term if total is None else total + term
    return total


def verify_regular_covering(G, N, p, seed=0):
    """
    (ρ_B)_N = n Σ_{c ∈ b^G} ρ_c с целым n > 0 для каждого B и покрываемого b;
    также dim(b) | dim(B).
    """
    reduction = reduction_for(G, p)
    records = []
    for B in block_partition(G, p, reduction, seed):
        restricted = regular_block_character(B).restrict(N)
        covered = covered_blocks(B, N)
        for b in covered:
            orbit = block_orbit(b, G)
            orbit_sum = None
            for c in orbit:
                rho = regular_block_character(c)
                orbit_sum = rho if orbit_sum is None else orbit_sum + rho
            n = restricted.degree / orbit_sum.degree
            holds = n.denominator == 1 and n > 0 and restricted == orbit_sum * n
            records.append({
                'N_order': N.order,
                'block': B.label,
                'covered': b.label,
                'orbit_size': len(orbit),
                'single_orbit': sorted(c.index for c in orbit) == sorted(c.index for c in covered),
                'n': int(n) if n.denominator == 1 else str(n),
                'identity_holds': holds,
                'dim_divides': B.dim % b.dim == 0,
                'verdict': PASS if holds and B.dim % b.dim == 0 else FAIL,
            })
    return records


def verify_regular(G, p, normal_subgroups=(), name='G', seed=0):
    ctx = GroupContext(G, p, name, seed)
    records = []
    for N in normal_subgroups:
        records.extend(verify_regular_covering(G, N, p, seed))
    return ctx.report(
        'regular',
        combine(r['verdict'] for r in records),
        propositions={'regular_covering': records},
    )


def verify_fong(G, p, name='G', seed=0):
    """Теорема Фонга для O_{p'}(G) и Фонг–Рейнольдс для каждого блока."""
    ctx = GroupContext(G, p, name, seed)
    if not ctx.p_solvable:
        return ctx.report('fong', HYPOTHESIS_NOT_MET)
    fong_block = verify_fong_block(G, p, seed)
    L = p_prime_core(G, p)
    fong_reynolds = [verify_fong_reynolds(B, L) for B in ctx.blocks]
    verdict = combine(r['verdict'] for r in fong_block + fong_reynolds)
    return ctx.report('fong', verdict, propositions={
        'fong_block': fong_block,
        'fong_reynolds': fong_reynolds,
    })


def verify_extension(G, p, name='G', seed=0):
    ctx = GroupContext(G, p, name, seed)
    if not ctx.p_solvable:
        return ctx.report('extension', HYPOTHESIS_NOT_MET)
    records = verify_opg_extension(G, p, seed)
    return ctx.report('extension', combine(r['verdict'] for r in records), propositions={'extension': records})


def _divisibility_bijections(left, right, limit):
    """Все биекции i -> j с right[j] | left[i]; None, если их больше limit."""
    found = []
    if len(left) != len(right):
        return found
    used = [False] * len(right)
    current = []

    def extend(i):
        if len(found) > limit:
            return
        if i == len(left):
            found.append(tuple(current))
            return
        for j in range(len(right)):
            if not used[j] and left[i] % right[j] == 0:
                used[j] = True
                current.append(j)
                extend(i + 1)
                current.pop()
                used[j] = False

    extend(0)
    return found if len(found) <= limit else None


def explore_decomposition_compatibility(G, p, name='G', seed=0, bound=None):
    """
    Поиск пары сопоставлений (Ω, Ψ) с d_{χφ} = d_{Ω(χ)Ψ(φ)} на строках и
    столбцах высоты 0. Отсутствие пары считается наблюдением, а не ошибкой.
    """
    ctx = GroupContext(G, p, name, seed)
    if not ctx.p_solvable:
        return ctx.report('q35', HYPOTHESIS_NOT_MET)
    bound = bound if bound is not None else settings.BLOCKFORGE_Q35_BOUND
    records = []
    verdicts = []
    data_G = ctx.brauer
    for B in ctx.blocks:
        b = brauer_correspondent(B)
        data_N = ctx.brauer_for(b.group)
        rows_B, rows_b = list(B.heights.irr0), list(b.heights.irr0)
        cols_B = list(ctx.brauer_block(data_G, B).irr0)
        cols_b = list(ctx.brauer_block(data_N, b).irr0)
        omegas = _divisibility_bijections(
            [B.table.degrees[i] for i in rows_B], [b.table.degrees[i] for i in rows_b], bound,
        )
        psis = _divisibility_bijections(
            [data_G.ibr[j].degree for j in cols_B], [data_N.ibr[j].degree for j in cols_b], bound,
        )
        record = {'block': B.label, 'correspondent': b.label}
        if omegas is None or psis is None or len(omegas) * len(psis) > bound:
            record.update({'searched': 0, 'found': False, 'verdict': INCONCLUSIVE})
            records.append(record)
            verdicts.append(INCONCLUSIVE)
            continue
        found = None
        for omega in omegas:
            for psi in psis:
                if all(
                    data_G.decomposition[rows_B[x]][cols_B[y]]
                    == data_N.decomposition[rows_b[omega[x]]][cols_b[psi[y]]]
                    for x in range(len(rows_B)) for y in range(len(cols_B))
                ):
                    found = (omega, psi)
                    break
            if found:
                break
        record.update({'searched': len(omegas) * len(psis), 'found': found is not None})
        if found:
            omega, psi = found
            record['omega'] = [
                [B.table.degrees[rows_B[x]], b.table.degrees[rows_b[omega[x]]]] for x in range(len(rows_B))
            ]
            record['psi'] = [
                [data_G.ibr[cols_B[y]].degree, data_N.ibr[cols_b[psi[y]]].degree] for y in range(len(cols_B))
            ]
        record['verdict'] = PASS
        records.append(record)
        verdicts.append(PASS)
    return ctx.report('q35', combine(verdicts), propositions={'question35': records})
