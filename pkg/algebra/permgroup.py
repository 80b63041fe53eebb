"""
Арифметика групп подстановок: порядок, классы сопряжённости,
централизаторы и нормализаторы, силовские подгруппы, ядра O_p и O_{p'},
факторгруппы и p-разрешимость.

Элемент группы хранится как кортеж образов точек 0..n-1. Произведение
mul(a, b) означает «сначала a, затем b», как в sympy.combinatorics;
сопряжение x^g = g^-1 x g.
"""

import logging
import math
import random
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from django.conf import settings
from sympy import multiplicity, primefactors
from sympy.combinatorics import Permutation as SympyPermutation
from sympy.combinatorics import PermutationGroup as SympyPermutationGroup

from .exceptions import DomainError, InputError, InternalError

logger = logging.getLogger(__name__)


def identity(degree):
    return tuple(range(degree))


def mul(a, b):
    return tuple(b[i] for i in a)


def inverse(a):
    result = [0] * len(a)
    for point, image in enumerate(a):
        result[image] = point
    return tuple(result)


def conjugate(x, g):
    """x^g = g^-1 x g"""
    return mul(mul(inverse(g), x), g)


def power(x, k):
    if k < 0:
        x, k = inverse(x), -k
    result = identity(len(x))
    base = x
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def cycles(x):
    """Нетривиальные циклы, каждый начинается с наименьшей точки."""
    seen = set()
    result = []
    for start in range(len(x)):
        if start in seen or x[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = x[start]
        while point != start:
            cycle.append(point)
            seen.add(point)
            point = x[point]
        result.append(tuple(cycle))
    return result


def element_order(x):
    return math.lcm(1, *(len(c) for c in cycles(x)))


def is_p_power(n, p):
    return n == p ** multiplicity(p, n)


def p_part(n, p):
    return p ** multiplicity(p, n)


def generate_closure(degree, generators):
    """Все элементы группы, порождённой generators (обход в ширину)."""
    one = identity(degree)
    elements = {one}
    frontier = [one]
    while frontier:
        x = frontier.pop()
        for g in generators:
            y = mul(x, g)
            if y not in elements:
                elements.add(y)
                frontier.append(y)
    return frozenset(elements)


@dataclass(frozen=True)
class ConjugacyClass:
    """Класс сопряжённости: представитель (наименьший элемент), размер, порядок элементов."""
    representative: tuple
    size: int
    element_order: int
    index: int
    members: frozenset = field(repr=False, compare=False)


class PermutationGroup:
    """Конечная группа подстановок степени degree, заданная образующими."""

    def __init__(self, degree, generators=(), *, elements=None):
        self.degree = degree
        one = identity(degree)
        self.generators = tuple(g for g in generators if g != one)
        if elements is not None:
            self.__dict__['element_set'] = frozenset(elements)

    def __repr__(self):
        return f'<PermutationGroup degree={self.degree} order={self.order}>'

    def __eq__(self, other):
        if not isinstance(other, PermutationGroup):
            return NotImplemented
        return self.degree == other.degree and self.element_set == other.element_set

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def __contains__(self, x):
        return x in self.element_set

    @cached_property
    def sympy_group(self):
        gens = self.generators or (identity(self.degree),)
        return SympyPermutationGroup(
            [SympyPermutation(list(g), size=self.degree) for g in gens]
        )

    @cached_property
    def stabilizer_chain(self):
        """База и размеры базисных трансверсалей (Шрайер–Симс в sympy)."""
        group = self.sympy_group
        return tuple(group.base), tuple(len(t) for t in group.basic_transversals)

    @cached_property
    def order(self):
        if 'element_set' in self.__dict__:
            return len(self.element_set)
        return math.prod(self.stabilizer_chain[1])

    @cached_property
    def element_set(self):
        return generate_closure(self.degree, self.generators)

    @cached_property
    def elements(self):
        return tuple(sorted(self.element_set))

    @property
    def identity(self):
        return identity(self.degree)

    @cached_property
    def classes(self):
        return conjugacy_classes(self)

    @cached_property
    def class_index(self):
        return {x: cls.index for cls in self.classes for x in cls.members}

    def class_of(self, x):
        return self.class_index[x]

    @cached_property
    def exponent(self):
        return math.lcm(1, *(cls.element_order for cls in self.classes))

    @property
    def is_trivial(self):
        return not self.generators

    def is_abelian(self):
        return all(mul(a, b) == mul(b, a) for a in self.generators for b in self.generators)

    def is_subgroup_of(self, G):
        return self.degree == G.degree and self.element_set <= G.element_set

    def is_normal_in(self, G):
        if not self.is_subgroup_of(G):
            return False
        return all(conjugate(h, g) in self.element_set for g in G.generators for h in self.generators)


def build_group(degree, generators):
    """
    Строит группу по степени и списку образующих (кортежи образов 0..n-1).
    Проверяет биективность образующих и границу настольного масштаба.
    """
    if degree < 1:
        raise InputError(f'degree must be positive, got {degree}')
    checked = []
    for number, g in enumerate(generators, start=1):
        g = tuple(g)
        if len(g) != degree:
            raise InputError(f'generator {number} has degree {len(g)}, expected {degree}')
        if sorted(g) != list(range(degree)):
            raise InputError(f'generator {number} is not a bijection of 1..{degree}')
        checked.append(g)
    group = PermutationGroup(degree, checked)
    limit = getattr(settings, 'BLOCKFORGE_MAX_ORDER', 100000)
    if group.order > limit:
        raise DomainError(f'group order {group.order} exceeds the desk bound {limit}')
    logger.debug('Построена группа степени %s порядка %s', degree, group.order)
    return group


def conjugacy_classes(G):
    """Классы сопряжённости, упорядоченные по (порядок элемента, размер, представитель)."""
    seen = set()
    found = []
    for x in G.elements:
        if x in seen:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in G.generators:
                z = conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        seen |= orbit
        found.append((element_order(x), len(orbit), x, frozenset(orbit)))
    found.sort(key=lambda item: item[:3])
    return tuple(
        ConjugacyClass(representative=rep, size=size, element_order=order, index=index, members=members)
        for index, (order, size, rep, members) in enumerate(found)
    )


def subgroup_from_elements(degree, elements):
    """Подгруппа по множеству элементов; образующие выбираются жадно по порядку элементов."""
    element_set = frozenset(elements)
    gens = []
    closure = {identity(degree)}
    for x in sorted(element_set):
        if x not in closure:
            gens.append(x)
            closure = generate_closure(degree, gens)
    if closure != element_set:
        raise DomainError('elements do not form a subgroup')
    return PermutationGroup(degree, gens, elements=element_set)


def subgroup(G, generators):
    H = PermutationGroup(G.degree, generators)
    if not H.is_subgroup_of(G):
        raise DomainError('generators do not lie in the group')
    return H


def join(*groups):
    degree = groups[0].degree
    return PermutationGroup(degree, [g for H in groups for g in H.generators])


def intersection(H, K):
    return subgroup_from_elements(H.degree, H.element_set & K.element_set)


def trivial_subgroup(G):
    return PermutationGroup(G.degree, (), elements=[G.identity])


def centralizer(G, x):
    if x not in G:
        raise DomainError('element is not in the group')
    return subgroup_from_elements(G.degree, [g for g in G.elements if mul(g, x) == mul(x, g)])


def subgroup_centralizer(G, H):
    """C_G(H): достаточно коммутировать с образующими H."""
    return subgroup_from_elements(
        G.degree,
        [g for g in G.elements if all(mul(g, h) == mul(h, g) for h in H.generators)],
    )


def normalizer(G, H):
    if not H.is_subgroup_of(G):
        raise DomainError('H is not a subgroup of G')
    members = H.element_set
    return subgroup_from_elements(
        G.degree,
        [g for g in G.elements if all(conjugate(h, g) in members for h in H.generators)],
    )


def conjugate_subgroup(H, g):
    return PermutationGroup(H.degree, [conjugate(h, g) for h in H.generators])


def are_conjugate(G, A, B):
    if A.order != B.order:
        return False
    target = B.element_set
    return any(
        frozenset(conjugate(a, g) for a in A.generators) <= target
        for g in G.elements
    )


def normal_closure(G, generators):
    gens = list(generators)
    closure = generate_closure(G.degree, gens)
    changed = True
    while changed:
        changed = False
        for h in list(gens):
            for g in G.generators:
                c = conjugate(h, g)
                if c not in closure:
                    gens.append(c)
                    closure = generate_closure(G.degree, gens)
                    changed = True
    return PermutationGroup(G.degree, gens, elements=closure)


def _core(G, accepts):
    reps = []
    for cls in G.classes[1:]:
        if not accepts(cls.element_order):
            continue
        if accepts(normal_closure(G, [cls.representative]).order):
            reps.append(cls.representative)
    return normal_closure(G, reps)


def p_core(G, p):
    """O_p(G): соединение нормальных замыканий классов, дающих p-группы."""
    return _core(G, lambda n: is_p_power(n, p))


def p_prime_core(G, p):
    """O_{p'}(G)"""
    return _core(G, lambda n: n % p != 0)


def p_prime_p_core(G, p):
    """O_{p',p}(G): полный прообраз O_p(G/O_{p'}(G))."""
    L = p_prime_core(G, p)
    reps = list(L.generators)
    for cls in G.classes[1:]:
        M = normal_closure(G, list(L.generators) + [cls.representative])
        if is_p_power(M.order // L.order, p):
            reps.append(cls.representative)
    return normal_closure(G, reps)


def sylow_subgroup(G, p, seed=0):
    """
    Силовская p-подгруппа: P растёт p-элементами из N_G(P) \\ P.
    Выбор элемента случаен, но определяется seed.
    """
    target = p_part(G.order, p)
    rng = random.Random(seed)
    P = trivial_subgroup(G)
    while P.order < target:
        N = normalizer(G, P)
        candidates = [
            x for x in N.elements
            if x not in P.element_set and is_p_power(element_order(x), p)
        ]
        if not candidates:
            raise InternalError(f'no p-element in N_G(P) \\ P with |P| = {P.order} < {target}')
        P = PermutationGroup(G.degree, P.generators + (rng.choice(candidates),))
    return P


def coset_action(G, N):
    """
    Действие G правыми сдвигами на правых смежных классах Nx.
    Возвращает (представители классов, отображение g -> подстановка классов).
    """
    if not N.is_normal_in(G):
        raise DomainError('N is not a normal subgroup of G')
    reps = []
    index = {}
    for x in G.elements:
        if x in index:
            continue
        for n in N.elements:
            index[mul(n, x)] = len(reps)
        reps.append(x)

    def image(g):
        return tuple(index[mul(r, g)] for r in reps)

    return reps, image


def quotient_action(G, N):
    """Точная подстановочная реализация G/N на правых смежных классах."""
    reps, image = coset_action(G, N)
    return PermutationGroup(len(reps), [image(g) for g in G.generators])


def is_p_solvable(G, p):
    """Чередуем O_{p'} и O_p через факторгруппы, пока не дойдём до 1."""
    if G.order % p:
        return True
    H = G
    while not H.is_trivial:
        L = p_prime_core(H, p)
        if not L.is_trivial:
            H = quotient_action(H, L)
            continue
        K = p_core(H, p)
        if K.is_trivial:
            return False
        H = quotient_action(H, K)
    return True


def normal_subgroups(G):
    """Все нормальные подгруппы как соединения нормальных замыканий классов."""
    closures = []
    for cls in G.classes:
        C = normal_closure(G, [cls.representative])
        if C not in closures:
            closures.append(C)
    found = {trivial_subgroup(G)}
    frontier = list(found)
    while frontier:
        N = frontier.pop()
        for C in closures:
            if C.element_set <= N.element_set:
                continue
            J = join(N, C)
            if J not in found:
                found.add(J)
                frontier.append(J)
    return sorted(found, key=lambda N: (N.order, N.elements))


def composition_factor_orders(G):
    """Порядки композиционных факторов через максимальные нормальные подгруппы (перебором)."""
    factors = []
    H = G
    while H.order > 1:
        M = max((N for N in normal_subgroups(H) if N.order < H.order), key=lambda N: N.order)
        factors.append(H.order // M.order)
        H = M
    return factors


@lru_cache(maxsize=None)
def all_subgroups(G):
    """Все подгруппы: замыкание циклических подгрупп относительно соединений."""
    cyclic = {}
    for x in G.elements:
        C = PermutationGroup(G.degree, [x])
        cyclic.setdefault(C.element_set, C)
    found = dict(cyclic)
    frontier = list(found.values())
    while frontier:
        H = frontier.pop()
        for C in cyclic.values():
            if C.element_set <= H.element_set:
                continue
            J = subgroup_from_elements(G.degree, generate_closure(G.degree, H.generators + C.generators))
            if J.element_set not in found:
                found[J.element_set] = J
                frontier.append(J)
    logger.debug('Найдено %s подгрупп группы порядка %s', len(found), G.order)
    return tuple(sorted(found.values(), key=lambda H: (H.order, H.elements)))


def subgroups_of_order(G, m, seed=0):
    """
    Представители классов сопряжённости подгрупп порядка m. Для p-степени m
    поиск ведётся внутри одной силовской подгруппы, затем классы склеиваются в G.
    """
    if m == 1:
        return [trivial_subgroup(G)]
    primes = primefactors(m)
    if len(primes) == 1:
        pool = all_subgroups(sylow_subgroup(G, primes[0], seed))
    else:
        pool = all_subgroups(G)
    reps = []
    for H in pool:
        if H.order == m and not any(are_conjugate(G, H, K) for K in reps):
            reps.append(H)
    return reps


def format_cycles(x):
    parts = cycles(x)
    if not parts:
        return '()'
    return ''.join('(' + ' '.join(str(point + 1) for point in c) + ')' for c in parts)


_POINT = re.compile(r'[^\s,]+')
_DEGREE = re.compile(r'\s*degree\s*:\s*(\S+)\s*')


def parse_cycles(text, degree, line=None):
    """Разбор записи в непересекающихся циклах, точки 1..degree."""
    images = list(range(degree))
    seen = set()
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch != '(':
            raise InputError(f"expected '(' but found {ch!r}", line, pos + 1)
        close = text.find(')', pos)
        if close < 0:
            raise InputError('unclosed cycle', line, pos + 1)
        points = []
        for match in _POINT.finditer(text, pos + 1, close):
            token = match.group()
            column = match.start() + 1
            if not token.isdigit():
                raise InputError(f'bad point {token!r}', line, column)
            point = int(token)
            if not 1 <= point <= degree:
                raise InputError(f'point {point} outside 1..{degree}', line, column)
            if point in seen:
                raise InputError(f'point {point} repeated', line, column)
            seen.add(point)
            points.append(point - 1)
        for a, b in zip(points, points[1:] + points[:1]):
            images[a] = b
        pos = close + 1
    return tuple(images)


def parse_group(text):
    """
    Формат файла группы: строка `degree: n`, затем по одной образующей в строке
    в циклической записи, например `(1 2)(3 4)`. Пустые строки и `#` игнорируются.
    """
    degree = None
    gens = []
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split('#', 1)[0]
        if not content.strip():
            continue
        if degree is None:
            match = _DEGREE.fullmatch(content)
            if not match:
                raise InputError("expected 'degree: n'", number, len(content) - len(content.lstrip()) + 1)
            if not match.group(1).isdigit() or int(match.group(1)) < 1:
                raise InputError(f'bad degree {match.group(1)!r}', number, match.start(1) + 1)
            degree = int(match.group(1))
            continue
        gens.append(parse_cycles(content, degree, line=number))
    if degree is None:
        raise InputError("missing 'degree: n' line", 1, 1)
    return build_group(degree, gens)
