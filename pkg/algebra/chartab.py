"""
Таблица обыкновенных характеров методом Диксона–Шнайдера и алгебра
функций классов: ограничение, индукция, скалярное произведение, разложение.
"""

import logging
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from sympy import isprime, primerange, primitive_root

from .cyclotomic import Cyclotomic
from .exceptions import DomainError, InternalError
from .linalg import nullspace_mod
from .permgroup import (
    conjugate, format_cycles, inverse, mul, power, subgroup_from_elements,
)

logger = logging.getLogger(__name__)


class ClassFunction:
    """Функция классов группы: значения (Cyclotomic) по классам в порядке group.classes."""

    def __init__(self, group, values):
        self.group = group
        self.values = tuple(Cyclotomic.coerce(v) for v in values)
        if len(self.values) != len(group.classes):
            raise DomainError('class function length does not match the number of classes')

    def __repr__(self):
        return f'<ClassFunction degree={self.degree}>'

    def __getitem__(self, k):
        return self.values[k]

    def __len__(self):
        return len(self.values)

    def _same_group(self, other):
        if not (self.group is other.group or self.group == other.group):
            raise DomainError('class functions of different groups')

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return (self.group is other.group or self.group == other.group) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __add__(self, other):
        self._same_group(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same_group(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other):
        if isinstance(other, ClassFunction):
            self._same_group(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return ClassFunction(self.group, [a / scalar for a in self.values])

    @property
    def degree(self):
        return self.values[0].to_rational()

    def value_at(self, x):
        return self.values[self.group.class_of(x)]

    def conj(self):
        return ClassFunction(self.group, [v.conjugate() for v in self.values])

    def galois(self, k):
        return ClassFunction(self.group, [v.galois(k) for v in self.values])

    def restrict(self, H):
        """Ограничение на подгруппу H."""
        if not H.is_subgroup_of(self.group):
            raise DomainError('restriction to a non-subgroup')
        return ClassFunction(H, [self.value_at(cls.representative) for cls in H.classes])

    def induce(self, G):
        """ψ^G(x_k) = |G| / (|H| |C_k|) · Σ_{y ∈ C_k ∩ H} ψ(y)"""
        H = self.group
        if not H.is_subgroup_of(G):
            raise DomainError('induction to a group not containing H')
        sums = [Cyclotomic.rational(0) for _ in G.classes]
        for y in H.elements:
            k = G.class_of(y)
            sums[k] = sums[k] + self.value_at(y)
        return ClassFunction(G, [
            total * Fraction(G.order, H.order * cls.size)
            for total, cls in zip(sums, G.classes)
        ])

    def conjugate_by(self, g):
        """ϑ^g(x) = ϑ(g x g^-1); g нормализует группу функции."""
        g_inv = inverse(g)
        return ClassFunction(self.group, [
            self.value_at(conjugate(cls.representative, g_inv)) for cls in self.group.classes
        ])

    def inner_product(self, other):
        self._same_group(other)
        total = Cyclotomic.rational(0)
        for a, b, cls in zip(self.values, other.values, self.group.classes):
            total = total + a * b.conjugate() * cls.size
        return total / self.group.order

    def kernel_contains(self, N):
        degree = self.values[0]
        return all(self.value_at(x) == degree for x in N.generators)


def inner_product(alpha, beta):
    return alpha.inner_product(beta)


def restrict(chi, H):
    return chi.restrict(H)


def induce(psi, G):
    return psi.induce(G)


@lru_cache(maxsize=None)
def structure_constants(G):
    """a[i][j][k] = #{(x, y) ∈ C_i × C_j : xy = z_k}, где z_k представитель C_k."""
    r = len(G.classes)
    a = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k, target in enumerate(G.classes):
        z = target.representative
        for i, cls in enumerate(G.classes):
            for x in cls.members:
                a[i][G.class_of(mul(inverse(x), z))][k] += 1
    return tuple(tuple(tuple(row) for row in plane) for plane in a)


def class_multiplication_coefficient(G, i, j, k):
    return structure_constants(G)[i][j][k]


def power_map(G, n):
    """Номер класса x^n для каждого класса x."""
    return tuple(G.class_of(power(cls.representative, n)) for cls in G.classes)


def dixon_prime(exponent, order):
    """Наименьшее простое q ≡ 1 (mod e) с q > 2√|G|."""
    q = exponent + 1
    while not (isprime(q) and q * q > 4 * order):
        q += exponent
    return q


def _split(spaces, matrix, q):
    """Разбивает каждое подпространство на собственные подпространства matrix над GF(q)."""
    r = len(matrix)
    result = []
    for basis in spaces:
        if len(basis) == 1:
            result.append(basis)
            continue
        images = [[sum(matrix[row][col] * b[col] for col in range(r)) % q for row in range(r)] for b in basis]
        pieces = []
        found = 0
        for lam in range(q):
            equations = [
                [(images[t][row] - lam * basis[t][row]) % q for t in range(len(basis))]
                for row in range(r)
            ]
            kernel = nullspace_mod(equations, len(basis), q)
            if not kernel:
                continue
            pieces.append([
                [sum(c[t] * basis[t][col] for t in range(len(basis))) % q for col in range(r)]
                for c in kernel
            ])
            found += len(kernel)
            if found == len(basis):
                break
        if found != len(basis):
            raise InternalError('class matrix is not diagonalizable over GF(q)')
        result.extend(pieces)
    return result


def _eigenvectors(G, q, seed):
    a = structure_constants(G)
    r = len(G.classes)
    spaces = [[[int(i == j) for j in range(r)] for i in range(r)]]
    for i in range(1, r):
        if all(len(s) == 1 for s in spaces):
            break
        spaces = _split(spaces, [[a[i][j][k] for k in range(r)] for j in range(r)], q)
    rng = random.Random(seed)
    attempts = 0
    while any(len(s) > 1 for s in spaces):
        attempts += 1
        if attempts > 20:
            raise InternalError(f'eigenspace splitting did not finish for q={q}')
        logger.warning('Разбиение пространств не завершено, случайная комбинация #%s', attempts)
        coeffs = [rng.randrange(q) for _ in range(r)]
        combined = [[sum(coeffs[i] * a[i][j][k] for i in range(r)) % q for k in range(r)] for j in range(r)]
        spaces = _split(spaces, combined, q)
    return [s[0] for s in spaces]


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Полная таблица Irr(G) с точными круговыми значениями."""
    group: object
    exponent: int
    dixon_prime: int
    power_maps: dict
    irreducibles: tuple
    seed: int = 0

    @property
    def classes(self):
        return self.group.classes

    @cached_property
    def degrees(self):
        return tuple(int(chi.degree) for chi in self.irreducibles)

    def __len__(self):
        return len(self.irreducibles)

    def __getitem__(self, i):
        return self.irreducibles[i]

    def index_of(self, chi):
        for i, psi in enumerate(self.irreducibles):
            if psi == chi:
                return i
        raise DomainError('class function is not an irreducible character of this table')

    def constituents(self, alpha):
        """[(номер χ, кратность)] с ненулевой кратностью."""
        result = []
        for i, chi in enumerate(self.irreducibles):
            m = alpha.inner_product(chi)
            if m:
                result.append((i, m.to_rational()))
        return result

    def regular_character(self):
        total = ClassFunction(self.group, [0] * len(self.classes))
        for chi in self.irreducibles:
            total = total + chi * chi.degree
        return total

    def export(self):
        """Текстовая выгрузка: классы и строки таблицы."""
        lines = [
            f'order: {self.group.order}',
            f'exponent: {self.exponent}',
            f'classes: {len(self.classes)}',
        ]
        for cls in self.classes:
            lines.append(
                f'class {cls.index + 1}: {format_cycles(cls.representative)} '
                f'size {cls.size} order {cls.element_order}'
            )
        for i, chi in enumerate(self.irreducibles):
            lines.append(f'chi {i + 1}: ' + ' ; '.join(str(v) for v in chi.values))
        return '\n'.join(lines) + '\n'


def _lift(G, chi_mod, degree, q, zeta_hat, exponent):
    """Значения χ(x) = Σ μ_m ζ_o^m по кратностям собственных значений μ_m."""
    values = []
    for cls in G.classes:
        o = cls.element_order
        root = pow(zeta_hat, exponent // o, q)
        powers = [G.class_of(power(cls.representative, l)) for l in range(o)]
        o_inv = pow(o, -1, q)
        terms = {}
        for m in range(o):
            mu = o_inv * sum(chi_mod[powers[l]] * pow(root, (-m * l) % o, q) for l in range(o)) % q
            if mu > degree:
                raise InternalError(f'eigenvalue multiplicity {mu} exceeds degree {degree}')
            if mu:
                terms[m * (exponent // o)] = mu
        values.append(Cyclotomic.from_exponents(exponent, terms))
    return values


@lru_cache(maxsize=None)
def character_table(G, seed=0):
    """
    Диксон–Шнайдер: общие собственные векторы матриц классов над GF(q),
    степени из соотношения ортогональности, подъём значений дискретным
    преобразованием Фурье по степенным отображениям.
    """
    classes = G.classes
    order = G.order
    exponent = G.exponent
    q = dixon_prime(exponent, order)
    logger.debug('Таблица характеров: |G|=%s, классов %s, e=%s, q=%s', order, len(classes), exponent, q)

    inv_class = [G.class_of(inverse(cls.representative)) for cls in classes]
    zeta_hat = pow(int(primitive_root(q)), (q - 1) // exponent, q)
    rows = []
    for v in _eigenvectors(G, q, seed):
        if not v[0]:
            raise InternalError('eigenvector vanishes at the identity class')
        scale = pow(v[0], -1, q)
        omega = [x * scale % q for x in v]
        s = sum(omega[k] * omega[inv_class[k]] * pow(cls.size, -1, q) for k, cls in enumerate(classes)) % q
        target = order * pow(s, -1, q) % q
        degree = next(
            (d for d in range(1, math.isqrt(order) + 1) if order % d == 0 and d * d % q == target),
            None,
        )
        if degree is None:
            raise InternalError(f'no admissible degree for an eigenvector modulo {q}')
        chi_mod = [omega[k] * degree * pow(cls.size, -1, q) % q for k, cls in enumerate(classes)]
        rows.append(ClassFunction(G, _lift(G, chi_mod, degree, q, zeta_hat, exponent)))

    trivial = [chi for chi in rows if all(v == 1 for v in chi.values)]
    others = sorted(
        (chi for chi in rows if chi not in trivial),
        key=lambda chi: (chi.degree, tuple(v.coords for v in chi.values)),
    )
    irreducibles = tuple(trivial + others)
    if sum(chi.degree ** 2 for chi in irreducibles) != order:
        raise InternalError('sum of squared degrees differs from the group order')
    power_maps = {ell: power_map(G, ell) for ell in primerange(2, exponent + 1)}
    return CharacterTable(
        group=G,
        exponent=exponent,
        dixon_prime=q,
        power_maps=power_maps,
        irreducibles=irreducibles,
        seed=seed,
    )


def irr_over(G, N, theta, seed=0):
    """Номера χ ∈ Irr(G) с ⟨χ_N, ϑ⟩ ≠ 0."""
    table = character_table(G, seed)
    return [i for i, chi in enumerate(table.irreducibles) if chi.restrict(N).inner_product(theta)]


def inertia_group(G, N, theta):
    """G_ϑ = {g ∈ G : ϑ^g = ϑ}"""
    if not N.is_normal_in(G):
        raise DomainError('N is not normal in G')
    return subgroup_from_elements(G.degree, [g for g in G.elements if theta.conjugate_by(g) == theta])
