"""
Конечные поля GF(p^f) и редукция целых алгебраических чисел из Q(ζ_e)
по фиксированному максимальному идеалу над p.
"""

import logging
from functools import cached_property, lru_cache

from sympy import divisors, mod_inverse, multiplicity, n_order, primefactors
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_add, gf_from_int_poly, gf_irreducible_p, gf_mul, gf_neg, gf_rem, gf_sub,
)

from .cyclotomic import Cyclotomic
from .exceptions import DomainError

logger = logging.getLogger(__name__)


def _digits(n, p, width):
    """Цифры n по основанию p, старшая первой, ровно width штук."""
    digits = []
    for _ in range(width):
        n, r = divmod(n, p)
        digits.append(r)
    return digits[::-1]


def smallest_irreducible(p, f):
    """Лексикографически наименьший приведённый неприводимый многочлен степени f над GF(p)."""
    for n in range(p ** f):
        candidate = [1] + _digits(n, p, f)
        if gf_irreducible_p(candidate, p, ZZ):
            return tuple(candidate)
    raise DomainError(f'no irreducible polynomial of degree {f} over GF({p})')


class FiniteField:
    """GF(p^f) как GF(p)[a] / (m(a)), m выбран детерминированно."""

    def __init__(self, p, degree):
        self.p = p
        self.degree = degree
        self.modulus = smallest_irreducible(p, degree)
        self.order = p ** degree

    def __repr__(self):
        return f'<FiniteField GF({self.p}^{self.degree})>'

    def __eq__(self, other):
        return isinstance(other, FiniteField) and (self.p, self.degree) == (other.p, other.degree)

    def __hash__(self):
        return hash((self.p, self.degree))

    def _normalize(self, coeffs):
        return tuple(int(c) for c in gf_rem(gf_from_int_poly(list(coeffs), self.p), list(self.modulus), self.p, ZZ))

    def __call__(self, value):
        if isinstance(value, FiniteFieldElement):
            return value
        return FiniteFieldElement(self, self._normalize([int(value)]))

    @cached_property
    def zero(self):
        return self(0)

    @cached_property
    def one(self):
        return self(1)

    def from_index(self, n):
        """Элемент с номером n: цифры n по основанию p как коэффициенты."""
        return FiniteFieldElement(self, self._normalize(_digits(n, self.p, self.degree)))

    def elements(self):
        for n in range(self.order):
            yield self.from_index(n)


class FiniteFieldElement:
    """Элемент GF(p^f): коэффициенты многочлена от a, старший первым."""

    __slots__ = ('field', 'coeffs')

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = tuple(coeffs)

    def _coerce(self, other):
        if isinstance(other, FiniteFieldElement):
            if other.field != self.field:
                raise DomainError('elements of different fields')
            return other
        if isinstance(other, int):
            return self.field(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FiniteFieldElement(self.field, gf_add(list(self.coeffs), list(other.coeffs), self.field.p, ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return FiniteFieldElement(self.field, gf_sub(list(self.coeffs), list(other.coeffs), self.field.p, ZZ))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FiniteFieldElement(self.field, gf_neg(list(self.coeffs), self.field.p, ZZ))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        field = self.field
        product = gf_mul(list(self.coeffs), list(other.coeffs), field.p, ZZ)
        return FiniteFieldElement(field, gf_rem(product, list(field.modulus), field.p, ZZ))

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        if not self:
            raise ZeroDivisionError('zero has no inverse in a field')
        return self ** (self.field.order - 2)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return tuple(int(c) for c in self.coeffs) == tuple(int(c) for c in other.coeffs)

    def __hash__(self):
        return hash((self.field.p, tuple(int(c) for c in self.coeffs)))

    def __bool__(self):
        return bool(self.coeffs)

    def multiplicative_order(self):
        if not self:
            raise DomainError('zero has no multiplicative order')
        for d in divisors(self.field.order - 1):
            if self ** d == self.field.one:
                return d

    def __str__(self):
        coeffs = [int(c) for c in self.coeffs]
        if not coeffs:
            return '0'
        if self.field.degree == 1:
            return str(coeffs[0])
        top = len(coeffs) - 1
        terms = []
        for k, c in enumerate(coeffs):
            if not c:
                continue
            exp = top - k
            if exp == 0:
                terms.append(str(c))
            else:
                monomial = 'a' if exp == 1 else f'a^{exp}'
                terms.append(monomial if c == 1 else f'{c}*{monomial}')
        return ' + '.join(terms)

    def __repr__(self):
        return f'FiniteFieldElement({self})'


def has_exact_order(x, n):
    if x ** n != x.field.one:
        return False
    return all(x ** (n // r) != x.field.one for r in primefactors(n))


class ReductionMap:
    """
    Гомоморфизм Z[ζ_e] -> GF(p^f): p-часть корня из единицы уходит в 1,
    ζ_{e'} переходит в u точного порядка e' (e' = p'-часть e).
    """

    def __init__(self, conductor, p):
        self.conductor = conductor
        self.p = p
        self.p_power = p ** multiplicity(p, conductor)
        self.p_prime_part = conductor // self.p_power
        e_prime = self.p_prime_part
        degree = int(n_order(p, e_prime)) if e_prime > 1 else 1
        self.field = FiniteField(p, degree)
        self.root = next(
            x for x in self.field.elements() if x and has_exact_order(x, e_prime)
        )
        exponent = int(mod_inverse(self.p_power, e_prime)) if e_prime > 1 else 0
        self.zeta_image = self.root ** exponent
        self._powers = [self.zeta_image ** j for j in range(conductor)]
        logger.debug('Редукция: e=%s, p=%s, GF(%s^%s), u=%s', conductor, p, p, degree, self.root)

    def __repr__(self):
        return f'<ReductionMap e={self.conductor} p={self.p} field=GF({self.p}^{self.field.degree})>'

    def __eq__(self, other):
        return isinstance(other, ReductionMap) and (self.conductor, self.p) == (other.conductor, other.p)

    def __hash__(self):
        return hash((self.conductor, self.p))

    def _image(self, x, residue):
        x = Cyclotomic.coerce(x).embed(self.conductor)
        total = self.field.zero
        for j, c in enumerate(x.coords):
            if c:
                total = total + self._powers[j] * residue(c)
        return total

    def reduce(self, x):
        """Образ целого алгебраического числа; для нецелых DomainError."""
        x = Cyclotomic.coerce(x)
        if not x.is_algebraic_integer():
            raise DomainError(f'{x} is not an algebraic integer')
        return self._image(x, lambda c: int(c.numerator) % self.p)

    def reduce_local(self, x):
        """Образ p-локального числа: знаменатели координат взаимно просты с p."""
        def residue(c):
            if c.denominator % self.p == 0:
                raise DomainError(f'{x} is not p-local for p={self.p}')
            return (c.numerator * int(mod_inverse(c.denominator, self.p))) % self.p

        return self._image(x, residue)


@lru_cache(maxsize=None)
def _reduction(conductor, p):
    return ReductionMap(conductor, p)


def build_reduction(conductor, p, seed=0):
    """
    Единственная редукция на пару (e, p): все подгруппы используют один идеал.
    Выбор детерминирован (наименьший неприводимый многочлен, первый по порядку
    элемент точного порядка e'), так что seed на результат не влияет.
    """
    return _reduction(conductor, p)
