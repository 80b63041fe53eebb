"""
Точная арифметика в круговых полях Q(ζ_e).

Элемент хранится координатами по степенному базису ζ_e^0..ζ_e^{φ(e)-1}
после приведения по модулю e-го кругового многочлена, поэтому каноническая
форма единственна. При операциях над элементами разных кондукторов оба
вкладываются в поле с кондуктором lcm.
"""

import math
from fractions import Fraction
from functools import lru_cache

from sympy import cyclotomic_poly, mobius, totient

from .exceptions import DomainError


@lru_cache(maxsize=None)
def cyclotomic_coefficients(e):
    """Коэффициенты Φ_e от старшего к младшему (многочлен приведённый)."""
    return tuple(int(c) for c in cyclotomic_poly(e, polys=True).all_coeffs())


@lru_cache(maxsize=None)
def phi(e):
    return int(totient(e))


@lru_cache(maxsize=None)
def _trace_weight(e, j):
    # нормированный след ζ_e^j: μ(m)/φ(m), m = e / gcd(j, e)
    m = e // math.gcd(j, e)
    return Fraction(int(mobius(m)), phi(m))


def _reduce(e, dense):
    """Приводит вектор коэффициентов при ζ^0..ζ^{e-1} по модулю Φ_e."""
    coeffs = list(dense)
    poly = cyclotomic_coefficients(e)
    n = len(poly) - 1
    for d in range(len(coeffs) - 1, n - 1, -1):
        c = coeffs[d]
        if not c:
            continue
        # вычитаем c * x^(d-n) * Φ_e; старший коэффициент Φ_e равен 1
        for k, a in enumerate(poly):
            if a:
                coeffs[d - k] -= c * a
    return tuple(Fraction(c) for c in coeffs[:n])


class Cyclotomic:
    """Элемент Q(ζ_e): кондуктор e и рациональные координаты длины φ(e)."""

    __slots__ = ('conductor', 'coords', '_hash')

    def __init__(self, conductor, coords):
        coords = tuple(Fraction(c) for c in coords)
        if len(coords) != phi(conductor):
            raise DomainError(f'expected {phi(conductor)} coordinates for conductor {conductor}')
        self.conductor = conductor
        self.coords = coords
        self._hash = None

    @classmethod
    def rational(cls, value, conductor=1):
        coords = [Fraction(0)] * phi(conductor)
        coords[0] = Fraction(value)
        return cls(conductor, coords)

    @classmethod
    def root_of_unity(cls, e, k=1):
        """ζ_e^k"""
        return cls.from_exponents(e, {k % e: 1})

    @classmethod
    def from_exponents(cls, e, terms):
        """Σ c_k ζ_e^k по словарю {k: c_k}."""
        dense = [Fraction(0)] * e
        for k, c in terms.items():
            dense[k % e] += Fraction(c)
        return cls(e, _reduce(e, dense))

    @classmethod
    def coerce(cls, value, conductor=1):
        if isinstance(value, Cyclotomic):
            return value
        return cls.rational(value, conductor)

    def embed(self, e):
        """Вложение в Q(ζ_e) для e, кратного кондуктору: ζ_c = ζ_e^{e/c}."""
        if e == self.conductor:
            return self
        if e % self.conductor:
            raise DomainError(f'conductor {self.conductor} does not divide {e}')
        step = e // self.conductor
        return Cyclotomic.from_exponents(e, {j * step: c for j, c in enumerate(self.coords) if c})

    def _align(self, other):
        other = Cyclotomic.coerce(other, self.conductor)
        e = math.lcm(self.conductor, other.conductor)
        return self.embed(e), other.embed(e), e

    def __add__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        a, b, e = self._align(other)
        return Cyclotomic(e, [x + y for x, y in zip(a.coords, b.coords)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, [-c for c in self.coords])

    def __sub__(self, other):
        if not isinstance(other, (Cyclotomic, int, Fraction)):
            return NotImplemented
        return self + (-Cyclotomic.coerce(other, self.conductor))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.conductor, [c * other for c in self.coords])
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        a, b, e = self._align(other)
        dense = [Fraction(0)] * e
        for i, x in enumerate(a.coords):
            if not x:
                continue
            for j, y in enumerate(b.coords):
                if y:
                    dense[(i + j) % e] += x * y
        return Cyclotomic(e, _reduce(e, dense))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError('division of a cyclotomic by zero')
            return Cyclotomic(self.conductor, [c / other for c in self.coords])
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.rational(other, self.conductor)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if self.conductor == other.conductor:
            return self.coords == other.coords
        a, b, _ = self._align(other)
        return a.coords == b.coords

    def __hash__(self):
        if self._hash is None:
            trace = sum(
                (c * _trace_weight(self.conductor, j) for j, c in enumerate(self.coords) if c),
                Fraction(0),
            )
            self._hash = hash(trace)
        return self._hash

    def __bool__(self):
        return any(self.coords)

    def galois(self, k):
        """Автоморфизм ζ ↦ ζ^k, k взаимно просто с кондуктором."""
        e = self.conductor
        if math.gcd(k, e) != 1:
            raise DomainError(f'{k} is not coprime to the conductor {e}')
        return Cyclotomic.from_exponents(e, {j * k: c for j, c in enumerate(self.coords) if c})

    def conjugate(self):
        """Комплексное сопряжение ζ ↦ ζ^-1."""
        return self.galois(-1)

    def is_rational(self):
        return not any(self.coords[1:])

    def to_rational(self):
        if not self.is_rational():
            raise DomainError(f'{self} is not rational')
        return self.coords[0]

    def is_algebraic_integer(self):
        # Z[ζ_e] является кольцом целых, степенной базис целый
        return all(c.denominator == 1 for c in self.coords)

    def sort_key(self):
        return (self.conductor, self.coords)

    def __str__(self):
        terms = []
        for j, c in enumerate(self.coords):
            if not c:
                continue
            terms.append(str(c) if j == 0 else f'{c}*z({self.conductor})^{j}')
        return ' + '.join(terms) if terms else '0'

    def __repr__(self):
        return f'Cyclotomic({self})'


def cyc_add(x, y):
    return Cyclotomic.coerce(x) + y


def cyc_mul(x, y):
    return Cyclotomic.coerce(x) * y


def cyc_conj(x):
    return Cyclotomic.coerce(x).conjugate()


def is_algebraic_integer(x):
    return Cyclotomic.coerce(x).is_algebraic_integer()
