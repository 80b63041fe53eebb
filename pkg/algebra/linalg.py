"""
Точная линейная алгебра через DomainMatrix из sympy: над Q и над GF(q).
"""

from fractions import Fraction

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def _rational_matrix(rows, n_cols):
    entries = [[QQ(int(Fraction(v).numerator), int(Fraction(v).denominator)) for v in row] for row in rows]
    return DomainMatrix(entries, (len(entries), n_cols), QQ)


def _fraction(value):
    return Fraction(int(value.p), int(value.q))


def solve(columns, target):
    """
    Коэффициенты x с Σ x_i columns[i] = target; столбцы и цель заданы списками рациональных.
    Решение единственно, если столбцы независимы; иначе свободные переменные равны 0.
    None, если система несовместна.
    """
    n = len(columns)
    if not columns:
        return [] if not any(target) else None
    augmented = [[col[r] for col in columns] + [target[r]] for r in range(len(target))]
    rref, pivots = _rational_matrix(augmented, n + 1).rref()
    if n in pivots:
        return None
    values = rref.to_Matrix()
    solution = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        solution[c] = _fraction(values[r, n])
    return solution


def rank(vectors):
    if not vectors:
        return 0
    return _rational_matrix(vectors, len(vectors[0])).rank()


def nullspace_mod(matrix, n_cols, q):
    """Базис ядра матрицы (строки задают уравнения) над GF(q)."""
    if not matrix:
        return [[int(i == j) for j in range(n_cols)] for i in range(n_cols)]
    field = GF(q)
    entries = [[field(v % q) for v in row] for row in matrix]
    kernel = DomainMatrix(entries, (len(entries), n_cols), field).nullspace()
    return [[int(v) % q for v in row] for row in kernel.to_Matrix().tolist()]
