"""Соответствие Глаубермана для p-группы Q, взаимно просто действующей на L."""

import logging
import math
from dataclasses import dataclass

from algebra.chartab import character_table
from algebra.exceptions import InternalError, PreconditionError
from algebra.permgroup import conjugate, is_p_power, subgroup_centralizer

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class GlaubermanInstance:
    """L, Q, Q-инвариантный ϑ ∈ Irr(L) и его соответствующий f_Q(ϑ) ∈ Irr(C_L(Q))."""
    L: object
    Q: object
    theta: object
    centralizer: object
    correspondent: object
    multiplicity: int

    def as_dict(self):
        return {
            'L_order': self.L.order,
            'Q_order': self.Q.order,
            'C_order': self.centralizer.order,
            'theta_degree': int(self.theta.degree),
            'f_degree': int(self.correspondent.degree),
            'multiplicity': self.multiplicity,
            'f_divides_theta': int(self.theta.degree) % int(self.correspondent.degree) == 0,
        }


def normalizes(Q, L):
    return all(conjugate(x, g) in L.element_set for g in Q.generators for x in L.generators)


def check_coprime_action(L, Q, p):
    if not is_p_power(Q.order, p):
        raise PreconditionError(f'Q of order {Q.order} is not a {p}-group')
    if math.gcd(L.order, Q.order) != 1:
        raise PreconditionError('orders of L and Q are not coprime')
    if not normalizes(Q, L):
        raise PreconditionError('Q does not normalize L')


def glauberman_correspondent(L, Q, theta, p, seed=0):
    """
    f_Q(ϑ): единственная составляющая ϑ на C_L(Q) с кратностью, не делящейся на p.
    """
    check_coprime_action(L, Q, p)
    if any(theta.conjugate_by(g) != theta for g in Q.generators):
        raise PreconditionError('character is not Q-invariant')
    C = subgroup_centralizer(L, Q)
    table = character_table(C, seed)
    odd = [
        (i, m) for i, m in table.constituents(theta.restrict(C))
        if m.numerator % p
    ]
    if len(odd) != 1:
        raise InternalError(f'{len(odd)} constituents with multiplicity prime to {p}')
    index, multiplicity = odd[0]
    correspondent = table.irreducibles[index]
    if int(theta.degree) % int(correspondent.degree):
        raise InternalError('Glauberman correspondent degree does not divide the degree of ϑ')
    logger.debug(
        'Глауберман: |L|=%s, |Q|=%s, ϑ(1)=%s -> f(1)=%s',
        L.order, Q.order, theta.degree, correspondent.degree,
    )
    return GlaubermanInstance(
        L=L,
        Q=Q,
        theta=theta,
        centralizer=C,
        correspondent=correspondent,
        multiplicity=int(multiplicity),
    )


def invariant_characters(L, acting, seed=0):
    """Номера ϑ ∈ Irr(L), инвариантных относительно образующих acting."""
    table = character_table(L, seed)
    return [
        i for i, theta in enumerate(table.irreducibles)
        if all(theta.conjugate_by(g) == theta for g in acting.generators)
    ]
