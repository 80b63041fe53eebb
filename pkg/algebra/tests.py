import random
from fractions import Fraction
from math import gcd

from django.conf import settings
from django.test import SimpleTestCase

from catalog.registry import load_catalog

from .chartab import (
    ClassFunction, character_table, class_multiplication_coefficient, inertia_group, irr_over,
)
from .cyclotomic import Cyclotomic, cyc_conj, is_algebraic_integer
from .exceptions import DomainError, InputError
from .linalg import nullspace_mod, rank, solve
from .permgroup import (
    all_subgroups, are_conjugate, build_group, centralizer, composition_factor_orders,
    conjugate_subgroup, coset_action, format_cycles, identity, intersection, is_p_solvable, mul,
    normalizer, p_core, p_prime_core, p_prime_p_core, parse_cycles, parse_group, quotient_action,
    subgroup, subgroups_of_order, sylow_subgroup,
)
from .reduction import build_reduction, has_exact_order


def group(degree, *generators):
    return build_group(degree, [parse_cycles(text, degree) for text in generators])


def S3():
    return group(3, '(1 2 3)', '(1 2)')


def S4():
    return group(4, '(1 2)', '(1 2 3 4)')


def A4():
    return group(4, '(1 2 3)', '(1 2)(3 4)')


def A5():
    return group(5, '(1 2 3 4 5)', '(3 4 5)')


def SL23():
    return group(8, '(3 5 8)(4 6 7)', '(1 3 2 4)(5 8 6 7)')


def Q8_in(G):
    return subgroup(G, [parse_cycles('(1 3 2 4)(5 8 6 7)', 8), parse_cycles('(1 5 2 6)(3 7 4 8)', 8)])


def V4_in(G):
    return subgroup(G, [parse_cycles('(1 2)(3 4)', G.degree), parse_cycles('(1 3)(2 4)', G.degree)])


class PermutationGroupTest(SimpleTestCase):
    """Порядки, классы, нормализаторы, силовские подгруппы и ядра"""

    def test_orders(self):
        self.assertEqual(S4().order, 24)
        self.assertEqual(build_group(1, []).order, 1)
        self.assertEqual(A5().order, 60)
        self.assertEqual(SL23().order, 24)

    def test_malformed_permutation(self):
        with self.assertRaises(InputError):
            build_group(3, [(0, 0, 1)])
        with self.assertRaises(InputError) as ctx:
            parse_cycles('(1 2', 3, line=4)
        self.assertEqual(ctx.exception.line, 4)
        self.assertEqual(ctx.exception.column, 1)
        with self.assertRaises(InputError):
            parse_cycles('(1 1)', 3)

    def test_parse_group_file(self):
        G = parse_group('# S3\n\ndegree: 3\n(1 2 3)  # цикл\n(1 2)\n')
        self.assertEqual(G.order, 6)
        with self.assertRaises(InputError) as ctx:
            parse_group('degree: 3\n(1 2 7)\n')
        self.assertEqual(ctx.exception.line, 2)
        with self.assertRaises(InputError):
            parse_group('(1 2)\n')

    def test_format_cycles(self):
        x = parse_cycles('(1 3)(2 4 5)', 5)
        self.assertEqual(format_cycles(x), '(1 3)(2 4 5)')
        self.assertEqual(format_cycles(tuple(range(4))), '()')

    def test_conjugacy_classes(self):
        classes = S4().classes
        self.assertEqual(sorted(c.size for c in classes), [1, 3, 6, 6, 8])
        self.assertEqual(classes[0].size, 1)
        self.assertEqual([c.element_order for c in classes], [1, 2, 2, 3, 4])
        C6 = group(6, '(1 2 3 4 5 6)')
        self.assertEqual([c.size for c in C6.classes], [1] * 6)
        self.assertEqual(sorted(c.size for c in A5().classes), [1, 12, 12, 15, 20])

    def test_class_sizes_and_centralizers(self):
        G = A5()
        self.assertEqual(sum(c.size for c in G.classes), G.order)
        for cls in G.classes:
            self.assertEqual(centralizer(G, cls.representative).order * cls.size, G.order)

    def test_normalizer_and_centralizer(self):
        G = A5()
        self.assertEqual(normalizer(G, V4_in(G)).order, 12)
        self.assertEqual(normalizer(G, G), G)
        self.assertEqual(centralizer(S3(), parse_cycles('(1 2 3)', 3)).order, 3)
        with self.assertRaises(DomainError):
            normalizer(A4(), S4())

    def test_sylow_subgroups(self):
        self.assertEqual(sylow_subgroup(S4(), 2).order, 8)
        self.assertEqual(sylow_subgroup(A5(), 7).order, 1)
        self.assertEqual(sylow_subgroup(A5(), 5).order, 5)
        self.assertEqual(sylow_subgroup(S4(), 2, seed=3).order, 8)

    def test_cores(self):
        G = S4()
        self.assertEqual(p_core(G, 2), V4_in(G))
        self.assertTrue(p_prime_core(G, 2).is_trivial)
        D8 = group(4, '(1 2 3 4)', '(1 3)')
        self.assertEqual(p_core(D8, 2), D8)
        self.assertEqual(p_prime_core(SL23(), 3), Q8_in(SL23()))
        self.assertEqual(p_prime_p_core(G, 2), V4_in(G))
        self.assertEqual(p_prime_p_core(SL23(), 3).order, 24)

    def test_intersections_and_conjugate_subgroups(self):
        G = S4()
        first = group(4, '(1 2 3 4)', '(1 3)')
        second = group(4, '(1 3 2 4)', '(1 2)')
        self.assertEqual(intersection(first, second), V4_in(G))
        T = subgroup(G, [parse_cycles('(1 2)', 4)])
        T2 = conjugate_subgroup(T, parse_cycles('(1 3)', 4))
        self.assertIn(parse_cycles('(2 3)', 4), T2)
        self.assertTrue(are_conjugate(G, T, T2))
        self.assertFalse(are_conjugate(G, T, subgroup(G, [parse_cycles('(1 2)(3 4)', 4)])))

    def test_quotient_action(self):
        G = S4()
        Q = quotient_action(G, V4_in(G))
        self.assertEqual(Q.order, 6)
        self.assertFalse(Q.is_abelian())
        self.assertEqual(quotient_action(G, G).order, 1)
        H = SL23()
        self.assertEqual(quotient_action(H, Q8_in(H)).order, 3)
        with self.assertRaises(DomainError):
            quotient_action(G, subgroup(G, [parse_cycles('(1 2)', 4)]))

    def test_p_solvability(self):
        self.assertTrue(is_p_solvable(S4(), 2))
        self.assertFalse(is_p_solvable(A5(), 2))
        self.assertTrue(is_p_solvable(A5(), 7))

    def test_p_solvability_agrees_with_composition_factors(self):
        self.assertEqual(composition_factor_orders(A5()), [60])
        for G in (S3(), S4(), A4(), A5(), SL23()):
            factors = composition_factor_orders(G)
            for p in (2, 3, 5):
                expected = all(f % p != 0 or f == p for f in factors)
                self.assertEqual(is_p_solvable(G, p), expected, (G.order, p))

    def test_subgroups_of_order(self):
        self.assertEqual(len(subgroups_of_order(S4(), 4)), 3)
        self.assertEqual(len(subgroups_of_order(A5(), 1)), 1)
        self.assertEqual(len(subgroups_of_order(A5(), 4)), 1)

    def test_all_subgroups(self):
        self.assertEqual(len(all_subgroups(S3())), 6)
        self.assertEqual(len(all_subgroups(S4())), 30)


class CyclotomicTest(SimpleTestCase):

    def test_field_identities(self):
        z3 = Cyclotomic.root_of_unity(3)
        self.assertEqual(z3 + z3 * z3, -1)
        z4 = Cyclotomic.root_of_unity(4)
        self.assertEqual(z4 * z4, Cyclotomic.rational(-1))
        x = 1 + Cyclotomic.root_of_unity(5) + Cyclotomic.root_of_unity(5, 4)
        self.assertEqual(cyc_conj(x), x)

    def test_mixed_conductors(self):
        z3 = Cyclotomic.root_of_unity(3)
        z12 = Cyclotomic.root_of_unity(12)
        self.assertEqual(z12 * z12 * z12 * z12, z3)
        self.assertEqual(z3.embed(12).conductor, 12)
        with self.assertRaises(DomainError):
            z3.embed(4)

    def test_algebraic_integers(self):
        self.assertFalse(is_algebraic_integer(Cyclotomic.rational(Fraction(1, 2))))
        self.assertTrue(is_algebraic_integer(Cyclotomic.root_of_unity(8) + Cyclotomic.root_of_unity(8, 7)))
        self.assertTrue(is_algebraic_integer(Cyclotomic.rational(-1)))

    def test_galois_and_hash(self):
        z5 = Cyclotomic.root_of_unity(5)
        self.assertEqual(z5.galois(2), Cyclotomic.root_of_unity(5, 2))
        self.assertEqual(hash(z5.embed(10)), hash(z5))
        with self.assertRaises(DomainError):
            z5.galois(5)


class ReductionTest(SimpleTestCase):

    def test_order_three_in_gf4(self):
        reduction = build_reduction(3, 2)
        self.assertEqual(reduction.field.degree, 2)
        u = reduction.reduce(Cyclotomic.root_of_unity(3))
        self.assertEqual(u * u + u + 1, reduction.field.zero)
        z3 = Cyclotomic.root_of_unity(3)
        self.assertEqual(reduction.reduce(z3 + z3 * z3), reduction.field.one)

    def test_integers_reduce_mod_p(self):
        reduction = build_reduction(12, 5)
        self.assertEqual(reduction.reduce(Cyclotomic.rational(17)), reduction.field(2))
        with self.assertRaises(DomainError):
            reduction.reduce(Cyclotomic.rational(Fraction(1, 2)))

    def test_p_part_of_root_maps_to_one(self):
        reduction = build_reduction(8, 2)
        z8 = Cyclotomic.root_of_unity(8)
        self.assertEqual(reduction.reduce(z8), reduction.field.one)
        self.assertEqual(reduction.reduce(z8 + Cyclotomic.root_of_unity(8, 7)), reduction.field.zero)

    def test_homomorphism(self):
        reduction = build_reduction(15, 2)
        self.assertTrue(has_exact_order(reduction.root, 15))
        values = [
            Cyclotomic.from_exponents(15, {0: a, 1: b, 7: c})
            for a in (-1, 0, 2) for b in (1, 3) for c in (0, -2)
        ]
        for x in values:
            for y in values:
                self.assertEqual(reduction.reduce(x + y), reduction.reduce(x) + reduction.reduce(y))
                self.assertEqual(reduction.reduce(x * y), reduction.reduce(x) * reduction.reduce(y))

    def test_local_values(self):
        reduction = build_reduction(6, 2)
        self.assertEqual(reduction.reduce_local(Cyclotomic.rational(Fraction(1, 3))), reduction.field.one)
        with self.assertRaises(DomainError):
            reduction.reduce_local(Cyclotomic.rational(Fraction(1, 2)))

    def test_single_map_per_pair(self):
        self.assertIs(build_reduction(60, 2), build_reduction(60, 2))
        self.assertIs(build_reduction(60, 2, seed=7), build_reduction(60, 2))


class CharacterTableTest(SimpleTestCase):
    """Таблицы Диксона–Шнайдера против известных степеней и соотношений ортогональности"""

    def assertOrthogonal(self, G):
        table = character_table(G)
        irr = table.irreducibles
        for i, chi in enumerate(irr):
            for j, psi in enumerate(irr):
                self.assertEqual(chi.inner_product(psi), 1 if i == j else 0)
        for k, cls in enumerate(G.classes):
            for l in range(len(G.classes)):
                total = sum((chi[k] * chi[l].conjugate() for chi in irr), Cyclotomic.rational(0))
                expected = G.order // cls.size if k == l else 0
                self.assertEqual(total, expected)

    def test_class_multiplication_coefficients(self):
        G = S3()
        self.assertEqual(class_multiplication_coefficient(G, 1, 1, 0), 3)
        self.assertEqual(class_multiplication_coefficient(G, 1, 1, 2), 3)
        for j in range(3):
            for k in range(3):
                self.assertEqual(class_multiplication_coefficient(G, 0, j, k), int(j == k))

    def test_cyclic_of_order_two(self):
        table = character_table(group(2, '(1 2)'))
        self.assertEqual([list(chi.values) for chi in table.irreducibles], [[1, 1], [1, -1]])

    def test_degrees(self):
        cases = {
            'S4': (S4(), [1, 1, 2, 3, 3]),
            'A4': (A4(), [1, 1, 1, 3]),
            'A5': (A5(), [1, 3, 3, 4, 5]),
            'SL23': (SL23(), [1, 1, 1, 2, 2, 2, 3]),
            'D8': (group(4, '(1 2 3 4)', '(1 3)'), [1, 1, 1, 1, 2]),
            'Q8': (group(8, '(1 3 2 4)(5 8 6 7)', '(1 5 2 6)(3 7 4 8)'), [1, 1, 1, 1, 2]),
        }
        for name, (G, degrees) in cases.items():
            table = character_table(G)
            self.assertEqual(sorted(table.degrees), degrees, name)
            self.assertTrue(all(v == 1 for v in table.irreducibles[0].values), name)
            self.assertEqual(sum(d * d for d in table.degrees), G.order, name)

    def test_orthogonality(self):
        for G in (S3(), S4(), A5(), SL23(), group(7, '(1 2 3 4 5 6 7)', '(2 3 5)(4 7 6)')):
            self.assertOrthogonal(G)

    def test_galois_permutes_rows(self):
        G = A5()
        table = character_table(G)
        for chi in table.irreducibles:
            self.assertIn(chi.galois(2), table.irreducibles)

    def test_induction_and_reciprocity(self):
        G = S4()
        H = A4()
        trivial = character_table(H).irreducibles[0]
        self.assertEqual(trivial.induce(G).degree, 2)
        for psi in character_table(H).irreducibles:
            for chi in character_table(G).irreducibles:
                self.assertEqual(psi.induce(G).inner_product(chi), psi.inner_product(chi.restrict(H)))
        chi = character_table(G).irreducibles[2]
        self.assertEqual(chi.restrict(G), chi)
        with self.assertRaises(DomainError):
            chi.restrict(subgroup(A5(), [parse_cycles('(1 2 3)', 5)]))

    def test_quaternion_character_induced_to_sl23(self):
        G = SL23()
        Q8 = Q8_in(G)
        theta = character_table(Q8).irreducibles[1]
        induced = theta.induce(G)
        self.assertEqual(induced.degree, 3)
        self.assertEqual(induced.inner_product(induced), 1)
        over = irr_over(G, Q8, theta)
        self.assertEqual([character_table(G).degrees[i] for i in over], [3])
        self.assertEqual(inertia_group(G, Q8, theta), Q8)

    def test_invariant_character_has_full_inertia(self):
        G = SL23()
        Q8 = Q8_in(G)
        trivial = character_table(Q8).irreducibles[0]
        self.assertEqual(inertia_group(G, Q8, trivial), G)
        over = irr_over(G, Q8, trivial)
        self.assertEqual([character_table(G).degrees[i] for i in over], [1, 1, 1])

    def test_regular_character(self):
        table = character_table(S3())
        rho = table.regular_character()
        self.assertEqual(table.constituents(rho), [(0, 1), (1, 1), (2, 2)])
        self.assertEqual(rho.inner_product(table.irreducibles[0]), 1)

    def test_class_function_length(self):
        with self.assertRaises(DomainError):
            ClassFunction(S3(), [1, 1])

    def test_deterministic_export(self):
        G = S4()
        self.assertEqual(character_table(G, seed=0).export(), character_table(S4(), seed=0).export())
        self.assertTrue(character_table(G).export().startswith('order: 24\n'))


class LinearAlgebraTest(SimpleTestCase):

    def test_solve(self):
        columns = [[1, 0, 1], [0, 1, 1]]
        self.assertEqual(solve(columns, [2, Fraction(1, 2), Fraction(5, 2)]), [2, Fraction(1, 2)])
        self.assertIsNone(solve(columns, [1, 1, 0]))
        self.assertEqual(solve([], [0, 0]), [])
        self.assertIsNone(solve([], [1, 0]))

    def test_rank(self):
        self.assertEqual(rank([[1, 2, 3], [2, 4, 6], [0, 1, 1]]), 2)
        self.assertEqual(rank([]), 0)

    def test_nullspace_mod(self):
        matrix = [[1, 1, 0], [0, 0, 1]]
        (vector,) = nullspace_mod(matrix, 3, 7)
        self.assertEqual(vector[2], 0)
        self.assertTrue(vector[0] and vector[1])
        for row in matrix:
            self.assertEqual(sum(a * b for a, b in zip(row, vector)) % 7, 0)
        self.assertEqual(nullspace_mod([[1, 0], [0, 1]], 2, 5), [])
        self.assertEqual(len(nullspace_mod([], 2, 5)), 2)


class CatalogPropertyTest(SimpleTestCase):
    """Соотношения для таблиц характеров на всех группах каталога"""

    def test_frobenius_reciprocity(self):
        rng = random.Random(settings.BLOCKFORGE_SEED)
        for entry in load_catalog():
            G = entry.group
            subgroups = all_subgroups(G)
            irr = character_table(G).irreducibles
            for _ in range(100):
                H = rng.choice(subgroups)
                psi = rng.choice(character_table(H).irreducibles)
                chi = rng.choice(irr)
                with self.subTest(group=entry.name, subgroup_order=H.order):
                    self.assertEqual(psi.induce(G).inner_product(chi), psi.inner_product(chi.restrict(H)))

    def test_galois_permutes_irreducibles(self):
        for entry in load_catalog():
            table = character_table(entry.group)
            # Q(ζ_e) = Q(ζ_2e) при нечётном e
            e = 2 * entry.group.exponent
            for k in (k for k in range(1, e) if gcd(k, e) == 1):
                for chi in table.irreducibles:
                    with self.subTest(group=entry.name, k=k):
                        self.assertIn(chi.galois(k), table.irreducibles)

    def test_coset_action_kernel(self):
        G = SL23()
        H = S4()
        cases = [(G, Q8_in(G), 3), (H, V4_in(H), 6)]
        for entry in load_catalog():
            cases.extend(
                (entry.group, N, entry.group.order // N.order) for N in entry.normal_subgroup_groups()
            )
        for G, N, index in cases:
            with self.subTest(order=G.order, normal_order=N.order):
                reps, image = coset_action(G, N)
                self.assertEqual(len(reps), index)
                self.assertEqual(quotient_action(G, N).order, index)
                trivial = identity(index)
                kernel = [g for g in G.elements if image(g) == trivial]
                self.assertEqual(sorted(kernel), sorted(N.elements))
                for g in G.generators:
                    for h in G.generators:
                        self.assertEqual(image(mul(g, h)), mul(image(g), image(h)))
