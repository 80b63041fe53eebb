from django.test import SimpleTestCase

from algebra.chartab import character_table
from algebra.exceptions import DomainError, PreconditionError
from algebra.permgroup import are_conjugate, build_group, parse_cycles, subgroup
from catalog.registry import load_catalog

from .blocks import (
    block_partition, brauer_correspondent, central_character, class_algebra_product, covered_blocks,
    defect_group_by_class, induced_block, is_conjugate_defect, is_multiplicative, reduction_for,
)
from .brauer import (
    brauer_block_of, brauer_data_from_fixture, brauer_graph_partition, derive_ibr_rows,
    ibr_blocks_and_heights, ibr_fong_swan, induce_brauer, is_eigenvalue_feasible, oracle_ibr,
    p_regular_restriction,
)

A5_IBR_2 = [[1, 0, 0, 0, 0], [-1, 1, 0, 0, 0], [-1, 0, 1, 0, 0], [0, 0, 0, 1, 0]]


def group(degree, *generators):
    return build_group(degree, [parse_cycles(text, degree) for text in generators])


def sub(G, *generators):
    return subgroup(G, [parse_cycles(text, G.degree) for text in generators])


def S3():
    return group(3, '(1 2 3)', '(1 2)')


def S4():
    return group(4, '(1 2)', '(1 2 3 4)')


def A5():
    return group(5, '(1 2 3 4 5)', '(3 4 5)')


def SL23():
    return group(8, '(3 5 8)(4 6 7)', '(1 3 2 4)(5 8 6 7)')


def Q8_in(G):
    return sub(G, '(1 3 2 4)(5 8 6 7)', '(1 5 2 6)(3 7 4 8)')


def shape(blocks):
    return sorted((tuple(sorted(B.degrees)), B.defect) for B in blocks)


def p_solvable_pairs():
    return [
        (S3(), 2), (S3(), 3), (S4(), 2), (S4(), 3), (SL23(), 2), (SL23(), 3),
        (group(4, '(1 2 3)', '(1 2)(3 4)'), 2), (group(5, '(1 2 3 4 5)', '(2 3 5 4)'), 2),
        (group(7, '(1 2 3 4 5 6 7)', '(2 3 5)(4 7 6)'), 3),
    ]


class CentralCharacterTest(SimpleTestCase):

    def test_values(self):
        G = S3()
        table = character_table(G)
        trivial = central_character(table, 0)
        self.assertEqual(list(trivial), [cls.size for cls in G.classes])
        two = central_character(table, 2)
        self.assertEqual(two[2], -1)
        for i in range(len(table)):
            self.assertEqual(central_character(table, i)[0], 1)


class BlockPartitionTest(SimpleTestCase):
    """Разбиение на блоки, дефекты, идемпотенты и группы дефекта"""

    def test_known_partitions(self):
        self.assertEqual(shape(block_partition(S4(), 2)), [((1, 1, 2, 3, 3), 3)])
        self.assertEqual(shape(block_partition(A5(), 2)), [((1, 3, 3, 5), 2), ((4,), 0)])
        self.assertEqual(
            shape(block_partition(SL23(), 3)),
            [((1, 1, 1), 1), ((2, 2, 2), 1), ((3,), 0)],
        )
        self.assertEqual(shape(block_partition(S3(), 5)), [((1,), 0), ((1,), 0), ((2,), 0)])

    def test_principal_block_first(self):
        for G, p in p_solvable_pairs() + [(A5(), 2), (A5(), 5)]:
            blocks = block_partition(G, p)
            self.assertTrue(blocks[0].is_principal())
            self.assertEqual(blocks[0].label, 'B0')

    def test_dimensions_sum_to_order(self):
        for G, p in p_solvable_pairs() + [(A5(), 3)]:
            self.assertEqual(sum(B.dim for B in block_partition(G, p)), G.order)

    def test_central_characters_are_multiplicative(self):
        for G, p in ((S4(), 2), (A5(), 2), (SL23(), 3)):
            for B in block_partition(G, p):
                self.assertTrue(is_multiplicative(G, list(B.central_character)))

    def test_idempotents(self):
        G = S4()
        (B,) = block_partition(G, 2)
        self.assertEqual(B.idempotent[0], 1)
        self.assertFalse(any(B.idempotent[1:]))

        H = SL23()
        blocks = block_partition(H, 3)
        field = blocks[0].reduction.field
        total = [field.zero] * len(H.classes)
        for B in blocks:
            e = list(B.idempotent)
            self.assertEqual(class_algebra_product(H, e, e), e)
            total = [a + b for a, b in zip(total, e)]
        self.assertEqual(total[0], 1)
        self.assertFalse(any(total[1:]))

    def test_defect_groups(self):
        G = A5()
        principal, zero = block_partition(G, 2)
        V4 = sub(G, '(1 2)(3 4)', '(1 3)(2 4)')
        self.assertTrue(are_conjugate(G, principal.defect_group, V4))
        self.assertTrue(zero.defect_group.is_trivial)
        D8 = group(4, '(1 2 3 4)', '(1 3)')
        (B,) = block_partition(D8, 2)
        self.assertEqual(B.defect_group, D8)

    def test_defect_class_method_agrees(self):
        for G, p in p_solvable_pairs() + [(A5(), 2), (A5(), 3), (A5(), 5)]:
            for B in block_partition(G, p):
                self.assertEqual(B.defect_group.order, p ** B.defect)
                self.assertTrue(is_conjugate_defect(B, defect_group_by_class(B)), (G.order, p, B.label))

    def test_heights_and_dimensions(self):
        principal, zero = block_partition(A5(), 2)
        self.assertEqual(sorted(principal.table.degrees[i] for i in principal.heights.irr0), [1, 3, 3, 5])
        self.assertEqual(principal.dim, 44)
        self.assertEqual(zero.dim, 16)
        self.assertEqual(zero.heights.irr0, zero.members)
        (B,) = block_partition(group(4, '(1 2 3)', '(1 2)(3 4)'), 2)
        self.assertEqual(B.dim, 12)
        self.assertEqual(sorted(B.degrees), [1, 1, 1, 3])


class BlockInductionTest(SimpleTestCase):

    def test_induction_to_the_same_group(self):
        for B in block_partition(SL23(), 3):
            self.assertEqual(induced_block(B, SL23()), B)

    def test_principal_block_of_a4_induces_to_a5(self):
        G = A5()
        A4 = sub(G, '(1 2 3)', '(1 2)(3 4)')
        b = block_partition(A4, 2, reduction_for(G, 2))[0]
        self.assertEqual(induced_block(b, G), block_partition(G, 2)[0])

    def test_dihedral_block_induces_to_s4(self):
        G = S4()
        D8 = sub(G, '(1 2 3 4)', '(1 3)')
        (b,) = block_partition(D8, 2, reduction_for(G, 2))
        (B,) = block_partition(G, 2)
        self.assertEqual(induced_block(b, G), B)

    def test_induction_requires_subgroup(self):
        b = block_partition(S3(), 3)[0]
        with self.assertRaises(DomainError):
            induced_block(b, S4())

    def test_brauer_correspondents(self):
        (B,) = block_partition(S4(), 2)
        b = brauer_correspondent(B)
        self.assertEqual(b.group.order, 8)
        self.assertEqual(len(b.members), 5)

        principal, zero = block_partition(A5(), 2)
        b = brauer_correspondent(principal)
        self.assertEqual(b.group.order, 12)
        self.assertTrue(b.is_principal())
        self.assertEqual(b.dim, 12)
        self.assertEqual(brauer_correspondent(zero), zero)

    def test_first_main_theorem_bijection(self):
        G = SL23()
        for B in block_partition(G, 3):
            b = brauer_correspondent(B)
            self.assertEqual(b.defect, B.defect)
            self.assertEqual(induced_block(b, G), B)

    def test_first_main_theorem_on_catalog(self):
        for entry in load_catalog():
            G = entry.group
            for p in entry.prime_list():
                blocks = block_partition(G, p)
                for B in blocks:
                    with self.subTest(group=entry.name, p=p, block=B.label):
                        b = brauer_correspondent(B)
                        self.assertEqual(b.defect, B.defect)
                        self.assertEqual(induced_block(b, G), B)
                        D = B.defect_group
                        same_defect = [C for C in blocks if are_conjugate(G, C.defect_group, D)]
                        local = [
                            c for c in block_partition(b.group, p, reduction_for(G, p))
                            if c.defect_group == D
                        ]
                        self.assertEqual(len(local), len(same_defect))

    def test_covered_blocks(self):
        G = S4()
        A4 = sub(G, '(1 2 3)', '(1 2)(3 4)')
        (B,) = block_partition(G, 2)
        self.assertEqual(len(covered_blocks(B, A4)), 1)
        self.assertEqual(covered_blocks(B, G), [B])

        H = SL23()
        B = next(B for B in block_partition(H, 3) if B.degrees == (2, 2, 2))
        covered = covered_blocks(B, Q8_in(H))
        self.assertEqual([b.degrees for b in covered], [(2,)])
        with self.assertRaises(DomainError):
            covered_blocks(B, sub(H, '(3 5 8)(4 6 7)'))


class BrauerCharacterTest(SimpleTestCase):
    """IBr по Фонгу–Суону, матрицы разложения и распределение IBr по блокам"""

    def test_ibr_degrees(self):
        self.assertEqual(list(ibr_fong_swan(S4(), 2).degrees), [1, 2])
        self.assertEqual(list(ibr_fong_swan(SL23(), 3).degrees), [1, 2, 3])
        data = ibr_fong_swan(S3(), 5)
        self.assertEqual(list(data.degrees), list(data.table.degrees))

    def test_decomposition_matrices(self):
        data = ibr_fong_swan(S4(), 2)
        self.assertEqual(sorted(data.decomposition), sorted([(1, 0), (1, 0), (0, 1), (1, 1), (1, 1)]))
        data = ibr_fong_swan(SL23(), 3)
        linear = [i for i, d in enumerate(data.table.degrees) if d == 1]
        self.assertEqual([data.decomposition[i] for i in linear], [(1, 0, 0)] * 3)

    def test_reconstruction(self):
        for G, p in p_solvable_pairs():
            data = ibr_fong_swan(G, p)
            self.assertEqual(len(data.ibr), len(data.regular_classes))
            for chi, row in zip(data.table.irreducibles, data.decomposition):
                self.assertTrue(all(d >= 0 for d in row))
                total = data.ibr[0] * 0
                for phi, d in zip(data.ibr, row):
                    total = total + phi * d
                self.assertEqual(total, p_regular_restriction(chi, p))

    def test_greedy_selection_matches_oracle(self):
        for G, p in p_solvable_pairs():
            self.assertEqual(set(oracle_ibr(G, p)), set(ibr_fong_swan(G, p).ibr), (G.order, p))

    def test_brauer_graph_matches_blocks(self):
        for G, p in p_solvable_pairs():
            data = ibr_fong_swan(G, p)
            expected = sorted(tuple(sorted(B.members)) for B in block_partition(G, p))
            self.assertEqual(brauer_graph_partition(data), expected, (G.order, p))

    def test_ibr_blocks_and_heights(self):
        G = S4()
        data = ibr_fong_swan(G, 2)
        (bb,) = ibr_blocks_and_heights(data, block_partition(G, 2))
        self.assertEqual([data.ibr[j].degree for j in bb.irr0], [1])

        H = SL23()
        data = ibr_fong_swan(H, 3)
        blocks = block_partition(H, 3)
        brauer_blocks = ibr_blocks_and_heights(data, blocks)
        found = {
            tuple(sorted(B.degrees)): [data.ibr[j].degree for j in brauer_block_of(brauer_blocks, B).irr0]
            for B in blocks
        }
        self.assertEqual(found, {(1, 1, 1): [1], (2, 2, 2): [2], (3,): [3]})

    def test_k_at_least_l(self):
        for G, p in p_solvable_pairs():
            data = ibr_fong_swan(G, p)
            for bb in ibr_blocks_and_heights(data, block_partition(G, p)):
                self.assertGreaterEqual(len(bb.block.members), len(bb.members))

    def test_non_p_solvable_group_is_rejected(self):
        with self.assertRaises(PreconditionError):
            ibr_fong_swan(A5(), 2)

    def test_a5_fixture(self):
        G = A5()
        data = brauer_data_from_fixture(G, 2, A5_IBR_2)
        self.assertEqual(list(data.degrees), [1, 2, 2, 4])
        self.assertEqual(data.source, 'fixture')
        self.assertTrue(all(is_eigenvalue_feasible(phi) for phi in data.ibr))
        principal, _ = block_partition(G, 2)
        bb = brauer_block_of(ibr_blocks_and_heights(data, block_partition(G, 2)), principal)
        self.assertEqual([data.ibr[j].degree for j in bb.irr0], [1])
        with self.assertRaises(DomainError):
            brauer_data_from_fixture(G, 2, A5_IBR_2[:3])

    def test_derived_fixture_reproduces_shipped_degrees(self):
        G = A5()
        rows = derive_ibr_rows(G, 2)
        self.assertEqual(list(brauer_data_from_fixture(G, 2, rows).degrees), [1, 2, 2, 4])

    def test_induced_brauer_character(self):
        G = S4()
        A4 = sub(G, '(1 2 3)', '(1 2)(3 4)')
        trivial = next(phi for phi in ibr_fong_swan(A4, 2).ibr if all(v == 1 for v in phi.values))
        self.assertEqual(induce_brauer(trivial, G), ibr_fong_swan(G, 2).ibr[0] * 2)

    def test_values_on_p_singular_elements(self):
        phi = ibr_fong_swan(S4(), 2).ibr[0]
        with self.assertRaises(DomainError):
            phi.value_at(parse_cycles('(1 2)', 4))

    def test_export(self):
        text = ibr_fong_swan(S4(), 2).export()
        self.assertEqual(text.splitlines()[0], 'chi\\phi 1 2')
