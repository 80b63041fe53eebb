import json

from django.test import SimpleTestCase

from algebra.chartab import character_table
from algebra.exceptions import PreconditionError
from algebra.permgroup import build_group, parse_cycles, subgroup
from catalog.registry import get_entry
from modular.blocks import block_partition

from .fong import verify_fong_reynolds
from .glauberman import glauberman_correspondent, invariant_characters
from .matching import brute_force_perfect, divisibility_matching, hall_violated
from .reports import (
    FAIL, HYPOTHESIS_LABEL, HYPOTHESIS_NOT_MET, INCONCLUSIVE, PASS, VerificationReport, combine,
    matches_tag, merge_reports, render_text,
)
from .serializers import render_json
from .verifiers import (
    explore_decomposition_compatibility, navarro_samples, verify_fong, verify_glauberman,
    verify_glauberman_lift, verify_navarro, verify_regular, verify_regular_covering,
    verify_sylow_normalizer_divisibility, verify_theorem_A, verify_theorem_B,
)


def group(degree, *generators):
    return build_group(degree, [parse_cycles(text, degree) for text in generators])


def sub(G, *generators):
    return subgroup(G, [parse_cycles(text, G.degree) for text in generators])


def S4():
    return group(4, '(1 2)', '(1 2 3 4)')


def A5():
    return group(5, '(1 2 3 4 5)', '(3 4 5)')


def SL23():
    return group(8, '(3 5 8)(4 6 7)', '(1 3 2 4)(5 8 6 7)')


def C3wrC2():
    return group(6, '(1 2 3)', '(4 5 6)', '(1 4)(2 5)(3 6)')


class DivisibilityMatchingTest(SimpleTestCase):

    def test_perfect_matching_between_blocks(self):
        matching = divisibility_matching([1, 3, 3, 5], [1, 1, 1, 3])
        self.assertTrue(matching.perfect)
        self.assertTrue(matching.verify())
        for a, b in matching.degree_pairs():
            self.assertEqual(a % b, 0)
        self.assertEqual(sorted(b for _, b in matching.degree_pairs()), [1, 1, 1, 3])

    def test_identical_multisets_match(self):
        degrees = [1, 2, 2, 4, 8]
        matching = divisibility_matching(degrees, list(reversed(degrees)))
        self.assertTrue(matching.perfect)
        self.assertTrue(matching.verify())

    def test_single_violator(self):
        matching = divisibility_matching([1], [2])
        self.assertFalse(matching.perfect)
        self.assertTrue(matching.verify())
        violator = matching.violator.as_dict(matching.left, matching.right)
        self.assertEqual(violator['reason'], 'hall')
        self.assertEqual(violator['side'], 'right')
        self.assertEqual(violator['degrees'], [2])
        self.assertEqual(violator['neighbour_degrees'], [])

    def test_size_mismatch(self):
        matching = divisibility_matching([1], [1, 1, 1])
        self.assertFalse(matching.perfect)
        self.assertEqual(matching.violator.reason, 'size')
        self.assertTrue(matching.verify())

    def test_violator_is_minimal(self):
        left, right = [1, 1, 5, 5], [1, 3, 3, 5]
        matching = divisibility_matching(left, right)
        self.assertFalse(matching.perfect)
        members = matching.violator.members
        self.assertTrue(hall_violated('right', members, left, right))
        for x in members:
            rest = [y for y in members if y != x]
            if rest:
                self.assertFalse(hall_violated('right', rest, left, right))

    def test_agrees_with_brute_force(self):
        cases = [
            ([1, 2, 4], [1, 2, 4]),
            ([2, 2, 3], [1, 2, 3]),
            ([2, 2, 3], [2, 2, 1]),
            ([6, 6, 1], [2, 3, 1]),
            ([4, 6, 9, 1], [2, 3, 3, 1]),
            ([1, 1, 2, 2], [1, 2, 2, 2]),
            ([12, 8, 3], [4, 4, 3]),
        ]
        for left, right in cases:
            with self.subTest(left=left, right=right):
                matching = divisibility_matching(left, right)
                self.assertEqual(matching.perfect, brute_force_perfect(left, right))
                self.assertTrue(matching.verify())


class GlaubermanTest(SimpleTestCase):

    def setUp(self):
        self.G = C3wrC2()
        self.L = sub(self.G, '(1 2 3)', '(4 5 6)')
        self.Q = sub(self.G, '(1 4)(2 5)(3 6)')
        self.table = character_table(self.L)

    def test_invariant_characters_of_wreath_product(self):
        self.assertEqual(len(invariant_characters(self.L, self.Q)), 3)

    def test_correspondent_is_restriction_for_linear_characters(self):
        for j in invariant_characters(self.L, self.Q):
            theta = self.table.irreducibles[j]
            instance = glauberman_correspondent(self.L, self.Q, theta, 2)
            self.assertEqual(instance.centralizer.order, 3)
            self.assertEqual(instance.correspondent, theta.restrict(instance.centralizer))
            self.assertEqual(instance.multiplicity, 1)
            self.assertTrue(instance.as_dict()['f_divides_theta'])

    def test_trivial_action_gives_identity(self):
        G = group(5, '(1 2 3)', '(4 5)')
        L = sub(G, '(1 2 3)')
        Q = sub(G, '(4 5)')
        for theta in character_table(L).irreducibles:
            instance = glauberman_correspondent(L, Q, theta, 2)
            self.assertEqual(instance.centralizer, L)
            self.assertEqual(instance.correspondent, theta)

    def test_requires_invariant_character(self):
        invariant = invariant_characters(self.L, self.Q)
        j = next(j for j in range(len(self.table.irreducibles)) if j not in invariant)
        with self.assertRaises(PreconditionError):
            glauberman_correspondent(self.L, self.Q, self.table.irreducibles[j], 2)

    def test_requires_coprime_action(self):
        G = S4()
        V = sub(G, '(1 2)(3 4)', '(1 3)(2 4)')
        Q = sub(G, '(1 2)(3 4)')
        with self.assertRaises(PreconditionError):
            glauberman_correspondent(V, Q, character_table(V).irreducibles[0], 2)

    def test_lift_matches_for_invariant_characters(self):
        for j in invariant_characters(self.L, self.Q):
            record = verify_glauberman_lift(self.G, self.L, self.Q, self.table.irreducibles[j], 2)
            self.assertEqual(record['verdict'], PASS)
            self.assertEqual(record['normalizer_order'], 6)
            self.assertEqual(record['irr_left'], [1, 1])
            self.assertTrue(record['ibr_matched'])

    def test_lift_requires_normal_subgroup(self):
        G = S4()
        L = sub(G, '(1 2 3)')
        Q = sub(G, '(1 2)')
        with self.assertRaises(PreconditionError):
            verify_glauberman_lift(G, L, Q, character_table(L).irreducibles[0], 2)

    def test_cyclic_operator_on_C3(self):
        G = get_entry('Dic3').group
        L = sub(G, '(1 2 3)')
        Q = sub(G, '(2 3)(4 5 6 7)')
        self.assertEqual(invariant_characters(L, Q), [0])
        record = verify_glauberman_lift(G, L, Q, character_table(L).irreducibles[0], 2)
        self.assertEqual(record['verdict'], PASS)
        self.assertEqual(record['irr_left'], [1, 1, 1, 1])
        self.assertEqual(record['irr_right'], [1, 1, 1, 1])

    def test_verify_glauberman_report(self):
        report = verify_glauberman(self.G, 2, 'C3wrC2')
        self.assertEqual(report.verdicts['glauberman'], PASS)
        self.assertEqual(len(report.propositions['glauberman']), 3)
        self.assertEqual(verify_glauberman(A5(), 2, 'A5').verdicts['glauberman'], HYPOTHESIS_NOT_MET)


class TheoremATest(SimpleTestCase):

    def test_S4_at_2(self):
        report = verify_theorem_A(S4(), 2, 'S4')
        self.assertEqual(report.verdicts['am'], PASS)
        record = report.block('B0')
        self.assertEqual(record.irr0_left, [1, 1, 3, 3])
        self.assertEqual(record.irr0_right, [1, 1, 1, 1])
        self.assertEqual(record.ibr0_left, [1])
        self.assertEqual(record.ibr0_right, [1])

    def test_SL23_at_3(self):
        report = verify_theorem_A(SL23(), 3, 'SL23')
        self.assertEqual(report.verdicts['am'], PASS)
        self.assertEqual(len(report.blocks), 3)

    def test_A5_at_2_fails_on_brauer_characters(self):
        rows = get_entry('A5').ibr_rows(2)
        report = verify_theorem_A(A5(), 2, 'A5', ibr_fixture=rows)
        self.assertEqual(report.verdicts['am'], FAIL)
        self.assertFalse(report.p_solvable)
        record = report.block('B0')
        self.assertEqual(record.irr0_left, [1, 3, 3, 5])
        self.assertEqual(record.irr0_right, [1, 1, 1, 3])
        self.assertTrue(record.irr0_matching.perfect)
        self.assertEqual(record.ibr0_left, [1])
        self.assertEqual(record.ibr0_right, [1, 1, 1])
        self.assertEqual(record.ibr0_matching.violator.reason, 'size')

    def test_A5_report_is_labelled_hypothesis_not_met(self):
        rows = get_entry('A5').ibr_rows(2)
        report = verify_theorem_A(A5(), 2, 'A5', ibr_fixture=rows)
        self.assertEqual(report.verdicts['am'], FAIL)
        self.assertEqual(report.hypothesis, HYPOTHESIS_LABEL)
        self.assertIn('hypothesis: not met', render_text(report))
        self.assertEqual(json.loads(render_json(report))['hypothesis'], 'not met')

        report = verify_theorem_A(S4(), 2, 'S4')
        self.assertIsNone(report.hypothesis)
        self.assertNotIn('hypothesis:', render_text(report))
        self.assertNotIn('hypothesis', json.loads(render_json(report)))

    def test_A5_without_fixture_is_inconclusive(self):
        report = verify_theorem_A(A5(), 2, 'A5')
        self.assertEqual(report.verdicts['am'], INCONCLUSIVE)
        self.assertTrue(report.block('B0').irr0_matching.perfect)
        self.assertIsNone(report.block('B0').ibr0_left)

    def test_A5_at_3_passes(self):
        rows = get_entry('A5').ibr_rows(3)
        report = verify_theorem_A(A5(), 3, 'A5', ibr_fixture=rows)
        self.assertEqual(report.verdicts['am'], PASS)


class TheoremBTest(SimpleTestCase):

    def test_S4_at_2(self):
        report = verify_theorem_B(S4(), 2, 'S4')
        self.assertEqual(report.verdicts['dim'], PASS)
        record = report.block('B0')
        self.assertEqual((record.dim_B, record.dim_b), (24, 8))

    def test_A5_at_2_fails_with_divisible_p_parts(self):
        report = verify_theorem_B(A5(), 2, 'A5')
        self.assertEqual(report.verdicts['dim'], FAIL)
        record = report.block('B0')
        self.assertEqual((record.dim_B, record.dim_b), (44, 12))
        self.assertFalse(record.dim_divides)
        self.assertTrue(record.dim_p_part_divides)
        for record in report.blocks:
            self.assertTrue(record.dim_p_part_divides)

    def test_A5_at_3_passes(self):
        self.assertEqual(verify_theorem_B(A5(), 3, 'A5').verdicts['dim'], PASS)

    def test_label_survives_merge(self):
        G = A5()
        report = verify_theorem_B(G, 2, 'A5')
        self.assertEqual(report.hypothesis, HYPOTHESIS_LABEL)
        merged = merge_reports([verify_regular(G, 2, name='A5'), report])
        self.assertEqual(merged.hypothesis, HYPOTHESIS_LABEL)
        self.assertEqual(merged.verdicts, {'regular': PASS, 'dim': FAIL})


class IndexDivisibilityTest(SimpleTestCase):

    def test_alternating_group_counterexample(self):
        G = A5()
        record = verify_sylow_normalizer_divisibility(G, 3, sub(G, '(1 2 3)', '(1 2)(3 4)'), sub(G, '(1 2 3)'))
        self.assertTrue(record['hypothesis'])
        self.assertEqual((record['left_index'], record['right_index']), (4, 10))
        self.assertFalse(record['divides'])
        self.assertEqual(record['verdict'], FAIL)

    def test_hypothesis_is_necessary(self):
        G = S4()
        record = verify_sylow_normalizer_divisibility(G, 2, sub(G, '(1 2 3 4)', '(1 3)'), sub(G, '(1 2)(3 4)'))
        self.assertFalse(record['hypothesis'])
        self.assertFalse(record['divides'])
        self.assertEqual(record['verdict'], HYPOTHESIS_NOT_MET)

    def test_number_of_sylow_subgroups(self):
        G = S4()
        record = verify_sylow_normalizer_divisibility(G, 3, sub(G, '(1 2 3)', '(1 2)(3 4)'), sub(G, '(1 2 3)'))
        self.assertEqual((record['left_index'], record['right_index']), (4, 4))
        self.assertEqual(record['verdict'], PASS)

    def test_rejects_non_p_subgroup(self):
        G = S4()
        with self.assertRaises(PreconditionError):
            verify_sylow_normalizer_divisibility(G, 2, G, sub(G, '(1 2 3)'))

    def test_samples_are_deterministic(self):
        G = S4()
        first = navarro_samples(G, 2, 5, seed=3)
        self.assertEqual(len(first), 5)
        self.assertEqual(first, navarro_samples(G, 2, 5, seed=3))
        for U, P in first:
            self.assertEqual(verify_sylow_normalizer_divisibility(G, 2, U, P)['hypothesis'], True)

    def test_documented_cases(self):
        S = get_entry('S4')
        report = verify_navarro(S.group, 2, 'S4', documented=S.documented_cases(2), samples=40)
        self.assertEqual(report.verdicts['navarro'], PASS)
        documented = [r for r in report.propositions['navarro'] if r.get('documented')]
        self.assertEqual(len(documented), 1)
        self.assertTrue(documented[0]['reproduced'])

        A = get_entry('A5')
        report = verify_navarro(A.group, 3, 'A5', documented=A.documented_cases(3))
        self.assertEqual(report.verdicts['navarro'], HYPOTHESIS_NOT_MET)
        record = report.propositions['navarro'][0]
        self.assertEqual((record['left_index'], record['right_index']), (4, 10))

    def test_unreproduced_case_fails(self):
        G = S4()
        U, P = sub(G, '(1 2 3 4)', '(1 3)'), sub(G, '(1 2)(3 4)')
        report = verify_navarro(G, 2, 'S4', documented=[(U, P, {'hypothesis': True})], samples=0)
        self.assertEqual(report.verdicts['navarro'], FAIL)

    def test_all_admissible_pairs_of_frobenius_groups(self):
        expected = {('F20', 2): 52, ('F20', 5): 25, ('F21', 3): 30, ('F21', 7): 18}
        for (name, p), count in expected.items():
            with self.subTest(group=name, p=p):
                self.assertEqual(len(navarro_samples(get_entry(name).group, p, 200)), count)

    def test_sweep_over_solvable_groups(self):
        total = 0
        for name in ('S4', 'SL23', 'F20', 'F21'):
            entry = get_entry(name)
            for p in entry.prime_list():
                with self.subTest(group=name, p=p):
                    report = verify_navarro(entry.group, p, name, samples=200)
                    self.assertEqual(report.verdicts['navarro'], PASS)
                    records = report.propositions['navarro']
                    self.assertTrue(all(r['hypothesis'] and r['divides'] for r in records))
                    total += len(records)
        self.assertGreaterEqual(total, 200)


class RegularCoveringTest(SimpleTestCase):

    def test_S4_over_A4(self):
        G = S4()
        records = verify_regular_covering(G, sub(G, '(1 2 3)', '(1 2)(3 4)'), 2)
        self.assertEqual(len(records), 1)
        self.assertEqual(records[0]['n'], 2)
        self.assertTrue(records[0]['identity_holds'])
        self.assertTrue(records[0]['single_orbit'])

    def test_S4_over_V4_at_3(self):
        G = S4()
        records = verify_regular_covering(G, sub(G, '(1 2)(3 4)', '(1 3)(2 4)'), 3)
        self.assertTrue(all(r['verdict'] == PASS for r in records))
        # главный блок накрывает тривиальный, блоки степени 3 накрывают орбиту из трёх
        self.assertEqual(sorted(r['n'] for r in records), [3] * 6 + [6])
        self.assertEqual(sorted(r['orbit_size'] for r in records), [1] + [3] * 6)

    def test_report_without_normal_subgroups(self):
        report = verify_regular(A5(), 5, name='A5')
        self.assertEqual(report.verdicts['regular'], PASS)
        self.assertEqual(report.propositions['regular_covering'], [])


class FongTest(SimpleTestCase):

    def test_fong_block(self):
        for G, p in [(S4(), 2), (group(6, '(1 2 3 4 5 6)'), 2), (SL23(), 3)]:
            with self.subTest(order=G.order, p=p):
                report = verify_fong(G, p)
                self.assertEqual(report.verdicts['fong'], PASS)
                self.assertTrue(report.propositions['fong_block'])
                self.assertTrue(all(r['one_block'] for r in report.propositions['fong_block']))

    def test_fong_reynolds_in_SL23(self):
        report = verify_fong(SL23(), 3)
        records = report.propositions['fong_reynolds']
        self.assertEqual(len(records), 3)
        self.assertTrue(all(r['ordinary_bijection'] and r['brauer_bijection'] for r in records))

    def test_fong_reynolds_for_a_given_character(self):
        G = SL23()
        Q8 = sub(G, '(1 3 2 4)(5 8 6 7)', '(1 5 2 6)(3 7 4 8)')
        theta = next(chi for chi in character_table(Q8).irreducibles if chi.degree == 2)
        principal, faithful = (
            next(B for B in block_partition(G, 3) if B.degrees == degrees)
            for degrees in ((1, 1, 1), (2, 2, 2))
        )
        record = verify_fong_reynolds(faithful, Q8, theta)
        self.assertEqual(record['verdict'], PASS)
        self.assertEqual((record['theta_degree'], record['inertia_order']), (2, 24))
        with self.assertRaises(PreconditionError):
            verify_fong_reynolds(principal, Q8, theta)

    def test_not_p_solvable(self):
        self.assertEqual(verify_fong(A5(), 2).verdicts['fong'], HYPOTHESIS_NOT_MET)


class DecompositionCompatibilityTest(SimpleTestCase):

    def test_S4_at_2(self):
        report = explore_decomposition_compatibility(S4(), 2, 'S4')
        self.assertEqual(report.verdicts['q35'], PASS)
        record = report.propositions['question35'][0]
        self.assertTrue(record['found'])
        self.assertEqual(record['searched'], 24)
        self.assertEqual(record['psi'], [[1, 1]])

    def test_bound_gives_inconclusive(self):
        report = explore_decomposition_compatibility(S4(), 2, 'S4', bound=2)
        self.assertEqual(report.verdicts['q35'], INCONCLUSIVE)


class ReportTest(SimpleTestCase):

    def test_combine(self):
        self.assertEqual(combine([PASS, FAIL, INCONCLUSIVE]), FAIL)
        self.assertEqual(combine([PASS, INCONCLUSIVE]), INCONCLUSIVE)
        self.assertEqual(combine([HYPOTHESIS_NOT_MET, HYPOTHESIS_NOT_MET]), HYPOTHESIS_NOT_MET)
        self.assertEqual(combine([HYPOTHESIS_NOT_MET, PASS]), PASS)
        self.assertEqual(combine([]), PASS)

    def test_expected_tags(self):
        self.assertTrue(matches_tag(FAIL, 'expected-fail'))
        self.assertTrue(matches_tag(PASS, 'pass'))
        self.assertFalse(matches_tag(FAIL, 'pass'))

    def test_merge_rejects_different_pairs(self):
        a = VerificationReport(group='S4', order=24, prime=2, p_solvable=True, verdicts={'am': PASS})
        b = VerificationReport(group='S4', order=24, prime=3, p_solvable=True, verdicts={'dim': PASS})
        with self.assertRaises(ValueError):
            merge_reports([a, b])

    def test_merge_joins_block_records(self):
        G = S4()
        merged = merge_reports([verify_theorem_A(G, 2, 'S4'), verify_theorem_B(G, 2, 'S4')])
        self.assertEqual(merged.verdicts, {'am': PASS, 'dim': PASS})
        self.assertEqual(len(merged.blocks), 1)
        record = merged.block('B0')
        self.assertEqual(record.irr0_left, [1, 1, 3, 3])
        self.assertEqual(record.dim_B, 24)

    def test_text_and_json_agree(self):
        report = verify_theorem_B(A5(), 2, 'A5')
        text = render_text(report)
        data = json.loads(render_json(report))
        self.assertIn('verdict dim: fail', text)
        self.assertEqual(data['verdicts'], {'dim': FAIL})
        self.assertEqual(data['verdict'], FAIL)
        self.assertNotIn('elapsed_ms', data)
        self.assertNotIn('irr0_left', data['blocks'][0])
        self.assertEqual(data['blocks'][0]['dim_B'], 44)
        self.assertEqual(render_json(report), render_json(verify_theorem_B(A5(), 2, 'A5')))
