import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from algebra.exceptions import InputError
from algebra.permgroup import is_p_solvable
from verification.reports import FAIL, HYPOTHESIS_LABEL, PASS

from .filters import VerificationRunFilter
from .models import VerificationRun
from .registry import catalog_dir, get_entry, load_catalog, load_group_file, resolve_group
from .runner import KINDS, run_pair


def run(*args):
    out, err = StringIO(), StringIO()
    call_command(*args, stdout=out, stderr=err)
    return out.getvalue()


class RegistryTest(SimpleTestCase):

    def test_catalog_entries(self):
        names = [entry.name for entry in load_catalog()]
        for name in ('S3', 'S4', 'SL23', 'A5', 'C3wrC2'):
            self.assertIn(name, names)
        self.assertEqual(get_entry('S4').group.order, 24)
        self.assertEqual(get_entry('SL23').group.order, 24)
        self.assertEqual(get_entry('A5').prime_list(), [2, 3, 5])

    def test_expected_tags(self):
        A5 = get_entry('A5')
        self.assertEqual(A5.expected_tag('am', 2), 'expected-fail')
        self.assertEqual(A5.expected_tag('am', 3), 'pass')
        self.assertEqual(A5.expected_tag('navarro', 3), 'hypothesis-not-met')
        self.assertEqual(A5.expected_tag('regular', 5), 'pass')
        self.assertEqual(get_entry('S4').expected_tag('fong', 2), 'pass')

    def test_unknown_entry(self):
        with self.assertRaises(InputError):
            get_entry('M11')

    def test_bad_group_file_reports_position(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.gens'
            path.write_text('degree: 3\n(1 2 x)\n', encoding='utf-8')
            with self.assertRaises(InputError) as ctx:
                load_group_file(path)
        self.assertEqual((ctx.exception.line, ctx.exception.column), (2, 6))
        self.assertIn('bad.gens', str(ctx.exception))

    def test_file_reference(self):
        entry = resolve_group(str(catalog_dir() / 'groups' / 'S3.gens'))
        self.assertEqual(entry.name, 'S3')
        self.assertEqual(entry.group.order, 6)
        self.assertEqual(entry.expected, {})

    def test_subgroups_for_propositions(self):
        S4 = get_entry('S4')
        self.assertEqual([N.order for N in S4.normal_subgroup_groups()], [12, 4])
        self.assertEqual(len(S4.documented_cases(2)), 1)
        self.assertEqual(S4.documented_cases(3), [])
        self.assertIsNone(S4.ibr_rows(2))
        self.assertEqual(len(get_entry('A5').ibr_rows(2)), 4)


class RunnerTest(SimpleTestCase):

    def test_run_pair_matches_expectations(self):
        report, outcomes = run_pair(get_entry('A5'), 2, ('am', 'dim', 'navarro'))
        self.assertEqual([o.kind for o in outcomes], ['am', 'dim', 'navarro'])
        self.assertTrue(all(o.matched for o in outcomes))
        self.assertEqual(report.verdicts['am'], FAIL)
        self.assertIsNone(report.elapsed_ms)

    def test_timings(self):
        report, _ = run_pair(get_entry('S3'), 3, ('dim',), timings=True)
        self.assertIsNotNone(report.elapsed_ms)


class CatalogSweepTest(SimpleTestCase):
    """Все виды проверок на всех парах (G, p) каталога"""

    def test_every_verdict_matches_its_tag(self):
        for entry in load_catalog():
            for p in entry.prime_list():
                report, outcomes = run_pair(entry, p, KINDS)
                solvable = is_p_solvable(entry.group, p)
                for outcome in outcomes:
                    with self.subTest(group=entry.name, p=p, kind=outcome.kind):
                        self.assertTrue(outcome.matched, f'{outcome.verdict}, expected {outcome.expected}')
                with self.subTest(group=entry.name, p=p):
                    if solvable:
                        self.assertEqual(report.verdicts['am'], PASS)
                        self.assertEqual(report.verdicts['dim'], PASS)
                        self.assertIsNone(report.hypothesis)
                    else:
                        self.assertEqual(report.hypothesis, HYPOTHESIS_LABEL)


class VerifyCommandTest(TestCase):

    def test_all_kinds_for_S4(self):
        output = run('verify', 'all', 'catalog:S4', '-p', '2')
        for kind in KINDS:
            self.assertIn(f'verdict {kind}: pass', output)

    def test_expected_failure_exits_cleanly(self):
        output = run('verify', 'dim', 'catalog:A5', '-p', '2')
        self.assertIn('verdict dim: fail', output)
        self.assertIn('hypothesis: not met', output)
        self.assertIn('dim: 12 does not divide 44; p-part divides: yes', output)

    def test_unexpected_verdict_exits_with_1(self):
        path = str(catalog_dir() / 'groups' / 'A5.gens')
        with self.assertRaises(CommandError) as ctx:
            run('verify', 'dim', path, '-p', '2')
        self.assertEqual(ctx.exception.returncode, 1)

    def test_group_required(self):
        with self.assertRaises(CommandError) as ctx:
            run('verify', 'am')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_group_file_exits_with_2(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'bad.gens'
            path.write_text('degree: 3\n(1 4)\n', encoding='utf-8')
            with self.assertRaises(CommandError) as ctx:
                run('verify', 'am', str(path), '-p', '2')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('line 2', str(ctx.exception))

    def test_json_is_deterministic(self):
        first = run('verify', 'am', 'catalog:SL23', '-p', '3', '--format', 'json')
        second = run('verify', 'am', 'catalog:SL23', '-p', '3', '--format', 'json')
        self.assertEqual(first, second)
        data = json.loads(first)
        self.assertEqual(data[0]['verdicts'], {'am': PASS})
        self.assertEqual(data[0]['prime'], 3)

    def test_record_and_history(self):
        run('verify', 'dim', 'catalog:A5', '-p', '2', '--record')
        run('verify', 'am', 'catalog:S4', '-p', '2', '--record')
        self.assertEqual(VerificationRun.objects.count(), 2)
        recorded = VerificationRun.objects.get(group='A5')
        self.assertEqual(recorded.verdict, FAIL)
        self.assertEqual(recorded.expected, 'expected-fail')
        self.assertTrue(recorded.matched)
        self.assertEqual(recorded.report['verdicts'], {'dim': FAIL})

        history = run('catalog', 'history', '--group', 'a5')
        self.assertIn('A5 p=2 dim: fail', history)
        self.assertNotIn('S4', history)

        data = json.loads(run('catalog', 'history', '--kind', 'am', '--format', 'json'))
        self.assertEqual(len(data), 1)
        self.assertEqual(data[0]['group'], 'S4')

    def test_history_filter(self):
        VerificationRun.objects.create(group='S3', order=6, prime=3, kind='dim', verdict=PASS, expected='pass')
        VerificationRun.objects.create(group='A5', order=60, prime=2, kind='am', verdict=FAIL, expected='pass',
                                       matched=False)
        qs = VerificationRunFilter({'matched': False}, queryset=VerificationRun.objects.all()).qs
        self.assertEqual([r.group for r in qs], ['A5'])
        self.assertIn('Журнал пуст', run('catalog', 'history', '--group', 'Q8'))


class OtherCommandsTest(SimpleTestCase):

    def test_catalog_list(self):
        output = run('catalog', 'list')
        self.assertIn('S4', output)
        self.assertIn('am@2=expected-fail', output)

    def test_table(self):
        output = run('table', 'catalog:S3')
        self.assertIn('group: S3', output)
        self.assertIn('classes: 3', output)
        self.assertEqual(sum(line.startswith('chi ') for line in output.splitlines()), 3)

    def test_blocks_with_decomposition(self):
        output = run('blocks', 'catalog:S4', '-p', '3', '--decomposition')
        self.assertEqual(sum(line.startswith('block ') for line in output.splitlines()), 3)
        self.assertIn('decomposition (fong-swan):', output)

    def test_blocks_json(self):
        data = json.loads(run('blocks', 'catalog:A5', '-p', '2', '--format', 'json'))
        self.assertEqual(data['blocks'][0]['dim_B'], 44)
        self.assertFalse(data['p_solvable'])
