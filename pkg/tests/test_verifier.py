import json
import os
import shutil
import tempfile
import unittest
from math import comb

from arrangements import Arrangement
from verifier import (JobSpec, JobSpecError, VerificationReport, check_linear_type, format_report, infer_variables,
                      load_job_spec, read_structured_file, verify_divisor, verify_formula, write_report)
from polynomials import parse_polynomial

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'fixtures')

# c_SM(1_U) coefficients and exponents of every free acceptance arrangement
FREE_FIXTURES = {
    'boolean_p1.json': ([1, 0], [1, 1]),
    'boolean_p2.json': ([1, 0, 0], [1, 1, 1]),
    'boolean_p3.json': ([1, 0, 0, 0], [1, 1, 1, 1]),
    'concurrent_lines_p2.json': ([1, 0, -1], [0, 1, 2]),
    'supersolvable_p2.json': ([1, -1, 0], [1, 1, 2]),
    'braid_p2.json': ([1, -3, 2], [1, 2, 3]),
    'deleted_braid_p2.json': ([1, -2, 1], [1, 2, 2]),
    'pencil_four_lines_p2.json': ([1, -1, -2], [0, 1, 3]),
    'single_hyperplane_p3.json': ([1, 3, 3, 1], [0, 0, 0, 1]),
    'empty_p2.json': ([1, 3, 3], [0, 0, 0]),
    'braid_s5_p3.json': ([1, -6, 11, -6], [1, 2, 3, 4]),
}

QUICK = {'step_cap': 3000, 'include_timings': False}


def fixture_arrangement(filename):
    return load_job_spec(os.path.join(FIXTURES, filename)).arrangement()


def verify_fixture(filename):
    spec = load_job_spec(os.path.join(FIXTURES, filename))
    return verify_formula(spec.arrangement(), dict(spec.options, include_timings=False))


def unit_vectors(n):
    return tuple(tuple(int(i == j) for j in range(n + 1)) for i in range(n + 1))


class TestJobSpec(unittest.TestCase):
    """Test cases for job file parsing"""

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_fixture_loads(self):
        """Fixtures are verify-arrangement jobs named after their content"""
        spec = load_job_spec(os.path.join(FIXTURES, 'braid_p2.json'))
        self.assertEqual(spec.kind, 'verify-arrangement')
        self.assertEqual(len(spec.arrangement()), 6)
        self.assertIn('braid', spec.case)

    def test_yaml_job(self):
        """A job file that is not JSON is read as YAML"""
        path = os.path.join(self.tmpdir, 'lines.yaml')
        with open(path, 'w') as f:
            f.write("kind: char-poly\narrangement:\n  n: 1\n  hyperplanes: [[1, 0], [0, 1]]\n")
        spec = load_job_spec(path)
        self.assertEqual(spec.kind, 'char-poly')
        self.assertEqual(spec.case, 'lines')

    def test_bare_arrangement_is_wrapped(self):
        """An arrangement object without 'kind' takes the default kind"""
        spec = JobSpec.from_dict({'n': 1, 'hyperplanes': [[1, 0]]}, default_kind='freeness')
        self.assertEqual(spec.kind, 'freeness')
        self.assertEqual(spec.arrangement().n, 1)

    def test_invalid_jobs(self):
        """Unknown kinds, missing payloads and bad options are rejected"""
        with self.assertRaises(JobSpecError):
            JobSpec.from_dict({'kind': 'integrate', 'polynomial': 'x'})
        with self.assertRaises(JobSpecError):
            JobSpec.from_dict({'kind': 'proof-chain'})
        with self.assertRaises(JobSpecError):
            JobSpec.from_dict({'kind': 'freeness', 'polynomial': 'x', 'options': [1]})
        with self.assertRaises(JobSpecError):
            JobSpec.from_dict(['not', 'a', 'mapping'])

    def test_malformed_fields(self):
        """Wrongly typed variables, names and option values are input errors"""
        bad = [
            {'kind': 'freeness', 'polynomial': 'x*y', 'variables': 'xy'},
            {'kind': 'freeness', 'polynomial': 'x*y', 'variables': ['x', 3]},
            {'kind': 'freeness', 'polynomial': 'x*y', 'name': ['braid']},
            {'kind': 'freeness', 'polynomial': 'x*y', 'options': {'step_cap': 'many'}},
            {'kind': 'freeness', 'polynomial': 'x*y', 'options': {'include_timings': None}},
        ]
        for data in bad:
            with self.assertRaises(JobSpecError, msg=data):
                JobSpec.from_dict(data)
        spec = JobSpec.from_dict({'kind': 'freeness', 'polynomial': 'x*y', 'options': {'step_cap': None}})
        self.assertIsNone(spec.options['step_cap'])

    def test_missing_file(self):
        """Unreadable files become JobSpecError"""
        with self.assertRaises(JobSpecError):
            read_structured_file(os.path.join(self.tmpdir, 'missing.json'))

    def test_variables(self):
        """x, y, z, w come first, other names sorted after"""
        self.assertEqual(infer_variables(["w + a*x", "y"]), ('x', 'y', 'w', 'a'))
        spec = JobSpec.from_dict({'kind': 'freeness', 'polynomial': 'x*y', 'variables': ['x', 'y', 'z']})
        self.assertEqual(spec.polynomial().varnames, ('x', 'y', 'z'))

    def test_generators_must_be_strings(self):
        """'generators' needs a non-empty list of strings"""
        spec = JobSpec.from_dict({'kind': 'linear-type', 'generators': []})
        with self.assertRaises(JobSpecError):
            spec.generators()

    def test_to_dict(self):
        """to_dict restores the job file layout"""
        data = {'kind': 'proof-chain', 'n': 3, 'options': {'proof_chain_max_rank': 4}}
        self.assertEqual(JobSpec.from_dict(data).to_dict(), data)


class TestVerifyFormula(unittest.TestCase):
    """Test cases for verify_formula on the fixture arrangements"""

    def test_free_fixtures(self):
        """Every free fixture certifies both hypotheses and both sides agree"""
        for filename, (expected, exponents) in FREE_FIXTURES.items():
            report = verify_fixture(filename)
            self.assertEqual(report.lhs.to_list(), expected, filename)
            self.assertEqual(report.rhs.to_list(), expected, filename)
            self.assertIs(report.equal, True, filename)
            self.assertEqual(report.hypotheses['free']['status'], 'free', filename)
            self.assertEqual(report.hypotheses['free']['exponents'], exponents, filename)
            self.assertEqual(report.hypotheses['linear_type']['status'], 'true', filename)
            self.assertTrue(report.theorem_applies, filename)
            self.assertTrue(report.euler_check, filename)
            self.assertTrue(report.dual_check, filename)
            self.assertTrue(report.shadow_check, filename)
            self.assertEqual(report.exit_code, 0, filename)

    def test_families(self):
        """Empty, single-hyperplane and Boolean arrangements in P^1 to P^4"""
        for n in range(1, 5):
            families = {
                'empty': (Arrangement(n, ()), [comb(n + 1, k) for k in range(n + 1)]),
                'single': (Arrangement(n, unit_vectors(n)[:1]), [comb(n, k) for k in range(n + 1)]),
                'boolean': (Arrangement(n, unit_vectors(n)), [1] + [0] * n),
            }
            for family, (arrangement, expected) in families.items():
                report = verify_formula(arrangement, {'include_timings': False})
                self.assertEqual(report.lhs.to_list(), expected, (family, n))
                self.assertIs(report.equal, True, (family, n))
                self.assertEqual(report.hypotheses['linear_type']['status'], 'true', (family, n))
                self.assertTrue(report.theorem_applies, (family, n))

    def test_braid_exponents(self):
        """The braid certificate carries exponents (1, 2, 3)"""
        report = verify_formula(fixture_arrangement('braid_p2.json'), QUICK)
        self.assertEqual(report.hypotheses['free']['exponents'], [1, 2, 3])
        self.assertEqual(report.rhs.to_text(), "1 - 3h + 2h^2")

    def test_generic_four_planes(self):
        """A non-free arrangement has no right-hand side"""
        report = verify_formula(fixture_arrangement('generic_four_planes_p2.json'), QUICK)
        self.assertEqual(report.lhs.to_list(), [1, -1, 1])
        self.assertIsNone(report.rhs)
        self.assertEqual(report.equal, 'not-applicable')
        self.assertEqual(report.hypotheses['free']['status'], 'non-free')
        self.assertFalse(report.theorem_applies)
        self.assertEqual(report.exit_code, 1)

    def test_non_essential_note(self):
        """A pencil of lines is computed as given, with a note"""
        report = verify_formula(fixture_arrangement('pencil_four_lines_p2.json'), QUICK)
        self.assertFalse(report.essential)
        self.assertTrue(any('not essential' in note for note in report.notes))

    def test_deterministic_without_timings(self):
        """Two runs give identical reports when timings are off"""
        A = fixture_arrangement('boolean_p2.json')
        first = verify_formula(A, {'include_timings': False}).to_dict()
        second = verify_formula(A, {'include_timings': False}).to_dict()
        self.assertEqual(first, second)
        self.assertEqual(first['timings'], {})

    def test_timings(self):
        """Stage timings and their total are recorded by default"""
        report = verify_formula(Arrangement(1, ((1, 0), (0, 1))))
        self.assertIn('lattice', report.timings)
        self.assertIn('total', report.timings)


class TestVerifyDivisor(unittest.TestCase):
    """Test cases for divisors given by their equation"""

    def test_homogeneous_divisor(self):
        """xyz gives the right-hand side only"""
        report = verify_divisor(parse_polynomial("x*y*z", ('x', 'y', 'z')), {'include_timings': False})
        self.assertIsNone(report.lhs)
        self.assertEqual(report.rhs.to_list(), [1, 0, 0])
        self.assertEqual(report.exit_code, 2)

    def test_cusp(self):
        """The affine cusp is free and of linear type but has no projective class"""
        report = verify_divisor(parse_polynomial("x^2 - y^3", ('x', 'y')), {'include_timings': False})
        self.assertEqual(report.hypotheses['free']['status'], 'free')
        self.assertEqual(report.hypotheses['linear_type']['status'], 'true')
        self.assertIsNone(report.rhs)
        self.assertIn('affine divisor: no projective right-hand side', report.notes)

    def test_linear_type_entry(self):
        """check_linear_type reports a witness for a non-linear-type Jacobian ideal"""
        entry = check_linear_type(parse_polynomial("x*y", ('x', 'y')))
        self.assertEqual(entry['status'], 'true')
        self.assertEqual(entry['chart'], 'cone')
        entry = check_linear_type(parse_polynomial("x^3 + y^3 + z^3", ('x', 'y', 'z')), step_cap=1)
        self.assertEqual(entry['status'], 'inconclusive')


class TestReport(unittest.TestCase):
    """Test cases for VerificationReport serialization and rendering"""

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()
        self.report = verify_formula(fixture_arrangement('boolean_p2.json'), {'include_timings': False})

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_round_trip(self):
        """from_dict(to_dict(r)) reproduces the report"""
        data = self.report.to_dict()
        self.assertEqual(VerificationReport.from_dict(data).to_dict(), data)
        self.assertEqual(data['lhs_text'], "1")

    def test_exit_codes(self):
        """equal True, False, 'not-applicable', None and errors"""
        self.assertEqual(VerificationReport(equal=True).exit_code, 0)
        self.assertEqual(VerificationReport(equal=False).exit_code, 1)
        self.assertEqual(VerificationReport(equal='not-applicable').exit_code, 1)
        self.assertEqual(VerificationReport().exit_code, 2)
        self.assertEqual(VerificationReport(equal=True, error='boom').exit_code, 3)

    def test_text_rendering(self):
        """The text view shows the case, the verdict and the exit code"""
        data = dict(self.report.to_dict(), exit_code=self.report.exit_code)
        text = format_report(data, 'text')
        self.assertIn('case: Boolean arrangement xyz in P^2', text)
        self.assertIn('exit code: 0', text)
        self.assertIn('(exponents 1, 1, 1)', text)

    def test_write_json(self):
        """JSON reports are written and read back unchanged"""
        path = os.path.join(self.tmpdir, 'nested', 'report.json')
        write_report(self.report.to_dict(), path)
        with open(path) as f:
            self.assertEqual(json.load(f), self.report.to_dict())


if __name__ == '__main__':
    unittest.main()
