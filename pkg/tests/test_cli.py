import io
import json
import os
import shutil
import tempfile
import unittest
from unittest.mock import patch

import csm_verifier

FIXTURES = os.path.join(os.path.dirname(os.path.abspath(__file__)), '..', 'fixtures')


def run_cli(*argv):
    """Run main() and capture what it prints."""
    with patch('sys.stdout', new_callable=io.StringIO) as stdout:
        code = csm_verifier.main(list(argv))
    return code, stdout.getvalue()


class TestCommandLine(unittest.TestCase):
    """Test cases for the csm_verifier command line"""

    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_verify_fixture(self):
        """verify prints a JSON report and exits 0"""
        code, output = run_cli('verify', '--input', os.path.join(FIXTURES, 'boolean_p1.json'))
        self.assertEqual(code, 0)
        report = json.loads(output)
        self.assertEqual(report['lhs'], [1, 0])
        self.assertEqual(report['exit_code'], 0)

    def test_text_format(self):
        """--format text renders the template"""
        code, output = run_cli('verify', '--input', os.path.join(FIXTURES, 'boolean_p1.json'), '--format', 'text')
        self.assertEqual(code, 0)
        self.assertIn('exit code: 0', output)

    def test_inline_linear_type(self):
        """--generators takes a semicolon separated list"""
        code, output = run_cli('linear-type', '--generators', 'x^2; x*y; y^2')
        self.assertEqual(code, 1)
        self.assertIs(json.loads(output)['linear_type'], False)

    def test_inline_freeness(self):
        """--polynomial with explicit variables"""
        code, output = run_cli('freeness', '--polynomial', 'x*y*z', '--variables', 'x,y,z')
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(output)['freeness']['exponents'], [1, 1, 1])

    def test_proof_chain(self):
        """--rank runs the symbolic chain"""
        code, _ = run_cli('proof-chain', '--rank', '3')
        self.assertEqual(code, 0)

    def test_missing_payload(self):
        """A subcommand without input is an input error"""
        code, output = run_cli('verify')
        self.assertEqual(code, 3)
        self.assertIn('error', json.loads(output))

    def test_kind_mismatch(self):
        """A verify job passed to charpoly is rejected"""
        code, _ = run_cli('charpoly', '--input', os.path.join(FIXTURES, 'braid_p2.json'))
        self.assertEqual(code, 3)

    def test_out_file(self):
        """--out writes the report instead of printing it"""
        out = os.path.join(self.tmpdir, 'report.json')
        code, output = run_cli('charpoly', '--input', self._bare_braid(), '--out', out)
        self.assertEqual(code, 0)
        self.assertEqual(output, '')
        with open(out) as f:
            self.assertEqual(json.load(f)['characteristic_polynomial'], [1, -6, 11, -6])

    def test_invalid_config(self):
        """Configuration errors stop before any job runs"""
        path = os.path.join(self.tmpdir, 'config.json')
        with open(path, 'w') as f:
            json.dump({'BATCH': {'WORKERS': 0}}, f)
        code, _ = run_cli('proof-chain', '--rank', '2', '--config', path)
        self.assertEqual(code, 3)

    def test_batch(self):
        """batch prints the summary and returns the worst exit code"""
        jobs_dir = os.path.join(self.tmpdir, 'jobs')
        os.makedirs(jobs_dir)
        shutil.copy(os.path.join(FIXTURES, 'boolean_p1.json'), jobs_dir)
        code, output = run_cli('batch', '--input', jobs_dir, '--format', 'text', '--loglevel', 'warning')
        self.assertEqual(code, 0)
        self.assertIn('1 job(s), exit code 0', output)

    def _bare_braid(self):
        path = os.path.join(self.tmpdir, 'braid.json')
        with open(path, 'w') as f:
            json.dump({'n': 2, 'hyperplanes': [[1, 0, 0], [0, 1, 0], [0, 0, 1],
                                               [1, -1, 0], [1, 0, -1], [0, 1, -1]]}, f)
        return path


if __name__ == '__main__':
    unittest.main()
