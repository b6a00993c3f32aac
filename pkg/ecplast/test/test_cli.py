import json
import pytest

import ecplast.cli as cli
import ecplast.protocol as protocol
import ecplast.constructions as constructions

from fractions import Fraction
from ecplast.test.test import getEquilateral


class TestCli:
    @classmethod
    def setup_class(cls):
        pass

    @classmethod
    def teardown_class(cls):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def run(self, capsys, *argv):
        """
        Run the command line ``argv`` and return the exit code and the parsed
        JSON report.
        """
        code = cli.main(list(argv) + ['--workers', '1'])
        out = capsys.readouterr().out

        # Skip log lines that may precede the report.
        start = 0 if out.startswith('{') else out.index('\n{') + 1
        return code, json.loads(out[start:])

    def writeSpace(self, path, space):
        path.write_text(json.dumps(protocol.FromEcplast_Space_Encode(space)))
        return str(path)

    def test_bounds(self, capsys):
        code, doc = self.run(capsys, 'bounds', '--N', '7', '--eps', '1')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.OK
        out = doc['bounds']
        assert out['M'] == 12
        assert out['orbit'] == '1/11'
        assert out['pair_sum'] == '1/20'
        assert out['sharpness_gap']['threshold'] == '1/36'
        assert out['certified'] == {}

        code, doc = self.run(capsys, 'bounds', '--N', '7')
        assert code == cli.EXIT_REFUSED
        assert doc['verdict'] == cli.ERROR

    def test_bounds_space(self, capsys, tmp_path):
        X, f = constructions.sharp_case1(5, 1, 1).data
        fname = self.writeSpace(tmp_path / 'X.json', X)
        code, doc = self.run(capsys, 'bounds', fname, '--eps', '1')
        assert code == cli.EXIT_OK
        out = doc['bounds']
        assert out['N'] == 5
        assert set(out['certified']) == {'lemma37', 'theorem38'}
        assert Fraction(out['nitka']) > 0

    def test_bounds_text(self, capsys):
        code = cli.main(['bounds', '--N', '7', '--eps', '1', '--format', 'text'])
        out = capsys.readouterr().out
        assert code == cli.EXIT_OK
        assert 'verdict: "OK"' in out
        assert '  orbit: "1/11"' in out

    def test_validate(self, capsys, tmp_path):
        fname = tmp_path / 'bad.json'
        fname.write_text(json.dumps({'labels': ['a', 'b'],
                                     'dist': [['0', '1'], ['2', '0']]}))
        code, doc = self.run(capsys, 'validate', str(fname))
        assert code == cli.EXIT_FAILED
        assert doc['verdict'] == protocol.INVALID
        assert doc['axiom'] == 'symmetry'
        assert doc['witnesses'] == ['a', 'b']

        fname = self.writeSpace(tmp_path / 'good.json', getEquilateral(3))
        code, doc = self.run(capsys, 'validate', fname)
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.OK

    def test_validate_unparseable(self, capsys, tmp_path):
        # Floats are not exact.
        fname = tmp_path / 'float.json'
        fname.write_text('{"labels": ["a", "b"], "dist": [[0, 0.5], ["1/2", 0]]}')
        code, doc = self.run(capsys, 'validate', str(fname))
        assert code == cli.EXIT_REFUSED
        assert 'dist/0/1' in doc['msg']

        fname = tmp_path / 'broken.json'
        fname.write_text('{"labels": ["a"],\n "dist": ')
        code, doc = self.run(capsys, 'validate', str(fname))
        assert code == cli.EXIT_REFUSED
        assert 'line 2' in doc['msg']

        code, doc = self.run(capsys, 'validate', str(tmp_path / 'missing.json'))
        assert code == cli.EXIT_REFUSED

    def test_generate_and_modulus(self, capsys, tmp_path):
        prefix = str(tmp_path / 'sharp5')
        code, doc = self.run(capsys, 'generate', 'sharp_case1', '--param', 'N=5',
                             '--param', 'eps=1', '--param', 'a=1', '--out', prefix)
        assert code == cli.EXIT_OK
        assert doc['files'] == [prefix + '_map.json', prefix + '_space.json']
        assert doc['margins']['map'] == {'expansion': '1/1', 'contraction': '1/5'}
        assert doc['recipe']['kind'] == 'SHARP_CASE1'

        fname = prefix + '_space.json'
        code, doc = self.run(capsys, 'modulus', fname, fname, '--eps', '99/100',
                             '--class', 'bijections')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == 'VALUE'
        assert Fraction(99, 500) <= Fraction(doc['value']) <= Fraction(1, 5)
        assert doc['maps_checked'] == 120
        assert set(doc['witnesses']['map']) == {'x1', 'x2', 'y1', 'y2', 'y3'}

        # The map file decodes to the generated map.
        with open(prefix + '_map.json') as fd:
            f = protocol.ToEcplast_Map_Decode(json.load(fd))
        assert f == constructions.sharp_case1(5, 1, 1).data[1]

    def test_generate_recipe(self, capsys, tmp_path):
        fname = tmp_path / 'recipe.json'
        fname.write_text(json.dumps({'kind': 'interval_pair_grid',
                                     'params': {'step': '1/10', 't': '1/2'}}))
        code, doc = self.run(capsys, 'generate', '--recipe', str(fname))
        assert code == cli.EXIT_OK
        assert set(doc['files']) == {'X', 'Y', 'map'}
        assert doc['margins']['map']['contraction'] == '1/2'

        code, doc = self.run(capsys, 'generate', 'hilbert_shift_sample',
                             '--param', 'count=4', '--seed', '2')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.PASS
        assert len(doc['samples']) == 6
        assert doc['witnesses']['after'] == '2/1'

        code, doc = self.run(capsys, 'generate', 'nope')
        assert code == cli.EXIT_REFUSED
        code, doc = self.run(capsys, 'generate', 'sharp_case1', '--param', 'N')
        assert code == cli.EXIT_REFUSED

    def test_check(self, capsys, tmp_path):
        X = self.writeSpace(tmp_path / 'X.json', getEquilateral(3))
        Y = self.writeSpace(tmp_path / 'Y.json', getEquilateral(3, 2))

        code, doc = self.run(capsys, 'check', X, Y, '--kind', 'ec')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.FAIL
        assert doc['plastic'] is False
        assert doc['witnesses']['map'] == {'p0': 'p0', 'p1': 'p1', 'p2': 'p2'}

        code, doc = self.run(capsys, 'check', X, X, '--kind', 'strong')
        assert code == cli.EXIT_OK and doc['plastic'] is True

        code, doc = self.run(capsys, 'check', Y, X, '--kind', 'pair-sum', '--eps', '1/2')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.PASS

        # Hypothesis sigma(Y) <= sigma(X) fails.
        code, doc = self.run(capsys, 'check', X, Y, '--kind', 'pair-sum', '--eps', '1/2')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.NOT_APPLICABLE

        code, doc = self.run(capsys, 'check', X, Y, '--kind', 'orbit')
        assert code == cli.EXIT_REFUSED

    def test_refusal(self, capsys, tmp_path):
        X, f = constructions.sharp_case1(5, 1, 1).data
        fname = self.writeSpace(tmp_path / 'X.json', X)

        code, doc = self.run(capsys, 'modulus', fname, fname, '--eps', '1',
                             '--max-maps', '100')
        assert code == cli.EXIT_REFUSED
        assert doc['verdict'] == cli.REFUSED
        assert '--max-maps=100' in doc['msg']

        code, doc = self.run(capsys, 'profile', fname, '--max-size', '4')
        assert code == cli.EXIT_REFUSED
        assert doc['verdict'] == cli.REFUSED

        code, doc = self.run(capsys, 'profile', fname)
        assert code == cli.EXIT_OK
        assert doc['breakpoints'][0] == '1/1'

    def test_invalid_arguments(self, capsys, tmp_path):
        fname = self.writeSpace(tmp_path / 'X.json', getEquilateral(3))
        code, doc = self.run(capsys, 'modulus', fname, fname, '--eps', 'abc')
        assert code == cli.EXIT_REFUSED
        assert '<--eps>' in doc['msg']

        code, doc = self.run(capsys, 'modulus', fname, fname, '--eps', '1',
                             '--class', 'surjections')
        assert code == cli.EXIT_REFUSED

        code, doc = self.run(capsys, 'modulus', fname, '--eps', '1')
        assert code == cli.EXIT_REFUSED

        code, doc = self.run(capsys, 'verify-all', '--sizes', '1,3')
        assert code == cli.EXIT_REFUSED

    def test_verify_all(self, capsys):
        code, doc = self.run(capsys, 'verify-all', '--seed', '0', '--sizes', '3',
                             '--count', '2')
        assert code == cli.EXIT_OK
        assert doc['verdict'] == protocol.PASS
        assert doc['witnesses'] == []
        tally = doc['tally']
        assert tally['m_of_n'][protocol.PASS] == 299
        assert tally['sharpness'][protocol.PASS] == 2
        assert tally['proper_measurement'][protocol.PASS] == 3

        # Three point spaces are too small for the certified levels.
        assert tally['lemma37'][protocol.NOT_APPLICABLE] == 2
