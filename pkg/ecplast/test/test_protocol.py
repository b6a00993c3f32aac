import json
import pytest
import jsonschema

import ecplast.search as search
import ecplast.protocol as protocol

from fractions import Fraction
from ecplast.eptypes import PointMap, GeneratorRecipe, VerifierReport
from ecplast.eptypes import CertifiedDelta, BIJECTIONS, VALUE, VACUOUS
from ecplast.test.test import getEquilateral, getLine


class TestProtocol:
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

    def test_space_codec(self):
        X = getLine([0, Fraction(1, 3), 2])
        doc = protocol.FromEcplast_Space_Encode(X)
        assert doc['dist'][0][1] == '1/3'
        assert doc['dist'][0][0] == '0/1'

        # The encoded file is plain JSON and decodes to the same space.
        text = json.dumps(doc)
        assert protocol.ToEcplast_Space_Decode(json.loads(text)) == X
        assert protocol.parseSpace(text).data == X

    def test_space_decode_errors(self):
        # Schema error names the field.
        ret = protocol.parseSpace('{"labels": ["a", "b"], "dist": [[0, 0.5], ["1/2", 0]]}')
        assert not ret.ok
        assert 'dist/0/1' in ret.msg

        # Syntax error names line and column.
        ret = protocol.parseSpace('{"labels": ["a"],\n "dist": [[0]')
        assert not ret.ok
        assert 'line 2' in ret.msg

        # Metric axioms name the axiom and the entry.
        ret = protocol.parseSpace('{"labels": ["a", "b"], "dist": [["0", "1"], ["2", "0"]]}')
        assert not ret.ok
        assert 'symmetry' in ret.msg
        assert 'dist[0][1]' in ret.msg

        assert not protocol.parseSpace('[1, 2]').ok
        with pytest.raises(jsonschema.ValidationError):
            protocol.ToEcplast_Space_Decode({'labels': ['a']})
        with pytest.raises(ValueError):
            protocol.ToEcplast_Space_Decode({'labels': ['a', 'a'],
                                             'dist': [[0, 1], [1, 0]]})

    def test_map_codec(self):
        X = getLine([0, 1, 3])
        Y = getEquilateral(2, 3, 'y')
        f = PointMap(X, Y, [0, 1, 1])
        doc = json.loads(json.dumps(protocol.FromEcplast_Map_Encode(f)))
        assert protocol.ToEcplast_Map_Decode(doc) == f

        doc['table'] = [0, 1, 2]
        with pytest.raises(ValueError):
            protocol.ToEcplast_Map_Decode(doc)

    def test_recipe_codec(self):
        recipe = GeneratorRecipe('interval_pair_grid',
                                 {'step': Fraction(1, 4), 't': Fraction(1, 2)})
        doc = protocol.FromEcplast_Recipe_Encode(recipe)
        assert doc == {'kind': 'INTERVAL_PAIR_GRID',
                       'params': {'step': '1/4', 't': '1/2'},
                       'seed': None}
        assert protocol.ToEcplast_Recipe_Decode(json.loads(json.dumps(doc))) == recipe

        # Booleans survive, integers compare equal to their Fractions.
        recipe = GeneratorRecipe('sharp_case1', {'N': 5, 'eps': 1, 'a': 1, 'pad': True})
        doc = json.loads(json.dumps(protocol.FromEcplast_Recipe_Encode(recipe)))
        assert doc['params']['pad'] is True
        assert protocol.ToEcplast_Recipe_Decode(doc) == recipe

    def test_gauge_decode(self):
        g = protocol.ToEcplast_Gauge_Decode({'kind': 'power', 'power': 2})
        assert g(3) == 9
        with pytest.raises(ValueError):
            protocol.ToEcplast_Gauge_Decode({'kind': 'piecewise', 'knots': [[0, 1], [1, 2]]})

    def test_toJSON(self):
        X = getEquilateral(2)
        f = PointMap(X, X, [1, 0])
        doc = protocol.toJSON({'a': Fraction(3, 6), 'b': (1, 2), 'c': {2, 1},
                               'd': f, 'e': None, 'f': True, 3: 'x'})
        assert doc == {'a': '1/2', 'b': [1, 2], 'c': [1, 2],
                       'd': {'p0': 'p1', 'p1': 'p0'}, 'e': None, 'f': True,
                       '3': 'x'}

    def test_modulus_report(self):
        X = getLine([0, 1, 3])
        Y = getLine([0, 1, 2], 'y')
        rep = search.exact_modulus(X, Y, Fraction(1, 2), BIJECTIONS).data
        assert rep.verdict == VALUE
        doc = protocol.FromEcplast_Modulus_Encode(rep)
        assert doc['verdict'] == VALUE
        assert set(doc['witnesses']) == {'map', 'expansion_pair',
                                         'contraction_pair', 'expanded_to'}
        text = protocol.dumps(doc)
        assert json.loads(text)['value'] == protocol.toJSON(rep.value)

        # Vacuous reports carry no witnesses.
        rep = search.exact_modulus(X, X, 5, BIJECTIONS).data
        assert rep.verdict == VACUOUS
        doc = protocol.FromEcplast_Modulus_Encode(rep)
        assert doc['witnesses'] == {} and doc['value'] is None

    def test_verifier_report(self):
        rep = VerifierReport('x', False, None, 0, None, {'failed_at': Fraction(1, 2)})
        doc = protocol.FromEcplast_Verifier_Encode(rep)
        assert doc['verdict'] == protocol.NOT_APPLICABLE
        assert doc['details'] == {'failed_at': '1/2'}

        rep = VerifierReport('x', True, False, 3, None, {})
        assert protocol.FromEcplast_Verifier_Encode(rep)['verdict'] == protocol.FAIL

        cert = CertifiedDelta(Fraction(1), None, None, None, False, 'no admissible delta')
        doc = protocol.FromEcplast_Certified_Encode('lemma37', cert)
        assert doc['verdict'] == protocol.NOT_APPLICABLE
        assert doc['reason'] == 'no admissible delta'
