import pytest
import jsonschema

import ecplast.schemas as schemas


class TestSchemas:
    def test_FiniteMetricSpace(self):
        doc = {'labels': ['a', 'b'], 'dist': [['0', '1/2'], ['0.5', 0]]}
        jsonschema.validate(doc, schemas.FiniteMetricSpace)

        invalid = [
            {'labels': ['a', 'b']},
            {'labels': [], 'dist': []},
            {'labels': ['a', 'b'], 'dist': [[0, 0.5], [0.5, 0]]},
            {'labels': ['a', 'b'], 'dist': [['0', 'x'], ['1', '0']]},
            {'labels': ['a', 'b'], 'dist': [[0, 1], [1, 0]], 'extra': 1},
        ]
        for doc in invalid:
            with pytest.raises(jsonschema.ValidationError):
                jsonschema.validate(doc, schemas.FiniteMetricSpace)

    def test_GeneratorRecipe(self):
        doc = {'kind': 'sharp_case1', 'params': {'N': 5, 'eps': '1', 'pad': True}}
        jsonschema.validate(doc, schemas.GeneratorRecipe)
        doc = {'kind': 'HILBERT_SHIFT_SAMPLE', 'params': {}, 'seed': 3}
        jsonschema.validate(doc, schemas.GeneratorRecipe)

        invalid = [
            {'kind': 'nope', 'params': {}},
            {'kind': 'sharp_case1', 'params': {'eps': 0.5}},
            {'kind': 'sharp_case1', 'params': {}, 'seed': 'x'},
        ]
        for doc in invalid:
            with pytest.raises(jsonschema.ValidationError):
                jsonschema.validate(doc, schemas.GeneratorRecipe)

    def test_MonotoneGauge(self):
        jsonschema.validate({'kind': 'power', 'power': 2}, schemas.MonotoneGauge)
        jsonschema.validate({'kind': 'piecewise', 'knots': [[0, 0], ['1', '2']]},
                            schemas.MonotoneGauge)
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate({'kind': 'power', 'power': 0}, schemas.MonotoneGauge)
        with pytest.raises(jsonschema.ValidationError):
            jsonschema.validate({'kind': 'piecewise', 'knots': [[0, 0]]},
                                schemas.MonotoneGauge)
