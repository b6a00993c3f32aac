# Licensed to the Apache Software Foundation (ASF) under one
# or more contributor license agreements.  See the NOTICE file
# distributed with this work for additional information
# regarding copyright ownership.  The ASF licenses this file
# to you under the Apache License, Version 2.0 (the
# "License"); you may not use this file except in compliance
# with the License.  You may obtain a copy of the License at

#   http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied.  See the License for the
# specific language governing permissions and limitations
# under the License.

"""
JSON schemas to validate the documents that enter ecplast.

Rationals travel as strings ("p/q", "-3" or "1.25"); plain JSON integers are
accepted too. JSON floats are not rational and therefore rejected.
"""
# Exact rational: string or integer.
rational = {
    'anyOf': [
        {'type': 'string', 'pattern': r'^\s*-?[0-9]+(/[0-9]+|\.[0-9]+)?\s*$'},
        {'type': 'integer'},
    ],
}

# Strictly positive integer.
int_pos = {
    'type': 'integer',
    'minimum': 1,
}

# List of point indices.
index_list = {
    'type': 'array',
    'items': {'type': 'integer', 'minimum': 0},
}


FiniteMetricSpace = {
    'title': 'FiniteMetricSpace',
    'type': 'object',
    'properties': {
        'labels': {
            'type': 'array',
            'minItems': 1,
            'items': {'type': 'string'},
        },
        'dist': {
            'type': 'array',
            'minItems': 1,
            'items': {'type': 'array', 'items': rational},
        },
    },
    'required': ['labels', 'dist'],
    'additionalProperties': False,
}


PointMap = {
    'title': 'PointMap',
    'type': 'object',
    'properties': {
        'domain': FiniteMetricSpace,
        'codomain': FiniteMetricSpace,
        'table': index_list,
    },
    'required': ['domain', 'codomain', 'table'],
    'additionalProperties': False,
}


GeneratorRecipe = {
    'title': 'GeneratorRecipe',
    'type': 'object',
    'properties': {
        'kind': {
            'type': 'string',
            'pattern': '(?i)^(sharp_case1|sharp_cyclic|padded_sharp|'
                       'union_truncation|interval_pair_grid|'
                       'hilbert_shift_sample)$',
        },
        'params': {
            'type': 'object',
            'additionalProperties': {
                'anyOf': [rational, {'type': 'boolean'}],
            },
        },
        'seed': {'anyOf': [{'type': 'integer'}, {'type': 'null'}]},
    },
    'required': ['kind', 'params'],
    'additionalProperties': False,
}


MonotoneGauge = {
    'title': 'MonotoneGauge',
    'type': 'object',
    'properties': {
        'kind': {'type': 'string', 'pattern': '(?i)^(power|piecewise)$'},
        'power': {'anyOf': [int_pos, {'type': 'null'}]},
        'knots': {
            'anyOf': [
                {'type': 'null'},
                {
                    'type': 'array',
                    'minItems': 2,
                    'items': {
                        'type': 'array',
                        'minItems': 2,
                        'maxItems': 2,
                        'items': rational,
                    },
                },
            ],
        },
    },
    'required': ['kind'],
    'additionalProperties': False,
}
