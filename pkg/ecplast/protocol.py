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
Converts the JSON documents (space files, map files, recipes) to the native
Python types of ecplast, and the native reports back to plain JSON.

``ToEcplast_*_Decode``: JSON data -> native type. Raises
``jsonschema.ValidationError`` if the document does not match its schema and
``ValueError`` if it matches but does not describe a valid object.

``FromEcplast_*_Encode``: native type -> JSON compatible dict.

Every report has a top level 'verdict' and 'witnesses' field. Rationals are
always written as canonical "p/q" strings in lowest terms; witnesses refer
to points by label.
"""
import json
import logging
import jsonschema
import ecplast.core as core
import ecplast.schemas as schemas

from fractions import Fraction
from ecplast.eptypes import typecheck, RetVal, toRational, formatRational
from ecplast.eptypes import FiniteMetricSpace, PointMap, GeneratorRecipe
from ecplast.eptypes import MonotoneGauge, VALUE

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)

# Verdicts of reports that have no modulus verdict.
PASS = 'PASS'
FAIL = 'FAIL'
NOT_APPLICABLE = 'N/A'
OK = 'OK'
INVALID = 'INVALID'


def toJSON(obj):
    """
    Return ``obj`` with all Fractions as "p/q" strings, all named tuples as
    dicts and all sets and tuples as lists.

    Spaces and maps are abbreviated: a space becomes its space file dict,
    a map its table of labels.
    """
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return formatRational(obj)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, FiniteMetricSpace):
        return FromEcplast_Space_Encode(obj)
    if isinstance(obj, PointMap):
        return mapLabels(obj)
    if hasattr(obj, '_asdict'):
        return {k: toJSON(v) for k, v in obj._asdict().items()}
    if isinstance(obj, dict):
        return {str(k): toJSON(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return [toJSON(_) for _ in sorted(obj)]
    if isinstance(obj, (tuple, list)):
        return [toJSON(_) for _ in obj]
    return str(obj)


def dumps(doc: dict):
    """
    Return the canonical JSON string of the report ``doc``.
    """
    return json.dumps(toJSON(doc), sort_keys=True, indent=2)


def mapLabels(f: PointMap):
    """
    Return the table of ``f`` as a {domain label: codomain label} dict.
    """
    return {f.domain.labels[i]: f.codomain.labels[j] for i, j in enumerate(f.table)}


def pairLabels(space: FiniteMetricSpace, pair):
    """
    Return the labels of the index ``pair`` in ``space`` or *None*.
    """
    if pair is None:
        return None
    return [space.labels[_] for _ in pair]


def schemaErrorMessage(err: jsonschema.ValidationError):
    """
    Return the message of ``err`` prefixed with the offending field.
    """
    field = '/'.join(str(_) for _ in err.absolute_path)
    return '<{}>: {}'.format(field or 'document', err.message)


# ---------------------------------------------------------------------------
# Spaces
# ---------------------------------------------------------------------------

@typecheck
def ToEcplast_Space_Decode(payload: dict):
    """
    Return the validated ``FiniteMetricSpace`` of a space file.

    The error message of an invalid matrix names the first offending entry,
    eg "dist[0][1]".

    :raises: jsonschema.ValidationError, ValueError
    """
    jsonschema.validate(payload, schemas.FiniteMetricSpace)
    labels, dist = payload['labels'], payload['dist']

    report = core.validate(labels, dist).data
    if not report.valid:
        raise ValueError('<{}> {}'.format(report.axiom, report.msg))
    return FiniteMetricSpace(labels, dist)


@typecheck
def FromEcplast_Space_Encode(space: FiniteMetricSpace):
    return {
        'labels': list(space.labels),
        'dist': [[formatRational(_) for _ in row] for row in space.dist],
    }


def parseSpace(text: str):
    """
    Return the ``FiniteMetricSpace`` encoded in the JSON string ``text``.

    Unlike the codecs this function never raises; the message of a failed
    parse names the line and column (syntax errors) or the offending field.

    :param str text: content of a space file.
    :return: FiniteMetricSpace
    """
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        msg = 'line {}, column {}: {}'.format(err.lineno, err.colno, err.msg)
        return RetVal(False, msg, None)
    if not isinstance(payload, dict):
        return RetVal(False, '<document>: space file must hold a JSON object', None)

    try:
        return RetVal(True, None, ToEcplast_Space_Decode(payload))
    except jsonschema.ValidationError as err:
        return RetVal(False, schemaErrorMessage(err), None)
    except ValueError as err:
        return RetVal(False, str(err), None)


# ---------------------------------------------------------------------------
# Maps
# ---------------------------------------------------------------------------

@typecheck
def ToEcplast_Map_Decode(payload: dict):
    """
    :raises: jsonschema.ValidationError, ValueError
    """
    jsonschema.validate(payload, schemas.PointMap)
    domain = ToEcplast_Space_Decode(payload['domain'])
    codomain = ToEcplast_Space_Decode(payload['codomain'])
    try:
        return PointMap(domain, codomain, payload['table'])
    except TypeError:
        raise ValueError('<table>: does not map the domain into the codomain')


@typecheck
def FromEcplast_Map_Encode(f: PointMap):
    return {
        'domain': FromEcplast_Space_Encode(f.domain),
        'codomain': FromEcplast_Space_Encode(f.codomain),
        'table': list(f.table),
    }


# ---------------------------------------------------------------------------
# Recipes and gauges
# ---------------------------------------------------------------------------

@typecheck
def ToEcplast_Recipe_Decode(payload: dict):
    """
    Return the ``GeneratorRecipe`` described by ``payload``.

    Rational parameters become Fractions, Booleans stay Booleans.

    :raises: jsonschema.ValidationError, ValueError
    """
    jsonschema.validate(payload, schemas.GeneratorRecipe)
    params = {}
    for name, value in payload['params'].items():
        params[name] = value if isinstance(value, bool) else toRational(value)
    try:
        return GeneratorRecipe(payload['kind'], params, payload.get('seed'))
    except TypeError as err:
        raise ValueError(str(err))


@typecheck
def FromEcplast_Recipe_Encode(recipe: GeneratorRecipe):
    params = {}
    for name, value in recipe.params:
        params[name] = value if isinstance(value, bool) else formatRational(value)
    return {'kind': recipe.kind, 'params': params, 'seed': recipe.seed}


@typecheck
def ToEcplast_Gauge_Decode(payload: dict):
    """
    :raises: jsonschema.ValidationError, ValueError
    """
    jsonschema.validate(payload, schemas.MonotoneGauge)
    try:
        return MonotoneGauge(payload['kind'], payload.get('power'), payload.get('knots'))
    except TypeError as err:
        raise ValueError(str(err))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

def FromEcplast_Validation_Encode(report, labels):
    witnesses = [labels[_] for _ in report.witness if 0 <= _ < len(labels)]
    return {
        'verdict': OK if report.valid else INVALID,
        'witnesses': witnesses,
        'axiom': report.axiom,
        'msg': report.msg,
    }


def FromEcplast_Profile_Encode(prof):
    """
    Return the profile as a table with one row per sample level.
    """
    rows = [toJSON(_) for _ in prof.samples]
    return {
        'verdict': OK,
        'witnesses': [],
        'breakpoints': toJSON(prof.breakpoints),
        'samples': rows,
    }


def FromEcplast_Modulus_Encode(report):
    X = report.minimizing_map.domain if report.minimizing_map else None
    Y = report.minimizing_map.codomain if report.minimizing_map else None
    witnesses = {}
    if report.minimizing_map is not None:
        witnesses = {
            'map': mapLabels(report.minimizing_map),
            'expansion_pair': pairLabels(X, report.expansion_witness),
            'contraction_pair': pairLabels(X, report.contraction_witness),
            'expanded_to': pairLabels(Y, [report.minimizing_map(_)
                                          for _ in report.expansion_witness]),
        }
    return {
        'verdict': report.verdict,
        'witnesses': witnesses,
        'eps': report.eps,
        'map_class': report.map_class,
        'value': report.value if report.verdict == VALUE else None,
        'min_contraction': report.value,
        'maps_checked': report.maps_checked,
    }


def FromEcplast_Plasticity_Encode(name, verdict):
    witnesses = {}
    if verdict.counterexample is not None:
        witnesses = {'map': mapLabels(verdict.counterexample)}
    return {
        'verdict': PASS if verdict.plastic else FAIL,
        'witnesses': witnesses,
        'check': name,
        'plastic': verdict.plastic,
        'note': verdict.note,
    }


def FromEcplast_Verifier_Encode(report):
    if not report.applicable:
        verdict = NOT_APPLICABLE
    else:
        verdict = PASS if report.passed else FAIL
    witnesses = {}
    if report.counterexample is not None:
        witnesses = {'map': toJSON(report.counterexample)}
    return {
        'verdict': verdict,
        'witnesses': witnesses,
        'check': report.name,
        'checked': report.checked,
        'details': toJSON(report.details),
    }


def FromEcplast_Certified_Encode(name, cert):
    return {
        'verdict': OK if cert.applicable else NOT_APPLICABLE,
        'witnesses': [],
        'bound': name,
        'eps': cert.eps,
        'eps0': cert.eps0,
        'delta': cert.delta,
        'nu': cert.nu,
        'reason': cert.reason,
    }


def FromEcplast_Hilbert_Encode(report):
    samples = []
    for sample in report.samples:
        samples.append({
            'pair': list(sample.pair),
            'before': formatRational(sample.before),
            'after': formatRational(sample.after) if sample.exact else sample.after,
            'exact': sample.exact,
            'strict': sample.strict,
            'noncontractive': sample.noncontractive,
        })
    witness = report.witness
    return {
        'verdict': PASS if report.noncontractive else FAIL,
        'witnesses': {
            'expansion_pair': list(witness.pair),
            'before': formatRational(witness.before),
            'after': formatRational(witness.after),
        },
        'precision': report.precision,
        'samples': samples,
    }
