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
A collection of named tuples, rational helpers and a typecheck decorator.

The decorator automatically verifies function arguments based on their
annotations in the signature.

Usage example::

    from ecplast.eptypes import typecheck

    @typecheck
    def foo(a, b: str, c: int = 0, d: (int, str) = None):
        pass

All value types in here are immutable. Their constructors sanitise the input
and raise a ``TypeError`` if it does not compile to the data type.
"""
import logging
import inspect
import functools

from fractions import Fraction
from collections import namedtuple, OrderedDict

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)

# Return value signature for (almost) all functions in ecplast.
RetVal = namedtuple('RetVal', 'ok msg data')

# Map classes the search module can enumerate.
ALL_MAPS = 'ALLMAPS'
BIJECTIONS = 'BIJECTIONS'
NONCONTRACTIVE_MAPS = 'NONCONTRACTIVE'
NONCONTRACTIVE_BIJECTIONS = 'NONCONTRACTIVE_BIJECTIONS'
NONEXPANSIVE_SURJECTIONS = 'NONEXPANSIVE_SURJECTIONS'
MAP_CLASSES = (ALL_MAPS, BIJECTIONS, NONCONTRACTIVE_MAPS,
               NONCONTRACTIVE_BIJECTIONS, NONEXPANSIVE_SURJECTIONS)

# Modulus verdicts.
VALUE = 'VALUE'
NOT_PLASTIC = 'NOTPLASTIC'
VACUOUS = 'VACUOUS'
VERDICTS = (VALUE, NOT_PLASTIC, VACUOUS)

# Generator kinds.
SHARP_CASE1 = 'SHARP_CASE1'
SHARP_CYCLIC = 'SHARP_CYCLIC'
PADDED_SHARP = 'PADDED_SHARP'
UNION_TRUNCATION = 'UNION_TRUNCATION'
INTERVAL_PAIR_GRID = 'INTERVAL_PAIR_GRID'
HILBERT_SHIFT_SAMPLE = 'HILBERT_SHIFT_SAMPLE'
GENERATOR_KINDS = (SHARP_CASE1, SHARP_CYCLIC, PADDED_SHARP, UNION_TRUNCATION,
                   INTERVAL_PAIR_GRID, HILBERT_SHIFT_SAMPLE)

_FiniteMetricSpace = namedtuple('_FiniteMetricSpace', 'labels dist')
_PointMap = namedtuple('_PointMap', 'domain codomain table')
_MonotoneGauge = namedtuple('_MonotoneGauge', 'kind power knots')
_GeneratorRecipe = namedtuple('_GeneratorRecipe', 'kind params seed')

MapMargins = namedtuple('MapMargins',
                        'expansion contraction expansion_pair contraction_pair')
MapFlags = namedtuple('MapFlags',
                      'noncontractive nonexpansive injective surjective '
                      'bijective isometric_embedding isometry expansion')
ValidationReport = namedtuple('ValidationReport', 'valid axiom witness msg')

# One row of a separation profile and the profile itself.
ProfileSample = namedtuple('ProfileSample', 'eps s alpha N n')
SeparationProfile = namedtuple('SeparationProfile', 'breakpoints samples')

ModulusReport = namedtuple('ModulusReport',
                           'eps map_class verdict value minimizing_map '
                           'expansion_witness contraction_witness '
                           'maps_checked')
PlasticityVerdict = namedtuple('PlasticityVerdict',
                               'plastic counterexample note')
VerifierReport = namedtuple('VerifierReport',
                            'name applicable passed checked counterexample '
                            'details')
MeasurementReport = namedtuple('MeasurementReport',
                               'pairs_checked expansions violations')
CertifiedDelta = namedtuple('CertifiedDelta',
                            'eps eps0 delta nu applicable reason')

# Certified squared distances of one pair under the Hilbert space shift.
ShiftSample = namedtuple('ShiftSample',
                         'pair before after exact strict noncontractive')
HilbertShiftReport = namedtuple('HilbertShiftReport',
                                'precision witness samples noncontractive')


def toRational(value):
    """
    Return ``value`` as an exact ``Fraction``.

    Accepts integers, fractions and strings in the forms "p/q", "-3" or a
    finite decimal like "1.25". Floats are rejected because they are not
    exact.

    :param value: the number to convert.
    :return: Fraction in lowest terms.
    :raises: TypeError if the input does not compile to a rational.
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError('Not an exact rational: {!r}'.format(value))
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise TypeError('Not a rational string: {!r}'.format(value))
    raise TypeError('Not a rational: {!r}'.format(value))


def formatRational(value):
    """
    Return the canonical "p/q" string of ``value`` (also for integers).
    """
    value = Fraction(value)
    return '{}/{}'.format(value.numerator, value.denominator)


def typecheck(func_handle):
    """
    Ensure arguments have the type specified in the annotation signature.

    Example::

        def foo(a, b: str, c: int = 0, d: (int, list) = None):
            pass

    This function accepts an arbitrary parameter for ``a``, a string for
    ``b``, an integer for ``c`` which defaults to 0, and either an integer or
    a list for ``d`` and defaults to ``None``.

    The check uses ``isinstance`` so derived classes are valid too. The only
    exception are Booleans, which only pass if ``bool`` is part of the
    annotation (``isinstance(True, int)`` is *True* in Python).

    .. note:: the check is skipped if the value (either passed or by
              default) is **None**.

    Raises **TypeError** if at least one argument has an invalid type.
    """
    # Inspect the signature only once, not on every call.
    sig = inspect.signature(func_handle)
    annot = {}
    for name, param in sig.parameters.items():
        if param.annotation is inspect.Parameter.empty:
            continue
        anno = param.annotation
        annot[name] = tuple(anno) if isinstance(anno, (tuple, list)) else (anno,)

    def checkType(var_name, var_val):
        if var_name not in annot or var_val is None:
            return
        var_anno = annot[var_name]
        if type(var_val) is bool:
            type_ok = bool in var_anno
        else:
            type_ok = any(isinstance(var_val, _) for _ in var_anno)
        if not type_ok:
            msg = 'Expected <{}> in <{}> to have type {} but has {}'
            msg = msg.format(var_name, func_handle.__name__, var_anno,
                             type(var_val))
            logit.warning(msg)
            raise TypeError(msg)

    @functools.wraps(func_handle)
    def wrapper(*args, **kwds):
        bound = sig.bind(*args, **kwds)
        bound.apply_defaults()
        for var_name, var_val in bound.arguments.items():
            checkType(var_name, var_val)
        return func_handle(*args, **kwds)
    return wrapper


class FiniteMetricSpace(_FiniteMetricSpace):
    """
    Return a finite point set with an exact distance matrix.

    The constructor converts every entry to a ``Fraction`` and checks the
    shape of the matrix. It does *not* check the metric axioms (or duplicate
    labels); use ``core.makeSpace`` or ``core.validate`` for that. All
    downstream modules expect spaces built by ``core.makeSpace``.

    :param list[str] labels: distinct point labels.
    :param list[list] dist: n x n matrix of rationals.
    :return: compiled ``_FiniteMetricSpace`` instance.
    :raises: TypeError if the input does not compile to the data type.
    """
    def __new__(cls, labels: (tuple, list), dist: (tuple, list)):
        try:
            labels = tuple(labels)
            assert len(labels) > 0
            for label in labels:
                assert isinstance(label, str)

            dist = tuple(tuple(toRational(_) for _ in row) for row in dist)
            assert len(dist) == len(labels)
            for row in dist:
                assert len(row) == len(labels)
        except (TypeError, AssertionError):
            msg = 'Cannot construct <{}>'.format(cls.__name__)
            logit.warning(msg)
            raise TypeError(msg)

        # Return constructed data type.
        return super().__new__(cls, labels, dist)

    @property
    def size(self):
        return len(self.labels)

    def d(self, i: int, j: int):
        """
        Return the distance between the points with index ``i`` and ``j``.
        """
        return self.dist[i][j]

    def distances(self):
        """
        Return the sorted tuple of distinct positive distances.
        """
        out = {self.dist[i][j]
               for i in range(self.size) for j in range(i + 1, self.size)}
        return tuple(sorted(out))

    def diameter(self):
        """
        Return the largest distance (zero for a single point).
        """
        tmp = self.distances()
        return tmp[-1] if len(tmp) > 0 else Fraction(0)

    def _asdict(self):
        return OrderedDict(zip(self._fields, self))


class PointMap(_PointMap):
    """
    Return a total function between two finite metric spaces.

    :param FiniteMetricSpace domain: the space the map starts from.
    :param FiniteMetricSpace codomain: the space the map lands in.
    :param list[int] table: codomain index for every domain point.
    :return: compiled ``_PointMap`` instance.
    :raises: TypeError if the input does not compile to the data type.
    """
    def __new__(cls, domain, codomain, table: (tuple, list)):
        try:
            assert isinstance(domain, FiniteMetricSpace)
            assert isinstance(codomain, FiniteMetricSpace)
            table = tuple(table)
            assert len(table) == domain.size
            for idx in table:
                assert isinstance(idx, int) and not isinstance(idx, bool)
                assert 0 <= idx < codomain.size
        except (TypeError, AssertionError):
            msg = 'Cannot construct <{}>'.format(cls.__name__)
            logit.warning(msg)
            raise TypeError(msg)

        return super().__new__(cls, domain, codomain, table)

    def __call__(self, idx: int):
        return self.table[idx]

    def _asdict(self):
        return OrderedDict(zip(self._fields, self))


class MonotoneGauge(_MonotoneGauge):
    """
    Return a strictly increasing gauge g with g(0) = 0.

    Two kinds exist:

    * 'POWER': g(t) = t^k for an integer ``power`` k >= 1,
    * 'PIECEWISE': the piecewise linear interpolation of ``knots``, a list
      of (t, g(t)) pairs. The first knot must be (0, 0), both coordinates
      must strictly increase, and the last slope continues to infinity.

    :param str kind: 'power' or 'piecewise'.
    :param int power: exponent for 'power' gauges.
    :param list knots: interpolation points for 'piecewise' gauges.
    :return: compiled ``_MonotoneGauge`` instance.
    :raises: TypeError if the gauge is not strictly increasing or g(0) != 0.
    """
    @typecheck
    def __new__(cls, kind: str, power: int = None, knots: (tuple, list) = None):
        try:
            kind = kind.upper()
            if kind == 'POWER':
                assert power is not None and power >= 1
                knots = None
            elif kind == 'PIECEWISE':
                assert knots is not None and len(knots) >= 2
                knots = tuple((toRational(t), toRational(g)) for t, g in knots)
                assert knots[0] == (0, 0)
                for (t0, g0), (t1, g1) in zip(knots[:-1], knots[1:]):
                    # Strictly positive slope on every segment.
                    assert t1 > t0 and g1 > g0
                power = None
            else:
                assert False
        except (TypeError, ValueError, AssertionError):
            msg = 'Cannot construct <{}>'.format(cls.__name__)
            logit.warning(msg)
            raise TypeError(msg)

        return super().__new__(cls, kind, power, knots)

    def __call__(self, t):
        t = Fraction(t)
        if self.kind == 'POWER':
            return t ** self.power

        # Find the segment that contains t; beyond the last knot the last
        # segment extends linearly.
        knots = self.knots
        for (t0, g0), (t1, g1) in zip(knots[:-1], knots[1:]):
            if t <= t1:
                break
        return g0 + (g1 - g0) * (t - t0) / (t1 - t0)

    def _asdict(self):
        return OrderedDict(zip(self._fields, self))


class GeneratorRecipe(_GeneratorRecipe):
    """
    Return the replayable description of one generated example.

    The parameters are stored as a sorted tuple of (name, value) pairs so
    that recipes are hashable and compare equal iff they describe the same
    construction.

    :param str kind: one of ``GENERATOR_KINDS`` (case insensitive).
    :param dict params: kind specific parameters.
    :param int seed: optional seed for randomised generators.
    :return: compiled ``_GeneratorRecipe`` instance.
    :raises: TypeError if the input does not compile to the data type.
    """
    @typecheck
    def __new__(cls, kind: str, params: (dict, tuple, list), seed: int = None):
        try:
            kind = kind.upper()
            assert kind in GENERATOR_KINDS
            params = tuple(sorted(dict(params).items()))
            for name, _ in params:
                assert isinstance(name, str)
        except (TypeError, ValueError, AssertionError):
            msg = 'Cannot construct <{}>'.format(cls.__name__)
            logit.warning(msg)
            raise TypeError(msg)

        return super().__new__(cls, kind, params, seed)

    def param(self, name: str, default=None):
        return dict(self.params).get(name, default)

    def _asdict(self):
        return OrderedDict([('kind', self.kind),
                            ('params', dict(self.params)),
                            ('seed', self.seed)])


def normaliseMapClass(map_class: str):
    """
    Return the canonical spelling of ``map_class`` or *None* if unknown.
    """
    if not isinstance(map_class, str):
        return None
    tmp = map_class.upper().replace('-', '_')
    aliases = {'ALL': ALL_MAPS, 'MAPS': ALL_MAPS, 'BIJECTION': BIJECTIONS}
    tmp = aliases.get(tmp, tmp)
    return tmp if tmp in MAP_CLASSES else None
