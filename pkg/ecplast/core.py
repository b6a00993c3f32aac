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
Finite metric spaces, maps between them, and their elementary aggregates.

All distances are exact ``Fraction`` instances. A space is only ever built
through ``makeSpace``, which enforces the metric axioms; every other module
relies on that.

The pair sum sigma(A) adds d(a, b) over *unordered* pairs {a, b} of A, each
pair once.
"""
import logging
import eputils
import numpy as np

from fractions import Fraction
from itertools import combinations
from ecplast.eptypes import typecheck, RetVal, FiniteMetricSpace, PointMap
from ecplast.eptypes import MapMargins, MapFlags, ValidationReport
from ecplast.eptypes import MonotoneGauge, toRational

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)


def _triangleHolds(dist):
    """
    Return *True* if ``dist`` satisfies the triangle inequality.

    The matrix is scaled to integers with the common denominator of all
    entries and checked with numpy, one intermediate point at a time.
    Returns *False* if the integers would overflow int64 or the check
    fails; the caller then falls back to the exact loop.
    """
    den = eputils.lcm(*[_.denominator for row in dist for _ in row])
    ints = [[_.numerator * (den // _.denominator) for _ in row] for row in dist]
    if max(max(abs(_) for _ in row) for row in ints) >= 2 ** 60:
        return False

    D = np.array(ints, dtype=np.int64)
    for j in range(D.shape[0]):
        if np.any(D[:, j:j + 1] + D[j:j + 1, :] < D):
            return False
    return True


def _firstViolation(labels, dist):
    """
    Return (axiom, witness, msg) of the first violated metric axiom in
    ``labels`` and ``dist``, or *None* if everything is fine.

    The axioms are checked in a fixed order: labels, shape, diagonal,
    symmetry, positivity, triangle inequality. Within each axiom the index
    tuples are scanned in lexicographic order.
    """
    # Duplicate labels.
    seen = {}
    for idx, label in enumerate(labels):
        if label in seen:
            msg = 'Duplicate label <{}> at indices {} and {}'
            return ('duplicate_label', (seen[label], idx),
                    msg.format(label, seen[label], idx))
        seen[label] = idx

    # Shape.
    n = len(labels)
    if n == 0:
        return ('shape', (), 'A space needs at least one point')
    if len(dist) != n:
        msg = 'Matrix has {} rows but there are {} labels'
        return ('shape', (len(dist),), msg.format(len(dist), n))
    for i, row in enumerate(dist):
        if len(row) != n:
            msg = 'Row {} has {} entries but there are {} labels'
            return ('shape', (i,), msg.format(i, len(row), n))

    # Diagonal.
    for i in range(n):
        if dist[i][i] != 0:
            msg = 'dist[{0}][{0}] = {1} must be zero'
            return ('diagonal', (i,), msg.format(i, dist[i][i]))

    # Symmetry.
    for i, j in combinations(range(n), 2):
        if dist[i][j] != dist[j][i]:
            msg = 'dist[{0}][{1}] = {2} differs from dist[{1}][{0}] = {3}'
            return ('symmetry', (i, j),
                    msg.format(i, j, dist[i][j], dist[j][i]))

    # Positivity.
    for i, j in combinations(range(n), 2):
        if dist[i][j] <= 0:
            msg = 'dist[{}][{}] = {} must be positive'
            return ('positivity', (i, j), msg.format(i, j, dist[i][j]))

    # Triangle inequality d(i, k) <= d(i, j) + d(j, k). The exact loop only
    # runs to locate the witness.
    if _triangleHolds(dist):
        return None
    for i in range(n):
        for k in range(i + 1, n):
            for j in range(n):
                if j == i or j == k:
                    continue
                if dist[i][k] > dist[i][j] + dist[j][k]:
                    msg = 'Triangle inequality fails: d({0},{2}) = {3} > {4} = d({0},{1}) + d({1},{2})'
                    msg = msg.format(i, j, k, dist[i][k],
                                     dist[i][j] + dist[j][k])
                    return ('triangle', (i, j, k), msg)
    return None


def validate(space, dist=None):
    """
    Check the metric axioms and return a ``ValidationReport``.

    The input is either a ``FiniteMetricSpace`` or the raw ``labels`` plus
    ``dist`` matrix (eg straight from a space file). The report names the
    first violated axiom ('duplicate_label', 'shape', 'diagonal', 'symmetry',
    'positivity' or 'triangle') together with the witnessing index tuple.

    :param space: ``FiniteMetricSpace`` or list of labels.
    :param dist: distance matrix if ``space`` is a list of labels.
    :return: ``ValidationReport``
    """
    if isinstance(space, FiniteMetricSpace):
        labels, dist = space.labels, space.dist
    else:
        try:
            labels = [str(_) for _ in space]
            dist = [[toRational(_) for _ in row] for row in dist]
        except TypeError:
            report = ValidationReport(False, 'parse', (), 'Distances must be rationals')
            return RetVal(True, None, report)

    ret = _firstViolation(labels, dist)
    if ret is None:
        report = ValidationReport(True, None, (), 'OK')
    else:
        axiom, witness, msg = ret
        report = ValidationReport(False, axiom, witness, msg)
    return RetVal(True, None, report)


@typecheck
def makeSpace(labels: (tuple, list), dist: (tuple, list)):
    """
    Return a validated ``FiniteMetricSpace``.

    :param list[str] labels: distinct point labels.
    :param list[list] dist: symmetric matrix of rationals (see
        ``eptypes.toRational`` for the accepted formats).
    :return: FiniteMetricSpace
    """
    try:
        space = FiniteMetricSpace(labels, dist)
    except TypeError:
        return RetVal(False, 'Labels and distances do not form a square matrix of rationals', None)

    report = validate(space).data
    if not report.valid:
        logit.info(report.msg)
        return RetVal(False, report.msg, None)
    return RetVal(True, None, space)


def _sanitiseSubset(space, subset):
    """
    Return ``subset`` as a sorted tuple of distinct valid indices.

    :raises: ValueError if the subset is empty, has duplicates or invalid
        indices.
    """
    subset = tuple(sorted(subset))
    if len(subset) == 0:
        raise ValueError('Subset must not be empty')
    if len(set(subset)) != len(subset):
        raise ValueError('Subset contains duplicate indices')
    for idx in subset:
        if not isinstance(idx, (int, np.integer)) or not (0 <= idx < space.size):
            raise ValueError('Invalid index <{}>'.format(idx))
    return tuple(int(_) for _ in subset)


def pairSum(space, subset, gauge=None):
    """
    Return the (gauged) unordered pair sum of ``subset`` without checks.

    This is the work horse behind ``sigma`` and ``sigma_g`` for callers that
    already hold a sanitised subset.
    """
    dist = space.dist
    if gauge is None:
        return sum((dist[a][b] for a, b in combinations(subset, 2)), Fraction(0))
    return sum((gauge(dist[a][b]) for a, b in combinations(subset, 2)), Fraction(0))


@typecheck
def sigma(space: FiniteMetricSpace, subset: (tuple, list, set, frozenset, range)):
    """
    Return the sum of d(a, b) over all unordered pairs {a, b} of ``subset``.

    A singleton has no pairs and therefore sums to zero.

    :param FiniteMetricSpace space: the metric space.
    :param subset: indices of the points.
    :return: Fraction
    """
    try:
        subset = _sanitiseSubset(space, subset)
    except ValueError as err:
        return RetVal(False, str(err), None)
    return RetVal(True, None, pairSum(space, subset))


@typecheck
def sigma_g(space: FiniteMetricSpace, subset: (tuple, list, set, frozenset, range),
            g: MonotoneGauge):
    """
    Return the sum of g(d(a, b)) over all unordered pairs {a, b} of
    ``subset``.

    :param FiniteMetricSpace space: the metric space.
    :param subset: indices of the points.
    :param MonotoneGauge g: strictly increasing gauge with g(0) = 0.
    :return: Fraction
    """
    try:
        subset = _sanitiseSubset(space, subset)
    except ValueError as err:
        return RetVal(False, str(err), None)
    return RetVal(True, None, pairSum(space, subset, g))


def tableMargins(dX, dY, table):
    """
    Return (E, C, E-pair, C-pair) of ``table`` for the raw matrices ``dX``
    and ``dY``.

    Pairs are scanned in lexicographic order and the first pair attaining
    the maximum is the witness. Returns *None* for all four values if the
    domain has fewer than two points.
    """
    E = C = None
    E_pair = C_pair = None
    n = len(table)
    for a in range(n):
        row_x, row_y = dX[a], dY[table[a]]
        for b in range(a + 1, n):
            diff = row_y[table[b]] - row_x[b]
            if E is None or diff > E:
                E, E_pair = diff, (a, b)
            if C is None or -diff > C:
                C, C_pair = -diff, (a, b)
    return E, C, E_pair, C_pair


@typecheck
def margins(f: PointMap):
    """
    Return the expansion and contraction margins of ``f``.

    E(f) is the largest increase d(f(a), f(b)) - d(a, b) and C(f) the
    largest decrease d(a, b) - d(f(a), f(b)) over all unordered pairs a != b.
    Each comes with the lexicographically first pair that attains it.

    :param PointMap f: map with at least two domain points.
    :return: MapMargins
    """
    if f.domain.size < 2:
        return RetVal(False, 'Margins need at least two domain points', None)
    E, C, E_pair, C_pair = tableMargins(f.domain.dist, f.codomain.dist, f.table)
    return RetVal(True, None, MapMargins(E, C, E_pair, C_pair))


@typecheck
def classify(f: PointMap):
    """
    Return the ``MapFlags`` of ``f``.

    A single point domain has no pairs; such a map is an isometric
    embedding by convention.

    :param PointMap f: the map to classify.
    :return: MapFlags
    """
    if f.domain.size < 2:
        E = C = Fraction(0)
    else:
        tmp = margins(f).data
        E, C = tmp.expansion, tmp.contraction

    image = set(f.table)
    injective = len(image) == f.domain.size
    surjective = len(image) == f.codomain.size
    noncontractive = C <= 0
    nonexpansive = E <= 0
    isometric_embedding = noncontractive and nonexpansive
    flags = MapFlags(
        noncontractive=noncontractive,
        nonexpansive=nonexpansive,
        injective=injective,
        surjective=surjective,
        bijective=injective and surjective,
        isometric_embedding=isometric_embedding,
        isometry=isometric_embedding and injective and surjective,
        expansion=noncontractive and E > 0,
    )
    return RetVal(True, None, flags)


@typecheck
def identity_map(space: FiniteMetricSpace):
    """
    Return the identity map of ``space``.
    """
    return RetVal(True, None, PointMap(space, space, range(space.size)))


@typecheck
def compose(f: PointMap, g: PointMap):
    """
    Return the composition g o f (first ``f``, then ``g``).

    :param PointMap f: inner map.
    :param PointMap g: outer map; its domain must be the codomain of ``f``.
    :return: PointMap
    """
    if f.codomain != g.domain:
        return RetVal(False, 'Maps are not composable', None)
    table = [g.table[_] for _ in f.table]
    return RetVal(True, None, PointMap(f.domain, g.codomain, table))


@typecheck
def random_space(n: int, seed: int, denominator: int = 12, prefix: str = 'p'):
    """
    Return a seeded random space with ``n`` points.

    Every distance is drawn uniformly from {q/den : den <= q <= 2 den} with
    ``den`` = ``denominator``, ie from the rationals in [1, 2] with that
    denominator. Since the largest distance is at most twice the smallest
    the triangle inequality holds automatically.

    :param int n: number of points.
    :param int seed: seed for ``numpy.random.RandomState``.
    :param int denominator: common denominator of all distances.
    :param str prefix: label prefix.
    :return: FiniteMetricSpace
    """
    if n < 1 or denominator < 1:
        return RetVal(False, 'Need n >= 1 and denominator >= 1', None)

    rng = np.random.RandomState(seed)
    dist = [[Fraction(0)] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        val = Fraction(int(rng.randint(denominator, 2 * denominator + 1)),
                       denominator)
        dist[i][j] = dist[j][i] = val
    labels = ['{}{}'.format(prefix, _) for _ in range(n)]
    return makeSpace(labels, dist)


def subspace(space: FiniteMetricSpace, subset):
    """
    Return the metric subspace on the sorted indices ``subset``.
    """
    try:
        subset = _sanitiseSubset(space, subset)
    except ValueError as err:
        return RetVal(False, str(err), None)
    labels = [space.labels[_] for _ in subset]
    dist = [[space.dist[i][j] for j in subset] for i in subset]
    return RetVal(True, None, FiniteMetricSpace(labels, dist))
