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
Generators for the extremal examples and their maps.

Every generator validates the space it builds and checks the advertised
properties of the map (expansion and contraction margins, orbit lengths)
before it returns. A failed check is a bug in the generator and is reported
as an error instead of returning a broken example.
"""
import logging
import mpmath
import eputils
import numpy as np
import ecplast.core as core
import ecplast.config as config
import ecplast.search as search
import ecplast.bounds as bounds

from fractions import Fraction
from itertools import combinations
from ecplast.eptypes import typecheck, RetVal, PointMap, GeneratorRecipe
from ecplast.eptypes import ShiftSample, HilbertShiftReport, toRational
from ecplast.eptypes import SHARP_CASE1, SHARP_CYCLIC, PADDED_SHARP
from ecplast.eptypes import UNION_TRUNCATION, INTERVAL_PAIR_GRID
from ecplast.eptypes import HILBERT_SHIFT_SAMPLE

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)

# Sizes that admit no two coprime orbits with the full period M(N).
CYCLIC_SIZES = (3, 4, 6)


def _fail(msg):
    logit.error(msg)
    return RetVal(False, msg, None)


def _checkScale(eps, a):
    """
    Return ``eps`` and ``a`` as Fractions with a >= eps > 0.

    :raises: ValueError
    """
    try:
        eps, a = toRational(eps), toRational(a)
    except TypeError as err:
        raise ValueError(str(err))
    if not (eps > 0 and a >= eps):
        raise ValueError('Need a >= eps > 0 but have eps={}, a={}'.format(eps, a))
    return eps, a


def orbitSizes(N: int):
    """
    Return the coprime orbit lengths (i, j) with i + j = N and i * j = M(N).
    """
    if N % 2 == 1:
        k = (N - 1) // 2
        return k, k + 1
    if N % 4 == 0:
        k = N // 4
        return 2 * k - 1, 2 * k + 1
    k = (N - 2) // 4
    return 2 * k - 1, 2 * k + 3


def _checkMap(f, eps, C, orbits):
    """
    Return an error message if ``f`` does not expand by exactly ``eps``,
    contract by exactly ``C`` and cycle with the lengths ``orbits``, else
    *None*.

    ``orbits`` maps a point index to the expected length of its cycle.
    """
    tmp = core.margins(f).data
    if tmp.expansion != eps:
        return 'Expansion margin is {} instead of {}'.format(tmp.expansion, eps)
    if tmp.contraction != C:
        return 'Contraction margin is {} instead of {}'.format(tmp.contraction, C)
    if not core.classify(f).data.bijective:
        return 'Map is not bijective'
    for idx, length in orbits.items():
        period = search.orbit_period(f, idx, idx).data
        if period != length:
            return 'Point {} has period {} instead of {}'.format(idx, period, length)
    return None


@typecheck
def sharp_case1(N: int, eps, a, pad: bool = False):
    """
    Return the sharp example for N = i + j points and its bijection f.

    The points x_1..x_i and y_1..y_j form two cycles of f with coprime
    lengths i and j, so the cross pair (x, y) returns to itself only after
    M = i * j steps. Along this orbit the distance of the cross pair starts
    at a, grows to a + eps and then shrinks by eps/(M-1) per step until it
    closes the cycle. All remaining distances are a.

    Hence f expands one pair by exactly eps and contracts no pair by more
    than eps/(M-1).

    :param int N: number of points; N >= 5 and not 6.
    :param eps: expansion, positive rational.
    :param a: base distance, a >= eps.
    :param bool pad: request padding fix points (never needed since
        i + j = N < i * j; the request is logged).
    :return: (FiniteMetricSpace, PointMap)
    """
    if N < 5 or N in CYCLIC_SIZES:
        return RetVal(False, 'sharp_case1 needs N >= 5 and N != 6', None)
    try:
        eps, a = _checkScale(eps, a)
    except ValueError as err:
        return RetVal(False, str(err), None)

    i, j = orbitSizes(N)
    M = bounds.m_of_n(N).data
    assert i * j == M
    if pad:
        logit.info('N = {} <= i * j = {}: no padding points needed'.format(N, M))

    # x_r has index r, y_r has index i + r.
    dist = [[a if p != q else Fraction(0) for q in range(N)] for p in range(N)]
    step = eps / (M - 1)
    for k in range(M):
        if k == 0:
            val = a
        else:
            val = a + eps - (k - 1) * step
        x, y = k % i, i + (k % j)
        dist[x][y] = dist[y][x] = val

    labels = ['x{}'.format(_ + 1) for _ in range(i)]
    labels += ['y{}'.format(_ + 1) for _ in range(j)]
    ret = core.makeSpace(labels, dist)
    if not ret.ok:
        return _fail('sharp_case1 built an invalid space: ' + ret.msg)
    space = ret.data

    table = [(r + 1) % i for r in range(i)] + [i + (r + 1) % j for r in range(j)]
    f = PointMap(space, space, table)
    err = _checkMap(f, eps, step, {0: i, i: j})
    if err is not None:
        return _fail('sharp_case1: ' + err)
    return RetVal(True, None, (space, f))


@typecheck
def padded_sharp(N: int, eps, a, size: int):
    """
    Return the sharp example of ``sharp_case1`` padded to ``size`` points.

    The padding points are fixed by f and have distance 2a to every other
    point, so neither margin changes.

    :param int size: total number of points, size >= N.
    :return: (FiniteMetricSpace, PointMap)
    """
    if size < N:
        return RetVal(False, 'size must be at least N', None)
    ret = sharp_case1(N, eps, a)
    if not ret.ok:
        return ret
    space, f = ret.data
    eps, a = _checkScale(eps, a)

    extra = size - N
    dist = [list(row) + [2 * a] * extra for row in space.dist]
    for p in range(extra):
        row = [2 * a] * size
        row[N + p] = Fraction(0)
        dist.append(row)
    labels = list(space.labels) + ['v{}'.format(_ + 1) for _ in range(extra)]
    ret = core.makeSpace(labels, dist)
    if not ret.ok:
        return _fail('padded_sharp built an invalid space: ' + ret.msg)
    padded = ret.data

    g = PointMap(padded, padded, list(f.table) + list(range(N, size)))
    tmp = core.margins(g).data
    if (tmp.expansion, tmp.contraction) != core.margins(f).data[:2]:
        return _fail('Padding changed the margins')
    return RetVal(True, None, (padded, g))


@typecheck
def sharp_cyclic(N: int, eps, a):
    """
    Return the sharp example for N in {3, 4, 6} and its cyclic map g.

    g cycles the points z_1..z_N. The consecutive pairs (z_k, z_k+1) have
    distance a, then a + eps, then shrink by eps/(N-1) per step. All other
    distances are a.

    :param int N: 3, 4 or 6.
    :param eps: expansion, positive rational.
    :param a: base distance, a >= eps.
    :return: (FiniteMetricSpace, PointMap)
    """
    if N not in CYCLIC_SIZES:
        return RetVal(False, 'sharp_cyclic needs N in {}'.format(CYCLIC_SIZES), None)
    try:
        eps, a = _checkScale(eps, a)
    except ValueError as err:
        return RetVal(False, str(err), None)

    dist = [[a if p != q else Fraction(0) for q in range(N)] for p in range(N)]
    step = eps / (N - 1)
    for k in range(N):
        val = a if k == 0 else a + eps - (k - 1) * step
        p, q = k, (k + 1) % N
        dist[p][q] = dist[q][p] = val

    ret = core.makeSpace(['z{}'.format(_ + 1) for _ in range(N)], dist)
    if not ret.ok:
        return _fail('sharp_cyclic built an invalid space: ' + ret.msg)
    space = ret.data

    g = PointMap(space, space, [(_ + 1) % N for _ in range(N)])
    err = _checkMap(g, eps, step, {0: N})
    if err is not None:
        return _fail('sharp_cyclic: ' + err)
    return RetVal(True, None, (space, g))


def pieceSize(n: int):
    """
    Return the smallest admissible N with 1/(M(N)-1) <= 1/n.
    """
    N = 5
    while N in CYCLIC_SIZES or bounds.m_of_n(N).data - 1 < n:
        N += 1
    return N


@typecheck
def nonuniform_union_truncation(m: int):
    """
    Glue m sharp pieces whose guaranteed contraction vanishes.

    Piece n (1 <= n <= m) is the sharp example with eps = 1,
    a_n = 1 + 1/(10n) and the smallest size N_n with 1/(M(N_n)-1) <= 1/n,
    plus one extra point e_n at distance a_n + 1 from every point of the
    piece. Points of different pieces have distance 3/2.

    The map g_n acts as the sharp bijection on piece n and as the identity
    elsewhere. It expands one pair by exactly 1 and contracts no pair by
    more than 1/n.

    :param int m: number of pieces, m >= 1.
    :return: (FiniteMetricSpace, [PointMap])
    """
    if m < 1:
        return RetVal(False, 'Need at least one piece', None)

    pieces, offsets, total = [], [], 0
    for n in range(1, m + 1):
        a_n = 1 + Fraction(1, 10 * n)
        ret = sharp_case1(pieceSize(n), 1, a_n)
        if not ret.ok:
            return ret
        pieces.append((n, a_n) + ret.data)
        offsets.append(total)
        total += ret.data[0].size + 1

    cross = Fraction(3, 2)
    dist = [[cross] * total for _ in range(total)]
    labels = []
    for (n, a_n, space, f), ofs in zip(pieces, offsets):
        size = space.size
        for p in range(size + 1):
            for q in range(size + 1):
                if p == q:
                    val = Fraction(0)
                elif p == size or q == size:
                    val = a_n + 1
                else:
                    val = space.dist[p][q]
                dist[ofs + p][ofs + q] = val
        labels += ['{}.{}'.format(n, _) for _ in space.labels]
        labels.append('{}.e'.format(n))

    ret = core.makeSpace(labels, dist)
    if not ret.ok:
        return _fail('Union truncation built an invalid space: ' + ret.msg)
    union = ret.data

    maps = []
    for (n, a_n, space, f), ofs in zip(pieces, offsets):
        table = list(range(total))
        for p in range(space.size):
            table[ofs + p] = ofs + f.table[p]
        g = PointMap(union, union, table)
        tmp = core.margins(g).data
        if tmp.expansion != 1 or tmp.contraction > Fraction(1, n):
            return _fail('Piece {} has margins E={}, C={}'.format(
                n, tmp.expansion, tmp.contraction))
        maps.append(g)
    return RetVal(True, None, (union, maps))


def _lineSpace(prefix, points):
    """
    Return the subspace of the real line on the sorted rational ``points``.
    """
    dist = [[abs(p - q) for q in points] for p in points]
    labels = ['{}{}'.format(prefix, _) for _ in points]
    return core.makeSpace(labels, dist)


@typecheck
def interval_pair_grid(step, t):
    """
    Return the grid versions X, Y of [0, 1] u {3} and [0, 1) u {4} and the
    map f_t(x) = t x, f_t(3) = 4.

    X is the grid of [0, 1] with mesh ``step`` plus the point 3. Y contains
    the grid of [0, 1) with mesh ``step``, the image t * grid and 4.

    The anchor pair (0, 3) grows by exactly 1 and the pair (0, 1) shrinks
    by 1 - t, which is the contraction margin of f_t. The largest growth is
    2 - t, attained at the pair (1, 3).

    :param step: 1/K for an integer K >= 2.
    :param t: rational in (0, 1).
    :return: (X, Y, f_t)
    """
    try:
        step, t = toRational(step), toRational(t)
    except TypeError as err:
        return RetVal(False, str(err), None)
    if not (0 < t < 1):
        return RetVal(False, 't must lie in (0, 1)', None)
    if step <= 0 or step.numerator != 1 or step.denominator < 2:
        return RetVal(False, 'step must be 1/K with K >= 2', None)

    K = step.denominator
    grid = [Fraction(k, K) for k in range(K + 1)]
    image = {t * _ for _ in grid}
    ys = sorted(set(grid[:-1]) | image) + [Fraction(4)]

    ret = _lineSpace('x', grid + [Fraction(3)])
    if not ret.ok:
        return ret
    X = ret.data
    ret = _lineSpace('y', ys)
    if not ret.ok:
        return ret
    Y = ret.data

    index = {v: k for k, v in enumerate(ys)}
    table = [index[t * _] for _ in grid] + [index[Fraction(4)]]
    f = PointMap(X, Y, table)

    tmp = core.margins(f).data
    anchor = Y.d(f(0), f(K + 1)) - X.d(0, K + 1)
    if anchor != 1:
        return _fail('Anchor pair grows by {} instead of 1'.format(anchor))
    if tmp.contraction != 1 - t or tmp.contraction_pair != (0, K):
        return _fail('Contraction margin is {} at {}'.format(
            tmp.contraction, tmp.contraction_pair))
    return RetVal(True, None, (X, Y, f))


def _exactSqrt(value):
    """
    Return the exact square root of the rational ``value`` or *None*.
    """
    num = eputils.isqrtExact(value.numerator)
    den = eputils.isqrtExact(value.denominator)
    if num is None or den is None:
        return None
    return Fraction(num, den)


def _ivRational(value):
    return mpmath.iv.mpf(value.numerator) / mpmath.iv.mpf(value.denominator)


def _shiftPair(x, y, pair):
    """
    Return the ``ShiftSample`` of the vectors ``x`` and ``y``.

    Uses |f(x) - f(y)|^2 = |x - y|^2 + (r(x) - r(y))^2 with
    r(v) = sqrt(1 - |v|^2). The added square is nonnegative, so the map
    never contracts; the interval evaluation certifies this numerically.
    """
    dim = max(len(x), len(y))
    x = list(x) + [Fraction(0)] * (dim - len(x))
    y = list(y) + [Fraction(0)] * (dim - len(y))
    before = sum(((p - q) ** 2 for p, q in zip(x, y)), Fraction(0))
    rest_x = 1 - sum((_ ** 2 for _ in x), Fraction(0))
    rest_y = 1 - sum((_ ** 2 for _ in y), Fraction(0))
    strict = rest_x != rest_y
    if not strict:
        return ShiftSample(pair, before, before, True, False, True)

    rx, ry = _exactSqrt(rest_x), _exactSqrt(rest_y)
    if rx is not None and ry is not None:
        after = before + (rx - ry) ** 2
        return ShiftSample(pair, before, after, True, strict, after >= before)

    term = (mpmath.iv.sqrt(_ivRational(rest_x)) -
            mpmath.iv.sqrt(_ivRational(rest_y))) ** 2
    after = _ivRational(before) + term
    certified = bool(term.a >= 0)
    return ShiftSample(pair, before, str(after), False, strict, certified)


@typecheck
def hilbert_shift_demo(sample: (tuple, list), precision: int = None):
    """
    Evaluate the shift f(x) = (sqrt(1 - |x|^2), x_1, x_2, ...) of the unit
    ball of l_2 on a finite sample of finitely supported rational vectors.

    The report contains the witness pair (0, e_1), whose squared distance
    grows from 1 to 2, and one certified ``ShiftSample`` per sample pair.

    :param list sample: rational vectors with squared norm <= 1.
    :param int precision: decimal digits of the interval square roots.
    :return: HilbertShiftReport
    """
    if precision is None:
        precision = config.HILBERT_PRECISION
    try:
        sample = [[toRational(_) for _ in vec] for vec in sample]
    except TypeError as err:
        return RetVal(False, str(err), None)
    for idx, vec in enumerate(sample):
        if sum((_ ** 2 for _ in vec), Fraction(0)) > 1:
            return RetVal(False, 'Vector {} has norm > 1'.format(idx), None)

    old_dps = mpmath.iv.dps
    mpmath.iv.dps = precision
    try:
        witness = _shiftPair([Fraction(0)], [Fraction(1)], ('0', 'e1'))
        samples = tuple(
            _shiftPair(sample[i], sample[j], (i, j))
            for i, j in combinations(range(len(sample)), 2)
        )
    finally:
        mpmath.iv.dps = old_dps

    ok = all(_.noncontractive for _ in samples) and witness.noncontractive
    report = HilbertShiftReport(precision, witness, samples, ok)
    return RetVal(True, None, report)


def hilbertSample(count: int, dimension: int, seed: int, denominator: int = 10):
    """
    Return ``count`` seeded random rational vectors of the unit ball.

    Every entry has absolute value <= 1/dimension, hence the squared norm
    is at most 1/dimension.
    """
    rng = np.random.RandomState(seed)
    den = denominator * dimension
    out = []
    for _ in range(count):
        nums = rng.randint(-denominator, denominator + 1, size=dimension)
        out.append([Fraction(int(_), den) for _ in nums])
    return out


@typecheck
def replay(recipe: GeneratorRecipe):
    """
    Rebuild the example described by ``recipe``.

    :param GeneratorRecipe recipe: the construction and its parameters.
    :return: the output of the respective generator.
    """
    p = recipe.param
    try:
        if recipe.kind == SHARP_CASE1:
            return sharp_case1(int(p('N')), p('eps', 1), p('a', 1), bool(p('pad', False)))
        elif recipe.kind == PADDED_SHARP:
            return padded_sharp(int(p('N')), p('eps', 1), p('a', 1), int(p('size')))
        elif recipe.kind == SHARP_CYCLIC:
            return sharp_cyclic(int(p('N')), p('eps', 1), p('a', 1))
        elif recipe.kind == UNION_TRUNCATION:
            return nonuniform_union_truncation(int(p('m')))
        elif recipe.kind == INTERVAL_PAIR_GRID:
            return interval_pair_grid(p('step'), p('t'))
        elif recipe.kind == HILBERT_SHIFT_SAMPLE:
            seed = 0 if recipe.seed is None else recipe.seed
            sample = hilbertSample(int(p('count', 20)), int(p('dimension', 4)),
                                   seed, int(p('denominator', 10)))
            return hilbert_shift_demo(sample, int(p('precision', config.HILBERT_PRECISION)))
    except (TypeError, ValueError) as err:
        return RetVal(False, 'Invalid recipe parameters: {}'.format(err), None)
    return RetVal(False, 'Unknown recipe kind <{}>'.format(recipe.kind), None)
