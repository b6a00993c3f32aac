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
Exhaustive, pruned searches over the maps between two finite metric spaces.

Every search in here walks the partial map tables depth first. The domain
points are assigned in index order and the codomain candidates are tried in
index order, so the complete tables appear in lexicographic order. While
descending, the search tracks the partial expansion margin E and the partial
contraction margin C; both can only grow as more points are assigned.

A partial table is cut when

* it already violates the constraints of the map class (injectivity for
  bijections, C > 0 for noncontractive classes, E > 0 or infeasible
  surjectivity for nonexpansive surjections), or
* (modulus searches only) its partial C can no longer beat the best
  violating map found so far.

Nothing is ever cut because E looks too small; E may still grow.

The modulus of a pair at level eps is min{C(f) : f in class, E(f) > eps}.
It is reported as NOTPLASTIC if that minimum is <= 0 and as VACUOUS if no map
of the class expands a pair by more than eps.
"""
import math
import logging
import eputils
import multiprocessing
import networkx as nx
import ecplast.core as core
import ecplast.config as config
import ecplast.bounds as bounds
import ecplast.separation as separation

from fractions import Fraction
from ecplast.eptypes import typecheck, RetVal, FiniteMetricSpace, PointMap
from ecplast.eptypes import MonotoneGauge, ModulusReport, PlasticityVerdict
from ecplast.eptypes import VerifierReport, MeasurementReport, toRational
from ecplast.eptypes import normaliseMapClass
from ecplast.eptypes import ALL_MAPS, BIJECTIONS, NONCONTRACTIVE_MAPS
from ecplast.eptypes import NONCONTRACTIVE_BIJECTIONS, NONEXPANSIVE_SURJECTIONS
from ecplast.eptypes import VALUE, NOT_PLASTIC, VACUOUS

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)

# Shared incumbent of the parallel modulus search. Only the worker processes
# set these (see '_initWorker').
_shared_best = None
_shared_lock = None

# Number of cut checks between two reads of the shared incumbent.
_SHARED_REFRESH = 256


# ---------------------------------------------------------------------------
# Map enumeration
# ---------------------------------------------------------------------------

def walkTables(dX, dY, map_class, first=None, cut=None):
    """
    Yield (table, E, C) for every map of ``map_class`` between the spaces
    with distance matrices ``dX`` and ``dY``.

    The tables appear in lexicographic order. For a single point domain the
    margins are zero.

    :param dX: domain distance matrix.
    :param dY: codomain distance matrix.
    :param str map_class: one of ``eptypes.MAP_CLASSES``.
    :param first: allowed images of the first domain point (all if *None*).
    :param cut: callable that receives the partial contraction margin and
        returns *True* if the branch is useless.
    """
    n, m = len(dX), len(dY)
    injective = map_class in (BIJECTIONS, NONCONTRACTIVE_BIJECTIONS)
    noncontractive = map_class in (NONCONTRACTIVE_MAPS, NONCONTRACTIVE_BIJECTIONS)
    surjective = map_class == NONEXPANSIVE_SURJECTIONS

    if injective and n != m:
        return
    if surjective and n < m:
        return

    table = [0] * n
    hits = [0] * m
    zero = Fraction(0)

    def walk(i, E, C, unhit):
        if i == n:
            yield (tuple(table),
                   zero if E is None else E,
                   zero if C is None else C)
            return

        candidates = range(m) if (i > 0 or first is None) else first
        row_x = dX[i]
        for y in candidates:
            if injective and hits[y] > 0:
                continue

            # Update the margins with all pairs (a, i), a < i.
            newE, newC = E, C
            row_y = dY[y]
            for a in range(i):
                diff = row_y[table[a]] - row_x[a]
                if newE is None or diff > newE:
                    newE = diff
                if newC is None or -diff > newC:
                    newC = -diff

            if noncontractive and newC is not None and newC > 0:
                continue
            if surjective:
                if newE is not None and newE > 0:
                    continue
                newUnhit = unhit - (1 if hits[y] == 0 else 0)
                if newUnhit > n - i - 1:
                    continue
            else:
                newUnhit = unhit
            if cut is not None and newC is not None and cut(newC):
                continue

            table[i] = y
            hits[y] += 1
            yield from walk(i + 1, newE, newC, newUnhit)
            hits[y] -= 1

    yield from walk(0, None, None, m)


@typecheck
def iter_maps(X: FiniteMetricSpace, Y: FiniteMetricSpace, map_class: str):
    """
    Return a generator over all maps of ``map_class`` from ``X`` to ``Y``.

    The generator yields (table, E, C) triples in lexicographic table order.
    Use ``PointMap(X, Y, table)`` to inspect a particular map.

    :param FiniteMetricSpace X: domain.
    :param FiniteMetricSpace Y: codomain.
    :param str map_class: one of ``eptypes.MAP_CLASSES``.
    :return: generator
    """
    tmp = normaliseMapClass(map_class)
    if tmp is None:
        return RetVal(False, 'Unknown map class <{}>'.format(map_class), None)
    return RetVal(True, None, walkTables(X.dist, Y.dist, tmp))


def classSize(n: int, m: int, map_class: str):
    """
    Return the number of candidate tables of the modulus search classes.
    """
    if map_class == BIJECTIONS:
        return math.factorial(n) if n == m else 0
    return m ** n


# ---------------------------------------------------------------------------
# Exact modulus
# ---------------------------------------------------------------------------

def _isViolating(E, eps, inclusive):
    return E > eps or (inclusive and E == eps)


def _searchModulus(dX, dY, eps, map_class, first=None, inclusive=False,
                   shared=None, lock=None):
    """
    Return the best violating map as (key, table, C, E) and the number of
    complete tables visited.

    The key is max(C, 0); among equal keys the lexicographically smallest
    table wins. If ``shared`` is a (proxy) dictionary its 'key' entry is
    the incumbent of all workers.
    """
    best = None
    state = {'calls': 0, 'shared': None}

    def cut(C):
        key = C if C > 0 else 0
        if best is not None and key >= best[0]:
            return True
        if shared is None:
            return False

        # Reading the proxy is expensive; refresh the cached value only now
        # and then.
        if state['calls'] % _SHARED_REFRESH == 0:
            state['shared'] = shared.get('key', None)
        state['calls'] += 1
        return state['shared'] is not None and key > state['shared']

    leaves = 0
    for table, E, C in walkTables(dX, dY, map_class, first, cut):
        leaves += 1
        if not _isViolating(E, eps, inclusive):
            continue
        key = C if C > 0 else Fraction(0)
        if best is None or (key, table) < (best[0], best[1]):
            best = (key, table, C, E)
            if shared is not None:
                with lock:
                    tmp = shared.get('key', None)
                    if tmp is None or key < tmp:
                        shared['key'] = key
    return best, leaves


def _initWorker(shared, lock):
    """
    Pool initialiser: rename the process and remember the shared incumbent.
    """
    global _shared_best, _shared_lock
    config.nameWorkerProcess('modulus search')
    _shared_best, _shared_lock = shared, lock


def _modulusWorker(args):
    dX, dY, eps, map_class, first, inclusive = args
    return _searchModulus(dX, dY, eps, map_class, (first, ), inclusive,
                          _shared_best, _shared_lock)


def _searchModulusParallel(dX, dY, eps, map_class, inclusive, workers):
    """
    Partition the search by the image of the first domain point and merge
    the partial results.

    The merged result is identical to the serial one because every
    partition returns its own lexicographically smallest optimum and the
    merge picks the smallest (key, table).
    """
    jobs = [(dX, dY, eps, map_class, y, inclusive) for y in range(len(dY))]
    ctx = multiprocessing.get_context('fork')
    with ctx.Manager() as manager:
        shared = manager.dict()
        lock = manager.Lock()
        with ctx.Pool(workers, initializer=_initWorker,
                      initargs=(shared, lock)) as pool:
            results = pool.map(_modulusWorker, jobs)

    best, leaves = None, 0
    for res, cnt in results:
        leaves += cnt
        if res is None:
            continue
        if best is None or (res[0], res[1]) < (best[0], best[1]):
            best = res
    return best, leaves


def minViolatingContraction(X, Y, eps, map_class, inclusive=False, workers=1):
    """
    Return the best violating map of ``map_class`` as (key, table, C, E) or
    *None* if there is none.

    With ``inclusive`` a map violates already if E(f) >= eps.
    """
    workers = max(1, workers)
    with eputils.Timeit('search.modulus') as timer:
        if workers == 1 or Y.size == 1:
            best, leaves = _searchModulus(X.dist, Y.dist, eps, map_class,
                                          inclusive=inclusive)
        else:
            best, leaves = _searchModulusParallel(X.dist, Y.dist, eps,
                                                  map_class, inclusive, workers)
    eputils.logMetricQty('#modulus_tables', leaves)
    logit.debug('Modulus search visited {} tables in {:.3f}s'.format(
        leaves, timer.elapsed))
    return best


@typecheck
def exact_modulus(X: FiniteMetricSpace, Y: FiniteMetricSpace, eps,
                  map_class: str = BIJECTIONS, workers: int = 1):
    """
    Return the exact modulus of plasticity of (X, Y) at level ``eps``.

    For ``map_class`` BIJECTIONS this is the modulus of plasticity, for
    ALLMAPS the modulus of strong plasticity. The result is independent of
    ``workers``.

    :param FiniteMetricSpace X: domain with at least two points.
    :param FiniteMetricSpace Y: codomain.
    :param eps: positive rational.
    :param str map_class: BIJECTIONS or ALLMAPS.
    :param int workers: number of worker processes.
    :return: ModulusReport
    """
    try:
        eps = toRational(eps)
    except TypeError as err:
        return RetVal(False, str(err), None)
    if eps <= 0:
        return RetVal(False, 'eps must be positive', None)
    map_class = normaliseMapClass(map_class)
    if map_class not in (BIJECTIONS, ALL_MAPS):
        return RetVal(False, 'Modulus is only defined for BIJECTIONS and ALLMAPS', None)
    if X.size < 2:
        return RetVal(False, 'Domain needs at least two points', None)

    maps_checked = classSize(X.size, Y.size, map_class)
    best = None
    if maps_checked > 0:
        best = minViolatingContraction(X, Y, eps, map_class, workers=workers)

    if best is None:
        report = ModulusReport(eps, map_class, VACUOUS, None, None, None, None,
                               maps_checked)
        return RetVal(True, None, report)

    key, table, C, E = best
    f = PointMap(X, Y, table)
    tmp = core.margins(f).data
    verdict = VALUE if C > 0 else NOT_PLASTIC
    report = ModulusReport(
        eps=eps,
        map_class=map_class,
        verdict=verdict,
        value=key,
        minimizing_map=f,
        expansion_witness=tmp.expansion_pair,
        contraction_witness=tmp.contraction_pair,
        maps_checked=maps_checked,
    )
    return RetVal(True, None, report)


# ---------------------------------------------------------------------------
# Plasticity decisions
# ---------------------------------------------------------------------------

def _firstExpansion(X, Y, map_class):
    """
    Return the first table of ``map_class`` with E > 0 or *None*.
    """
    for table, E, C in walkTables(X.dist, Y.dist, map_class):
        if E > 0:
            return table
    return None


@typecheck
def is_ec_plastic(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    Return *True* if every noncontractive bijection X -> Y is an isometry.

    A noncontractive bijection is an isometry exactly when it expands no
    pair, so the counterexample is the first noncontractive bijection with
    E > 0.

    :return: PlasticityVerdict
    """
    if X.size != Y.size:
        return RetVal(True, None, PlasticityVerdict(True, None, 'no bijections'))

    table = _firstExpansion(X, Y, NONCONTRACTIVE_BIJECTIONS)
    if table is None:
        return RetVal(True, None, PlasticityVerdict(True, None, None))
    f = PointMap(X, Y, table)
    return RetVal(True, None, PlasticityVerdict(False, f, 'expanding bijection'))


@typecheck
def is_strongly_plastic(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    Return *True* if every noncontractive map X -> Y is an isometric
    embedding.

    :return: PlasticityVerdict
    """
    note = 'every map glues a pair' if X.size > Y.size else None
    table = _firstExpansion(X, Y, NONCONTRACTIVE_MAPS)
    if table is None:
        return RetVal(True, None, PlasticityVerdict(True, None, note))
    f = PointMap(X, Y, table)
    return RetVal(True, None, PlasticityVerdict(False, f, 'expanding map'))


def _measurement(psi):
    """
    Return a callable space -> Fraction for ``psi``.

    ``psi`` is *None* (pair sum), a ``MonotoneGauge`` (gauged pair sum) or
    any callable.
    """
    if psi is None:
        return lambda space: core.pairSum(space, range(space.size))
    if isinstance(psi, MonotoneGauge):
        return lambda space: core.pairSum(space, range(space.size), psi)
    if callable(psi):
        return psi
    raise TypeError('Invalid measurement <{}>'.format(psi))


@typecheck
def proper_measurement_check(catalog: (tuple, list), psi=None):
    """
    Check whether ``psi`` strictly increases along every expansion between
    the spaces of ``catalog``.

    An expansion is a noncontractive map that strictly increases at least
    one distance. For every ordered pair (X, Y) of the catalog (X = Y
    included) the function decides by enumeration whether an expansion
    X -> Y exists and records the pair as a violation if psi(Y) <= psi(X).

    :param list catalog: spaces that all have the same size N >= 2.
    :param psi: *None* for sigma, a ``MonotoneGauge`` for sigma_g or a
        callable that maps a space to a rational.
    :return: MeasurementReport
    """
    if len(catalog) == 0:
        return RetVal(False, 'Catalog is empty', None)
    sizes = {_.size for _ in catalog}
    if len(sizes) != 1:
        return RetVal(False, 'Catalog mixes the cardinalities {}'.format(sorted(sizes)), None)
    if sizes.pop() < 2:
        return RetVal(False, 'Catalog spaces need at least two points', None)
    try:
        measure = _measurement(psi)
    except TypeError as err:
        return RetVal(False, str(err), None)

    values = [measure(_) for _ in catalog]
    expansions, violations = [], []
    with eputils.Timeit('search.proper_measurement_check'):
        for i, X in enumerate(catalog):
            for j, Y in enumerate(catalog):
                if _firstExpansion(X, Y, NONCONTRACTIVE_MAPS) is None:
                    continue
                expansions.append((i, j))
                if not values[j] > values[i]:
                    violations.append((i, j))
    report = MeasurementReport(len(catalog) ** 2, tuple(expansions),
                               tuple(violations))
    return RetVal(True, None, report)


# ---------------------------------------------------------------------------
# Theorem verifiers
# ---------------------------------------------------------------------------

def _notApplicable(name, **details):
    return RetVal(True, None, VerifierReport(name, False, None, 0, None, details))


def _profiles(X, Y):
    """
    Return the profiles of ``X`` and ``Y`` and their joint sample levels.
    """
    return (separation.profile(X).data,
            separation.profile(Y).data,
            separation.comparison_grid(X, Y).data)


def _firstFailure(X, Y, field, relation):
    """
    Return the first joint sample level at which ``relation`` between the
    ``field`` values of X and Y fails, or *None*.
    """
    pX, pY, grid = _profiles(X, Y)
    for eps in grid:
        vx = getattr(separation.evaluate(pX, eps).data, field)
        vy = getattr(separation.evaluate(pY, eps).data, field)
        if not relation(vx, vy):
            return eps
    return None


@typecheck
def verify_surjection_theorem(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    If alpha(X, eps) <= alpha(Y, eps) for all eps, check that every
    nonexpansive surjection X -> Y is an isometry.

    :return: VerifierReport
    """
    name = 'surjection_theorem'
    bad = _firstFailure(X, Y, 'alpha', lambda a, b: a <= b)
    if bad is not None:
        return _notApplicable(name, hypothesis='alpha(X) <= alpha(Y)', failed_at=bad)

    checked, counterexample = 0, None
    for table, E, C in walkTables(X.dist, Y.dist, NONEXPANSIVE_SURJECTIONS):
        checked += 1
        if C > 0 or len(set(table)) != X.size:
            counterexample = PointMap(X, Y, table)
            logit.error('Nonexpansive surjection {} is no isometry'.format(table))
            break
    passed = counterexample is None
    report = VerifierReport(name, True, passed, checked, counterexample, {})
    return RetVal(True, None, report)


@typecheck
def verify_separated_image_lemma(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                                 eps, f: PointMap, A: (tuple, list, set)):
    """
    Check that a noncontractive ``f`` maps a nearly optimal eps-separated
    set ``A`` onto a maximal eps-separated set of ``Y``.

    The hypotheses are: f is noncontractive, |A| >= 2, A is eps-separated,
    sigma(A) > s(X, eps) - eps and s(X, eps) > s(Y, eps) - eps.

    :return: VerifierReport
    """
    name = 'separated_image_lemma'
    try:
        eps = toRational(eps)
    except TypeError as err:
        return RetVal(False, str(err), None)
    if eps <= 0:
        return RetVal(False, 'eps must be positive', None)
    if f.domain != X or f.codomain != Y:
        return RetVal(False, 'Map does not go from X to Y', None)

    A = tuple(sorted(set(A)))
    sX = separation.s_max(X, eps).data[0]
    sY = separation.s_max(Y, eps).data[0]
    details = {'s_X': sX, 's_Y': sY}
    if not core.classify(f).data.noncontractive:
        return _notApplicable(name, hypothesis='f noncontractive', **details)
    if len(A) < 2:
        return _notApplicable(name, hypothesis='|A| >= 2', **details)
    ret = separation.is_eps_separated(X, A, eps)
    if not ret.ok:
        return ret
    if not ret.data:
        return _notApplicable(name, hypothesis='A eps-separated', **details)
    sigA = core.sigma(X, A).data
    details['sigma_A'] = sigA
    if not sigA > sX - eps:
        return _notApplicable(name, hypothesis='sigma(A) > s(X, eps) - eps', **details)
    if not sX > sY - eps:
        return _notApplicable(name, hypothesis='s(X, eps) > s(Y, eps) - eps', **details)

    image = sorted({f(_) for _ in A})
    ret = separation.is_maximal_separated(Y, image, eps)
    passed = ret.ok and ret.data
    details['image'] = tuple(image)
    report = VerifierReport(name, True, passed, 1, None if passed else f, details)
    return RetVal(True, None, report)


@typecheck
def verify_s_comparison_plasticity(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    If s(X, d) >= s(Y, d) for every d > 0, check that (X, Y) is strongly
    plastic.

    :return: VerifierReport
    """
    name = 's_comparison_plasticity'
    bad = _firstFailure(X, Y, 's', lambda a, b: a >= b)
    if bad is not None:
        return _notApplicable(name, hypothesis='s(X) >= s(Y)', failed_at=bad)

    verdict = is_strongly_plastic(X, Y).data
    report = VerifierReport(name, True, verdict.plastic, 1,
                            verdict.counterexample, {})
    return RetVal(True, None, report)


@typecheck
def orbit_period(f: PointMap, x: int, y: int):
    """
    Return the least D >= 1 with f^D(x) = x and f^D(y) = y.

    This is the least common multiple of the lengths of the cycles through
    ``x`` and ``y``. It never exceeds M(N) for an N point space.

    :param PointMap f: bijection of a space onto itself.
    :param int x: point index.
    :param int y: point index.
    :return: int
    """
    if f.domain != f.codomain:
        return RetVal(False, 'Map is not a self map', None)
    if len(set(f.table)) != f.domain.size:
        return RetVal(False, 'Map is not bijective', None)
    if not (0 <= x < f.domain.size and 0 <= y < f.domain.size):
        return RetVal(False, 'Invalid point index', None)

    G = nx.DiGraph()
    G.add_edges_from(enumerate(f.table))
    cycle = {}
    for component in nx.strongly_connected_components(G):
        for v in component:
            cycle[v] = len(component)

    period = eputils.lcm(cycle[x], cycle[y])
    M = bounds.m_of_n(f.domain.size).data if f.domain.size >= 2 else 1
    if period > M:
        msg = 'Orbit period {} exceeds M({}) = {}'.format(period, f.domain.size, M)
        logit.error(msg)
        return RetVal(False, msg, None)
    return RetVal(True, None, period)


@typecheck
def verify_pair_sum_theorem(X: FiniteMetricSpace, Y: FiniteMetricSpace, eps):
    """
    If |X| = |Y| = N >= 3 and sigma(Y) <= sigma(X), check that the
    bijection modulus at ``eps`` is at least eps / (N(N-1)/2 - 1).

    :return: VerifierReport
    """
    name = 'pair_sum_theorem'
    N = X.size
    if N != Y.size or N < 3:
        return _notApplicable(name, hypothesis='|X| = |Y| >= 3')
    sX = core.pairSum(X, range(N))
    sY = core.pairSum(Y, range(N))
    if sY > sX:
        return _notApplicable(name, hypothesis='sigma(Y) <= sigma(X)',
                              sigma_X=sX, sigma_Y=sY)

    ret = exact_modulus(X, Y, eps, BIJECTIONS)
    if not ret.ok:
        return ret
    rep = ret.data
    bound = bounds.bound_pair_sum(N, rep.eps).data
    if rep.verdict == VACUOUS:
        passed = True
    else:
        passed = rep.verdict == VALUE and rep.value >= bound
    details = {'bound': bound, 'verdict': rep.verdict, 'value': rep.value}
    counterexample = None if passed else rep.minimizing_map
    report = VerifierReport(name, True, passed, rep.maps_checked,
                            counterexample, details)
    return RetVal(True, None, report)


@typecheck
def verify_orbit_theorem(X: FiniteMetricSpace, eps):
    """
    Check that the bijection modulus of (X, X) is at least eps/(M(N) - 1)
    and that the expanded pair of every violating bijection returns to
    itself within M(N) steps.

    :return: VerifierReport
    """
    name = 'orbit_theorem'
    N = X.size
    if N < 2:
        return _notApplicable(name, hypothesis='|X| >= 2')

    ret = exact_modulus(X, X, eps, BIJECTIONS)
    if not ret.ok:
        return ret
    rep = ret.data
    bound = bounds.bound_orbit(N, rep.eps).data
    M = bounds.m_of_n(N).data

    passed = rep.verdict == VACUOUS or (rep.verdict == VALUE and rep.value >= bound)
    counterexample = None if passed else rep.minimizing_map
    checked = 0
    for table, E, C in walkTables(X.dist, X.dist, BIJECTIONS):
        if not E > rep.eps:
            continue
        checked += 1
        f = PointMap(X, X, table)
        pair = core.margins(f).data.expansion_pair
        if orbit_period(f, *pair).data > M:
            passed, counterexample = False, f
            break

    details = {'bound': bound, 'M': M, 'verdict': rep.verdict, 'value': rep.value}
    report = VerifierReport(name, True, passed, checked, counterexample, details)
    return RetVal(True, None, report)


@typecheck
def verify_ec_strong_equivalence(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    For |X| = |Y| check that EC-plasticity and strong plasticity agree.

    :return: VerifierReport
    """
    name = 'ec_strong_equivalence'
    if X.size != Y.size:
        return _notApplicable(name, hypothesis='|X| = |Y|')
    ec = is_ec_plastic(X, Y).data
    strong = is_strongly_plastic(X, Y).data
    passed = ec.plastic == strong.plastic
    details = {'ec_plastic': ec.plastic, 'strongly_plastic': strong.plastic}
    counterexample = None if passed else (ec.counterexample or strong.counterexample)
    report = VerifierReport(name, True, passed, 2, counterexample, details)
    return RetVal(True, None, report)


def _gapLevels(grid):
    """
    Return the candidate values of d for the separation gap condition: all
    sample levels and their halves.
    """
    return sorted(set(grid) | {_ / 2 for _ in grid})


@typecheck
def verify_separation_gap_theorem(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    If for every sample level eps some d in (0, eps) satisfies
    s(X, d) > s(Y, d) - d > 0, check that (X, Y) is strongly plastic.

    The candidate values of d are the joint sample levels of both profiles
    and their halves. Levels below the smallest sample need
    sigma(X) >= sigma(Y).

    :return: VerifierReport
    """
    name = 'separation_gap_theorem'
    pX, pY, grid = _profiles(X, Y)
    levels = _gapLevels(grid)

    def gapAt(d):
        sx = separation.evaluate(pX, d).data.s
        sy = separation.evaluate(pY, d).data.s
        return sx > sy - d > 0

    # Below the smallest distance s is the full pair sum, so arbitrarily
    # small d need sigma(X) >= sigma(Y).
    sX = core.pairSum(X, range(X.size))
    sY = core.pairSum(Y, range(Y.size))
    if sX < sY:
        return _notApplicable(name, hypothesis='separation gap',
                              sigma_X=sX, sigma_Y=sY)
    for eps in grid:
        if not any(gapAt(d) for d in levels if d < eps):
            return _notApplicable(name, hypothesis='separation gap', failed_at=eps)

    verdict = is_strongly_plastic(X, Y).data
    report = VerifierReport(name, True, verdict.plastic, 1,
                            verdict.counterexample, {})
    return RetVal(True, None, report)


@typecheck
def proper_measurement_remark(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    For an EC-plastic pair that admits a noncontractive bijection, confirm
    that the bijection is an isometry and therefore sigma(X) = sigma(Y).

    :return: VerifierReport
    """
    name = 'proper_measurement_remark'
    if X.size != Y.size:
        return _notApplicable(name, hypothesis='|X| = |Y|')
    if not is_ec_plastic(X, Y).data.plastic:
        return _notApplicable(name, hypothesis='EC-plastic')

    found = None
    for table, E, C in walkTables(X.dist, Y.dist, NONCONTRACTIVE_BIJECTIONS):
        found = (table, E, C)
        break
    if found is None:
        return _notApplicable(name, hypothesis='noncontractive bijection exists')

    table, E, C = found
    sX = core.pairSum(X, range(X.size))
    sY = core.pairSum(Y, range(Y.size))
    passed = (E <= 0) and (sX == sY)
    details = {'sigma_X': sX, 'sigma_Y': sY, 'table': table}
    counterexample = None if passed else PointMap(X, Y, table)
    report = VerifierReport(name, True, passed, 1, counterexample, details)
    return RetVal(True, None, report)


@typecheck
def verify_contraction_certificate(X: FiniteMetricSpace, Y: FiniteMetricSpace,
                                   eps, delta, strict: bool = False):
    """
    Check by full enumeration that every map X -> Y that expands some pair
    by at least ``eps`` (more than ``eps`` if ``strict``) also contracts
    some pair by at least ``delta``.

    :return: VerifierReport
    """
    name = 'contraction_certificate'
    try:
        eps, delta = toRational(eps), toRational(delta)
    except TypeError as err:
        return RetVal(False, str(err), None)
    if X.size < 2:
        return _notApplicable(name, hypothesis='|X| >= 2')

    best = minViolatingContraction(X, Y, eps, ALL_MAPS, inclusive=not strict)
    if best is None:
        passed, counterexample, value = True, None, None
    else:
        key, table, C, E = best
        passed = C >= delta
        counterexample = None if passed else PointMap(X, Y, table)
        value = C
    details = {'eps': eps, 'delta': delta, 'min_contraction': value}
    report = VerifierReport(name, True, passed, Y.size ** X.size,
                            counterexample, details)
    return RetVal(True, None, report)
