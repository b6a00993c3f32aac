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
Exact packing and covering quantities of finite metric spaces.

Two strictness conventions apply throughout and must not be mixed up:

* a subset A is an eps-*net* if every point lies *strictly* closer than
  ``eps`` to some member of A (d(x, a) < eps),
* a subset A is eps-*separated* if all its pairwise distances are *at
  least* ``eps`` (d(a, b) >= eps). A single point is always separated.

With these conventions the four step functions s, alpha, N and n are
constant on every interval (b_k, b_{k+1}] between consecutive distances of
the space, which is why a ``SeparationProfile`` only samples the distances
themselves, their midpoints and one point beyond the diameter.

All searches are exact branch and bound enumerations. They visit the
subsets in lexicographic order of their sorted index tuples and prune
only branches that cannot strictly beat the incumbent. The incumbent is
replaced on a strict improvement only, so the returned witness is always
the lexicographically smallest optimum. The net searches stop a branch as soon
as it covers every point; the sets they skip that way are supersets of a
net that was already recorded and therefore never optimal.
"""
import bisect
import logging
import eputils
import networkx as nx

from fractions import Fraction
from itertools import combinations
from ecplast.eptypes import typecheck, RetVal, FiniteMetricSpace, toRational
from ecplast.eptypes import ProfileSample, SeparationProfile
from ecplast.core import _sanitiseSubset

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)


def _sanitiseEps(eps):
    """
    Return ``eps`` as a positive ``Fraction``.

    :raises: ValueError if ``eps`` is not a positive rational.
    """
    try:
        eps = toRational(eps)
    except TypeError as err:
        raise ValueError(str(err))
    if eps <= 0:
        raise ValueError('eps must be positive but is {}'.format(eps))
    return eps


def _prepare(space, subset, eps):
    """
    Sanitise ``subset`` and ``eps`` for the predicates below.

    Returns *None* for ``subset`` if it is *None*.
    """
    eps = _sanitiseEps(eps)
    if subset is not None:
        subset = _sanitiseSubset(space, subset)
    return subset, eps


def separationGraph(space: FiniteMetricSpace, eps):
    """
    Return the graph that joins every pair of points at distance >= ``eps``.

    The eps-separated subsets are exactly the cliques of this graph.
    """
    G = nx.Graph()
    G.add_nodes_from(range(space.size))
    G.add_edges_from(
        (a, b) for a, b in combinations(range(space.size), 2)
        if space.dist[a][b] >= eps
    )
    return G


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

@typecheck
def is_eps_net(space: FiniteMetricSpace, subset, eps):
    """
    Return *True* if every point has a member of ``subset`` strictly closer
    than ``eps``.

    :param FiniteMetricSpace space: the metric space.
    :param subset: indices of the candidate net.
    :param eps: positive rational.
    :return: bool
    """
    try:
        subset, eps = _prepare(space, subset, eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    dist = space.dist
    ok = all(any(dist[x][a] < eps for a in subset) for x in range(space.size))
    return RetVal(True, None, ok)


@typecheck
def is_eps_separated(space: FiniteMetricSpace, subset, eps):
    """
    Return *True* if all pairwise distances in ``subset`` are >= ``eps``.

    A singleton is separated for every ``eps``.

    :param FiniteMetricSpace space: the metric space.
    :param subset: non-empty list of indices.
    :param eps: positive rational.
    :return: bool
    """
    try:
        subset, eps = _prepare(space, subset, eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    dist = space.dist
    ok = all(dist[a][b] >= eps for a, b in combinations(subset, 2))
    return RetVal(True, None, ok)


@typecheck
def is_maximal_separated(space: FiniteMetricSpace, subset, eps):
    """
    Return *True* if no point outside ``subset`` can be added without
    destroying the eps-separation.

    Every maximal separated set is also an eps-net. This function asserts
    that implication and returns an error if it ever fails.

    :param FiniteMetricSpace space: the metric space.
    :param subset: eps-separated list of indices.
    :param eps: positive rational.
    :return: bool
    """
    ret = is_eps_separated(space, subset, eps)
    if not ret.ok:
        return ret
    if not ret.data:
        return RetVal(False, 'Subset is not eps-separated', None)

    subset, eps = _prepare(space, subset, eps)
    dist = space.dist
    maximal = True
    for x in range(space.size):
        if x in subset:
            continue
        if all(dist[x][a] >= eps for a in subset):
            maximal = False
            break

    if maximal and not is_eps_net(space, subset, eps).data:
        msg = 'Maximal {}-separated set {} is not a net'.format(eps, subset)
        logit.error(msg)
        return RetVal(False, msg, None)
    return RetVal(True, None, maximal)


# ---------------------------------------------------------------------------
# Packing searches (cliques of the separation graph)
# ---------------------------------------------------------------------------

def _colourBound(G, candidates):
    """
    Return an upper bound for the largest clique among ``candidates``.

    A proper colouring with k colours admits no clique with more than k
    vertices.
    """
    if len(candidates) <= 1:
        return len(candidates)
    colours = nx.greedy_color(G.subgraph(candidates), strategy='largest_first')
    return max(colours.values()) + 1


def _greedyClique(G):
    """
    Return a maximal clique built greedily by decreasing vertex degree.
    """
    order = sorted(G.nodes(), key=lambda v: (-G.degree(v), v))
    clique = []
    for v in order:
        if all(G.has_edge(v, u) for u in clique):
            clique.append(v)
    return tuple(sorted(clique))


def _maxClique(G):
    """
    Return the lexicographically smallest maximum clique of ``G``.
    """
    # Only cliques of at least the greedy size are of interest.
    best = {'size': len(_greedyClique(G)) - 1, 'clique': None}
    nodes = sorted(G.nodes())

    def branch(chosen, candidates):
        if len(chosen) > best['size']:
            best['size'], best['clique'] = len(chosen), tuple(chosen)
        if len(candidates) == 0:
            return
        if len(chosen) + len(candidates) <= best['size']:
            return
        if len(chosen) + _colourBound(G, candidates) <= best['size']:
            return

        for pos, v in enumerate(candidates):
            rest = [u for u in candidates[pos + 1:] if G.has_edge(v, u)]
            branch(chosen + [v], rest)

    branch([], nodes)
    return best['size'], best['clique']


@typecheck
def n_sep_max(space: FiniteMetricSpace, eps):
    """
    Return the largest size N(X, eps) of an eps-separated subset together
    with the lexicographically smallest witness.

    :param FiniteMetricSpace space: the metric space.
    :param eps: positive rational.
    :return: (int, tuple) -- size and witness.
    """
    try:
        eps = _sanitiseEps(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    with eputils.Timeit('separation.n_sep_max'):
        size, witness = _maxClique(separationGraph(space, eps))
    return RetVal(True, None, (size, witness))


@typecheck
def s_max(space: FiniteMetricSpace, eps):
    """
    Return the largest pair sum s(X, eps) of an eps-separated subset and the
    lexicographically smallest witness.

    Adding a point to a set strictly increases its pair sum, so the optimum
    is always attained on a maximal separated set.

    :param FiniteMetricSpace space: the metric space.
    :param eps: positive rational.
    :return: (Fraction, tuple) -- pair sum and witness.
    """
    try:
        eps = _sanitiseEps(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    G = separationGraph(space, eps)
    dist = space.dist
    best = {'sigma': None, 'set': None}

    def branch(chosen, sig, candidates):
        if len(chosen) > 0 and (best['sigma'] is None or sig > best['sigma']):
            best['sigma'], best['set'] = sig, tuple(chosen)
        if len(candidates) == 0:
            return

        # Optimistic bound: every candidate joins the set.
        bound = sig
        bound += sum(dist[c][v] for c in chosen for v in candidates)
        bound += sum(dist[u][v] for u, v in combinations(candidates, 2))
        if best['sigma'] is not None and bound <= best['sigma']:
            return

        for pos, v in enumerate(candidates):
            rest = [u for u in candidates[pos + 1:] if G.has_edge(v, u)]
            gain = sum(dist[c][v] for c in chosen)
            branch(chosen + [v], sig + gain, rest)

    with eputils.Timeit('separation.s_max'):
        branch([], Fraction(0), list(range(space.size)))
    return RetVal(True, None, (best['sigma'], best['set']))


# ---------------------------------------------------------------------------
# Covering searches (strict eps-nets)
# ---------------------------------------------------------------------------

class _NetSearch(object):
    """
    Depth first include/exclude search over the points in index order.

    Including before excluding visits the subsets in lexicographic order.
    The ``cost`` of a net is its size or its pair sum, depending on
    ``weighted``.
    """
    def __init__(self, space, eps, weighted):
        self.logit = logging.getLogger('.'.join([__name__, type(self).__name__]))
        self.dist = space.dist
        self.n = space.size
        self.weighted = weighted

        # covers[a]: points strictly closer than eps to a (always includes a).
        self.covers = [
            frozenset(x for x in range(self.n) if self.dist[a][x] < eps)
            for a in range(self.n)
        ]

        # The last index that can still cover each point.
        self.last_cover = [
            max(a for a in range(self.n) if x in self.covers[a])
            for x in range(self.n)
        ]
        self.best_cost = None
        self.best_set = None

    def run(self):
        self.branch(0, [], Fraction(0), frozenset(range(self.n)))
        return self.best_cost, self.best_set

    def isDead(self, idx, uncovered):
        """
        Return *True* if some uncovered point can no longer be covered by the
        points with index >= ``idx``.
        """
        return any(self.last_cover[x] < idx for x in uncovered)

    def lowerBound(self, idx, chosen, sig, uncovered):
        if self.weighted:
            return sig
        tmp = max(len(self.covers[a] & uncovered) for a in range(idx, self.n))
        return len(chosen) + -(-len(uncovered) // tmp)

    def branch(self, idx, chosen, sig, uncovered):
        if len(uncovered) == 0:
            cost = sig if self.weighted else len(chosen)
            if self.best_cost is None or cost < self.best_cost:
                self.best_cost, self.best_set = cost, tuple(chosen)
            return
        if idx >= self.n or self.isDead(idx, uncovered):
            return
        if self.best_cost is not None:
            if self.lowerBound(idx, chosen, sig, uncovered) >= self.best_cost:
                # Completions never cost less and ties keep the incumbent.
                return

        # Include ``idx`` first, then try without it.
        gain = sum(self.dist[c][idx] for c in chosen)
        self.branch(idx + 1, chosen + [idx], sig + gain,
                    uncovered - self.covers[idx])
        self.branch(idx + 1, chosen, sig, uncovered)


@typecheck
def n_net_min(space: FiniteMetricSpace, eps):
    """
    Return the smallest size n(X, eps) of an eps-net and the
    lexicographically smallest witness.

    :param FiniteMetricSpace space: the metric space.
    :param eps: positive rational.
    :return: (int, tuple) -- size and witness.
    """
    try:
        eps = _sanitiseEps(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    with eputils.Timeit('separation.n_net_min'):
        size, witness = _NetSearch(space, eps, weighted=False).run()
    return RetVal(True, None, (size, witness))


@typecheck
def alpha_min(space: FiniteMetricSpace, eps):
    """
    Return the smallest pair sum alpha(X, eps) of an eps-net and the
    lexicographically smallest witness.

    :param FiniteMetricSpace space: the metric space.
    :param eps: positive rational.
    :return: (Fraction, tuple) -- pair sum and witness.
    """
    try:
        eps = _sanitiseEps(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    with eputils.Timeit('separation.alpha_min'):
        sig, witness = _NetSearch(space, eps, weighted=True).run()
    return RetVal(True, None, (sig, witness))


# ---------------------------------------------------------------------------
# Profiles
# ---------------------------------------------------------------------------

def samplePoints(breakpoints):
    """
    Return the sorted sample levels for the sorted ``breakpoints``: the
    breakpoints, the midpoints between neighbours and the largest breakpoint
    plus one.
    """
    breakpoints = sorted(set(breakpoints))
    if len(breakpoints) == 0:
        return (Fraction(1), )
    mids = [(lo + hi) / 2 for lo, hi in zip(breakpoints[:-1], breakpoints[1:])]
    return tuple(sorted(breakpoints + mids + [breakpoints[-1] + 1]))


def sampleAt(space, eps):
    """
    Return the ``ProfileSample`` of ``space`` at level ``eps``.
    """
    return ProfileSample(
        eps=eps,
        s=s_max(space, eps).data[0],
        alpha=alpha_min(space, eps).data[0],
        N=n_sep_max(space, eps).data[0],
        n=n_net_min(space, eps).data[0],
    )


def _isMonotone(samples):
    """
    Return *True* if s, alpha, N and n never increase with eps.
    """
    for lo, hi in zip(samples[:-1], samples[1:]):
        if hi.s > lo.s or hi.alpha > lo.alpha:
            return False
        if hi.N > lo.N or hi.n > lo.n:
            return False
    return True


@typecheck
def profile(space: FiniteMetricSpace):
    """
    Tabulate s, alpha, N and n of ``space`` at every sample level.

    :param FiniteMetricSpace space: the metric space.
    :return: SeparationProfile
    """
    breakpoints = space.distances()
    with eputils.Timeit('separation.profile'):
        samples = tuple(sampleAt(space, eps) for eps in samplePoints(breakpoints))

    if not _isMonotone(samples):
        msg = 'Separation profile is not monotone'
        logit.error(msg)
        return RetVal(False, msg, None)
    return RetVal(True, None, SeparationProfile(breakpoints, samples))


@typecheck
def evaluate(prof: SeparationProfile, eps):
    """
    Return the ``ProfileSample`` of the step functions at level ``eps``.

    The functions are constant on every interval (b_k, b_{k+1}], so the
    first sample at or above ``eps`` carries the answer.

    :param SeparationProfile prof: the profile of a space.
    :param eps: positive rational.
    :return: ProfileSample (with ``eps`` set to the query level).
    """
    try:
        eps = _sanitiseEps(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    levels = [_.eps for _ in prof.samples]
    idx = bisect.bisect_left(levels, eps)
    idx = min(idx, len(levels) - 1)
    return RetVal(True, None, prof.samples[idx]._replace(eps=eps))


@typecheck
def comparison_grid(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """
    Return the sample levels that decide every comparison between the step
    functions of ``X`` and ``Y``.

    :return: tuple of Fraction
    """
    return RetVal(True, None, samplePoints(X.distances() + Y.distances()))
