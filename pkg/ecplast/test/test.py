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
This module does not contain any tests but utility functions often used in
other tests: space factories and the naive oracles the pruned searches are
compared against.
"""
import math
import itertools
import ecplast.core as core

from fractions import Fraction
from itertools import combinations, product, permutations


def getSpace(labels, dist):
    """
    Return the validated space or fail the test.
    """
    ret = core.makeSpace(labels, dist)
    assert ret.ok, ret.msg
    return ret.data


def getEquilateral(n=3, d=1, prefix='p'):
    """
    Return the ``n`` point space with all distances ``d``.
    """
    d = Fraction(d)
    dist = [[d if i != j else 0 for j in range(n)] for i in range(n)]
    return getSpace(['{}{}'.format(prefix, _) for _ in range(n)], dist)


def getTwoPoint(d=1, prefix='p'):
    return getEquilateral(2, d, prefix)


def getLine(points, prefix='x'):
    """
    Return the subspace of the real line on the rational ``points``.
    """
    points = [Fraction(_) for _ in points]
    dist = [[abs(p - q) for q in points] for p in points]
    return getSpace(['{}{}'.format(prefix, _) for _ in range(len(points))], dist)


def getRandomSpace(n, seed, prefix='p', denominator=12):
    ret = core.random_space(n, seed, denominator, prefix)
    assert ret.ok
    return ret.data


def getRandomPair(n, seed):
    return getRandomSpace(n, 2 * seed, 'x'), getRandomSpace(n, 2 * seed + 1, 'y')


# ---------------------------------------------------------------------------
# Naive oracles
# ---------------------------------------------------------------------------

def naiveMargins(X, Y, table):
    """
    Return (E, C) of ``table`` by a plain double loop.
    """
    diffs = [Y.dist[table[a]][table[b]] - X.dist[a][b]
             for a, b in combinations(range(X.size), 2)]
    return max(diffs), max(-_ for _ in diffs)


def naiveTables(X, Y, bijective):
    if bijective:
        if X.size != Y.size:
            return []
        return list(permutations(range(Y.size)))
    return list(product(range(Y.size), repeat=X.size))


def naiveModulus(X, Y, eps, bijective):
    """
    Return min{C(f) : E(f) > eps} over all maps (or bijections), or *None*
    if no map expands a pair by more than ``eps``.
    """
    values = []
    for table in naiveTables(X, Y, bijective):
        E, C = naiveMargins(X, Y, table)
        if E > eps:
            values.append(C)
    return min(values) if len(values) > 0 else None


def _sigma(space, subset):
    return sum((space.dist[a][b] for a, b in combinations(subset, 2)), Fraction(0))


def naiveSeparation(space, eps):
    """
    Return (s, alpha, N, n) at level ``eps`` by enumerating all non empty
    subsets.
    """
    s = alpha = N = n = None
    points = range(space.size)
    for size in range(1, space.size + 1):
        for A in itertools.combinations(points, size):
            separated = all(space.dist[a][b] >= eps for a, b in combinations(A, 2))
            net = all(any(space.dist[x][a] < eps for a in A) for x in points)
            sig = _sigma(space, A)
            if separated:
                s = sig if s is None else max(s, sig)
                N = size if N is None else max(N, size)
            if net:
                alpha = sig if alpha is None else min(alpha, sig)
                n = size if n is None else min(n, size)
    return s, alpha, N, n


def naiveWitnesses(space, eps):
    """
    Return the lexicographically smallest optimal subsets for (s, alpha, N,
    n) at level ``eps``.

    Candidates are compared as sorted index tuples.
    """
    s, alpha, N, n = naiveSeparation(space, eps)
    points = range(space.size)
    separated, nets = [], []
    for size in range(1, space.size + 1):
        for A in itertools.combinations(points, size):
            if all(space.dist[a][b] >= eps for a, b in combinations(A, 2)):
                separated.append(A)
            if all(any(space.dist[x][a] < eps for a in A) for x in points):
                nets.append(A)
    return (min(A for A in separated if _sigma(space, A) == s),
            min(A for A in nets if _sigma(space, A) == alpha),
            min(A for A in separated if len(A) == N),
            min(A for A in nets if len(A) == n))


def naiveM(N):
    """
    Return max(max lcm(l, m) over l + m <= N, N) without any shortcut.
    """
    best = N
    for l in range(1, N + 1):
        for m in range(1, N + 1 - l):
            best = max(best, l * m // math.gcd(l, m))
    return best
