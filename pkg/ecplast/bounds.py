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
Closed form bounds on the modulus of plasticity and certified contraction
levels for finite pairs.

Nothing in here enumerates maps; the separation searches are the only
expensive calls (``nitka_bound``, ``lemma37_certify``, ``theorem38_certify``).
"""
import logging
import eputils
import ecplast.config as config
import ecplast.separation as separation

from fractions import Fraction
from ecplast.eptypes import typecheck, RetVal, FiniteMetricSpace, toRational
from ecplast.eptypes import CertifiedDelta

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)


def _positive(eps):
    """
    Return ``eps`` as a positive Fraction or raise ValueError.
    """
    try:
        eps = toRational(eps)
    except TypeError as err:
        raise ValueError(str(err))
    if eps <= 0:
        raise ValueError('eps must be positive but is {}'.format(eps))
    return eps


@typecheck
def m_of_n(N: int):
    """
    Return M(N), the largest joint orbit period of two points under a
    bijection of an N point set.

    Closed form:

    * k(k+1) for N = 2k+1, k >= 2,
    * (2k-1)(2k+1) for N = 4k, k >= 2,
    * (2k-1)(2k+3) for N = 4k+2, k >= 2,
    * N otherwise (ie N = 2, 3, 4, 6).

    :param int N: number of points, N >= 2.
    :return: int
    """
    if N < 2:
        return RetVal(False, 'M(N) needs N >= 2', None)

    if N % 2 == 1 and N >= 5:
        k = (N - 1) // 2
        return RetVal(True, None, k * (k + 1))
    if N % 4 == 0 and N >= 8:
        k = N // 4
        return RetVal(True, None, (2 * k - 1) * (2 * k + 1))
    if N % 4 == 2 and N >= 10:
        k = (N - 2) // 4
        return RetVal(True, None, (2 * k - 1) * (2 * k + 3))
    return RetVal(True, None, N)


@typecheck
def m_bruteforce(N: int):
    """
    Return max{max lcm(l, m) over l, m >= 1 with l + m <= N, N}.

    The double loop stops early for a fixed ``l`` once l * m (an upper
    bound of the lcm) cannot beat the incumbent anymore.

    :param int N: number of points, N >= 2.
    :return: int
    """
    if N < 2:
        return RetVal(False, 'M(N) needs N >= 2', None)

    best = N
    for l in range(1, N):
        # lcm is symmetric, hence m >= l suffices.
        for m in range(N - l, l - 1, -1):
            if l * m <= best:
                break
            best = max(best, eputils.lcm(l, m))
    return RetVal(True, None, best)


@typecheck
def bound_pair_sum(N: int, eps):
    """
    Return eps / (N(N-1)/2 - 1), the guaranteed modulus of bijections
    between N point spaces X, Y with sigma(Y) <= sigma(X).

    :param int N: number of points, N >= 3.
    :param eps: positive rational.
    :return: Fraction
    """
    try:
        eps = _positive(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)
    if N < 3:
        return RetVal(False, 'The pair sum bound has a zero denominator for N < 3', None)
    return RetVal(True, None, eps / (Fraction(N * (N - 1), 2) - 1))


@typecheck
def bound_orbit(N: int, eps):
    """
    Return eps / (M(N) - 1), the guaranteed modulus of the bijections of an
    N point space onto itself.

    :param int N: number of points, N >= 2.
    :param eps: positive rational.
    :return: Fraction
    """
    try:
        eps = _positive(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)
    ret = m_of_n(N)
    if not ret.ok:
        return ret
    return RetVal(True, None, eps / (ret.data - 1))


@typecheck
def nitka_bound(space: FiniteMetricSpace, eps):
    """
    Return 2 eps / (11 (n (n - 1) + 2)) with n the smallest size of an
    (eps/11)-net of ``space``.

    :param FiniteMetricSpace space: the metric space.
    :param eps: positive rational.
    :return: Fraction
    """
    try:
        eps = _positive(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    n = separation.n_net_min(space, eps / 11).data[0]
    logit.debug('n(eps/11) = {}'.format(n))
    return RetVal(True, None, 2 * eps / (11 * (n * (n - 1) + 2)))


def _thresholds(eps, N):
    """
    Return the two thresholds eps/(N(N-1)-6) and eps/(9(N+1)) or *None* if
    the first denominator is not positive.
    """
    den = N * (N - 1) - 6
    if den <= 0:
        return None
    return eps / den, eps / (9 * (N + 1))


def _hypothesisHolds(X, Y, level, delta, nu):
    """
    Return *True* if s(X, level) >= s(Y, level - delta) - nu > 0.
    """
    sX = separation.s_max(X, level).data[0]
    sY = separation.s_max(Y, level - delta).data[0]
    return sX >= sY - nu > 0


def _notApplicable(eps, reason, eps0=None):
    return RetVal(True, None, CertifiedDelta(eps, eps0, None, None, False, reason))


@typecheck
def lemma37_certify(X: FiniteMetricSpace, Y: FiniteMetricSpace, eps):
    """
    Return the largest certified contraction level delta of (X, Y) at
    ``eps``.

    With N = N(X, eps/9) the level delta must stay below
    min{eps/(N(N-1)-6), eps/(9(N+1))}, and some nu < eps/18 must satisfy
    s(X, eps/9) >= s(Y, eps/9 - delta) - nu > 0. The candidates for delta
    are eps/9 - b for the distances b of Y in range, plus the midpoints
    between neighbouring candidates. For each one nu is the smallest
    admissible value max(0, s(Y, eps/9 - delta) - s(X, eps/9)).

    Every map X -> Y that expands some pair by at least ``eps`` then
    contracts some pair by at least delta.

    :param FiniteMetricSpace X: domain.
    :param FiniteMetricSpace Y: codomain.
    :param eps: positive rational.
    :return: CertifiedDelta
    """
    try:
        eps = _positive(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)

    level = eps / 9
    N = separation.n_sep_max(X, level).data[0]
    tmp = _thresholds(eps, N)
    if tmp is None:
        return _notApplicable(eps, 'nonpositive denominator')
    top = min(tmp)

    # Candidate levels: Y distances that put delta into (0, top), plus the
    # midpoints of the resulting partition of [0, top].
    cands = {level - b for b in Y.distances() if level - top < b < level}
    edges = sorted(cands | {Fraction(0), top})
    cands |= {(lo + hi) / 2 for lo, hi in zip(edges[:-1], edges[1:])}

    sX = separation.s_max(X, level).data[0]
    best = None
    for delta in sorted(cands, reverse=True):
        sY = separation.s_max(Y, level - delta).data[0]
        nu = max(Fraction(0), sY - sX)
        if nu < eps / 18 and sY - nu > 0:
            best = (delta, nu)
            break

    if best is None:
        return _notApplicable(eps, 'no admissible delta')
    delta, nu = best
    return RetVal(True, None, CertifiedDelta(eps, None, delta, nu, True, None))


def _interiorLevel(eps, Y):
    """
    Return the largest eps0 = eps (1 - 1/D), D >= LEVEL_DENOMINATOR, such
    that eps0/9 is not a distance of Y.
    """
    distances = set(Y.distances())
    D = config.LEVEL_DENOMINATOR
    while True:
        eps0 = eps * (1 - Fraction(1, D))
        if eps0 / 9 not in distances:
            return eps0
        D += 1


@typecheck
def theorem38_certify(X: FiniteMetricSpace, Y: FiniteMetricSpace, eps):
    """
    Return a certified contraction level for (X, Y) at ``eps`` under the
    hypothesis s(X, d) >= s(Y, d) for all d > 0.

    The level eps0 < eps is chosen such that eps0/9 is not a distance of
    ``Y``, ie s(Y, .) is locally constant there. With Delta the gap from
    eps0/9 down to the next smaller distance of Y (or eps0/9 itself) and
    N = N(X, eps0/9) the certified level is

        delta0 = min{Delta/2, eps0/(N(N-1)-6), eps0/(9(N+1))}

    with nu0 = 0. Every map that expands some pair by more than ``eps``
    contracts some pair by at least delta0.

    :param FiniteMetricSpace X: domain.
    :param FiniteMetricSpace Y: codomain.
    :param eps: rational in (0, diam Y).
    :return: CertifiedDelta
    """
    try:
        eps = _positive(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)
    if not eps < Y.diameter():
        return _notApplicable(eps, 'eps outside (0, diam Y)')

    # s(X, .) >= s(Y, .) everywhere.
    pX = separation.profile(X).data
    pY = separation.profile(Y).data
    for level in separation.comparison_grid(X, Y).data:
        sx = separation.evaluate(pX, level).data.s
        sy = separation.evaluate(pY, level).data.s
        if sx < sy:
            return _notApplicable(eps, 's(X) >= s(Y) fails at {}'.format(level))

    eps0 = _interiorLevel(eps, Y)
    level = eps0 / 9
    below = [b for b in Y.distances() if b < level]
    Delta = level - below[-1] if len(below) > 0 else level

    N = separation.n_sep_max(X, level).data[0]
    tmp = _thresholds(eps0, N)
    if tmp is None:
        return _notApplicable(eps, 'nonpositive denominator', eps0)
    delta0 = min((Delta / 2, ) + tmp)
    nu0 = Fraction(0)

    if not _hypothesisHolds(X, Y, level, delta0, nu0):
        return _notApplicable(eps, 'separation hypothesis fails', eps0)
    return RetVal(True, None, CertifiedDelta(eps, eps0, delta0, nu0, True, None))


@typecheck
def sharpness_gap(N: int, eps):
    """
    Compare the certification threshold eps/(N(N-1)-6) with the contraction
    eps/(M(N)-1) that the sharp example actually achieves.

    :param int N: number of points, N >= 4.
    :param eps: positive rational.
    :return: dict with 'threshold', 'achievable' and their 'quotient'.
    """
    try:
        eps = _positive(eps)
    except ValueError as err:
        return RetVal(False, str(err), None)
    if N < 4:
        return RetVal(False, 'The threshold needs N >= 4', None)

    threshold = eps / (N * (N - 1) - 6)
    achievable = bound_orbit(N, eps).data
    out = {
        'threshold': threshold,
        'achievable': achievable,
        'quotient': threshold / achievable,
    }
    return RetVal(True, None, out)
