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
Project neutral helpers: timing, metric logging and integer utilities.

Nothing in here knows about metric spaces. The module is importable as
``eputils`` once the ``ecplast`` package has been imported (it puts the
'shared' directory onto the path).
"""
import math
import time
import logging
import functools

# Timing and quantity metrics are plain log records on a dedicated logger.
logit = logging.getLogger('ecplast.timing')


def logMetricQty(metric, value):
    """
    Log a Quantity ``metric`` and its integer ``value``.

    Invalid arguments are silently ignored; metrics must never interfere
    with a computation.

    :param str metric: name of metric
    :param int value: value
    """
    if not isinstance(metric, str):
        return
    if not isinstance(value, int) or isinstance(value, bool):
        return
    logit.debug('QTY %s: %d', metric, value)


class Timeit(object):
    """
    Context manager to measure execution time.

    The elapsed time is logged at DEBUG level when the context exits, and
    also printed when ``show`` is *True*.
    """
    def __init__(self, name, show=False):
        self.name = name
        self.show = show
        self.elapsed = None

    def __enter__(self):
        self.start = time.time()
        return self

    def save(self, name, elapsed):
        """
        Log the measurement.
        """
        logit.debug('TIME %s: %dms', name, int(1000 * elapsed))
        if self.show:
            print('-- TIMING {}: {:,}ms'.format(name, int(1000 * elapsed)))

    def __exit__(self, *args):
        self.elapsed = time.time() - self.start
        self.save(self.name, self.elapsed)


def timefunc(func):
    """
    Profile execution time of entire function.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        with Timeit(func.__name__, False):
            res = func(*args, **kwargs)
        return res

    # Return a new function that wrapped the original with a Timeit instance.
    return wrapper


def lcm(*numbers):
    """
    Return the least common multiple of one or more positive integers.

    >>> lcm(3, 4)
    12
    >>> lcm(2, 4, 6)
    12
    """
    def _lcm(a, b):
        assert isinstance(b, int) and b > 0
        return (a * b) // math.gcd(a, b)

    return functools.reduce(_lcm, numbers, 1)


def isqrtExact(n: int):
    """
    Return the integer square root of ``n`` if ``n`` is a perfect square,
    otherwise *None*.
    """
    if n < 0:
        return None
    root = math.isqrt(n)
    return root if root * root == n else None
