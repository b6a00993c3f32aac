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
Global configuration parameters.

.. note::
   This module has no side effects other than configuring the 'ecplast'
   logger and can be imported from anywhere by anyone.

.. warning::
   To keep this module free of side effects it is paramount to not import other
   ecplast modules here (circular imports), *and* that *no* other module
   modifies any variables here during run time.
"""
import os
import sys
import psutil
import logging
import setproctitle

from fractions import Fraction

# ---------------------------------------------------------------------------
# Configure logging.
# ---------------------------------------------------------------------------

# The log file lives in the repository root unless ECPLAST_LOGFILE says
# otherwise. An empty ECPLAST_LOGFILE disables file logging.
log_file = os.path.dirname(os.path.abspath(__file__))
log_file = os.path.join(log_file, '..', 'ecplast.log')
log_file = os.getenv('ECPLAST_LOGFILE', log_file)
logger = logging.getLogger('ecplast')

# Prevent it from propagating to the root logger no matter what.
logger.propagate = False

# Only install the handlers once, even if the module is reloaded.
if len(logger.handlers) == 0:
    # Create a handler instance to log the messages to stdout.
    console = logging.StreamHandler(sys.stdout)
    console.setLevel(logging.DEBUG)

    logFormat = '%(levelname)s %(module)s.%(funcName)s: %(message)s'
    console.setFormatter(logging.Formatter(logFormat))
    logger.addHandler(console)
    del console

    # Specify a file logger.
    if log_file != '':
        logFormat = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
        fileHandler = logging.FileHandler(log_file, mode='a')
        fileHandler.setLevel(logging.DEBUG)
        fileHandler.setFormatter(logging.Formatter(logFormat))
        logger.addHandler(fileHandler)
        del fileHandler
    del logFormat

# Quiet by default. The CLI raises the level via 'setLogLevel'.
logger.setLevel(logging.WARNING)


def setLogLevel(loglevel: int):
    """
    Change the log level of the 'ecplast' loggers.

    :param int loglevel: 0: Debug, 1: Info, 2: Warning.
    :return: *True* if ``loglevel`` was valid.
    """
    levels = {0: logging.DEBUG, 1: logging.INFO, 2: logging.WARNING}
    if loglevel not in levels:
        return False
    logger.setLevel(levels[loglevel])
    return True


# ---------------------------------------------------------------------------
# Global variables.
# ---------------------------------------------------------------------------
def _envInt(name: str, default: int):
    try:
        return int(os.getenv(name, default))
    except ValueError:
        return default


# Largest space the separation searches (s, alpha, N, n) accept from the CLI.
MAX_SEPARATION_SIZE = _envInt('ECPLAST_MAX_SIZE', 12)

# Largest number of candidate maps (|Y|^|X|) the CLI is willing to enumerate.
MAX_MAP_COUNT = _envInt('ECPLAST_MAX_MAPS', 10 ** 8)

# Number of worker processes for the map searches.
DEFAULT_WORKERS = _envInt('ECPLAST_WORKERS', psutil.cpu_count(logical=False) or 1)

# Decimal digits for the interval square roots of the Hilbert shift demo.
HILBERT_PRECISION = 30

# The sharpness checks evaluate the modulus at eps * (1 - SHARPNESS_MARGIN).
SHARPNESS_MARGIN = Fraction(1, 100)

# Interior certification level: eps0 = eps * (1 - 1/D) for the smallest
# D >= LEVEL_DENOMINATOR that avoids the breakpoints of s(Y, .).
LEVEL_DENOMINATOR = 100

# Denominator of the seeded random catalog distances (values in [1, 2]).
CATALOG_DENOMINATOR = 12


def nameWorkerProcess(name: str):
    """
    Rename the current process in the Unix process table.

    This makes it easier to identify (and kill) the search workers from the
    command shell.
    """
    setproctitle.setproctitle('ecplast: {}'.format(name))
