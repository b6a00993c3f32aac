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
Command line front door of ecplast.

Usage examples::

    python -m ecplast.cli validate X.json
    python -m ecplast.cli profile X.json --format text
    python -m ecplast.cli modulus X.json Y.json --eps 99/100 --class bijections
    python -m ecplast.cli check X.json Y.json --kind strong
    python -m ecplast.cli bounds --N 7 --eps 1
    python -m ecplast.cli generate sharp_case1 --param N=5 --param eps=1 --param a=1 --out sharp5
    python -m ecplast.cli verify-all --seed 0 --sizes 3,4

Every command prints one JSON (or text) report with a top level 'verdict'
and 'witnesses' field. Exit codes: 0 on success (including "n/a" and not
plastic outcomes), 1 if a validation or verification failed, 2 if the input
could not be parsed or the command refused to run because of a size limit.
"""
import sys
import json
import logging
import argparse
import eputils
import jsonschema
import ecplast.core as core
import ecplast.config as config
import ecplast.search as search
import ecplast.bounds as bounds
import ecplast.schemas as schemas
import ecplast.protocol as protocol
import ecplast.separation as separation
import ecplast.constructions as constructions

from fractions import Fraction
from collections import namedtuple
from ecplast.eptypes import RetVal, GeneratorRecipe, MonotoneGauge, toRational
from ecplast.eptypes import normaliseMapClass, FiniteMetricSpace, PointMap
from ecplast.eptypes import HilbertShiftReport, BIJECTIONS, ALL_MAPS
from ecplast.eptypes import VALUE, GENERATOR_KINDS

# Create module logger.
logit = logging.getLogger('ecplast.' + __name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_REFUSED = 2

ERROR = 'ERROR'
REFUSED = 'REFUSED'

CHECK_KINDS = ('ec', 'strong', 'surjection-theorem', 's-comparison',
               'pair-sum', 'orbit', 'ec-strong', 'separation-gap',
               'measurement-remark')

RunConfig = namedtuple('RunConfig',
                       'command paths eps map_class kind N fmt workers '
                       'max_size max_maps seed sizes count recipe out')


def parseCommandLine(argv=None):
    """
    Parse program arguments.
    """
    # Create the parser.
    parser = argparse.ArgumentParser(
        prog='ecplast',
        description='Exact moduli of plasticity for finite metric spaces',
        formatter_class=argparse.RawTextHelpFormatter)

    # Shorthand.
    padd = parser.add_argument

    padd('command', type=str,
         choices=('validate', 'profile', 'modulus', 'check', 'bounds',
                  'generate', 'verify-all'),
         help='Sub command')
    padd('args', type=str, nargs='*', metavar='ARG',
         help='Space files (or the generator kind for <generate>)')
    padd('--eps', type=str, metavar='p/q', default=None,
         help='Expansion level (rational, eg 99/100)')
    padd('--class', dest='map_class', type=str, default='bijections',
         help='Map class of <modulus>: bijections or allmaps')
    padd('--kind', type=str, default='ec', choices=CHECK_KINDS,
         help='Property to decide with <check>')
    padd('--N', type=int, metavar='N', default=None,
         help='Number of points for <bounds>')
    padd('--param', type=str, action='append', default=[], metavar='name=value',
         help='Generator parameter (repeatable)')
    padd('--recipe', type=str, default=None, metavar='file',
         help='JSON recipe file for <generate>')
    padd('--out', type=str, default=None, metavar='prefix',
         help='Write the generated spaces and maps to <prefix>_*.json')
    padd('--format', dest='fmt', type=str, default='json', choices=('json', 'text'),
         help='Report format')
    padd('--workers', type=int, metavar='W', default=config.DEFAULT_WORKERS,
         help='Worker processes of the map searches')
    padd('--seed', type=int, default=None,
         help='Seed of randomised generators and the property suites')
    padd('--sizes', type=str, metavar='n1,n2,..', default='3,4',
         help='Space sizes of <verify-all>')
    padd('--count', type=int, default=10,
         help='Random pairs per size of <verify-all>')
    padd('--max-size', dest='max_size', type=int, metavar='n',
         default=config.MAX_SEPARATION_SIZE,
         help='Largest space for the separation searches')
    padd('--max-maps', dest='max_maps', type=int, metavar='n',
         default=config.MAX_MAP_COUNT,
         help='Largest number of maps |Y|^|X| to enumerate')
    padd('--loglevel', type=int, metavar='level', default=2,
         help='Specify error log level (0: Debug, 1: Info, 2: Warning)')

    # Run the parser.
    return parser.parse_args(argv)


def makeRunConfig(param):
    """
    Return the ``RunConfig`` for the parsed command line ``param``.
    """
    try:
        eps = None if param.eps is None else toRational(param.eps)
    except TypeError:
        return RetVal(False, '<--eps>: {} is not a rational'.format(param.eps), None)
    if eps is not None and eps <= 0:
        return RetVal(False, '<--eps>: must be positive', None)
    try:
        sizes = tuple(int(_) for _ in param.sizes.split(','))
        assert min(sizes) >= 2
    except (ValueError, AssertionError):
        return RetVal(False, '<--sizes>: expected integers >= 2, eg 3,4', None)
    if param.workers < 1:
        return RetVal(False, '<--workers>: must be at least 1', None)

    cfg = RunConfig(
        command=param.command,
        paths=tuple(param.args),
        eps=eps,
        map_class=param.map_class,
        kind=param.kind,
        N=param.N,
        fmt=param.fmt,
        workers=param.workers,
        max_size=param.max_size,
        max_maps=param.max_maps,
        seed=param.seed,
        sizes=sizes,
        count=param.count,
        recipe=param.recipe,
        out=param.out,
    )
    return RetVal(True, None, (cfg, param.param))


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def errorDoc(verdict, msg):
    return {'verdict': verdict, 'witnesses': [], 'msg': msg}


def readText(path):
    try:
        with open(path, 'r') as fd:
            return RetVal(True, None, fd.read())
    except OSError as err:
        return RetVal(False, '<{}>: {}'.format(path, err.strerror), None)


def loadSpace(path):
    """
    Return the validated space in the file ``path``.
    """
    ret = readText(path)
    if not ret.ok:
        return ret
    ret = protocol.parseSpace(ret.data)
    if not ret.ok:
        return RetVal(False, '{}: {}'.format(path, ret.msg), None)
    return ret


def checkSeparationLimit(cfg, *spaces):
    """
    Return an error message if one of ``spaces`` exceeds ``cfg.max_size``.
    """
    for space in spaces:
        if space.size > cfg.max_size:
            msg = 'Refused: {} points exceed the separation limit --max-size={}'
            return msg.format(space.size, cfg.max_size)
    return None


def checkMapLimit(cfg, X, Y):
    """
    Return an error message if |Y|^|X| exceeds ``cfg.max_maps``.
    """
    if Y.size ** X.size > cfg.max_maps:
        msg = 'Refused: {}^{} maps exceed the enumeration limit --max-maps={}'
        return msg.format(Y.size, X.size, cfg.max_maps)
    return None


def verifierExit(doc):
    return EXIT_FAILED if doc['verdict'] == protocol.FAIL else EXIT_OK


def renderText(doc, indent=0):
    """
    Return the report ``doc`` as indented "key: value" lines.
    """
    pad = '  ' * indent
    lines = []
    if isinstance(doc, dict):
        for key in sorted(doc):
            val = doc[key]
            if isinstance(val, (dict, list)) and len(val) > 0:
                lines.append('{}{}:'.format(pad, key))
                lines.append(renderText(val, indent + 1))
            else:
                lines.append('{}{}: {}'.format(pad, key, json.dumps(val)))
    elif isinstance(doc, list):
        for val in doc:
            if isinstance(val, (dict, list)) and len(val) > 0:
                lines.append('{}-'.format(pad))
                lines.append(renderText(val, indent + 1))
            else:
                lines.append('{}- {}'.format(pad, json.dumps(val)))
    else:
        lines.append('{}{}'.format(pad, json.dumps(doc)))
    return '\n'.join(lines)


def formatReport(doc, fmt):
    doc = protocol.toJSON(doc)
    if fmt == 'text':
        return renderText(doc)
    return protocol.dumps(doc)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_validate(path):
    """
    Check the space file ``path`` against the schema and the metric axioms.

    :return: (exit code, report)
    """
    ret = readText(path)
    if not ret.ok:
        return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
    try:
        payload = json.loads(ret.data)
    except json.JSONDecodeError as err:
        msg = '{}: line {}, column {}: {}'.format(path, err.lineno, err.colno, err.msg)
        return EXIT_REFUSED, errorDoc(ERROR, msg)
    try:
        jsonschema.validate(payload, schemas.FiniteMetricSpace)
    except jsonschema.ValidationError as err:
        msg = '{}: {}'.format(path, protocol.schemaErrorMessage(err))
        return EXIT_REFUSED, errorDoc(ERROR, msg)

    labels = payload['labels']
    report = core.validate(labels, payload['dist']).data
    doc = protocol.FromEcplast_Validation_Encode(report, labels)
    doc['file'] = path
    return (EXIT_OK if report.valid else EXIT_FAILED), doc


def cmd_profile(path, cfg):
    """
    Tabulate the separation profile of the space in ``path``.
    """
    ret = loadSpace(path)
    if not ret.ok:
        return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
    X = ret.data
    msg = checkSeparationLimit(cfg, X)
    if msg is not None:
        return EXIT_REFUSED, errorDoc(REFUSED, msg)

    ret = separation.profile(X)
    if not ret.ok:
        return EXIT_FAILED, errorDoc(ERROR, ret.msg)
    return EXIT_OK, protocol.FromEcplast_Profile_Encode(ret.data)


def cmd_modulus(pathX, pathY, eps, map_class, cfg):
    """
    Compute the exact modulus of the pair in ``pathX`` and ``pathY``.
    """
    map_class = normaliseMapClass(map_class)
    if map_class not in (BIJECTIONS, ALL_MAPS):
        return EXIT_REFUSED, errorDoc(ERROR, '<--class>: bijections or allmaps')
    if eps is None:
        return EXIT_REFUSED, errorDoc(ERROR, '<modulus> needs --eps')

    spaces = []
    for path in (pathX, pathY):
        ret = loadSpace(path)
        if not ret.ok:
            return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
        spaces.append(ret.data)
    X, Y = spaces
    msg = checkMapLimit(cfg, X, Y)
    if msg is not None:
        return EXIT_REFUSED, errorDoc(REFUSED, msg)

    ret = search.exact_modulus(X, Y, eps, map_class, workers=cfg.workers)
    if not ret.ok:
        return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
    return EXIT_OK, protocol.FromEcplast_Modulus_Encode(ret.data)


def cmd_check(pathX, pathY, kind, cfg):
    """
    Decide the property ``kind`` for the pair in ``pathX`` and ``pathY``.

    'ec' and 'strong' report whether the pair is plastic (exit code 0 either
    way); the theorem checks report PASS, FAIL (exit code 1) or N/A.
    """
    spaces = []
    for path in (pathX, pathY):
        ret = loadSpace(path)
        if not ret.ok:
            return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
        spaces.append(ret.data)
    X, Y = spaces

    msg = checkMapLimit(cfg, X, Y)
    if msg is None and kind in ('surjection-theorem', 's-comparison', 'separation-gap'):
        msg = checkSeparationLimit(cfg, X, Y)
    if msg is not None:
        return EXIT_REFUSED, errorDoc(REFUSED, msg)
    if kind in ('pair-sum', 'orbit') and cfg.eps is None:
        return EXIT_REFUSED, errorDoc(ERROR, '<check --kind {}> needs --eps'.format(kind))

    if kind == 'ec':
        verdict = search.is_ec_plastic(X, Y).data
        return EXIT_OK, protocol.FromEcplast_Plasticity_Encode('ec_plastic', verdict)
    if kind == 'strong':
        verdict = search.is_strongly_plastic(X, Y).data
        return EXIT_OK, protocol.FromEcplast_Plasticity_Encode('strongly_plastic', verdict)

    verifiers = {
        'surjection-theorem': lambda: search.verify_surjection_theorem(X, Y),
        's-comparison': lambda: search.verify_s_comparison_plasticity(X, Y),
        'pair-sum': lambda: search.verify_pair_sum_theorem(X, Y, cfg.eps),
        'orbit': lambda: search.verify_orbit_theorem(X, cfg.eps),
        'ec-strong': lambda: search.verify_ec_strong_equivalence(X, Y),
        'separation-gap': lambda: search.verify_separation_gap_theorem(X, Y),
        'measurement-remark': lambda: search.proper_measurement_remark(X, Y),
    }
    ret = verifiers[kind]()
    if not ret.ok:
        return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
    doc = protocol.FromEcplast_Verifier_Encode(ret.data)
    return verifierExit(doc), doc


def cmd_bounds(paths, N, eps, cfg):
    """
    Evaluate every bound that applies to ``N`` points (or the spaces in
    ``paths``) at level ``eps``.

    With one space file X the certified levels refer to the pair (X, X),
    with two files to (X, Y).
    """
    if eps is None:
        return EXIT_REFUSED, errorDoc(ERROR, '<bounds> needs --eps')
    if len(paths) > 2:
        return EXIT_REFUSED, errorDoc(ERROR, '<bounds> takes at most two space files')

    spaces = []
    for path in paths:
        ret = loadSpace(path)
        if not ret.ok:
            return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
        spaces.append(ret.data)
    msg = checkSeparationLimit(cfg, *spaces)
    if msg is not None:
        return EXIT_REFUSED, errorDoc(REFUSED, msg)

    if N is None and len(spaces) > 0:
        N = spaces[0].size
    if N is None:
        return EXIT_REFUSED, errorDoc(ERROR, '<bounds> needs --N or a space file')
    if N < 2:
        return EXIT_REFUSED, errorDoc(ERROR, '<--N>: must be at least 2')

    out = {'N': N, 'eps': eps, 'M': bounds.m_of_n(N).data}
    out['orbit'] = bounds.bound_orbit(N, eps).data
    ret = bounds.bound_pair_sum(N, eps)
    out['pair_sum'] = ret.data if ret.ok else 'n/a'
    ret = bounds.sharpness_gap(N, eps)
    out['sharpness_gap'] = ret.data if ret.ok else 'n/a'

    certified = {}
    if len(spaces) > 0:
        X = spaces[0]
        Y = spaces[1] if len(spaces) == 2 else X
        out['nitka'] = bounds.nitka_bound(X, eps).data
        for name, func in (('lemma37', bounds.lemma37_certify),
                           ('theorem38', bounds.theorem38_certify)):
            cert = func(X, Y, eps).data
            certified[name] = protocol.FromEcplast_Certified_Encode(name, cert)
    out['certified'] = certified
    doc = {'verdict': protocol.OK, 'witnesses': [], 'bounds': out}
    return EXIT_OK, doc


def _parseParams(params):
    """
    Return the {name: value} dict of the 'name=value' strings ``params``.
    """
    out = {}
    for item in params:
        name, sep, value = item.partition('=')
        if sep == '' or name == '':
            raise ValueError('<--param>: expected name=value but got {}'.format(item))
        if value.lower() in ('true', 'false'):
            out[name] = value.lower() == 'true'
        else:
            try:
                out[name] = toRational(value)
            except TypeError:
                raise ValueError('<--param>: {} is not a rational'.format(item))
    return out


def _writeJSON(fname, payload):
    with open(fname, 'w') as fd:
        fd.write(json.dumps(payload, sort_keys=True, indent=2) + '\n')
    return fname


def _generatedFiles(result):
    """
    Return the {role: payload} dict of files for the generator ``result``.
    """
    if isinstance(result, HilbertShiftReport):
        return {'report': protocol.FromEcplast_Hilbert_Encode(result)}
    files = {}
    spaces, maps = [], []
    for item in result:
        if isinstance(item, FiniteMetricSpace):
            spaces.append(item)
        elif isinstance(item, PointMap):
            maps.append(item)
        else:
            maps.extend(item)
    names = ['space'] if len(spaces) == 1 else ['X', 'Y']
    for name, space in zip(names, spaces):
        files[name] = protocol.FromEcplast_Space_Encode(space)
    for idx, f in enumerate(maps):
        name = 'map' if len(maps) == 1 else 'map{}'.format(idx + 1)
        files[name] = protocol.FromEcplast_Map_Encode(f)
    return files


def cmd_generate(recipe: GeneratorRecipe, out=None):
    """
    Run the generator of ``recipe`` and write its spaces and maps to
    '<out>_<role>.json' (or embed them into the report if ``out`` is None).
    """
    ret = constructions.replay(recipe)
    if not ret.ok:
        return EXIT_REFUSED, errorDoc(ERROR, ret.msg)

    files = _generatedFiles(ret.data)
    doc = {
        'verdict': protocol.OK,
        'witnesses': [],
        'recipe': protocol.FromEcplast_Recipe_Encode(recipe),
    }
    if isinstance(ret.data, HilbertShiftReport):
        doc = files['report']
        doc['recipe'] = protocol.FromEcplast_Recipe_Encode(recipe)
        return (EXIT_OK if ret.data.noncontractive else EXIT_FAILED), doc

    margins = {}
    for name, payload in files.items():
        if name.startswith('map'):
            f = protocol.ToEcplast_Map_Decode(payload)
            tmp = core.margins(f).data
            margins[name] = {'expansion': tmp.expansion, 'contraction': tmp.contraction}
    doc['margins'] = margins

    if out is None:
        doc['files'] = files
    else:
        try:
            names = [_writeJSON('{}_{}.json'.format(out, name), payload)
                     for name, payload in sorted(files.items())]
        except OSError as err:
            return EXIT_REFUSED, errorDoc(ERROR, '<--out>: {}'.format(err.strerror))
        doc['files'] = names
    return EXIT_OK, doc


def _tally(tally, failures, name, doc, **where):
    counts = tally.setdefault(name, {protocol.PASS: 0, protocol.FAIL: 0,
                                     protocol.NOT_APPLICABLE: 0})
    counts[doc['verdict']] += 1
    if doc['verdict'] == protocol.FAIL:
        failures.append(dict(where, check=name, witnesses=doc['witnesses']))


def _suiteDoc(verdict):
    return {'verdict': verdict, 'witnesses': []}


@eputils.timefunc
def _pairChecks(X, Y, eps):
    """
    Return the (name, report) pairs of the property checks for (X, Y).
    """
    out = []
    if core.pairSum(Y, range(Y.size)) > core.pairSum(X, range(X.size)):
        X, Y = Y, X
    out.append(search.verify_pair_sum_theorem(X, Y, eps).data)
    out.append(search.verify_orbit_theorem(X, eps).data)
    out.append(search.verify_ec_strong_equivalence(X, Y).data)
    out.append(search.verify_surjection_theorem(X, Y).data)
    out.append(search.verify_s_comparison_plasticity(X, Y).data)
    out.append(search.verify_separation_gap_theorem(X, Y).data)
    out.append(search.proper_measurement_remark(X, Y).data)
    docs = [(_.name, protocol.FromEcplast_Verifier_Encode(_)) for _ in out]

    # Certified contraction levels, confirmed by enumeration.
    for name, func, strict, Z in (('lemma37', bounds.lemma37_certify, False, X),
                                  ('theorem38', bounds.theorem38_certify, True, Y)):
        cert = func(X, Z, eps).data
        if not cert.applicable:
            docs.append((name, _suiteDoc(protocol.NOT_APPLICABLE)))
            continue
        rep = search.verify_contraction_certificate(X, Z, eps, cert.delta, strict).data
        docs.append((name, protocol.FromEcplast_Verifier_Encode(rep)))
    return docs


def cmd_verify_all(seed, sizes, count, cfg):
    """
    Run the property suites over seeded random spaces and the generated
    examples, and aggregate the verdicts.

    :param int seed: base seed; the pair k of size n uses the seeds
        seed + 1000 n + 2k and seed + 1000 n + 2k + 1.
    :param tuple sizes: space sizes.
    :param int count: random pairs per size.
    """
    for n in sizes:
        if n > cfg.max_size or n ** n > cfg.max_maps:
            msg = 'Refused: size {} exceeds --max-size={} or --max-maps={}'
            return EXIT_REFUSED, errorDoc(REFUSED, msg.format(n, cfg.max_size, cfg.max_maps))

    seed = 0 if seed is None else seed
    eps = Fraction(1, 2)
    den = config.CATALOG_DENOMINATOR
    tally, failures = {}, []

    with eputils.Timeit('cli.verify_all') as timer:
        # Closed form of M(N) against the brute force maximum.
        for N in range(2, 301):
            ok = bounds.m_of_n(N).data == bounds.m_bruteforce(N).data
            doc = _suiteDoc(protocol.PASS if ok else protocol.FAIL)
            _tally(tally, failures, 'm_of_n', doc, N=N)

        for n in sizes:
            catalog = []
            for k in range(count):
                s = seed + 1000 * n + 2 * k
                X = core.random_space(n, s, den, 'x').data
                Y = core.random_space(n, s + 1, den, 'y').data
                catalog.append(X)
                for name, doc in _pairChecks(X, Y, eps):
                    _tally(tally, failures, name, doc, size=n, seed=s)

            for psi in (None, MonotoneGauge('power', 2), MonotoneGauge('power', 3)):
                rep = search.proper_measurement_check(catalog, psi).data
                ok = len(rep.violations) == 0
                doc = _suiteDoc(protocol.PASS if ok else protocol.FAIL)
                doc['witnesses'] = rep.violations
                _tally(tally, failures, 'proper_measurement', doc, size=n)

        # Sharpness of the orbit bound on the generated examples.
        for N in (5, 7):
            if search.classSize(N, N, BIJECTIONS) > cfg.max_maps:
                continue
            X, f = constructions.sharp_case1(N, 1, 1).data
            level = 1 - config.SHARPNESS_MARGIN
            rep = search.exact_modulus(X, X, level, BIJECTIONS, workers=cfg.workers).data
            lo = bounds.bound_orbit(N, level).data
            hi = core.margins(f).data.contraction
            ok = rep.verdict == VALUE and lo <= rep.value <= hi
            _tally(tally, failures, 'sharpness',
                   _suiteDoc(protocol.PASS if ok else protocol.FAIL), N=N)

    logit.info('verify-all finished in {:.1f}s'.format(timer.elapsed))
    verdict = protocol.FAIL if len(failures) > 0 else protocol.PASS
    doc = {
        'verdict': verdict,
        'witnesses': failures,
        'tally': tally,
        'seed': seed,
        'sizes': list(sizes),
        'count': count,
        'eps': eps,
    }
    return (EXIT_FAILED if len(failures) > 0 else EXIT_OK), doc


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def _recipeFromArgs(cfg, params):
    """
    Return the ``GeneratorRecipe`` of the <generate> command line.
    """
    if cfg.recipe is not None:
        ret = readText(cfg.recipe)
        if not ret.ok:
            return ret
        try:
            payload = json.loads(ret.data)
            return RetVal(True, None, protocol.ToEcplast_Recipe_Decode(payload))
        except json.JSONDecodeError as err:
            msg = 'line {}, column {}: {}'.format(err.lineno, err.colno, err.msg)
        except jsonschema.ValidationError as err:
            msg = protocol.schemaErrorMessage(err)
        except (TypeError, ValueError) as err:
            msg = str(err)
        return RetVal(False, '{}: {}'.format(cfg.recipe, msg), None)

    if len(cfg.paths) != 1:
        return RetVal(False, '<generate> expects one generator kind or --recipe', None)
    kind = cfg.paths[0].upper().replace('-', '_')
    if kind not in GENERATOR_KINDS:
        msg = 'Unknown generator <{}>; choose from {}'
        return RetVal(False, msg.format(cfg.paths[0], ', '.join(GENERATOR_KINDS)), None)
    try:
        return RetVal(True, None, GeneratorRecipe(kind, _parseParams(params), cfg.seed))
    except ValueError as err:
        return RetVal(False, str(err), None)


def dispatch(cfg, params):
    """
    Run the command of ``cfg`` and return (exit code, report).
    """
    if cfg.command == 'validate':
        if len(cfg.paths) != 1:
            return EXIT_REFUSED, errorDoc(ERROR, '<validate> expects one space file')
        return cmd_validate(cfg.paths[0])
    if cfg.command == 'profile':
        if len(cfg.paths) != 1:
            return EXIT_REFUSED, errorDoc(ERROR, '<profile> expects one space file')
        return cmd_profile(cfg.paths[0], cfg)
    if cfg.command == 'modulus':
        if len(cfg.paths) != 2:
            return EXIT_REFUSED, errorDoc(ERROR, '<modulus> expects two space files')
        return cmd_modulus(cfg.paths[0], cfg.paths[1], cfg.eps, cfg.map_class, cfg)
    if cfg.command == 'check':
        if len(cfg.paths) != 2:
            return EXIT_REFUSED, errorDoc(ERROR, '<check> expects two space files')
        return cmd_check(cfg.paths[0], cfg.paths[1], cfg.kind, cfg)
    if cfg.command == 'bounds':
        return cmd_bounds(cfg.paths, cfg.N, cfg.eps, cfg)
    if cfg.command == 'generate':
        ret = _recipeFromArgs(cfg, params)
        if not ret.ok:
            return EXIT_REFUSED, errorDoc(ERROR, ret.msg)
        return cmd_generate(ret.data, cfg.out)
    if cfg.command == 'verify-all':
        return cmd_verify_all(cfg.seed, cfg.sizes, cfg.count, cfg)
    return EXIT_REFUSED, errorDoc(ERROR, 'Unknown command <{}>'.format(cfg.command))


def main(argv=None):
    """
    Parse the command line, run the command and print its report.

    :return: int exit code
    """
    param = parseCommandLine(argv)
    if not config.setLogLevel(param.loglevel):
        print('Invalid log level {}'.format(param.loglevel))
        return EXIT_REFUSED

    ret = makeRunConfig(param)
    if not ret.ok:
        code, doc = EXIT_REFUSED, errorDoc(ERROR, ret.msg)
        fmt = param.fmt
    else:
        cfg, params = ret.data
        code, doc = dispatch(cfg, params)
        fmt = cfg.fmt

    print(formatReport(doc, fmt))
    return code


if __name__ == '__main__':
    sys.exit(main())
