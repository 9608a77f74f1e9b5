"""The ``relentbound`` command line tool.

Every subcommand computes one kind of result and prints it as JSON (the
default) or CSV.  Exit codes: 0 on success, 1 when an input file cannot be
read, 2 for invalid parameters, 3 when ``verify`` finds a violation.
"""

import argparse
import logging
import math
import sys

import numpy as np
from attr import Factory, attrib, attrs
from attr.validators import in_, instance_of

from relentbound.apps import (
    ConvergenceError, blahut_arimoto, capacity_lower_bound, chernoff,
    extractable_work, stepwise_process,
)
from relentbound.bound import (
    closed_form_lower_bounds, compute_M, compute_N, critical_temperature,
    pinsker_fa_bound,
)
from relentbound.core import ProbVector
from relentbound.oracle import residual_ok, run_suite, stationarity_suite
from .channelio import ChannelReadError, read_channel
from .output import FORMATS, UNITS, Column, Kind, Table, render

logger = logging.getLogger(__name__)

COMMANDS = ('m-bound', 'n-bound', 'capacity', 'chernoff', 'process', 'work',
            'verify', 'figure')

EXIT_OK = 0
EXIT_READ_ERROR = 1
EXIT_BAD_PARAMS = 2
EXIT_VIOLATION = 3

FIGURE_DIMS = (2, 10, 50)
FIGURE_POINTS = 401
FIGURE_N_DIMS = range(2, 101)

ENT = Kind.ENTROPY
VAR = Kind.VARIANCE


def _default_format(config):
    return 'csv' if config.command == 'figure' else 'json'


@attrs(slots=True, frozen=True)
class RunConfig:
    """Everything a run depends on.  ``params`` holds the command-specific
    parameters by name.  ``units`` only affects how results are displayed.
    """

    command = attrib(validator=in_(COMMANDS))
    params = attrib(default=Factory(dict), validator=instance_of(dict))
    output_format = attrib(
        default=Factory(_default_format, takes_self=True),
        validator=in_(FORMATS))
    units = attrib(default='nats', validator=in_(UNITS))
    seed = attrib(default=0, validator=instance_of(int))


@attrs(slots=True, frozen=True)
class RunResult:
    """The exit code, the serialized output, and a diagnostic for stderr."""

    code = attrib()
    output = attrib(default='')
    message = attrib(default=None)


def _m_bound(config, stdin):
    d = config.params['d']
    delta = config.params['delta']
    result = compute_M(d, delta)
    closed = closed_form_lower_bounds(d, result.delta)
    columns = [
        Column('d'), Column('delta', ENT), Column('M', ENT),
        Column('status'), Column('s_opt'), Column('r_opt'),
        Column('exp_bound', ENT), Column('cubic_bound', ENT),
        Column('quad_bound', ENT), Column('pinsker_fa', ENT),
    ]
    row = (d, result.delta, result.value, result.status.value, result.s_opt,
           result.r_opt, closed.exp_bound, closed.cubic_bound,
           closed.quad_bound, pinsker_fa_bound(d, result.delta))
    return [Table('m_bound', columns, [row])]


def _n_bound(config, stdin):
    d = config.params['d']
    bound = compute_N(d)
    columns = [Column('d'), Column('N', VAR), Column('N_d', VAR),
               Column('r_d'), Column('critical_temperature')]
    row = (d, bound.n_value, bound.n_closed, bound.r_d,
           critical_temperature(d))
    return [Table('n_bound', columns, [row])]


def _capacity(config, stdin):
    path = config.params['channel']
    if path == '-':
        channel = read_channel(stdin.read(), '<stdin>')
    else:
        try:
            with open(path, encoding='utf-8') as f:
                text = f.read()
        except OSError as exc:
            raise ChannelReadError(f'{path}: {exc.strerror}') from None
        channel = read_channel(text, path)
    bound = capacity_lower_bound(channel)
    columns = [
        Column('input_dim'), Column('output_dim'), Column('capacity', ENT),
        Column('bound', ENT), Column('s_max', ENT), Column('s_min', ENT),
        Column('conjectural_bound', ENT), Column('conjectural_bound_status'),
    ]
    row = (channel.input_dim, channel.output_dim, blahut_arimoto(channel),
           bound.bound, bound.s_max, bound.s_min, bound.conjectural_bound,
           'conjectural')
    return [Table('capacity', columns, [row])]


def _chernoff(config, stdin):
    result = chernoff(ProbVector(config.params['p']),
                      ProbVector(config.params['q']))
    columns = [Column('xi', ENT), Column('s_opt'),
               Column('lower_bound', ENT)]
    return [Table('chernoff', columns,
                  [(result.xi, result.s_opt, result.lower_bound)])]


def _process(config, stdin):
    report = stepwise_process(
        ProbVector(config.params['rho_i']), ProbVector(config.params['rho_f']),
        config.params['k'], config.params.get('temps'))
    columns = [
        Column('k'), Column('clausius_lhs', ENT), Column('delta_S', ENT),
        Column('rel_ent_sum', ENT), Column('bound_convexity', ENT),
        Column('bound_quadratic', ENT), Column('bound_pinsker', ENT),
        Column('upper_envelope', ENT), Column('w_waste_lb', ENT),
    ]
    row = (report.k, report.clausius_lhs, report.delta_S, report.rel_ent_sum,
           report.bound_convexity, report.bound_quadratic,
           report.bound_pinsker, report.upper_envelope, report.w_waste_lb)
    return [Table('process', columns, [row])]


def _work(config, stdin):
    result = extractable_work(ProbVector(config.params['rho_i']),
                              config.params['levels'],
                              config.params['temperature'])
    # Work is temperature times nats, so it converts like an entropy.
    columns = [Column('exact', ENT), Column('lower_bound', ENT),
               Column('free_energy_drop', ENT), Column('delta_S', ENT)]
    row = (result.exact, result.lower_bound, result.free_energy_drop,
           result.delta_S)
    return [Table('work', columns, [row])]


def _oracle_table(title, reports, kind):
    columns = [
        Column('name'), Column('d'), Column('samples'),
        Column('min_gap', kind), Column('violations'), Column('resampled'),
        Column('witness_gap', kind), Column('passed'), Column('worst_case'),
    ]
    rows = [
        (r.name, r.d, r.samples, r.min_gap, r.violations, r.resampled,
         r.witness_gap, r.passed, r.worst_case)
        for r in reports
    ]
    return Table(title, columns, rows)


def _verify(config, stdin):
    reports = run_suite(config.seed, config.params.get('samples', 10000),
                        workers=config.params.get('workers', 1))
    residuals = stationarity_suite()
    stationarity_columns = [
        Column('d'), Column('delta', ENT), Column('s'), Column('r'),
        Column('constraint_residual', ENT), Column('f_residual'),
        Column('boundary'), Column('passed'),
    ]
    stationarity_rows = [
        (r.d, r.delta, r.s, r.r, r.constraint_residual, r.f_residual,
         r.boundary, residual_ok(r))
        for r in residuals
    ]
    failed = (not all(r.passed for r in reports)
              or not all(residual_ok(r) for r in residuals))
    tables = [
        _oracle_table('m_oracle',
                      [r for r in reports if r.name == 'M-bound'], ENT),
        _oracle_table('variance_oracle',
                      [r for r in reports if r.name == 'variance'], VAR),
        Table('stationarity', stationarity_columns, stationarity_rows),
    ]
    return tables, failed


def figure_tables():
    """Returns the bound curves for ``d`` in 2, 10 and 50 over 401 points
    of ``[-log d, log d]``, and the table of ``N(d)`` against its
    closed-form bounds for ``d`` up to 100.
    """
    curve_columns = [
        Column('d'), Column('delta', ENT), Column('M', ENT),
        Column('exp_bound_Nd', ENT), Column('cubic_bound_Nd', ENT),
        Column('quad_bound', ENT), Column('pinsker_fa', ENT),
    ]
    curve_rows = []
    for d in FIGURE_DIMS:
        log_d = math.log(d)
        for delta in np.linspace(-log_d, log_d, FIGURE_POINTS):
            delta = float(delta)
            closed = closed_form_lower_bounds(d, delta)
            curve_rows.append((
                d, delta, compute_M(d, delta).value, closed.exp_bound,
                closed.cubic_bound, closed.quad_bound,
                pinsker_fa_bound(d, delta),
            ))
    variance_columns = [Column('d'), Column('N(d)', VAR), Column('N_d', VAR),
                        Column('N_d-1', VAR)]
    variance_rows = []
    for d in FIGURE_N_DIMS:
        bound = compute_N(d)
        variance_rows.append((d, bound.n_value, bound.n_closed,
                              bound.n_closed - 1))
    return [Table('curves', curve_columns, curve_rows),
            Table('variance', variance_columns, variance_rows)]


def _figure(config, stdin):
    return figure_tables()


HANDLERS = {
    'm-bound': _m_bound,
    'n-bound': _n_bound,
    'capacity': _capacity,
    'chernoff': _chernoff,
    'process': _process,
    'work': _work,
    'verify': _verify,
    'figure': _figure,
}


def run(config, stdin=None):
    """Executes ``config`` and returns a :py:class:`RunResult`.  ``stdin`` is
    the stream a channel named ``-`` is read from.
    """
    if stdin is None:
        stdin = sys.stdin
    failed = False
    try:
        tables = HANDLERS[config.command](config, stdin)
        if config.command == 'verify':
            tables, failed = tables
    except ChannelReadError as exc:
        return RunResult(EXIT_READ_ERROR, message=str(exc))
    except (ValueError, TypeError, ConvergenceError) as exc:
        return RunResult(EXIT_BAD_PARAMS, message=f'error: {exc}')
    output = render(tables, config.output_format, config.units)
    if failed:
        return RunResult(EXIT_VIOLATION, output,
                         'verify: some checks failed')
    return RunResult(EXIT_OK, output)


def _vector(text):
    try:
        return [float(x) for x in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f'expected comma-separated numbers, got {text!r}') from None


def build_parser():
    """Returns the argument parser of the command line tool."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', dest='output_format', choices=FORMATS,
                        help='output format (default: json, csv for figure)')
    common.add_argument('--units', choices=UNITS, default='nats',
                        help='units of displayed entropic values')
    common.add_argument('--seed', type=int, default=0,
                        help='random seed for the oracles')
    common.add_argument('--out', help='output file (default: stdout)')
    common.add_argument('-v', '--verbose', action='count', default=0,
                        help='log more (repeat for debug output)')
    common.add_argument('-q', '--quiet', action='store_true',
                        help='log errors only')

    parser = argparse.ArgumentParser(
        prog='relentbound',
        description='Tight bounds on relative entropy in terms of entropy '
                    'differences, and their applications.')
    sub = parser.add_subparsers(dest='command', required=True)

    cmd = sub.add_parser('m-bound', parents=[common],
                         help='the bound M(delta, d) and its simplifications')
    cmd.add_argument('--d', type=int, required=True)
    cmd.add_argument('--delta', type=float, required=True)

    cmd = sub.add_parser('n-bound', parents=[common],
                         help='the maximal surprisal variance N(d)')
    cmd.add_argument('--d', type=int, required=True)

    cmd = sub.add_parser('capacity', parents=[common],
                         help='channel capacity and its lower bound')
    cmd.add_argument('--channel', required=True,
                     help='CSV or JSON channel file, - for stdin')

    cmd = sub.add_parser('chernoff', parents=[common],
                         help='Chernoff information of two distributions')
    cmd.add_argument('--p', type=_vector, required=True)
    cmd.add_argument('--q', type=_vector, required=True)

    cmd = sub.add_parser('process', parents=[common],
                         help='irreversibility of stepwise equilibration')
    cmd.add_argument('--rho-i', type=_vector, required=True)
    cmd.add_argument('--rho-f', type=_vector, required=True)
    cmd.add_argument('--k', type=int, required=True)
    cmd.add_argument('--temps', type=_vector)

    cmd = sub.add_parser('work', parents=[common],
                         help='work extractable at constant temperature')
    cmd.add_argument('--rho-i', type=_vector, required=True)
    cmd.add_argument('--levels', type=_vector, required=True)
    cmd.add_argument('--temperature', type=float, required=True)

    cmd = sub.add_parser('verify', parents=[common],
                         help='run the oracle suite')
    cmd.add_argument('--samples', type=int, default=10000)
    cmd.add_argument('--workers', type=int, default=1)

    sub.add_parser('figure', parents=[common],
                   help='data of the bound curves and the N(d) table')
    return parser


GLOBAL_OPTIONS = ('command', 'output_format', 'units', 'seed', 'out',
                  'verbose', 'quiet')


def config_from_args(args):
    """Builds the :py:class:`RunConfig` of parsed arguments."""
    params = {key: value for key, value in vars(args).items()
              if key not in GLOBAL_OPTIONS and value is not None}
    kwargs = {}
    if args.output_format is not None:
        kwargs['output_format'] = args.output_format
    return RunConfig(args.command, params, units=args.units, seed=args.seed,
                     **kwargs)


def _setup_logging(args):
    if args.quiet:
        level = logging.ERROR
    elif args.verbose >= 2:
        level = logging.DEBUG
    elif args.verbose == 1:
        level = logging.INFO
    else:
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
                        format='%(levelname)s %(name)s: %(message)s')


def main(argv=None):
    """Runs the command line tool and returns its exit code."""
    args = build_parser().parse_args(argv)
    _setup_logging(args)
    result = run(config_from_args(args))
    if result.message:
        sys.stderr.write(result.message + '\n')
    if result.output:
        if args.out:
            with open(args.out, 'w', encoding='utf-8', newline='') as f:
                f.write(result.output)
        else:
            sys.stdout.write(result.output)
    return result.code
