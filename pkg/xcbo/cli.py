"""Command-line front end.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
1 usage error, unknown function or failed optimization run, 2 invalid
input or domain violation.
"""
import argparse
import json
import logging
import sys

import numpy as np
import pandas as pd

from . import bench, grid, optimizer
from ._version import __version__
from .exceptions import GridError, InvalidInput, OutOfDomain, UnknownFunction
from .exceptions import XcboError
from .testfuns import get_spec, list_functions
from .yaml import load_config

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2


class _Parser(argparse.ArgumentParser):

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f'{self.prog}: error: {message}', file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _fmt7(value):
    return f'{value:.7g}'


def _parse_coords(text):
    try:
        return [float(tt) for tt in text.split(',')]
    except ValueError:
        raise InvalidInput()


def _parse_fixed(items):
    fixed = {}
    for item in items or []:
        key, sep, value = item.partition('=')
        if not sep:
            raise GridError(f'Cannot parse pin `{item}`, expected x<i>=<value>')
        key = key.strip().lstrip('x')
        try:
            fixed[int(key) - 1] = float(value)
        except ValueError:
            raise GridError(f'Cannot parse pin `{item}`, expected x<i>=<value>')
    return fixed


def cmd_list(args):
    rows = [{'Function': spec.name,
             'Input Dimension': spec.dim,
             'Optimization Type': spec.optimization_type,
             'No. of Constraints': spec.n_constraints if spec.constrained else '--'}
            for spec in list_functions()]
    print(pd.DataFrame(rows).to_string(index=False))
    return EXIT_OK


def cmd_describe(args):
    spec = get_spec(args.name)
    print(f'{spec.name}: {spec.description}')
    print(f'  input dimension:   {spec.dim}')
    print(f'  optimization type: {spec.optimization_type}')
    print(f'  constraints:       {spec.n_constraints}')
    print(f'  domain ({spec.domain_source}):')
    for jj, (lo, hi) in enumerate(zip(spec.domain.lower, spec.domain.upper)):
        print(f'    x{jj + 1} in [{_fmt7(lo)}, {_fmt7(hi)}]')
    return EXIT_OK


def cmd_eval(args):
    spec = get_spec(args.name)
    ev = spec.evaluate(_parse_coords(args.x))
    print(json.dumps(ev.to_dict()))
    return EXIT_OK


def cmd_optimize(args):
    spec = get_spec(args.name)
    trace = optimizer.run(args.name, start=args.start, end=args.end,
                          seed=args.seed, config=args.config)
    best = optimizer.best_feasible(trace)
    if best.found:
        line = (f'best feasible obj={_fmt7(best.obj_best)} x=('
                + ', '.join(_fmt7(vv) for vv in best.x_best) + ')')
    else:
        line = 'no feasible point found'

    if args.out is not None:
        trace.to_csv(args.out)
        print(line)
    else:
        trace.to_csv(sys.stdout)
        print(line, file=sys.stderr)
    log.info(f'{spec.name}: {trace.n_evaluations} evaluations')
    return EXIT_OK


def cmd_bench(args):
    spec = get_spec(args.name)
    results = bench.run_reps(args.name, start=args.start, end=args.end,
                             n_reps=args.reps, base_seed=args.seed,
                             config=args.config, n_workers=args.workers)
    report = bench.make_report(args.name, args.start, args.end, args.reps,
                               args.seed, results)
    summary = bench.summarize_reps(results)
    text = ('no rep found a feasible point' if summary is None
            else summary.to_text())

    if args.out is not None:
        reps = bench.reps_frame(results, args.seed, spec.dim)
        bench.write_report(report, reps, args.out)
        print(text)
    else:
        print(json.dumps(report, indent=2))
        print(text, file=sys.stderr)
    return EXIT_OK


def cmd_grid(args):
    df = grid.make_grid(args.name, args.n, _parse_fixed(args.fix))
    df.to_csv(args.out if args.out is not None else sys.stdout,
              index=False, float_format='%.17g')
    return EXIT_OK


def make_parser():
    parser = _Parser(prog='xcbo', description=__doc__.splitlines()[0])
    parser.add_argument('--version', action='version', version=__version__)
    parser.add_argument('--config', default=None,
                        help='YAML file overriding the numerical settings')
    parser.add_argument('-v', '--verbose', action='count', default=0)
    sub = parser.add_subparsers(dest='command', required=True,
                                parser_class=_Parser)

    pp = sub.add_parser('list', help='List the computer models')
    pp.set_defaults(func=cmd_list)

    pp = sub.add_parser('describe', help='Show the card of a computer model')
    pp.add_argument('name')
    pp.set_defaults(func=cmd_describe)

    pp = sub.add_parser('eval', help='Evaluate a computer model at one input')
    pp.add_argument('name')
    pp.add_argument('--x', required=True,
                    help='Comma separated coordinates, e.g. --x -1,2.5')
    pp.set_defaults(func=cmd_eval)

    pp = sub.add_parser('optimize', help='Run the EFI optimizer once')
    pp.add_argument('name')
    pp.add_argument('--start', type=int, default=10)
    pp.add_argument('--end', type=int, default=300)
    pp.add_argument('--seed', type=int, default=0)
    pp.add_argument('--out', default=None, help='Trace CSV file')
    pp.set_defaults(func=cmd_optimize)

    pp = sub.add_parser('bench', help='Monte Carlo replication of the optimizer')
    pp.add_argument('name')
    pp.add_argument('--reps', type=int, default=30)
    pp.add_argument('--start', type=int, default=10)
    pp.add_argument('--end', type=int, default=300)
    pp.add_argument('--seed', type=int, default=0)
    pp.add_argument('--workers', type=int, default=None)
    pp.add_argument('--out', default=None,
                    help='Prefix of the <out>.json and <out>_reps.csv files')
    pp.set_defaults(func=cmd_bench)

    pp = sub.add_parser('grid', help='Evaluate a computer model on a grid')
    pp.add_argument('name')
    pp.add_argument('--n', type=int, default=200, help='Points per axis')
    pp.add_argument('--fix', action='append', metavar='x<i>=<value>',
                    help='Pin a coordinate (repeatable)')
    pp.add_argument('--out', default=None, help='CSV file')
    pp.set_defaults(func=cmd_grid)

    return parser


def _join_coord_values(argv):
    # `--x -1,0` would otherwise read -1,0 as an option
    out = []
    it = iter(argv)
    for arg in it:
        if arg == '--x':
            value = next(it, None)
            out.append(arg if value is None else f'--x={value}')
        else:
            out.append(arg)
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = make_parser().parse_args(_join_coord_values(argv))
    logging.basicConfig(
        stream=sys.stderr,
        level=max(logging.WARNING - 10 * args.verbose, logging.DEBUG),
        format='%(levelname)s %(name)s: %(message)s')

    try:
        if args.config is not None:
            args.config = load_config(args.config)
        return args.func(args)
    except UnknownFunction as err:
        print(str(err), file=sys.stderr)
        return EXIT_USAGE
    except (InvalidInput, OutOfDomain, GridError) as err:
        print(str(err), file=sys.stderr)
        return EXIT_INPUT
    except (XcboError, np.linalg.LinAlgError) as err:
        print(f'{type(err).__name__}: {err}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
