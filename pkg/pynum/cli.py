#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# cli.py
#
# This file is part of pynum, a software distributed under the MIT license.
#
# Copyright (c) 2018 The pynum authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#

"""pynum: dual methods for network utility maximization.

Usage:
  pynum generate --network=<net> --utilities=<family> --m=<m> --n=<n> --out=<file> [options]
  pynum solve <problem> --method=<id> [--out=<path>] [options]
  pynum bench (<spec> | --preset=<name>) [--out=<dir>] [--check] [-v]
  pynum certify <problem> [--out=<path>] [options]
  pynum distributed <problem> --method=<id> [--messages=<file>] [--out=<path>] [options]
  pynum plot <report>... --out=<file> [-v]
  pynum (-h | --help)
  pynum --version

Options:
  --method=<id>        fgm, sgm1, sgm2, ellipsoid or rgem
  --eps=<eps>          target accuracy [default: 0.01]
  --R=<R>              bound on the norm of an optimal dual point [default: 1]
  --seed=<seed>        random seed [default: 0]
  --max-iter=<N>       cap on the number of iterations [default: 100000]
  --record-every=<k>   history stride [default: 1]
  --M=<M>              override of the dual gradient bound
  --b=<b>              capacity of the uniform network [default: 5]
  --sigma=<sigma>      curvature factor of quadratic utilities [default: 0.1]
  --out=<path>         output file or directory
  --format=<fmt>       csv or json [default: json]
  --messages=<file>    dump the message log as CSV
  --preset=<name>      built-in experiment, table1 or table2
  --check              compare iterations to eps with the experiment targets
  -v --verbose         debug logging
  -h --help            show this screen
  --version            show version

Exit status is 2 for an invalid problem or experiment file, 3 for a solver
error and 4 when `bench --check` fails.
"""

import logging
import os
import sys

from docopt import docopt

from pynum import __version__
from pynum.core.config import SolverConfig
from pynum.core.report import SolverReport
from pynum.core.solver import Solver
from pynum.distributed.simulation import DistributedSimulation, compare_traces
from pynum.exceptions import ProblemFormatError, ProblemValidationError, PynumError, SpecError
from pynum.experiment import ExperimentSpec, check_results, preset, run_experiment
from pynum.problem.generators import make_instance
from pynum.problem.io import load_problem, save_problem
from pynum.problem.network import ProblemConfig
from pynum.utils.plot import plot_convergence

logger = logging.getLogger('pynum')

EXIT_SPEC = 2
EXIT_SOLVER = 3
EXIT_CHECK = 4


def setup_logging(verbose):
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
    logger.handlers = [handler]
    logger.setLevel(logging.DEBUG if verbose else logging.INFO)


def solver_config(args):
    try:
        setup = ProblemConfig(R=args['--R'], eps=args['--eps'], seed=int(args['--seed']))
        return SolverConfig.from_problem_config(
            setup, max_iter=int(args['--max-iter']), record_every=int(args['--record-every']), M=args['--M'])
    except ValueError as e:
        raise SpecError('options: {}'.format(e))


def write_report(report, out, fmt):
    if out is None:
        print(report)
        print(report.quality)
        return
    if fmt == 'csv':
        report.write_csv(out)
    elif fmt == 'json':
        report.to_json(out)
    else:
        raise SpecError('--format: expected csv or json, got {!r}'.format(fmt))
    logger.info('report written to {}'.format(out))


def cmd_generate(args):
    try:
        problem = make_instance(args['--utilities'], args['--network'], int(args['--m']), int(args['--n']),
                                int(args['--seed']), b_value=float(args['--b']), sigma=float(args['--sigma']))
    except LookupError as e:
        raise SpecError('options: {}'.format(e.args[0]))
    except ValueError as e:
        raise SpecError('options: {}'.format(e))
    save_problem(problem, args['--out'])
    logger.info('{} written to {}'.format(problem, args['--out']))


def cmd_solve(args):
    report = Solver(load_problem(args['<problem>']), solver_config(args)).solve(args['--method'])
    write_report(report, args['--out'], args['--format'])


def cmd_certify(args):
    report, trace, weights, x_hat = Solver(load_problem(args['<problem>']), solver_config(args)).certify()
    logger.info('{} over {} productive steps'.format(weights, len(weights.xi)))
    report.extras['certificate_resolution'] = weights.resolution
    report.extras['x_hat'] = x_hat.tolist()
    write_report(report, args['--out'], args['--format'])


def cmd_distributed(args):
    problem = load_problem(args['<problem>'])
    config = solver_config(args)
    method = args['--method']
    simulation = DistributedSimulation(problem, config, method, keep_log=args['--messages'] is not None)
    report, count = simulation.run()
    if args['--messages']:
        simulation.bus.write_csv(args['--messages'])
    reference = Solver(problem, config).solve(report.method)
    deviation = compare_traces(report, reference)
    logger.info('{} messages, largest deviation from the centralized run {:.3e}'.format(count, deviation))
    report.extras['deviation'] = deviation
    write_report(report, args['--out'], args['--format'])


def cmd_bench(args):
    spec = preset(args['--preset']) if args['--preset'] else ExperimentSpec.from_file(args['<spec>'])
    out_dir, rows = run_experiment(spec, args['--out'])
    with open(os.path.join(out_dir, 'summary.txt'), encoding='utf-8') as fh:
        print(fh.read())
    if args['--check']:
        failures = check_results(rows, spec)
        for failure in failures:
            logger.error(failure)
        if failures:
            return EXIT_CHECK
    return 0


def cmd_plot(args):
    reports = [SolverReport.load(path) for path in args['<report>']]
    plot_convergence(reports, args['--out'])
    logger.info('plot written to {}'.format(args['--out']))


COMMANDS = {
    'generate': cmd_generate,
    'solve': cmd_solve,
    'bench': cmd_bench,
    'certify': cmd_certify,
    'distributed': cmd_distributed,
    'plot': cmd_plot,
}


def main(argv=None):
    args = docopt(__doc__, argv=argv, version='pynum {}'.format(__version__))
    setup_logging(args['--verbose'])
    command = next(name for name in COMMANDS if args[name])
    try:
        status = COMMANDS[command](args)
    except (SpecError, ProblemFormatError, ProblemValidationError) as e:
        logger.error(str(e))
        return EXIT_SPEC
    except LookupError as e:
        logger.error(e.args[0])
        return EXIT_SPEC
    except (IOError, PynumError) as e:
        logger.error(str(e))
        return EXIT_SPEC if isinstance(e, IOError) else EXIT_SOLVER
    return status or 0


if __name__ == '__main__':
    sys.exit(main())
