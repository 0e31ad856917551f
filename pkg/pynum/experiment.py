#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# experiment.py
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

"""Benchmark harness.

An experiment specification (YAML or JSON) lists instances, methods,
accuracies and seeds::

    output: results/table1
    table: quadratic-table
    instances:
      - {network: uniform, m: 2, n: 1500, utilities: quadratic, seed: 0}
    methods: [fgm, rgem]
    eps: [0.01]
    seeds: [0]
    R: 100
    max_iter: 20000
    targets: {fgm: 350}
    check_factor: 4

Every (instance, method, eps, seed) cell writes its report as JSON and its
history as CSV; the summary is rendered as an aligned text table with a CSV
twin. Deterministic methods run once per cell whatever the seed list.
"""

import csv
import json
import logging
import os
import tempfile

import numpy as np
import yaml

from pynum.core.config import SolverConfig
from pynum.core.solver import Solver
from pynum.exceptions import PynumError, SpecError
from pynum.methods import METHODS
from pynum.metrics.bruteforce import MAX_EXACT_LINKS, exact_quadratic_solve
from pynum.metrics.quality import iterations_to_target
from pynum.problem.generators import FAMILIES, NETWORKS, make_instance
from pynum.problem.io import load_problem
from pynum.problem.network import ProblemConfig
from pynum.problem.utilities import QuadraticUtility

logger = logging.getLogger(__name__)

STOCHASTIC_METHODS = ('sgm1', 'sgm2', 'rgem')
LAYOUTS = {
    'quadratic-table': 'Quadratic utilities: iterations and time to reach eps',
    'log-table': 'Logarithmic utilities: iterations and time to reach eps',
}
SUMMARY_FIELDS = ['instance', 'm', 'n', 'eps', 'method', 'seed', 'iterations', 'to_eps', 'wall_ms',
                  'final_gap', 'final_feas', 'error']

PRESETS = {
    'table1': {
        'output': 'results/table1',
        'table': 'quadratic-table',
        'instances': [
            {'network': 'uniform', 'm': 2, 'n': 1500, 'utilities': 'quadratic', 'seed': 0},
            {'network': 'uniform', 'm': 5, 'n': 1500, 'utilities': 'quadratic', 'seed': 0},
        ],
        'methods': ['fgm', 'rgem'],
        'eps': [0.01],
        'seeds': [0, 1, 2],
        'R': 100.,
        'max_iter': 20000,
        'targets': {'fgm': 350},
        'check_factor': 4,
    },
    'table2': {
        'output': 'results/table2',
        'table': 'log-table',
        'instances': [
            {'network': 'uniform', 'm': 2, 'n': 1500, 'utilities': 'log', 'seed': 0},
            {'network': 'uniform', 'm': 5, 'n': 1500, 'utilities': 'log', 'seed': 0},
        ],
        'methods': ['ellipsoid', 'sgm2'],
        'eps': [0.01],
        'seeds': [0, 1, 2],
        'R': 250.,
        'max_iter': 20000,
        'method_options': {'sgm2': {'M': 35.}},
        'targets': {'ellipsoid': 40, 'sgm2': 2000},
        'check_factor': 10,
    },
}


def _require(data, key, where):
    if key not in data or data[key] is None:
        raise SpecError('{}{}: missing field'.format(where, key))
    return data[key]


def _positive(value, where):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise SpecError('{}: must be a number, got {!r}'.format(where, value))
    if not value > 0:
        raise SpecError('{}: must be positive, got {}'.format(where, value))
    return value


class InstanceSpec(object):
    """One instance of an experiment: a problem file or a generated network"""

    def __init__(self, data, where):
        if not isinstance(data, dict):
            raise SpecError('{}: must be a mapping'.format(where))
        self.path = data.get('path')
        self.network = data.get('network', 'uniform')
        self.family = data.get('utilities', 'quadratic')
        self.seed = int(data.get('seed', 0))
        self.b_value = _positive(data.get('b', 5.), where + '.b')
        self.sigma = _positive(data.get('sigma', 0.1), where + '.sigma')
        self.R = None if data.get('R') is None else _positive(data['R'], where + '.R')
        if self.path is None:
            if self.network not in NETWORKS:
                raise SpecError('{}.network: unknown network {!r}'.format(where, self.network))
            if self.family not in FAMILIES:
                raise SpecError('{}.utilities: unknown utility family {!r}'.format(where, self.family))
            self.m = int(_positive(_require(data, 'm', where + '.'), where + '.m'))
            self.n = int(_positive(_require(data, 'n', where + '.'), where + '.n'))

    def build(self):
        if self.path is not None:
            problem = load_problem(self.path)
            self.m, self.n = problem.m, problem.n
            return problem
        return make_instance(self.family, self.network, self.m, self.n, self.seed,
                             b_value=self.b_value, sigma=self.sigma)


class ExperimentSpec(object):
    """
    Validated experiment specification

    Attributes
    ----------
    output: str
        results directory
    table: str
        summary layout, 'quadratic-table' or 'log-table'
    instances: list of InstanceSpec
    methods: list of str
    eps: list of float
    seeds: list of int
    R, max_iter, record_every:
        solver parameters shared by all cells
    method_options: dict
        per-method overrides of the solver parameters (M, L, max_iter, ...)
    targets: dict
        method -> iterations expected to reach eps, for the acceptance check
    check_factor: float
        slack allowed over the targets

    Raises
    ------
    SpecError
        With the path of the offending field.
    """

    def __init__(self, data):
        if not isinstance(data, dict):
            raise SpecError('specification: must be a mapping')
        self.output = str(data.get('output', 'results'))
        self.table = data.get('table', 'quadratic-table')
        if self.table not in LAYOUTS:
            raise SpecError('table: unknown layout {!r}, expected one of {}'.format(self.table, ', '.join(LAYOUTS)))
        instances = _require(data, 'instances', '')
        if not isinstance(instances, list) or not instances:
            raise SpecError('instances: at least one instance required')
        self.instances = [InstanceSpec(d, 'instances[{}]'.format(i)) for i, d in enumerate(instances)]
        methods = data.get('methods')
        if not isinstance(methods, list) or not methods:
            raise SpecError('methods: at least one method required')
        for i, method in enumerate(methods):
            if method not in METHODS:
                raise SpecError('methods[{}]: unknown method {!r}'.format(i, method))
        self.methods = list(methods)
        eps = _require(data, 'eps', '')
        eps = eps if isinstance(eps, list) else [eps]
        if not eps:
            raise SpecError('eps: at least one accuracy required')
        self.eps = [_positive(e, 'eps[{}]'.format(i)) for i, e in enumerate(eps)]
        seeds = data.get('seeds', [0])
        if not isinstance(seeds, list) or not seeds:
            raise SpecError('seeds: must be a non-empty list')
        self.seeds = []
        for i, seed in enumerate(seeds):
            if isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
                raise SpecError('seeds[{}]: must be a non-negative integer, got {!r}'.format(i, seed))
            self.seeds.append(seed)
        self.R = _positive(data.get('R', 1.), 'R')
        self.max_iter = int(_positive(data.get('max_iter', 100000), 'max_iter'))
        self.record_every = int(_positive(data.get('record_every', 1), 'record_every'))
        self.method_options = data.get('method_options') or {}
        for method, options in self.method_options.items():
            if method not in METHODS or not isinstance(options, dict):
                raise SpecError('method_options.{}: expected a mapping for a known method'.format(method))
        self.targets = data.get('targets') or {}
        for method, target in self.targets.items():
            _positive(target, 'targets.{}'.format(method))
        self.check_factor = _positive(data.get('check_factor', 4.), 'check_factor')

    @classmethod
    def from_file(cls, path):
        """Reads a YAML (or JSON) specification file

        Raises
        ------
        IOError
            If the file does not exist.
        SpecError
            If the file cannot be parsed or is invalid.
        """
        if not os.path.exists(path):
            raise IOError('Unable to find experiment file "{}"'.format(path))
        with open(path) as fh:
            try:
                data = yaml.safe_load(fh)
            except yaml.YAMLError as e:
                mark = getattr(e, 'problem_mark', None)
                where = 'line {}'.format(mark.line + 1) if mark is not None else path
                raise SpecError('{}: {}'.format(where, getattr(e, 'problem', e)))
        return cls(data)

    def config(self, instance, method, eps, seed):
        options = dict(self.method_options.get(method, {}))
        R = options.pop('R', instance.R if instance.R is not None else self.R)
        options.pop('eps', None)
        options.pop('seed', None)
        options.setdefault('max_iter', self.max_iter)
        options.setdefault('record_every', self.record_every)
        try:
            return SolverConfig.from_problem_config(ProblemConfig(R=R, eps=eps, seed=seed), **options)
        except (TypeError, ValueError) as e:
            raise SpecError('method_options.{}: {}'.format(method, e))

    def cells(self):
        """(instance index, method, eps, seed) in execution order"""
        for i, _ in enumerate(self.instances):
            for method in self.methods:
                for eps in self.eps:
                    seeds = self.seeds if method in STOCHASTIC_METHODS else self.seeds[:1]
                    for seed in seeds:
                        yield i, method, eps, seed


def _atomic_write(path, writer):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix='.tmp')
    os.close(fd)
    try:
        writer(tmp)
        os.replace(tmp, path)
    finally:
        if os.path.exists(tmp):
            os.remove(tmp)


def cell_name(instance, m, n, method, eps, seed):
    return 'i{}_m{}_n{}_{}_eps{:g}_s{}'.format(instance, m, n, method, eps, seed)


def reference_value(problem):
    """Optimal utility when the exact oracle applies, None otherwise"""
    if isinstance(problem.utilities, QuadraticUtility) and problem.m <= MAX_EXACT_LINKS:
        try:
            return exact_quadratic_solve(problem)[1]
        except ValueError as e:
            logger.warning('no exact reference: {}'.format(e))
    return None


def run_cell(problem, config, method, reference=None):
    """Runs one cell and returns its report and summary fields"""
    report = Solver(problem, config, reference).solve(method)
    return report, {
        'iterations': report.iterations,
        'to_eps': iterations_to_target(report, config.eps, reference),
        'wall_ms': report.wall_ms,
        'final_gap': report.quality.duality_gap,
        'final_feas': report.quality.feasibility,
        'error': '',
    }


def run_experiment(spec, out_dir=None):
    """Runs every cell of an experiment

    Parameters
    ----------
    spec: ExperimentSpec or str
        specification or path of a specification file
    out_dir: str, optional
        results directory overriding the specification's

    Returns
    -------
    out_dir: str
        results directory
    rows: list of dict
        one summary row per cell
    """
    if not isinstance(spec, ExperimentSpec):
        spec = ExperimentSpec.from_file(spec)
    out_dir = spec.output if out_dir is None else out_dir
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    problems, references = {}, {}
    for i, method, eps, seed in spec.cells():
        instance = spec.instances[i]
        if i not in problems:
            problems[i] = instance.build()
            references[i] = reference_value(problems[i])
        problem = problems[i]
        row = {'instance': i, 'm': problem.m, 'n': problem.n, 'eps': eps, 'method': method, 'seed': seed,
               'iterations': None, 'to_eps': None, 'wall_ms': None, 'final_gap': None, 'final_feas': None}
        config = spec.config(instance, method, eps, seed)
        try:
            report, fields = run_cell(problem, config, method, references[i])
        except PynumError as e:
            logger.warning('{} on instance {} skipped: {}'.format(method, i, e))
            row['error'] = str(e)
            rows.append(row)
            continue
        row.update(fields)
        rows.append(row)
        name = cell_name(i, problem.m, problem.n, method, eps, seed)
        _atomic_write(os.path.join(out_dir, name + '.json'), report.to_json)
        _atomic_write(os.path.join(out_dir, name + '.csv'), report.write_csv)
        logger.info('{}: {} iterations, {} to eps'.format(name, row['iterations'], row['to_eps']))
    _atomic_write(os.path.join(out_dir, 'summary.csv'), lambda path: write_summary_csv(rows, path))
    text = render_summary(rows, spec)
    _atomic_write(os.path.join(out_dir, 'summary.txt'), lambda path: _write_text(path, text))
    return out_dir, rows


def _write_text(path, text):
    with open(path, 'w', encoding='utf-8') as fh:
        fh.write(text)


def _cell_text(values, stochastic):
    values = [v for v in values if v is not None]
    if not values:
        return '-'
    if stochastic and len(values) > 1:
        return '{:.1f} ± {:.1f}'.format(np.mean(values), np.std(values, ddof=1))
    return '{:g}'.format(values[0]) if isinstance(values[0], float) else str(values[0])


def render_summary(rows, spec):
    """Aligned text table: one line per (instance, eps), iterations and time per method"""
    header = ['network']
    for method in spec.methods:
        header += ['{} iterations'.format(method), '{} time, ms'.format(method)]
    lines = []
    keys = []
    for row in rows:
        key = (row['instance'], row['m'], row['n'], row['eps'])
        if key not in keys:
            keys.append(key)
    for key in keys:
        line = ['m = {}, n = {}, eps = {:g}'.format(key[1], key[2], key[3])]
        for method in spec.methods:
            cell = [r for r in rows if (r['instance'], r['m'], r['n'], r['eps']) == key and r['method'] == method]
            stochastic = method in STOCHASTIC_METHODS
            if cell and all(r['error'] for r in cell):
                line += ['error', 'error']
                continue
            line.append(_cell_text([r['to_eps'] for r in cell], stochastic))
            wall = [r['wall_ms'] for r in cell if r['wall_ms'] is not None]
            line.append(_cell_text([float('{:.1f}'.format(w)) for w in wall], stochastic))
        lines.append(line)
    widths = [max(len(row[c]) for row in [header] + lines) for c in range(len(header))]
    out = [LAYOUTS[spec.table], '']
    for row in [header] + lines:
        out.append(' | '.join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if row is header:
            out.append('-+-'.join('-'*w for w in widths))
    return '\n'.join(out) + '\n'


def write_summary_csv(rows, path):
    with open(path, 'w', newline='') as fh:
        writer = csv.DictWriter(fh, fieldnames=SUMMARY_FIELDS, lineterminator='\n')
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ('' if row.get(k) is None else row[k]) for k in SUMMARY_FIELDS})


def check_results(rows, spec):
    """Compares iterations to eps with the targets of the specification

    Returns
    -------
    list of str
        one message per failing cell, empty when the check passes
    """
    failures = []
    for row in rows:
        target = spec.targets.get(row['method'])
        if target is None:
            continue
        limit = spec.check_factor*float(target)
        if row['error']:
            failures.append('{} on m={}, n={}: {}'.format(row['method'], row['m'], row['n'], row['error']))
        elif row['to_eps'] is None or row['to_eps'] > limit:
            failures.append('{} on m={}, n={}, seed {}: {} iterations to eps, limit {:g}'.format(
                row['method'], row['m'], row['n'], row['seed'], row['to_eps'], limit))
    return failures


def preset(name):
    """Built-in desk-scale specification `name`

    Raises
    ------
    LookupError
        If there is no such preset.
    """
    if name not in PRESETS:
        raise LookupError('Unknown preset "{}", expected one of {}'.format(name, ', '.join(PRESETS)))
    return ExperimentSpec(json.loads(json.dumps(PRESETS[name])))
