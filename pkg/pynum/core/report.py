#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# report.py
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

import csv
import json
import os

import numpy as np

from pynum.core.config import SolverConfig
from pynum.metrics.quality import QualityAssessment

CSV_HEADER = ['iter', 'phi', 'gap', 'feas', 'elapsed_ms']


def _list(value):
    return None if value is None else np.asarray(value, dtype=float).tolist()


def _array(value):
    return None if value is None else np.array(value, dtype=float)


def _cell(value):
    return '' if value is None else repr(float(value))


class HistoryRecord(object):
    """One recorded iteration

    Attributes
    ----------
    iteration: int
    phi: float
        dual value at the recorded dual iterate
    gap: float or None
        phi minus the utility of the current primal estimate
    feas: float or None
        feasibility violation of the current primal estimate
    elapsed_ms: float
        time since the start of the run
    lam: numpy.ndarray
        recorded dual iterate
    """

    __slots__ = ('iteration', 'phi', 'gap', 'feas', 'elapsed_ms', 'lam')

    def __init__(self, iteration, phi, gap, feas, elapsed_ms, lam):
        self.iteration = int(iteration)
        self.phi = float(phi)
        self.gap = None if gap is None else float(gap)
        self.feas = None if feas is None else float(feas)
        self.elapsed_ms = float(elapsed_ms)
        self.lam = np.array(lam, dtype=float)

    def __repr__(self):
        return 'HistoryRecord(iter={}, phi={}, gap={}, feas={})'.format(
            self.iteration, self.phi, self.gap, self.feas)

    def to_dict(self):
        return {
            'iter': self.iteration,
            'phi': self.phi,
            'gap': self.gap,
            'feas': self.feas,
            'elapsed_ms': self.elapsed_ms,
            'lam': self.lam.tolist(),
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d['iter'], d['phi'], d.get('gap'), d.get('feas'), d.get('elapsed_ms', 0.), d['lam'])

    def csv_row(self, with_elapsed=True):
        return [str(self.iteration), _cell(self.phi), _cell(self.gap), _cell(self.feas),
                _cell(self.elapsed_ms) if with_elapsed else '']


class SolverReport(object):
    """
    Outcome of a solver run

    Attributes
    ----------
    method: str
        method id
    lam: numpy.ndarray
        final dual point
    x: numpy.ndarray
        recovered primal point
    iterations: int
        iterations executed
    scheduled_iterations: int
        theoretical N given by the method's iteration formula
    history: list of HistoryRecord
        recorded iterations, strictly increasing
    config: SolverConfig
        configuration of the run
    constants: dict
        oracle constants used (L, M, mu)
    wall_ms: float
        wall time of the run
    extras: dict
        method specific outputs: dual average of the stochastic method,
        regularization parameter, exact optimum and early stop flags,
        certificate resolution, message count
    quality: QualityAssessment or None
        final assessment attached by :class:`pynum.core.Solver`
    """

    def __init__(self, method, lam, x, iterations, scheduled_iterations, history, config,
                 constants=None, wall_ms=0., extras=None, quality=None):
        self.method = method
        self.lam = np.array(lam, dtype=float)
        self.x = np.array(x, dtype=float)
        self.iterations = int(iterations)
        self.scheduled_iterations = int(scheduled_iterations)
        self.history = list(history)
        self.config = config
        self.constants = dict(constants or {})
        self.wall_ms = float(wall_ms)
        self.extras = dict(extras or {})
        self.quality = quality

    def __repr__(self):
        return 'SolverReport(method={}, iterations={}/{}, records={})'.format(
            self.method, self.iterations, self.scheduled_iterations, len(self.history))

    @property
    def seed(self):
        return self.config.seed

    def iterates(self):
        """Recorded iteration indices and dual iterates"""
        return [r.iteration for r in self.history], [r.lam for r in self.history]

    def to_dict(self):
        extras = {k: (_list(v) if isinstance(v, np.ndarray) else v) for k, v in self.extras.items()}
        return {
            'method': self.method,
            'lam': self.lam.tolist(),
            'x': self.x.tolist(),
            'iterations': self.iterations,
            'scheduled_iterations': self.scheduled_iterations,
            'seed': self.seed,
            'config': self.config.to_dict(),
            'constants': self.constants,
            'wall_ms': self.wall_ms,
            'extras': extras,
            'quality': None if self.quality is None else self.quality.to_dict(),
            'history': [r.to_dict() for r in self.history],
        }

    @classmethod
    def from_dict(cls, d):
        extras = dict(d.get('extras') or {})
        for key in ('lam_avg', 'lam_last'):
            if extras.get(key) is not None:
                extras[key] = _array(extras[key])
        quality = d.get('quality')
        return cls(
            d['method'], d['lam'], d['x'], d['iterations'], d['scheduled_iterations'],
            [HistoryRecord.from_dict(r) for r in d.get('history', [])],
            SolverConfig().from_dict(d['config']),
            constants=d.get('constants'),
            wall_ms=d.get('wall_ms', 0.),
            extras=extras,
            quality=None if quality is None else QualityAssessment.from_dict(quality),
        )

    def to_json(self, path):
        with open(path, 'w') as fh:
            json.dump(self.to_dict(), fh, indent=1)
            fh.write('\n')

    @classmethod
    def load(cls, path):
        """Reads a report written by :meth:`to_json`

        Raises
        ------
        IOError
            If the file does not exist.
        """
        if not os.path.exists(path):
            raise IOError('Unable to find report file "{}"'.format(path))
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def write_csv(self, path, with_elapsed=True):
        """Writes the history as `iter,phi,gap,feas,elapsed_ms` rows

        Empty cells stand for quantities not available at that iteration.
        """
        with open(path, 'w', newline='') as fh:
            writer = csv.writer(fh, lineterminator='\n')
            writer.writerow(CSV_HEADER)
            for record in self.history:
                writer.writerow(record.csv_row(with_elapsed))
