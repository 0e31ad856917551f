#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# method.py
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

import logging
import time

import numpy as np

from pynum.core.report import HistoryRecord, SolverReport
from pynum.exceptions import UnsupportedProblemError
from pynum.metrics.quality import feasibility_violation
from pynum.oracle.constants import oracle_constants
from pynum.oracle.dual import lagrangian, utility_value

logger = logging.getLogger(__name__)


class Method(object):
    """Serves as a base class for all methods

    Attributes
    ----------
    METHOD_ID : str, class attribute
        identifier of the method in reports and on the command line
    REQUIRES_L : bool, class attribute
        whether the method needs a Lipschitz dual gradient
    problem : NetworkProblem
    config : SolverConfig
    constants : OracleConstants
    history : list of HistoryRecord

    Methods
    -------
    run()
        executes the method and returns a SolverReport
    scheduled_iterations()
        theoretical iteration count of the method
    """

    METHOD_ID = ''
    REQUIRES_L = False

    def __init__(self, problem, config):
        self.problem = problem
        self.config = config
        problem.require_utilities()
        self.constants = oracle_constants(problem, M=config.M, L=config.L)
        if self.__class__.REQUIRES_L and self.constants.L is None:
            raise UnsupportedProblemError(
                '{} needs strongly concave utilities, got {}'.format(self.method_id, problem.utilities))
        self.history = []
        self.extras = {}
        self._start = None

    def __str__(self):
        return '{} on {}'.format(self.method_id, self.problem)

    @property
    def method_id(self):
        return self.__class__.METHOD_ID

    def scheduled_iterations(self):
        raise NotImplementedError

    def iteration_budget(self):
        """Scheduled N capped by max_iter"""
        N = self.scheduled_iterations()
        if N > self.config.max_iter:
            logger.info('{}: scheduled N = {} capped to max_iter = {}'.format(
                self.method_id, N, self.config.max_iter))
        return min(N, self.config.max_iter)

    def run(self):
        raise NotImplementedError

    def _start_clock(self):
        self.history = []
        self._start = time.perf_counter()

    def _elapsed_ms(self):
        return 1e3*(time.perf_counter() - self._start)

    def due(self, t, last):
        return last or t % self.config.record_every == 0

    def record(self, t, lam, x, x_hat=None):
        """Appends a history record

        Parameters
        ----------
        t: int
            iteration index
        lam: numpy.ndarray
            dual iterate
        x: numpy.ndarray
            primal response x(lam), gives the dual value
        x_hat: numpy.ndarray, optional
            current primal estimate, gives the gap and the violation
        """
        phi = lagrangian(self.problem, lam, x)
        gap = feas = None
        if x_hat is not None:
            utility = utility_value(self.problem, x_hat)
            if np.isfinite(utility):
                gap = phi - utility
            feas = feasibility_violation(self.problem, x_hat)
        record = HistoryRecord(t, phi, gap, feas, self._elapsed_ms(), lam)
        self.history.append(record)
        logger.debug('{} {}'.format(self.method_id, record))
        return record

    def reached_target(self, record):
        """Early exit test on the measured gap and violation"""
        if not self.config.early_stop or record.gap is None:
            return False
        done = abs(record.gap) <= self.config.eps and record.feas <= self.config.eps/self.config.R
        if done:
            logger.warning('{}: target reached at iteration {}, stopping early'.format(
                self.method_id, record.iteration))
            self.extras['stopped_early'] = True
        return done

    def report(self, lam, x, iterations, scheduled):
        self.extras.setdefault('stopped_early', False)
        report = SolverReport(
            self.method_id, lam, np.maximum(x, 0.), iterations, scheduled, self.history,
            self.config, constants=self.constants.to_dict(), wall_ms=self._elapsed_ms(),
            extras=self.extras,
        )
        logger.info('{}: {} iterations in {:.1f} ms'.format(report.method, iterations, report.wall_ms))
        return report
