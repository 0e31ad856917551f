#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# sgm.py
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
import math

import numpy as np

from pynum.core.method import Method
from pynum.methods.iterations import problem_iterations
from pynum.oracle.dual import primal_response, stochastic_response
from pynum.utils.rng import substream

logger = logging.getLogger(__name__)

VARIANTS = ('V1', 'V2')


class StochasticSubgradientMethod(Method):
    """
    Primal-dual stochastic projected subgradient method

    At each step one user xi is drawn uniformly, reports its rate for the
    current prices, and the prices move along b - n C_xi x_xi. The step size
    is beta = R / (M sqrt(N)) with N = max_iter.

    Parameters
    ----------
    problem: NetworkProblem
    config: SolverConfig
    variant: str
        'V1' averages the full responses x(lambda^t); 'V2' averages the
        one-user estimates n x_xi e_xi, which only needs the drawn user's rate.

    Notes
    -----
    Both variants consume the random stream identically, so they produce the
    same dual iterates.
    """

    METHOD_ID = 'sgm'

    def __init__(self, problem, config, variant='V2'):
        if variant not in VARIANTS:
            raise LookupError('Unknown variant "{}", expected one of {}'.format(variant, VARIANTS))
        self.variant = variant
        super().__init__(problem, config)

    @property
    def method_id(self):
        return 'sgm' + self.variant[1]

    def scheduled_iterations(self):
        """Heuristic N of the high-probability bound, reported only"""
        return problem_iterations('sgm', self.problem, self.config, self.constants)

    def step_size(self, N):
        return self.config.R/(self.constants.M*math.sqrt(N))

    def run(self):
        problem = self.problem
        n = problem.n
        N = self.config.max_iter
        beta = self.step_size(N)
        logger.info('{}: M = {}, beta = {}, N = {}'.format(self.method_id, self.constants.M, beta, N))
        self._start_clock()
        rng = substream(self.config.seed, 'solver')

        lam = np.zeros(problem.m)
        lam_sum = np.zeros(problem.m)
        x_sum = np.zeros(n)
        executed = N
        for t in range(N):
            k = int(rng.integers(n))
            x_k, g = stochastic_response(problem, lam, k)
            lam_sum += lam
            if self.variant == 'V1':
                x = primal_response(problem, lam)
                x_sum += x
            else:
                x = None
                x_sum[k] += n*x_k
            if self.due(t, t == N - 1):
                if x is None:
                    x = primal_response(problem, lam)
                record = self.record(t, lam, x, x_sum/(t + 1))
                if self.reached_target(record):
                    executed = t + 1
                    break
            lam = np.maximum(lam - beta*g, 0.)
        self.extras['lam_avg'] = lam_sum/executed
        self.extras['beta'] = beta
        self.extras['heuristic_iterations'] = self.scheduled_iterations()
        return self.report(lam, x_sum/executed, executed, N)


def solve_sgm(problem, config, variant='V2'):
    """Runs the stochastic subgradient method, see :class:`StochasticSubgradientMethod`"""
    return StochasticSubgradientMethod(problem, config, variant).run()
