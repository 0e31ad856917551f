#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# rgem.py
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
from collections import namedtuple

import numpy as np

from pynum.core.method import Method
from pynum.methods.iterations import problem_iterations, rgem_constants
from pynum.oracle.dual import best_response, primal_response, user_price
from pynum.utils.rng import substream

logger = logging.getLogger(__name__)


class RGEMParameters(namedtuple('RGEMParameters', ['alpha_bar', 'alpha', 'eta', 'tau'])):
    """Step parameters of the random gradient extrapolation method

    Averaging weights are theta_t = alpha_bar^(-t).
    """

    __slots__ = ()

    def theta(self, t):
        return self.alpha_bar**(-t)


def rgem_parameters(n, L, delta):
    """alpha_bar = 1 - 1/(n + sqrt(n^2 + 16 n L / delta)), alpha = n alpha_bar,
    eta = delta alpha_bar / (1 - alpha_bar), tau = 1/(n (1 - alpha_bar)) - 1
    """
    alpha_bar = 1. - 1./(n + math.sqrt(n**2 + 16.*n*L/delta))
    return RGEMParameters(
        alpha_bar,
        n*alpha_bar,
        delta*alpha_bar/(1. - alpha_bar),
        1./(n*(1. - alpha_bar)) - 1.,
    )


class RandomGradientExtrapolation(Method):
    """
    Random gradient extrapolation on the regularized dual

    The dual is regularized by delta/2 ||lam||^2 with delta = eps / (8 R^2).
    Each user k keeps a local price vector and the last gradient term
    y_k = b - n C_k x_k it produced; every iteration extrapolates the sum of
    the y_k, takes a proximal step on the prices, and refreshes the local
    prices and gradient term of one random user only. The output is the
    theta-weighted average of the price iterates and its primal response.

    Notes
    -----
    The extrapolated sum is kept incrementally: only the user drawn at the
    previous iteration changed its y, so the sum of the extrapolated terms is
    the running sum of y plus alpha times that user's last change.
    """

    METHOD_ID = 'rgem'
    REQUIRES_L = True

    def regularization(self):
        return rgem_constants(self.problem.n, self.constants.L, self.config.R, self.config.eps,
                              float(self.problem.b.dot(self.problem.b)))

    def scheduled_iterations(self):
        return problem_iterations('rgem', self.problem, self.config, self.constants)

    def run(self):
        problem = self.problem
        n, b = problem.n, problem.b
        delta, A = self.regularization()
        params = rgem_parameters(n, self.constants.L, delta)
        N_scheduled = self.scheduled_iterations()
        N = self.iteration_budget()
        logger.info('rgem: L = {}, delta = {}, {}, N = {}'.format(self.constants.L, delta, params, N))
        self._start_clock()
        rng = substream(self.config.seed, 'solver')

        lam = np.zeros(problem.m)
        local = np.zeros((n, problem.m))
        y = np.zeros((n, problem.m))
        y_sum = np.zeros(problem.m)
        last_change = np.zeros(problem.m)
        lam_bar = np.zeros(problem.m)
        weight = 0.
        executed = N
        for t in range(1, N + 1):
            k = int(rng.integers(n))
            extrapolated = y_sum + params.alpha*last_change
            lam = np.maximum(params.eta*lam - extrapolated/n, 0.)/(delta + params.eta)
            local[k] = (lam + params.tau*local[k])/(1. + params.tau)
            links = problem.column(k)
            x_k = best_response(problem, k, user_price(local[k], links))
            y_new = np.array(b)
            y_new[links] -= n*x_k
            last_change = y_new - y[k]
            y[k] = y_new
            y_sum += last_change
            weight = 1. + params.alpha_bar*weight
            lam_bar = lam_bar + (lam - lam_bar)/weight
            if self.due(t, t == N):
                x_bar = primal_response(problem, lam_bar)
                record = self.record(t, lam, primal_response(problem, lam), x_bar)
                if self.reached_target(record):
                    executed = t
                    break
        self.extras['delta'] = delta
        self.extras['A'] = A
        self.extras['lam_last'] = lam
        return self.report(lam_bar, primal_response(problem, lam_bar), executed, N_scheduled)


def solve_rgem(problem, config):
    """Runs random gradient extrapolation, see :class:`RandomGradientExtrapolation`"""
    return RandomGradientExtrapolation(problem, config).run()
