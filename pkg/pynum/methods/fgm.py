#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# fgm.py
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

import numpy as np

from pynum.core.method import Method
from pynum.methods.iterations import problem_iterations
from pynum.oracle.dual import loads, primal_response

logger = logging.getLogger(__name__)


def fgm_coefficients(t):
    """Step weights of iteration t

    Returns
    -------
    alpha: float
        (t + 1) / 2
    A: float
        (t + 1) (t + 2) / 4, the sum of alpha_0..alpha_t
    tau: float
        2 / (t + 3) = alpha_{t+1} / A_{t+1}
    """
    return (t + 1)/2., (t + 1)*(t + 2)/4., 2./(t + 3)


class FastGradientMethod(Method):
    """Primal-dual fast gradient method on the smooth dual

    Each iteration takes a projected gradient step y from the current point,
    a projected step z from the starting point along the weighted sum of all
    past gradients, and moves to their convex combination. The primal
    estimate is the alpha-weighted average of the responses x(lambda^t).

    Notes
    -----
    Needs a Lipschitz dual gradient, hence quadratic utilities.
    """

    METHOD_ID = 'fgm'
    REQUIRES_L = True

    def scheduled_iterations(self):
        return problem_iterations('fgm', self.problem, self.config, self.constants)

    def starting_point(self):
        if self.config.lambda0 is None:
            return np.zeros(self.problem.m)
        lam0 = np.maximum(self.config.lambda0, 0.)
        if lam0.shape != (self.problem.m,):
            raise ValueError('lambda0 has {} entries, the network has {} links'.format(lam0.size, self.problem.m))
        if np.linalg.norm(lam0) > self.config.R:
            logger.warning('||lambda0|| exceeds R, the iteration bound does not apply')
        return lam0

    def run(self):
        problem, L = self.problem, self.constants.L
        N_scheduled = self.scheduled_iterations()
        N = self.iteration_budget()
        logger.info('fgm: L = {}, N = {}'.format(L, N))
        self._start_clock()

        lam0 = self.starting_point()
        lam = lam0.copy()
        grad_sum = np.zeros(problem.m)
        x_hat = np.zeros(problem.n)
        A_prev = 0.
        for t in range(N + 1):
            alpha, A, tau = fgm_coefficients(t)
            x = primal_response(problem, lam)
            x_hat = (A_prev*x_hat + alpha*x)/A
            A_prev = A
            if self.due(t, t == N):
                record = self.record(t, lam, x, x_hat)
                if self.reached_target(record):
                    N = t
                    break
            if t == N:
                break
            g = problem.b - loads(problem, x)
            y = np.maximum(lam - g/L, 0.)
            grad_sum += alpha*g
            z = np.maximum(lam0 - grad_sum/L, 0.)
            lam = tau*z + (1. - tau)*y
        return self.report(lam, x_hat, N, N_scheduled)


def solve_fgm(problem, config):
    """Runs the fast gradient method, see :class:`FastGradientMethod`"""
    return FastGradientMethod(problem, config).run()
