#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# ellipsoid.py
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
from pynum.exceptions import DegenerateCertificateError
from pynum.methods.certificate import build_certificate, recover_primal_from_certificate
from pynum.methods.iterations import problem_iterations
from pynum.oracle.dual import lagrangian, loads, primal_response

logger = logging.getLogger(__name__)


def volume_ratio(m):
    """det(B_{t+1}) / det(B_t) of one ellipsoid step in dimension m"""
    if m == 1:
        return 0.5
    return (m/math.sqrt(m**2 - 1.))**(m - 1)*m/(m + 1.)


def ellipsoid_step(B, lam, g):
    """Cuts the ellipsoid {lam + B u, ||u|| <= 1} by {<g, . - lam> <= 0}

    Returns the matrix and the centre of the smallest ellipsoid containing the
    kept half. In dimension 1 the step halves the interval.
    """
    m = lam.size
    q = B.T.dot(g)
    p = q/np.linalg.norm(q)
    Bp = B.dot(p)
    if m == 1:
        return B/2., lam - Bp/2.
    c = m/math.sqrt(m**2 - 1.)
    d = m/(m + 1.)
    return c*B + (d - c)*np.outer(Bp, p), lam - Bp/(m + 1.)


def domain_cut(lam, R):
    """Separator of lam from {lam >= 0, ||lam|| <= 2R}, None inside

    A negative point is cut by -e_j on its most negative component, a point
    beyond the ball by lam / ||lam||.
    """
    j = int(np.argmin(lam))
    if lam[j] < 0:
        e = np.zeros(lam.size)
        e[j] = -1.
        return e
    norm = np.linalg.norm(lam)
    if norm > 2.*R:
        return lam/norm
    return None


class EllipsoidTrace(object):
    """
    Protocol of an ellipsoid run

    Attributes
    ----------
    R: float
        radius parameter, the domain is {lam >= 0, ||lam|| <= 2R}
    matrices, centres, cuts: list of numpy.ndarray
        B_t, lam^t and the cut vector of every step t
    productive: list of bool
        whether lam^t lay in the domain, in which case the cut is the dual gradient
    responses: dict
        x(lam^t) for the productive steps
    B_final, centre_final: numpy.ndarray
        ellipsoid after the last step
    """

    def __init__(self, R, m):
        self.R = R
        self.m = m
        self.matrices = []
        self.centres = []
        self.cuts = []
        self.productive = []
        self.responses = {}
        self.B_final = None
        self.centre_final = None

    def __len__(self):
        return len(self.cuts)

    def append(self, B, lam, g, x=None):
        if x is not None:
            self.responses[len(self.cuts)] = x
        self.matrices.append(B)
        self.centres.append(lam)
        self.cuts.append(g)
        self.productive.append(x is not None)

    @property
    def in_domain(self):
        """Indices I_N of the productive steps"""
        return [t for t, p in enumerate(self.productive) if p]


class EllipsoidMethod(Method):
    """Ellipsoid method on the dual over {lam >= 0, ||lam|| <= 2R}

    Starting from the ball of radius 2R, each step cuts the current ellipsoid
    through its centre by the dual gradient (productive step) or by a
    separator of the domain. The primal point is recovered from the accuracy
    certificate of the run.
    """

    METHOD_ID = 'ellipsoid'

    def scheduled_iterations(self):
        return problem_iterations('ellipsoid', self.problem, self.config, self.constants)

    def trace_run(self):
        problem, R = self.problem, self.config.R
        N_scheduled = self.scheduled_iterations()
        N = self.iteration_budget()
        logger.info('ellipsoid: M = {}, N = {}'.format(self.constants.M, N))
        self._start_clock()

        trace = EllipsoidTrace(R, problem.m)
        B = 2.*R*np.eye(problem.m)
        lam = np.zeros(problem.m)
        self.extras['exact_optimum'] = False
        executed = N
        for t in range(N):
            g = domain_cut(lam, R)
            x = None
            if g is None:
                x = primal_response(problem, lam)
                g = problem.b - loads(problem, x)
            trace.append(B, lam, g, x)
            exact = x is not None and not np.any(g)
            last = t == N - 1 or exact
            if self.due(t, last) and (last or lam.min() >= 0):
                self.record(t, lam, primal_response(problem, lam) if x is None else x)
            if exact:
                logger.info('ellipsoid: zero gradient at iteration {}'.format(t))
                self.extras['exact_optimum'] = True
                executed = t + 1
                break
            B, lam = ellipsoid_step(B, lam, g)
        trace.B_final = B
        trace.centre_final = lam
        return trace, executed, N_scheduled

    def best_point(self, trace):
        """Productive centre with the lowest dual value"""
        steps = trace.in_domain
        if not steps:
            return trace.centre_final
        values = [lagrangian(self.problem, trace.centres[t], trace.responses[t]) for t in steps]
        return trace.centres[steps[int(np.argmin(values))]]

    def run_with_trace(self):
        trace, executed, N_scheduled = self.trace_run()
        lam = self.best_point(trace)
        self.extras['lam_last'] = trace.centre_final
        try:
            weights = build_certificate(trace)
            x_hat = recover_primal_from_certificate(trace, weights)
            self.extras['certificate_resolution'] = weights.resolution
        except (DegenerateCertificateError, ValueError) as e:
            logger.warning('ellipsoid: no certificate ({}), falling back to x(lambda)'.format(e))
            x_hat = primal_response(self.problem, lam)
            self.extras['certificate_resolution'] = None
        return self.report(lam, x_hat, executed, N_scheduled), trace

    def run(self):
        return self.run_with_trace()[0]


def solve_ellipsoid(problem, config):
    """Runs the ellipsoid method

    Returns
    -------
    report: SolverReport
    trace: EllipsoidTrace
    """
    return EllipsoidMethod(problem, config).run_with_trace()


def certify(problem, config):
    """Ellipsoid run, certificate and primal recovery in one call

    Returns
    -------
    report: SolverReport
    trace: EllipsoidTrace
    weights: CertificateWeights
    x_hat: numpy.ndarray

    Raises
    ------
    DegenerateCertificateError, EmptyTraceError
        If the run does not yield a certificate.
    """
    report, trace = solve_ellipsoid(problem, config)
    weights = build_certificate(trace)
    return report, trace, weights, recover_primal_from_certificate(trace, weights)
