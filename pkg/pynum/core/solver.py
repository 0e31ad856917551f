#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# solver.py
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

import pynum.methods as methods
from pynum.exceptions import UnsupportedProblemError
from pynum.metrics.quality import assess
from pynum.problem.io import load_problem

logger = logging.getLogger(__name__)


class Solver:
    """
    Solver class, runs the dual methods on one instance and assesses their output

    Attributes
    ----------
    problem: NetworkProblem
        instance to solve
    config: SolverConfig
        parameters shared by all runs
    reference: float or None
        optimal utility, when known, used for the utility gap

    Parameters
    ----------
    problem: NetworkProblem or str
        instance, or path of a problem file. If the file doesn't exist, an IOError will be thrown
    config: SolverConfig
        run parameters
    reference: float, optional
        optimal utility

    Methods
    -------
    solve(method)
        runs one method and returns its SolverReport with a QualityAssessment attached
    certify()
        runs the ellipsoid method and builds the certificate
    """

    def __init__(self, problem, config, reference=None):
        if isinstance(problem, str):
            problem = load_problem(problem)
        self.problem = problem
        self.config = config
        self.reference = reference

    def method(self, method_id):
        """Instantiates the method registered as `method_id`

        Raises
        ------
        UnsupportedProblemError
            If the id is unknown or the method refuses the problem.
        """
        if method_id not in methods.METHODS:
            raise UnsupportedProblemError('Unknown method "{}", expected one of {}'.format(
                method_id, ', '.join(sorted(methods.METHODS))))
        return methods.METHODS[method_id](self.problem, self.config)

    def solve(self, method_id):
        report = self.method(method_id).run()
        report.quality = assess(self.problem, report.lam, report.x, self.reference)
        logger.info('{}: {}'.format(method_id, report.quality))
        return report

    def certify(self):
        """Ellipsoid run with certificate

        Returns
        -------
        report: SolverReport
        trace: EllipsoidTrace
        weights: CertificateWeights
        x_hat: numpy.ndarray
        """
        report, trace, weights, x_hat = methods.certify(self.problem, self.config)
        report.quality = assess(self.problem, report.lam, x_hat, self.reference)
        return report, trace, weights, x_hat
