#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# constants.py
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

logger = logging.getLogger(__name__)


class OracleConstants(object):
    """
    Constants driving the step sizes and iteration counts

    Attributes
    ----------
    L: float or None
        Lipschitz constant of the dual gradient, None without strong concavity
    M: float
        bound on the norm of the dual (sub)gradients
    mu: float or None
        strong concavity modulus of the utilities
    """

    def __init__(self, L, M, mu):
        self.L = L
        self.M = M
        self.mu = mu

    def __repr__(self):
        return 'OracleConstants(L={}, M={}, mu={})'.format(self.L, self.M, self.mu)

    def to_dict(self):
        return {'L': self.L, 'M': self.M, 'mu': self.mu}


def default_M(problem):
    """||b|| + n sqrt(m) x_max, a bound on ||b - C x|| over all responses"""
    x_max = problem.require_utilities().x_max(problem.n)
    return float(np.linalg.norm(problem.b)) + problem.n*np.sqrt(problem.m)*x_max


def oracle_constants(problem, M=None, L=None):
    """Computes L = n m^2 / mu and the default M, with optional overrides

    Parameters
    ----------
    problem: NetworkProblem
    M, L: float, optional
        values replacing the computed ones
    """
    mu = problem.require_utilities().strong_concavity
    if L is None and mu is not None:
        L = problem.n*problem.m**2/mu
    if M is None:
        M = default_M(problem)
    constants = OracleConstants(None if L is None else float(L), float(M), mu)
    logger.debug('{}'.format(constants))
    return constants
