#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# iterations.py
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

"""Iteration counts guaranteeing accuracy eps for each method."""

import math


def _need(name, value, method):
    if value is None:
        raise LookupError('missing constant "{}" for {}'.format(name, method))
    return value


def fgm_iterations(L, R, eps):
    """N = ceil((2 R_hat / 3) sqrt(37 L / eps)) with R_hat = 3 R"""
    R_hat = 3.*R
    return int(math.ceil((2.*R_hat/3.)*math.sqrt(37.*L/eps)))


def fgm_bound(L, R, N):
    """Utility gap bound 148 L R_hat^2 / (9 N^2) after N iterations"""
    R_hat = 3.*R
    return 148.*L*R_hat**2/(9.*N**2)


def sgm_iterations(M, R, eps, confidence_delta):
    """Unit-constant heuristic N = ceil((A^2 / eps^2) ln(M R / (eps delta))), A = 2.5 R M"""
    A = 2.5*R*M
    return max(int(math.ceil((A**2/eps**2)*math.log(M*R/(eps*confidence_delta)))), 1)


def ellipsoid_iterations(m, M, R, eps):
    """N = 2 m (m + 1) ceil(ln(128 M R / eps))"""
    return 2*m*(m + 1)*max(int(math.ceil(math.log(128.*M*R/eps))), 1)


def rgem_constants(n, L, R, eps, B):
    """Regularization delta and the constant A of the RGEM iteration bound

    Parameters
    ----------
    B: float
        squared capacity norm ||b||^2

    Returns
    -------
    delta: float
        eps / (8 R^2)
    A: float
        2 (L R + eps / (8 R)) sqrt(6 + (16 L R^2 n + 8 B) / (n eps))
    """
    delta = eps/(8.*R**2)
    A = 2.*(L*R + eps/(8.*R))*math.sqrt(6. + (16.*L*R**2*n + 8.*B)/(n*eps))
    return delta, A


def rgem_iterations(n, L, R, eps, B):
    """N = ceil(2 (n + sqrt(n^2 + 128 n L R^2 / eps)) ln(4 R A / eps))"""
    _, A = rgem_constants(n, L, R, eps, B)
    N = 2.*(n + math.sqrt(n**2 + 128.*n*L*R**2/eps))*math.log(4.*R*A/eps)
    return max(int(math.ceil(N)), 1)


def theoretical_iterations(method, eps, R=None, L=None, M=None, m=None, n=None, B=None,
                           confidence_delta=0.05):
    """Iteration count of `method` for accuracy `eps`

    Parameters
    ----------
    method: str
        'fgm', 'sgm' (also 'sgm1', 'sgm2'), 'ellipsoid' or 'rgem'

    Raises
    ------
    LookupError
        If the method is unknown or a constant it needs is missing.
    """
    if method == 'fgm':
        return fgm_iterations(_need('L', L, method), _need('R', R, method), eps)
    if method in ('sgm', 'sgm1', 'sgm2'):
        return sgm_iterations(_need('M', M, method), _need('R', R, method), eps, confidence_delta)
    if method == 'ellipsoid':
        return ellipsoid_iterations(_need('m', m, method), _need('M', M, method), _need('R', R, method), eps)
    if method == 'rgem':
        return rgem_iterations(_need('n', n, method), _need('L', L, method), _need('R', R, method), eps,
                               _need('B', B, method))
    raise LookupError('Unknown method "{}"'.format(method))


def problem_iterations(method, problem, config, constants):
    """`theoretical_iterations` fed from a problem and a configuration"""
    return theoretical_iterations(
        method, config.eps, R=config.R, L=constants.L, M=constants.M, m=problem.m, n=problem.n,
        B=float(problem.b.dot(problem.b)), confidence_delta=config.confidence_delta,
    )
