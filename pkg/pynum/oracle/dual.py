#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# dual.py
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

"""First-order oracle of the dual problem.

For link prices lambda >= 0 the dual function is

    phi(lambda) = <lambda, b> + sum_k max_{x_k} (u_k(x_k) - p_k x_k),  p = C^T lambda

whose gradient is b - C x(lambda). Route prices are summed over each user's
links in ascending link order and loads over each link's users in ascending
user order, whether the sum is taken here or by the actors of
:mod:`pynum.distributed`.
"""

import numpy as np


def prices(problem, lam):
    """Route prices C^T lambda"""
    return problem.CT.dot(np.asarray(lam, dtype=float))


def loads(problem, x):
    """Link loads C x"""
    return problem.C.dot(np.asarray(x, dtype=float))


def user_price(lam, links):
    """Price of one route: the sum of `lam` over `links`, in the order given"""
    return sum(lam[links].tolist())


def best_response(problem, k, price):
    """Rate of user `k` facing the route price `price`

    Raises
    ------
    IndexError
        If `k` is not a user index.
    """
    if not 0 <= k < problem.n:
        raise IndexError('user index {} out of range [0, {})'.format(k, problem.n))
    return problem.require_utilities().response_k(k, price)


def primal_response(problem, lam):
    """Best responses x(lambda) of all users"""
    return problem.require_utilities().response(prices(problem, lam))


def utility_value(problem, x):
    """Total utility U(x)"""
    return float(np.sum(problem.require_utilities().value(x)))


def lagrangian(problem, lam, x):
    """U(x) + <lambda, b - C x>"""
    lam = np.asarray(lam, dtype=float)
    return float(lam.dot(problem.b) + np.sum(problem.utilities.value(x) - prices(problem, lam)*x))


def dual_value(problem, lam):
    return lagrangian(problem, lam, primal_response(problem, lam))


def dual_gradient(problem, lam):
    return problem.b - loads(problem, primal_response(problem, lam))


def stochastic_response(problem, lam, k):
    """One-user oracle call

    Returns
    -------
    x_k: float
        rate of user `k`
    g: numpy.ndarray
        stochastic gradient b - n C_k x_k
    """
    links = problem.column(k)
    x_k = best_response(problem, k, user_price(np.asarray(lam, dtype=float), links))
    g = np.array(problem.b)
    g[links] -= problem.n*x_k
    return x_k, g


def stochastic_gradient(problem, lam, k):
    """Unbiased estimate b - n C_k x_k(lambda) of the dual gradient for a uniform user `k`"""
    return stochastic_response(problem, lam, k)[1]


def regularized_value(problem, lam, delta):
    """phi(lambda) + delta/2 ||lambda||^2"""
    lam = np.asarray(lam, dtype=float)
    return dual_value(problem, lam) + 0.5*delta*float(lam.dot(lam))


def regularized_gradient(problem, lam, delta):
    lam = np.asarray(lam, dtype=float)
    return dual_gradient(problem, lam) + delta*lam
