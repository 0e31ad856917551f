#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# bruteforce.py
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

"""Reference optima for small instances.

Two independent backends:

* a grid search over the user rates (n <= 4), polished by one pass of
  coordinate ascent;
* for quadratic utilities, an exact active-set enumeration over the link
  subsets (m <= 10): the dual restricted to a subset is a convex piecewise
  quadratic minimized by a damped Newton method, and the first subset whose
  multipliers are nonnegative and whose response is feasible is optimal.
"""

import itertools
import logging

import numpy as np

from pynum.oracle.dual import dual_value, loads, primal_response, prices, utility_value
from pynum.problem.utilities import QuadraticUtility

logger = logging.getLogger(__name__)

MAX_GRID_USERS = 4
MAX_EXACT_LINKS = 10


def _grid_bounds(problem):
    utilities = problem.require_utilities()
    lo = np.zeros(problem.n)
    if not isinstance(utilities, QuadraticUtility):
        lo[:] = utilities.x_lo
    hi = np.array([problem.b[problem.column(k)].min() for k in range(problem.n)])
    hi = np.minimum(hi, [utilities.unconstrained_maximizer(k) for k in range(problem.n)])
    return lo, hi


def polish(problem, x, lo):
    """One pass of coordinate ascent under the capacities"""
    utilities = problem.require_utilities()
    x = np.array(x, dtype=float)
    for k in range(problem.n):
        links = problem.column(k)
        slack = problem.b[links] - (loads(problem, x)[links] - x[k])
        cap = slack.min()
        if cap < lo[k]:
            continue
        candidate = x.copy()
        candidate[k] = min(max(utilities.unconstrained_maximizer(k), lo[k]), cap)
        if utility_value(problem, candidate) >= utility_value(problem, x):
            x = candidate
    return x


def grid_solve(problem, grid_points_per_dim=41):
    """Maximizes U over a regular grid of the feasible box, then polishes

    Ties are broken by the lowest grid index.

    Raises
    ------
    ValueError
        If the instance has more than four users.
    """
    if problem.n > MAX_GRID_USERS:
        raise ValueError('grid search is limited to {} users, got {}'.format(MAX_GRID_USERS, problem.n))
    utilities = problem.require_utilities()
    lo, hi = _grid_bounds(problem)
    if np.any(hi < lo):
        logger.warning('no grid point is feasible, returning x = 0')
        x = np.zeros(problem.n)
        return x, utility_value(problem, x)
    axes = [np.linspace(lo[k], hi[k], grid_points_per_dim) for k in range(problem.n)]
    C = problem.dense()
    tol = 1e-12*(1. + problem.b)
    best_value, best_x = -np.inf, None
    for head in itertools.product(*axes[:max(problem.n - 2, 0)]):
        tail = np.meshgrid(*axes[len(head):], indexing='ij')
        points = np.empty((tail[0].size, problem.n))
        points[:, :len(head)] = head
        for i, t in enumerate(tail):
            points[:, len(head) + i] = t.ravel()
        feasible = np.all(points.dot(C.T) <= problem.b + tol, axis=1)
        if not feasible.any():
            continue
        values = np.sum(utilities.value(points[feasible]), axis=1)
        i = int(np.argmax(values))
        if values[i] > best_value:
            best_value, best_x = values[i], points[feasible][i]
    if best_x is None:
        logger.warning('no grid point is feasible, returning x = 0')
        x = np.zeros(problem.n)
        return x, utility_value(problem, x)
    x = polish(problem, best_x, lo)
    return x, utility_value(problem, x)


def _restricted_newton(problem, links, tol, max_iter=200):
    """Minimizes phi over the prices of `links`, the other prices being 0"""
    utilities = problem.utilities
    C_S = problem.dense()[links]
    mu = np.zeros(len(links))

    def lift(v):
        lam = np.zeros(problem.m)
        lam[links] = v
        return lam

    value = dual_value(problem, lift(mu))
    for _ in range(max_iter):
        lam = lift(mu)
        x = primal_response(problem, lam)
        grad = (problem.b - loads(problem, x))[links]
        if np.linalg.norm(grad) <= tol:
            return mu, True
        active = (utilities.a - prices(problem, lam)) > 0
        hessian = (C_S*(active/utilities.curvature)).dot(C_S.T)
        step = -np.linalg.lstsq(hessian, grad, rcond=None)[0]
        slope = grad.dot(step)
        if not slope < -1e-14*grad.dot(grad):
            step, slope = -grad, -grad.dot(grad)
        t = 1.
        while True:
            candidate = dual_value(problem, lift(mu + t*step))
            if candidate <= value + 1e-4*t*slope + 1e-12*(1. + abs(value)):
                break
            t *= 0.5
            if t < 1e-12:
                return mu, False
        mu = mu + t*step
        value = candidate
    return mu, False


def exact_quadratic_solve(problem, tol=1e-9):
    """Exact optimum of a quadratic instance by active-set enumeration

    Returns
    -------
    x: numpy.ndarray
        optimal rates
    value: float
        optimal utility
    lam: numpy.ndarray
        optimal link prices

    Raises
    ------
    ValueError
        If the utilities are not quadratic, the network has more than ten
        links, or no active set passes the optimality checks.
    """
    if not isinstance(problem.utilities, QuadraticUtility):
        raise ValueError('the exact oracle needs quadratic utilities')
    if problem.m > MAX_EXACT_LINKS:
        raise ValueError('the exact oracle is limited to {} links, got {}'.format(MAX_EXACT_LINKS, problem.m))
    grad_tol = 1e-10*(1. + np.linalg.norm(problem.b))
    for size in range(problem.m + 1):
        for links in itertools.combinations(range(problem.m), size):
            links = list(links)
            mu, converged = _restricted_newton(problem, links, grad_tol) if links else (np.zeros(0), True)
            if not converged:
                continue
            if mu.size and mu.min() < -tol*(1. + np.abs(mu).max()):
                continue
            lam = np.zeros(problem.m)
            lam[links] = np.maximum(mu, 0.)
            x = primal_response(problem, lam)
            if np.all(loads(problem, x) <= problem.b + tol*(1. + problem.b)):
                logger.debug('active links {}'.format(links))
                return x, utility_value(problem, x), lam
    raise ValueError('no active set satisfies the optimality conditions')


def brute_force_solve(problem, grid_points_per_dim=41, backend='auto'):
    """Reference optimum of a small instance

    Parameters
    ----------
    grid_points_per_dim: int
        grid resolution of the grid backend
    backend: str
        'grid', 'exact' or 'auto' (exact for quadratic utilities on at most
        ten links, grid otherwise)

    Returns
    -------
    x: numpy.ndarray
    value: float
        U(x)
    """
    if backend == 'auto':
        exact = isinstance(problem.utilities, QuadraticUtility) and problem.m <= MAX_EXACT_LINKS
        backend = 'exact' if exact else 'grid'
    if backend == 'exact':
        return exact_quadratic_solve(problem)[:2]
    if backend == 'grid':
        return grid_solve(problem, grid_points_per_dim)
    raise LookupError('Unknown oracle backend "{}"'.format(backend))
