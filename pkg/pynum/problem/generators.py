#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# generators.py
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

"""Generators for the two experimental network families.

All generators are pure functions of their dimensions and seed.
"""

import logging

import numpy as np

from pynum.exceptions import ProblemValidationError
from pynum.problem.network import NetworkProblem, attach_utilities
from pynum.problem.utilities import QuadraticUtility, LogUtility
from pynum.utils.rng import substream

logger = logging.getLogger(__name__)

UNIFORM_CAPACITY = 5.
CAPACITY_RANGE = (1., 6.)
LINK_PROBABILITY = 0.5
A_MAX = 100.
SIGMA = 0.1


def _check_dimensions(m, n):
    if int(m) < 1 or int(n) < 1:
        raise ProblemValidationError('a network needs m >= 1 and n >= 1, got m={}, n={}'.format(m, n))


def generate_uniform_network(m, n, b_value=UNIFORM_CAPACITY):
    """All users cross all links, every link has capacity `b_value`"""
    _check_dimensions(m, n)
    if not b_value > 0:
        raise ProblemValidationError('capacity must be positive, got {}'.format(b_value))
    return NetworkProblem(np.ones((int(m), int(n))), np.full(int(m), float(b_value)))


def generate_random_network(m, n, seed):
    """Random routing with Bernoulli(0.5) incidences and capacities uniform on [1, 6]

    A user left without any link gets one link drawn uniformly.

    Parameters
    ----------
    m, n: int
        number of links and users
    seed: int
        user seed, split into the capacity, incidence and repair substreams

    Returns
    -------
    NetworkProblem
        network without utilities
    """
    _check_dimensions(m, n)
    m, n = int(m), int(n)
    b = substream(seed, 'capacity').uniform(CAPACITY_RANGE[0], CAPACITY_RANGE[1], size=m)
    C = (substream(seed, 'incidence').random((m, n)) < LINK_PROBABILITY).astype(float)
    repair = substream(seed, 'repair')
    empty = np.flatnonzero(C.sum(axis=0) == 0)
    for k in empty:
        C[repair.integers(m), k] = 1.
    if empty.size:
        logger.debug('repaired {} empty columns'.format(empty.size))
    return NetworkProblem(C, b)


def make_quadratic_utilities(n, seed, sigma=SIGMA):
    """a_k uniform on (0, 100], u_k(x) = a_k x - (sigma n / 2) x^2"""
    _check_dimensions(1, n)
    a = A_MAX*(1. - substream(seed, 'utility').random(int(n)))
    return QuadraticUtility(a, sigma)


def make_log_utilities(problem, x_lo=1e-6, x_hi=None):
    """u_k(x) = ln x clipped to [x_lo, x_hi], x_hi defaulting to the largest capacity"""
    if x_hi is None:
        x_hi = float(np.max(problem.b))
    return LogUtility(x_lo, x_hi)


NETWORKS = ('uniform', 'random')
FAMILIES = ('quadratic', 'log')


def make_instance(family, network, m, n, seed=0, b_value=UNIFORM_CAPACITY, sigma=SIGMA):
    """Builds one of the experimental settings

    Parameters
    ----------
    family: str
        'quadratic' or 'log'
    network: str
        'uniform' (all-ones routing, capacities `b_value`) or 'random'

    Raises
    ------
    LookupError
        If the family or the network is unknown.
    """
    if network == 'uniform':
        problem = generate_uniform_network(m, n, b_value)
    elif network == 'random':
        problem = generate_random_network(m, n, seed)
    else:
        raise LookupError('Unknown network "{}"'.format(network))
    if family == 'quadratic':
        utilities = make_quadratic_utilities(n, seed, sigma)
    elif family == 'log':
        utilities = make_log_utilities(problem)
    else:
        raise LookupError('Unknown utility family "{}"'.format(family))
    return attach_utilities(problem, utilities)
