#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_rgem.py
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

import math

import pytest
import numpy as np

from pynum import SolverConfig
from pynum.exceptions import UnsupportedProblemError
from pynum.methods import (
    RandomGradientExtrapolation, rgem_constants, rgem_iterations, rgem_parameters, solve_rgem
)
from pynum.metrics import assess, exact_quadratic_solve, regularization_bounds
from pynum.oracle import loads, oracle_constants, regularized_gradient
from pynum.problem import (
    NetworkProblem, LogUtility, generate_random_network, make_quadratic_utilities
)


def calibrated(m, n, seed):
    """Random network whose capacities are 99.5% of the loads at zero prices"""
    network = generate_random_network(m, n, seed)
    utilities = make_quadratic_utilities(n, seed, sigma=1.)
    b = 0.995*loads(network, utilities.a/n)
    return NetworkProblem(network.C, b, utilities)


def test_parameters():
    params = rgem_parameters(50, 25., 0.03)
    assert params.alpha == pytest.approx(50*params.alpha_bar)
    assert params.eta == pytest.approx(0.03*params.alpha_bar/(1. - params.alpha_bar))
    assert params.tau == pytest.approx(1./(50*(1. - params.alpha_bar)) - 1.)
    assert 1. - params.alpha_bar == pytest.approx(1./(50. + math.sqrt(2500. + 16.*50.*25./0.03)))
    assert params.theta(2) == pytest.approx(params.alpha_bar**-2)


def test_iterations():
    delta, A = rgem_constants(50, 25., 0.6, 0.1, 3000.)
    assert delta == pytest.approx(0.1/(8.*0.36))
    expected = 2.*(50. + math.sqrt(2500. + 128.*50.*25.*0.36/0.1))*math.log(4.*0.6*A/0.1)
    assert rgem_iterations(50, 25., 0.6, 0.1, 3000.) == math.ceil(expected)


def test_lipschitz_constant():
    problem = calibrated(5, 50, 0)
    assert oracle_constants(problem).L == pytest.approx(25.)


def test_log_rejected():
    problem = NetworkProblem([[1, 1]], [5.], LogUtility(1e-6, 5.))
    with pytest.raises(UnsupportedProblemError):
        RandomGradientExtrapolation(problem, SolverConfig())


def test_deterministic():
    problem = calibrated(3, 10, 1)
    config = SolverConfig(eps=0.1, R=0.6, max_iter=300, seed=2)
    a, b = solve_rgem(problem, config), solve_rgem(problem, config)
    assert np.array_equal(a.lam, b.lam)
    assert np.array_equal(a.extras['lam_last'], b.extras['lam_last'])
    assert [r.phi for r in a.history] == [r.phi for r in b.history]


def test_accuracy_over_seeds():
    eps, R = 0.1, 0.6
    gaps, violations = [], []
    for seed in range(20):
        problem = calibrated(5, 50, seed)
        _, u_star, lam_star = exact_quadratic_solve(problem)
        assert np.linalg.norm(lam_star) <= R
        report = solve_rgem(problem, SolverConfig(eps=eps, R=R, seed=seed, record_every=10**6))
        assert report.iterations == report.scheduled_iterations
        assert report.extras['delta'] == pytest.approx(eps/(8.*R**2))
        quality = assess(problem, report.lam, report.x, reference=u_star)
        gaps.append(quality.utility_gap)
        violations.append(quality.feasibility)
    assert np.mean(gaps) <= 2.*eps
    assert np.mean(violations) <= eps/R


def test_regularized_residual_decreases():
    eps, R = 0.1, 0.6
    delta = eps/(8.*R**2)
    medians = []
    for N in (50, 500, 5000):
        residuals = []
        for seed in range(5):
            problem = calibrated(3, 10, seed)
            report = solve_rgem(problem, SolverConfig(eps=eps, R=R, seed=seed, max_iter=N, record_every=10**6))
            residuals.append(np.linalg.norm(regularized_gradient(problem, report.lam, delta)))
        medians.append(np.median(residuals))
    assert medians[0] > medians[1] > medians[2]


def test_regularization_bounds():
    problem = calibrated(3, 10, 0)
    report = solve_rgem(problem, SolverConfig(eps=0.1, R=0.6, max_iter=5000, record_every=10**6))
    x_star, u_star, _ = exact_quadratic_solve(problem)
    delta = report.extras['delta']
    feas_bound, gap_bound = regularization_bounds(problem, report.lam, delta)
    residual = np.linalg.norm(loads(problem, report.x) - problem.b)
    assert residual <= feas_bound + 1e-12
    assert u_star - np.sum(problem.utilities.value(report.x)) <= gap_bound + 1e-9
