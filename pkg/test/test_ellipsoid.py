#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_ellipsoid.py
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

from pynum import Solver, SolverConfig
from pynum.exceptions import EmptyTraceError
from pynum.methods import (
    EllipsoidTrace, build_certificate, certify, domain_cut, ellipsoid_iterations, ellipsoid_step,
    recover_primal_from_certificate, solve_ellipsoid, volume_ratio
)
from pynum.metrics import feasibility_violation, grid_solve
from pynum.oracle import dual_value, oracle_constants, utility_value
from pynum.problem import NetworkProblem, LogUtility, QuadraticUtility

SQRT3 = math.sqrt(3.)
LAM_STAR = np.array([SQRT3, SQRT3/(SQRT3 + 1.)])
X_STAR = np.array([1./SQRT3, 1. - 1./SQRT3, 1. + 1./SQRT3])


@pytest.fixture
def triangle():
    return NetworkProblem([[1, 1, 0], [0, 1, 1]], [1., 2.], LogUtility(1e-6, 2.))


@pytest.fixture
def config():
    return SolverConfig(eps=0.01, R=2.)


@pytest.fixture
def run(triangle, config):
    return certify(triangle, config)


def test_reference_optimum(triangle):
    x, value = grid_solve(triangle, 101)
    assert value == pytest.approx(utility_value(triangle, X_STAR), abs=1e-3)
    assert dual_value(triangle, LAM_STAR) == pytest.approx(utility_value(triangle, X_STAR), abs=1e-12)


def test_iterations(triangle, config):
    M = oracle_constants(triangle).M
    assert M == pytest.approx(math.sqrt(5.) + 6.*math.sqrt(2.))
    assert ellipsoid_iterations(2, M, 2., 0.01) == 156
    report, _ = solve_ellipsoid(triangle, config)
    assert report.scheduled_iterations == 156


def test_step():
    B = np.eye(2)
    lam = np.zeros(2)
    B1, lam1 = ellipsoid_step(B, lam, np.array([1., 0.]))
    assert lam1 == pytest.approx([-1./3., 0.])
    assert B1 == pytest.approx(np.diag([2./3., 2./math.sqrt(3.)]))
    assert abs(np.linalg.det(B1)) == pytest.approx(volume_ratio(2))


def test_bisection():
    B, lam = ellipsoid_step(np.array([[4.]]), np.array([1.]), np.array([-3.]))
    assert B.tolist() == [[2.]]
    assert lam.tolist() == [3.]
    assert volume_ratio(1) == 0.5


def test_domain_cut():
    assert domain_cut(np.array([1., 1.]), 1.) is None
    assert domain_cut(np.array([-1., -2.]), 1.).tolist() == [0., -1.]
    assert domain_cut(np.array([3., 4.]), 2.) == pytest.approx([0.6, 0.8])


def ellipsoids(trace):
    """(B_t, centre_t) for every step, the final ellipsoid included"""
    return list(zip(trace.matrices, trace.centres)) + [(trace.B_final, trace.centre_final)]


def test_localization(run):
    _, trace, _, _ = run
    for B, lam in ellipsoids(trace):
        u = np.linalg.solve(B, LAM_STAR - lam)
        assert np.linalg.norm(u) <= 1. + 1e-6


def test_volume_ratio(run):
    _, trace, _, _ = run
    ratio = volume_ratio(2)
    matrices = [B for B, _ in ellipsoids(trace)]
    assert len(matrices) == 157
    for B0, B1 in zip(matrices[:-1], matrices[1:]):
        # det(B1)/det(B0), without forming the vanishing determinants
        assert abs(np.linalg.det(np.linalg.solve(B0, B1))) == pytest.approx(ratio, rel=1e-10)


def test_certificate(triangle, run):
    report, trace, weights, x_hat = run
    assert len(trace) == 156
    assert weights.total == pytest.approx(1., abs=1e-12)
    assert all(v >= 0. for v in weights.xi.values())
    assert set(weights.xi) <= set(trace.in_domain)
    assert weights.resolution > 0.
    u_star = utility_value(triangle, X_STAR)
    assert u_star - utility_value(triangle, x_hat) <= 0.01
    assert feasibility_violation(triangle, x_hat) <= 0.01/2.


def test_best_point(triangle, run):
    report, trace, _, _ = run
    phi = dual_value(triangle, report.lam)
    for t in trace.in_domain:
        assert phi <= dual_value(triangle, trace.centres[t]) + 1e-12
    assert np.linalg.norm(report.lam - LAM_STAR) <= 0.05
    assert np.array_equal(report.extras['lam_last'], trace.centre_final)


def test_solver_certify(triangle, config):
    report, _, weights, x_hat = Solver(triangle, config).certify()
    assert report.quality.feasibility == pytest.approx(feasibility_violation(triangle, x_hat))


def test_exact_optimum():
    # lambda = 0 is optimal as soon as the capacities are slack at x = a / (sigma n)
    problem = NetworkProblem([[1, 1]], [100.], QuadraticUtility([1., 1.], 0.5))
    report, trace = solve_ellipsoid(problem, SolverConfig(eps=0.1, R=1.))
    assert not report.extras['exact_optimum']
    problem = NetworkProblem([[1, 1]], [2.], QuadraticUtility([1., 1.], 0.5))
    report, trace = solve_ellipsoid(problem, SolverConfig(eps=0.1, R=1.))
    assert report.extras['exact_optimum']
    assert report.iterations == 1
    weights = build_certificate(trace)
    assert weights.xi == {0: 1.}
    assert weights.resolution == 0.


def test_empty_trace():
    with pytest.raises(EmptyTraceError):
        build_certificate(EllipsoidTrace(1., 2))


def test_recovery_needs_productive_steps(run):
    _, trace, weights, _ = run
    empty = EllipsoidTrace(1., 2)
    with pytest.raises(EmptyTraceError):
        recover_primal_from_certificate(empty, weights)
