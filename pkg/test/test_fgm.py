#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_fgm.py
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
from pynum.exceptions import UnsupportedProblemError
from pynum.methods import FastGradientMethod, fgm_coefficients, fgm_iterations, fgm_bound, solve_fgm
from pynum.metrics import feasibility_violation
from pynum.oracle import utility_value
from pynum.problem import NetworkProblem, QuadraticUtility, LogUtility

U_STAR = 48.75


@pytest.fixture
def tiny():
    return NetworkProblem([[1, 1]], [5.], QuadraticUtility([10., 10.], 0.1))


def test_coefficients():
    alpha, A, tau = fgm_coefficients(0)
    assert (alpha, A, tau) == (0.5, 0.5, 2./3.)
    for t in range(1, 20):
        alpha, A, tau = fgm_coefficients(t)
        assert A == pytest.approx(fgm_coefficients(t - 1)[1] + alpha)
        assert tau == pytest.approx(fgm_coefficients(t + 1)[0]/fgm_coefficients(t + 1)[1])


def test_iterations():
    assert fgm_iterations(10., 10., 0.1) == 1217
    assert fgm_iterations(10., 10., 0.01) == int(math.ceil(20.*math.sqrt(37000.)))
    assert fgm_bound(10., 10., 100) == pytest.approx(14.8)


@pytest.mark.parametrize('eps', [0.1, 0.01])
def test_tiny_instance(tiny, eps):
    config = SolverConfig(eps=eps, R=10., record_every=1)
    report = solve_fgm(tiny, config)
    assert report.iterations == fgm_iterations(10., 10., eps)
    assert U_STAR - utility_value(tiny, report.x) <= eps
    assert feasibility_violation(tiny, report.x) <= eps/30.
    assert abs(report.lam[0] - 9.5) <= 1.


@pytest.mark.parametrize('eps', [0.1, 0.01])
def test_bounds_along_the_run(tiny, eps):
    report = solve_fgm(tiny, SolverConfig(eps=eps, R=10.))
    assert len(report.history) == report.iterations + 1
    for record in report.history:
        assert abs(record.lam[0] - 9.5) <= 9.5 + 1e-9
        if record.iteration >= 10:
            utility_hat = record.phi - record.gap
            assert U_STAR - utility_hat <= 148000./record.iteration**2


def test_history(tiny):
    report = solve_fgm(tiny, SolverConfig(eps=0.1, R=10., record_every=100))
    iterations = [r.iteration for r in report.history]
    assert iterations[0] == 0
    assert iterations[-1] == report.iterations
    assert all(i % 100 == 0 for i in iterations[:-1])


def test_max_iter_caps(tiny):
    report = solve_fgm(tiny, SolverConfig(eps=0.01, R=10., max_iter=50))
    assert report.iterations == 50
    assert report.scheduled_iterations > 50


def test_early_stop(tiny):
    report = solve_fgm(tiny, SolverConfig(eps=0.1, R=10., early_stop=True))
    assert report.extras['stopped_early']
    assert report.iterations < report.scheduled_iterations


def test_warm_start(tiny):
    report = solve_fgm(tiny, SolverConfig(eps=0.1, R=10., lambda0=[9.5]))
    assert report.history[0].lam.tolist() == [9.5]
    assert abs(report.history[0].phi - U_STAR) < 1e-9


def test_log_rejected():
    problem = NetworkProblem([[1, 1]], [5.], LogUtility(1e-6, 5.))
    with pytest.raises(UnsupportedProblemError):
        FastGradientMethod(problem, SolverConfig())


def test_solver_dispatch(tiny):
    solver = Solver(tiny, SolverConfig(eps=0.1, R=10.), reference=U_STAR)
    report = solver.solve('fgm')
    assert report.method == 'fgm'
    assert report.quality.utility_gap <= 0.1
    assert report.quality.feasibility == pytest.approx(feasibility_violation(tiny, report.x))
    with pytest.raises(UnsupportedProblemError):
        solver.solve('newton')


def test_report_json(tiny, tmpdir):
    report = Solver(tiny, SolverConfig(eps=0.1, R=10., record_every=50)).solve('fgm')
    path = str(tmpdir.join('fgm.json'))
    report.to_json(path)
    loaded = type(report).load(path)
    assert loaded.iterations == report.iterations
    assert np.array_equal(loaded.lam, report.lam)
    assert [r.phi for r in loaded.history] == [r.phi for r in report.history]
    assert loaded.quality.duality_gap == report.quality.duality_gap
