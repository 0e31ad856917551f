#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_tables.py
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

"""Iteration counts on the uniform n = 1500 networks (m = 2, eps = 1e-2)"""

import math

import pytest

from pynum import SolverConfig
from pynum.methods import solve_ellipsoid, solve_fgm, solve_sgm
from pynum.metrics import exact_quadratic_solve, iterations_to_target
from pynum.oracle import dual_value
from pynum.problem import make_instance

EPS = 1e-2


@pytest.fixture(scope='module')
def quadratic():
    return make_instance('quadratic', 'uniform', 2, 1500, seed=0)


@pytest.fixture(scope='module')
def log():
    return make_instance('log', 'uniform', 2, 1500)


def test_log_optimum_is_known(log):
    # identical users share the capacity evenly
    assert dual_value(log, [150., 150.]) == pytest.approx(1500.*math.log(1./300.))


def test_fgm(quadratic):
    _, u_star, lam_star = exact_quadratic_solve(quadratic)
    assert sum(lam_star) == pytest.approx(90., abs=5.)
    report = solve_fgm(quadratic, SolverConfig(eps=EPS, R=100., max_iter=1400))
    to_eps = iterations_to_target(report, EPS, u_star)
    assert to_eps is not None and to_eps <= 4*350


def test_ellipsoid(log):
    report, _ = solve_ellipsoid(log, SolverConfig(eps=EPS, R=250., max_iter=160))
    to_eps = iterations_to_target(report, EPS, 1500.*math.log(1./300.))
    assert to_eps is not None and to_eps <= 4*40


def test_sgm(log):
    report = solve_sgm(log, SolverConfig(eps=EPS, R=250., M=35., max_iter=20000))
    to_eps = iterations_to_target(report, EPS, 1500.*math.log(1./300.))
    assert to_eps is not None and to_eps <= 10*2000
