#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_sgm.py
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
from pynum.distributed import compare_traces
from pynum.methods import StochasticSubgradientMethod, solve_sgm, sgm_iterations
from pynum.metrics import feasibility_violation
from pynum.oracle import utility_value
from pynum.problem import NetworkProblem, LogUtility

SQRT3 = math.sqrt(3.)
LAM_STAR = np.array([SQRT3, SQRT3/(SQRT3 + 1.)])
U_STAR = math.log(1./SQRT3) + math.log(1. - 1./SQRT3) + math.log(1. + 1./SQRT3)


@pytest.fixture
def triangle():
    return NetworkProblem([[1, 1, 0], [0, 1, 1]], [1., 2.], LogUtility(1e-6, 2.))


@pytest.fixture
def config():
    return SolverConfig(eps=0.01, R=2., max_iter=20000, record_every=1000, seed=4)


def test_step_size(triangle, config):
    method = StochasticSubgradientMethod(triangle, config)
    assert method.step_size(100) == pytest.approx(2./(method.constants.M*10.))


def test_heuristic_iterations():
    A = 2.5*2.*10.
    expected = math.ceil((A**2/0.1**2)*math.log(10.*2./(0.1*0.05)))
    assert sgm_iterations(10., 2., 0.1, 0.05) == expected
    assert expected > 2e6


def test_method_ids(triangle, config):
    assert StochasticSubgradientMethod(triangle, config, 'V1').method_id == 'sgm1'
    assert StochasticSubgradientMethod(triangle, config).method_id == 'sgm2'
    with pytest.raises(LookupError):
        StochasticSubgradientMethod(triangle, config, 'V3')


def test_variants_share_dual_iterates(triangle, config):
    v1 = solve_sgm(triangle, config.replace(record_every=1, max_iter=2000), 'V1')
    v2 = solve_sgm(triangle, config.replace(record_every=1, max_iter=2000), 'V2')
    assert compare_traces(v1, v2) == 0.
    assert np.array_equal(v1.lam, v2.lam)
    assert np.array_equal(v1.extras['lam_avg'], v2.extras['lam_avg'])


def test_seed_changes_the_run(triangle, config):
    a = solve_sgm(triangle, config.replace(max_iter=500))
    b = solve_sgm(triangle, config.replace(max_iter=500, seed=5))
    c = solve_sgm(triangle, config.replace(max_iter=500))
    assert not np.array_equal(a.lam, b.lam)
    assert np.array_equal(a.lam, c.lam)


@pytest.mark.parametrize('variant', ['V1', 'V2'])
def test_convergence(triangle, config, variant):
    report = solve_sgm(triangle, config, variant)
    assert report.iterations == 20000
    assert np.linalg.norm(report.extras['lam_avg'] - LAM_STAR) <= 0.3
    assert feasibility_violation(triangle, report.x) <= 0.2
    assert abs(U_STAR - utility_value(triangle, report.x)) <= 0.3


def test_dual_iterates_stay_nonnegative(triangle, config):
    report = solve_sgm(triangle, config.replace(max_iter=3000, record_every=1))
    assert all((r.lam >= 0.).all() for r in report.history)


def test_gap_undefined_until_every_user_is_drawn(triangle, config):
    report = solve_sgm(triangle, config.replace(record_every=1, max_iter=200))
    assert report.history[0].gap is None
    assert np.isfinite(report.history[0].feas)
    assert all(r.gap is None or np.isfinite(r.gap) for r in report.history)
    assert report.history[-1].gap is not None
