#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# quality.py
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

"""Quality measures of primal-dual pairs."""

import numpy as np

from pynum.oracle.dual import (
    dual_value, loads, primal_response, regularized_gradient, utility_value
)


def feasibility_violation(problem, x):
    """||[Cx - b]_+||"""
    return float(np.linalg.norm(np.maximum(loads(problem, x) - problem.b, 0.)))


def duality_gap(problem, lam, x):
    """phi(lambda) - U(x), nonnegative whenever x is feasible

    None when U(x) is not finite, e.g. a zero rate under logarithmic utilities.
    """
    utility = utility_value(problem, x)
    if not np.isfinite(utility):
        return None
    return dual_value(problem, lam) - utility


class QualityAssessment(object):
    """
    Duality gap and feasibility of a primal-dual pair

    Attributes
    ----------
    duality_gap: float or None
        undefined while U(x) is -inf
    feasibility: float
    utility_gap: float or None
        U(x*) - U(x) when a reference optimum is known
    """

    def __init__(self, duality_gap, feasibility, utility_gap=None):
        self.duality_gap = None if duality_gap is None else float(duality_gap)
        self.feasibility = float(feasibility)
        self.utility_gap = None if utility_gap is None else float(utility_gap)

    def __repr__(self):
        return 'QualityAssessment(duality_gap={}, feasibility={}, utility_gap={})'.format(
            self.duality_gap, self.feasibility, self.utility_gap)

    def to_dict(self):
        return {
            'duality_gap': self.duality_gap,
            'feasibility': self.feasibility,
            'utility_gap': self.utility_gap,
        }

    @classmethod
    def from_dict(cls, d):
        return cls(d['duality_gap'], d['feasibility'], d.get('utility_gap'))


def assess(problem, lam, x, reference=None):
    """Measures a primal-dual pair

    Parameters
    ----------
    reference: float, optional
        optimal utility U(x*), enables the utility gap
    """
    utility_gap = None
    if reference is not None:
        utility = utility_value(problem, x)
        if np.isfinite(utility):
            utility_gap = reference - utility
    return QualityAssessment(duality_gap(problem, lam, x), feasibility_violation(problem, x), utility_gap)


def regularization_bounds(problem, lam, delta):
    """Primal guarantees of x(lambda) from the regularized dual residual

    Returns
    -------
    feasibility_bound: float
        bound on ||C x(lambda) - b||, ||grad phi_delta(lambda)|| + delta ||lambda||
    utility_bound: float
        bound on U(x*) - U(x(lambda)), ||grad phi_delta(lambda)|| ||lambda|| + delta ||lambda||^2
    """
    lam = np.asarray(lam, dtype=float)
    residual = float(np.linalg.norm(regularized_gradient(problem, lam, delta)))
    norm = float(np.linalg.norm(lam))
    return residual + delta*norm, residual*norm + delta*norm**2


def iterations_to_target(report, eps, reference=None):
    """First recorded iteration whose dual value is within `eps` of `reference`

    Without a reference the best dual value of the run is used.

    Returns
    -------
    int or None
        None when no record reaches the target
    """
    if not report.history:
        return None
    if reference is None:
        reference = min(r.phi for r in report.history)
    for record in report.history:
        if record.phi - reference <= eps:
            return record.iteration
    return None


def primal_quality(problem, x, reference):
    """Utility gap and violation of a primal point against a known optimum value"""
    return reference - utility_value(problem, x), feasibility_violation(problem, x)


def response_quality(problem, lam, reference):
    return primal_quality(problem, primal_response(problem, lam), reference)
