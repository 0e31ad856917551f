#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# certificate.py
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

"""Accuracy certificates of cutting-plane runs.

Given the protocol of an ellipsoid run (ellipsoids B_t, centres lam^t, cuts
g_t), nonnegative weights xi over the productive steps satisfy

    sum_t xi_t <g_t, lam^t - lam> <= 1 / sum_t (nu_t + mu_t)

for every lam of the domain, and the same weights average the responses
x(lam^t) into a near-optimal, near-feasible primal point.
"""

import numpy as np
from scipy.linalg import svd

from pynum.exceptions import DegenerateCertificateError, EmptyTraceError


class CertificateWeights(object):
    """Simplex weights over the productive steps of an ellipsoid run

    Attributes
    ----------
    xi: dict
        step index -> weight
    resolution: float
        bound on max_lam sum_t xi_t <g_t, lam^t - lam> over the domain
    """

    def __init__(self, xi, resolution):
        self.xi = dict(xi)
        self.resolution = float(resolution)

    def __repr__(self):
        return 'CertificateWeights({} steps, resolution={})'.format(len(self.xi), self.resolution)

    @property
    def total(self):
        return sum(self.xi.values())

    def as_array(self, N):
        w = np.zeros(N)
        for t, v in self.xi.items():
            w[t] = v
        return w


def _peel(trace, direction):
    """Greedy decomposition of `direction` along the cuts, last step first"""
    g = np.array(direction)
    weights = np.zeros(len(trace))
    for t in reversed(range(len(trace))):
        B, cut = trace.matrices[t], trace.cuts[t]
        q = B.T.dot(cut)
        qq = q.dot(q)
        if qq == 0:
            continue
        weights[t] = max(g.dot(B.dot(q)), 0.)/qq
        g -= weights[t]*cut
    return weights


def build_certificate(trace):
    """Accuracy certificate of an ellipsoid run

    The narrowest direction h of the final ellipsoid (half its inverse
    width) is split along the recorded cuts, once from h and once from -h;
    the weights of the productive steps, normalized, form the certificate.

    Raises
    ------
    EmptyTraceError
        If the trace has no step.
    DegenerateCertificateError
        If all productive weights vanish.
    """
    N = len(trace)
    if N == 0:
        raise EmptyTraceError('the ellipsoid trace is empty')
    if trace.productive[-1] and not np.any(trace.cuts[-1]):
        return CertificateWeights({N - 1: 1.}, 0.)
    U, s, _ = svd(trace.B_final)
    i = int(np.argmin(s))
    h = U[:, i]/(2.*s[i])
    nu = _peel(trace, h)
    mu = _peel(trace, -h)
    steps = trace.in_domain
    total = float(sum(nu[t] + mu[t] for t in steps))
    if not total > 0:
        raise DegenerateCertificateError('certificate weights sum to zero over {} productive steps'.format(len(steps)))
    return CertificateWeights({t: (nu[t] + mu[t])/total for t in steps}, 1./total)


def recover_primal_from_certificate(trace, weights):
    """x_hat = sum_t xi_t x(lam^t) over the productive steps

    Raises
    ------
    EmptyTraceError
        If no productive step carries a weight.
    """
    steps = sorted(t for t in weights.xi if t in trace.responses)
    if not steps:
        raise EmptyTraceError('no productive step to recover a primal point from')
    x = np.zeros_like(trace.responses[steps[0]])
    for t in steps:
        x += weights.xi[t]*trace.responses[t]
    return x

