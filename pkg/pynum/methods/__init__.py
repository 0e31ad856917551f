#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# __init__.py
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

from functools import partial

from .iterations import (
    theoretical_iterations, problem_iterations, fgm_iterations, fgm_bound, sgm_iterations,
    ellipsoid_iterations, rgem_iterations, rgem_constants
)
from .fgm import FastGradientMethod, fgm_coefficients, solve_fgm
from .sgm import StochasticSubgradientMethod, solve_sgm
from .ellipsoid import (
    EllipsoidMethod, EllipsoidTrace, ellipsoid_step, domain_cut, volume_ratio, solve_ellipsoid, certify
)
from .certificate import CertificateWeights, build_certificate, recover_primal_from_certificate
from .rgem import RandomGradientExtrapolation, RGEMParameters, rgem_parameters, solve_rgem

METHODS = {
    'fgm': FastGradientMethod,
    'sgm1': partial(StochasticSubgradientMethod, variant='V1'),
    'sgm2': partial(StochasticSubgradientMethod, variant='V2'),
    'ellipsoid': EllipsoidMethod,
    'rgem': RandomGradientExtrapolation,
}
