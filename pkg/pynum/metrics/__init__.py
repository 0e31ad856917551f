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

from .quality import (
    QualityAssessment, assess, duality_gap, feasibility_violation, iterations_to_target,
    regularization_bounds, primal_quality, response_quality
)
from .bruteforce import brute_force_solve, exact_quadratic_solve, grid_solve
