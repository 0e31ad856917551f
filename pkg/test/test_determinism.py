#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_determinism.py
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

import pytest

from pynum import Solver, SolverConfig
from pynum.problem import make_instance


@pytest.fixture
def quadratic():
    return make_instance('quadratic', 'random', 3, 12, seed=2, sigma=1.)


@pytest.fixture
def log():
    return make_instance('log', 'random', 3, 12, seed=2)


def history_csv(problem, method, path):
    config = SolverConfig(eps=0.1, R=20., max_iter=300, seed=7, record_every=7)
    Solver(problem, config).solve(method).write_csv(path, with_elapsed=False)
    with open(path) as fh:
        return fh.read()


@pytest.mark.parametrize('method', ['fgm', 'sgm1', 'sgm2', 'rgem'])
def test_quadratic_reruns(quadratic, method, tmpdir):
    first = history_csv(quadratic, method, str(tmpdir.join('a.csv')))
    assert first == history_csv(quadratic, method, str(tmpdir.join('b.csv')))
    assert first.count('\n') > 2


@pytest.mark.parametrize('method', ['sgm2', 'ellipsoid'])
def test_log_reruns(log, method, tmpdir):
    first = history_csv(log, method, str(tmpdir.join('a.csv')))
    assert first == history_csv(log, method, str(tmpdir.join('b.csv')))


def test_elapsed_column_blank(quadratic, tmpdir):
    lines = history_csv(quadratic, 'fgm', str(tmpdir.join('a.csv'))).splitlines()
    assert lines[0] == 'iter,phi,gap,feas,elapsed_ms'
    assert all(line.endswith(',') for line in lines[1:])
