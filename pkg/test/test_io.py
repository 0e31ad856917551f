#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_io.py
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

import os

import pytest
import numpy as np

from pynum.exceptions import ProblemFormatError, ProblemValidationError
from pynum.problem import (
    LogUtility, load_problem, save_problem, problem_from_dict, problem_to_dict, make_instance
)

FILES = os.path.join(os.path.dirname(__file__), 'files')


@pytest.fixture
def data():
    return {
        'm': 2, 'n': 3, 'b': [1., 2.],
        'C': {'format': 'dense', 'data': [[1, 1, 0], [0, 1, 1]]},
        'utilities': {'variant': 'quadratic', 'a': [1., 2., 3.], 'sigma': 0.1},
    }


def test_load_sample():
    problem = load_problem(os.path.join(FILES, 'triangle.json'))
    assert (problem.m, problem.n) == (2, 3)
    assert problem.utilities == LogUtility(1e-6, 2.)
    assert problem.column(1).tolist() == [0, 1]


def test_missing_file():
    with pytest.raises(IOError):
        load_problem(os.path.join(FILES, 'nothing.json'))


def test_save_load(tmpdir):
    problem = make_instance('quadratic', 'random', 4, 30, seed=2)
    path = str(tmpdir.join('problem.json'))
    save_problem(problem, path)
    assert load_problem(path) == problem
    save_problem(problem, path, c_format='coo')
    loaded = load_problem(path)
    assert loaded == problem
    assert np.array_equal(loaded.utilities.a, problem.utilities.a)


def test_default_format():
    small = make_instance('log', 'uniform', 2, 10)
    large = make_instance('log', 'uniform', 5, 1500)
    assert problem_to_dict(small)['C']['format'] == 'dense'
    assert problem_to_dict(large)['C']['format'] == 'coo'


def test_coo(data):
    data['C'] = {'format': 'coo', 'data': [[0, 0], [0, 1], [1, 1], [1, 2]]}
    assert problem_from_dict(data).dense().tolist() == [[1, 1, 0], [0, 1, 1]]


@pytest.mark.parametrize('field', ['m', 'n', 'b', 'C'])
def test_missing_field(data, field):
    del data[field]
    with pytest.raises(ProblemFormatError) as e:
        problem_from_dict(data)
    assert field in str(e.value)


def test_bad_shape(data):
    data['C']['data'] = [[1, 1], [0, 1]]
    with pytest.raises(ProblemFormatError) as e:
        problem_from_dict(data)
    assert 'C.data' in str(e.value)


def test_bad_format(data):
    data['C']['format'] = 'csr'
    with pytest.raises(ProblemFormatError) as e:
        problem_from_dict(data)
    assert 'C.format' in str(e.value)


def test_coo_out_of_range(data):
    data['C'] = {'format': 'coo', 'data': [[0, 0], [2, 1]]}
    with pytest.raises(ProblemFormatError):
        problem_from_dict(data)


def test_bad_utilities(data):
    data['utilities'] = {'variant': 'quadratic', 'sigma': 0.1}
    with pytest.raises(ProblemFormatError) as e:
        problem_from_dict(data)
    assert 'utilities' in str(e.value)


def test_invalid_instance(data):
    data['b'] = [1., -2.]
    with pytest.raises(ProblemValidationError):
        problem_from_dict(data)


def test_not_json(tmpdir):
    path = tmpdir.join('broken.json')
    path.write('{"m": 2,')
    with pytest.raises(ProblemFormatError):
        load_problem(str(path))
