#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# io.py
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

"""Reading and writing problem files.

A problem file is a JSON object::

    {
        "m": 2, "n": 3,
        "b": [5.0, 5.0],
        "C": {"format": "dense", "data": [[1, 1, 1], [1, 1, 1]]},
        "utilities": {"variant": "quadratic", "a": [...], "sigma": 0.1}
    }

With ``"format": "coo"``, ``data`` lists the ``[row, col]`` pairs of ones.
Floats are written with their shortest round-trip representation so a
save/load cycle is exact.
"""

import json
import os

import numpy as np
from scipy.sparse import coo_matrix

from pynum.exceptions import ProblemFormatError, ProblemValidationError
from pynum.problem.network import NetworkProblem
from pynum.problem.utilities import utility_from_dict

DENSE_LIMIT = 4096


def problem_to_dict(problem, c_format=None):
    """Serializes a problem to plain python types

    Parameters
    ----------
    problem: NetworkProblem
    c_format: str, optional
        'dense' or 'coo'; by default small matrices are dense
    """
    if c_format is None:
        c_format = 'dense' if problem.m*problem.n <= DENSE_LIMIT else 'coo'
    if c_format == 'dense':
        data = problem.dense().astype(int).tolist()
    elif c_format == 'coo':
        coo = problem.C.tocoo()
        order = np.lexsort((coo.col, coo.row))
        data = [[int(coo.row[i]), int(coo.col[i])] for i in order]
    else:
        raise ValueError('Unknown routing matrix format "{}"'.format(c_format))
    return {
        'm': problem.m,
        'n': problem.n,
        'b': problem.b.tolist(),
        'C': {'format': c_format, 'data': data},
        'utilities': problem.utilities.to_dict() if problem.utilities is not None else None,
    }


def _field(data, key, where=''):
    if not isinstance(data, dict) or key not in data:
        raise ProblemFormatError('missing field "{}{}"'.format(where, key))
    return data[key]


def _positive_int(data, key):
    value = _field(data, key)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ProblemFormatError('field "{}" must be a positive integer, got {!r}'.format(key, value))
    return value


def _routing_matrix(data, m, n):
    spec = _field(data, 'C')
    c_format = _field(spec, 'format', 'C.')
    rows = _field(spec, 'data', 'C.')
    if not isinstance(rows, list):
        raise ProblemFormatError('field "C.data" must be a list')
    if c_format == 'dense':
        if len(rows) != m or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise ProblemFormatError('field "C.data" must be a {}x{} nested list'.format(m, n))
        try:
            return np.array(rows, dtype=float)
        except (TypeError, ValueError):
            raise ProblemFormatError('field "C.data" must contain numbers')
    if c_format == 'coo':
        try:
            pairs = np.array(rows, dtype=int).reshape(-1, 2)
        except (TypeError, ValueError):
            raise ProblemFormatError('field "C.data" must be a list of [row, col] pairs')
        if pairs.size and (pairs.min() < 0 or pairs[:, 0].max() >= m or pairs[:, 1].max() >= n):
            raise ProblemFormatError('field "C.data" has an index outside the {}x{} matrix'.format(m, n))
        ones = np.ones(len(pairs))
        matrix = coo_matrix((ones, (pairs[:, 0], pairs[:, 1])), shape=(m, n)).tocsc()
        matrix.sum_duplicates()
        matrix.data[:] = 1.
        return matrix
    raise ProblemFormatError('field "C.format" must be "dense" or "coo", got {!r}'.format(c_format))


def problem_from_dict(data):
    """Builds a problem from its plain python description

    Raises
    ------
    ProblemFormatError
        If a field is missing or has the wrong type or shape.
    ProblemValidationError
        If the instance breaks a structural rule.
    """
    if not isinstance(data, dict):
        raise ProblemFormatError('a problem file must hold a JSON object')
    m = _positive_int(data, 'm')
    n = _positive_int(data, 'n')
    b = _field(data, 'b')
    if not isinstance(b, list) or any(isinstance(v, bool) or not isinstance(v, (int, float)) for v in b):
        raise ProblemFormatError('field "b" must be a list of numbers')
    if len(b) != m:
        raise ProblemFormatError('field "b" has {} entries, "m" is {}'.format(len(b), m))
    C = _routing_matrix(data, m, n)
    utilities = data.get('utilities')
    if utilities is not None:
        if not isinstance(utilities, dict):
            raise ProblemFormatError('field "utilities" must be an object')
        try:
            utilities = utility_from_dict(utilities)
        except ProblemValidationError:
            raise
        except LookupError as e:
            raise ProblemFormatError('field "utilities": {}'.format(e.args[0]))
        except (TypeError, ValueError) as e:
            raise ProblemFormatError('field "utilities": {}'.format(e))
    return NetworkProblem(C, b, utilities)


def save_problem(problem, path, c_format=None):
    with open(path, 'w') as fh:
        json.dump(problem_to_dict(problem, c_format), fh, indent=1)
        fh.write('\n')


def load_problem(path):
    """Reads a problem file

    Raises
    ------
    IOError
        If the file does not exist.
    ProblemFormatError
        If the file is not valid JSON or misses a field.
    ProblemValidationError
        If the instance breaks a structural rule.
    """
    if not os.path.exists(path):
        raise IOError('Unable to find problem file "{}"'.format(path))
    with open(path) as fh:
        try:
            data = json.load(fh)
        except ValueError as e:
            raise ProblemFormatError('{} is not valid JSON: {}'.format(path, e))
    return problem_from_dict(data)
