#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# network.py
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

import numpy as np
from scipy.sparse import csc_matrix

from pynum.exceptions import ProblemValidationError, UnsupportedProblemError


class NetworkProblem(object):
    """
    A network utility maximization instance

    maximize sum_k u_k(x_k) subject to Cx <= b, x >= 0

    Attributes
    ----------
    C: scipy.sparse.csc_matrix
        m x n routing matrix with entries in {0, 1}; column k lists the links
        used by user k
    CT: scipy.sparse.csr_matrix
        transpose of C, used to compute route prices
    b: numpy.ndarray
        link capacities (read-only)
    utilities: Utility or None
        utility family of the users, unset on bare generated networks

    Parameters
    ----------
    C: array-like or sparse matrix
        routing matrix
    b: array-like
        capacities
    utilities: Utility, optional
        utility family

    Raises
    ------
    ProblemValidationError
        If the instance breaks one of the structural rules (dimensions, positive
        capacities, binary routing matrix, no empty column, utility size).
    """

    def __init__(self, C, b, utilities=None):
        C = csc_matrix(C, dtype=float, copy=True)
        if C.ndim != 2 or C.shape[0] < 1 or C.shape[1] < 1:
            raise ProblemValidationError('the routing matrix must have at least one link and one user')
        C.eliminate_zeros()
        C.sum_duplicates()
        C.sort_indices()
        if not np.all(C.data == 1.):
            raise ProblemValidationError('routing matrix entries must be 0 or 1')
        self.C = C
        self.CT = C.T.tocsr()
        self.b = np.array(b, dtype=float).ravel()
        self.b.flags.writeable = False
        self.utilities = utilities
        self._columns = [C.indices[C.indptr[k]:C.indptr[k+1]] for k in range(C.shape[1])]
        rows = C.tocsr()
        self._rows = [rows.indices[rows.indptr[j]:rows.indptr[j+1]] for j in range(C.shape[0])]
        self.validate()

    def __str__(self):
        return 'NetworkProblem (m={}, n={}, nnz={}, {})'.format(
            self.m, self.n, self.C.nnz,
            self.utilities if self.utilities is not None else 'no utilities'
        )

    def __eq__(self, other):
        if not isinstance(other, NetworkProblem):
            return False
        if self.C.shape != other.C.shape:
            return False
        return (
            (self.C != other.C).nnz == 0
            and np.array_equal(self.b, other.b)
            and self.utilities == other.utilities
        )

    def __ne__(self, other):
        return not self == other

    @property
    def m(self):
        return self.C.shape[0]

    @property
    def n(self):
        return self.C.shape[1]

    @property
    def degrees(self):
        """Number of links used by each user"""
        return np.diff(self.C.indptr)

    def column(self, k):
        """Sorted link indices used by user `k`

        Raises
        ------
        IndexError
            If `k` is not a user index.
        """
        if not 0 <= k < self.n:
            raise IndexError('user index {} out of range [0, {})'.format(k, self.n))
        return self._columns[k]

    def users_of(self, j):
        """Sorted user indices crossing link `j`"""
        if not 0 <= j < self.m:
            raise IndexError('link index {} out of range [0, {})'.format(j, self.m))
        return self._rows[j]

    def dense(self):
        return self.C.toarray()

    def validate(self):
        """Checks the structural rules of the instance

        Raises
        ------
        ProblemValidationError
        """
        if self.b.shape != (self.m,):
            raise ProblemValidationError(
                'capacity vector has {} entries, the routing matrix has {} links'.format(self.b.size, self.m))
        if not np.all(self.b > 0):
            j = int(np.flatnonzero(~(self.b > 0))[0])
            raise ProblemValidationError('capacity must be positive (link {}: {})'.format(j, self.b[j]))
        empty = np.flatnonzero(self.degrees == 0)
        if empty.size:
            raise ProblemValidationError('column {} of the routing matrix has no nonzero entry'.format(int(empty[0])))
        if self.utilities is not None:
            self.utilities.check_size(self.n)

    def with_utilities(self, utilities):
        """Returns a copy of the network carrying `utilities`"""
        return NetworkProblem(self.C, self.b, utilities)

    def require_utilities(self):
        if self.utilities is None:
            raise UnsupportedProblemError('the problem has no utility family attached')
        return self.utilities


def attach_utilities(problem, utilities):
    """Returns a copy of `problem` carrying `utilities`

    Raises
    ------
    ProblemValidationError
        If the family does not match the number of users.
    """
    return problem.with_utilities(utilities)


class ProblemConfig(object):
    """Accuracy setup of an instance: dual radius R, target eps and seed"""

    EXPECTED_PARAMS = [
        ('R', float),
        ('eps', float),
    ]
    OPT_PARAMS = [
        ('seed', int),
    ]

    def __init__(self, R=1., eps=1e-2, seed=0):
        self.R = float(R)
        self.eps = float(eps)
        self.seed = int(seed)
        self._check()

    def __repr__(self):
        return 'ProblemConfig(R={}, eps={}, seed={})'.format(self.R, self.eps, self.seed)

    def _check(self):
        if not self.R > 0:
            raise ProblemValidationError('R must be positive, got {}'.format(self.R))
        if not self.eps > 0:
            raise ProblemValidationError('eps must be positive, got {}'.format(self.eps))
        if self.seed < 0:
            raise ProblemValidationError('seed must be non-negative, got {}'.format(self.seed))

    def from_dict(self, parameters):
        for param, param_type in self.__class__.EXPECTED_PARAMS:
            param_value = parameters.get(param)
            if param_value is None:
                raise LookupError('Unable to find definition of parameter "{}"'.format(param))
            setattr(self, param, param_type(param_value))
        for param, param_type in self.__class__.OPT_PARAMS:
            param_value = parameters.get(param)
            if param_value is not None:
                setattr(self, param, param_type(param_value))
        self._check()
        return self
