#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# config.py
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


def _as_bool(value):
    if isinstance(value, str):
        if value.lower() in ('true', 'yes', '1', 'on'):
            return True
        if value.lower() in ('false', 'no', '0', 'off'):
            return False
        raise ValueError('"{}" is not a boolean'.format(value))
    return bool(value)


def _as_vector(value):
    return np.array(value, dtype=float).ravel()


class SolverConfig(object):
    """ Parameters of a solver run

    Attributes
    ----------

    EXPECTED_PARAMS, OPT_PARAMS : list of tuple, class attribute
        `(param_name, param_type)` pairs, as for utility families.
    eps : float
        target accuracy
    R : float
        bound on the norm of an optimal dual point
    max_iter : int
        cap on the scheduled number of iterations
    seed : int
        seed of the solver random substream
    record_every : int
        keep one history record every `record_every` iterations (the last
        iteration is always recorded)
    confidence_delta : float
        confidence level of the stochastic bounds, reporting only
    M, L : float or None
        overrides of the oracle constants
    lambda0 : numpy.ndarray or None
        starting dual point of the fast gradient method
    early_stop : bool
        stop as soon as the measured gap is below eps and the violation below eps/R
    """

    EXPECTED_PARAMS = [
        ('eps', float),
        ('R', float),
    ]
    OPT_PARAMS = [
        ('max_iter', int),
        ('seed', int),
        ('record_every', int),
        ('confidence_delta', float),
        ('M', float),
        ('L', float),
        ('lambda0', _as_vector),
        ('early_stop', _as_bool),
    ]

    def __init__(self, eps=1e-2, R=1., max_iter=100000, seed=0, record_every=1,
                 confidence_delta=0.05, M=None, L=None, lambda0=None, early_stop=False):
        self.eps = float(eps)
        self.R = float(R)
        self.max_iter = int(max_iter)
        self.seed = int(seed)
        self.record_every = int(record_every)
        self.confidence_delta = float(confidence_delta)
        self.M = None if M is None else float(M)
        self.L = None if L is None else float(L)
        self.lambda0 = None if lambda0 is None else _as_vector(lambda0)
        self.early_stop = _as_bool(early_stop)
        self._check()

    def __repr__(self):
        return 'SolverConfig({})'.format(', '.join('{}={}'.format(k, v) for k, v in self.to_dict().items()))

    def _check(self):
        if not self.eps > 0:
            raise ValueError('eps must be positive, got {}'.format(self.eps))
        if not self.R > 0:
            raise ValueError('R must be positive, got {}'.format(self.R))
        if self.max_iter < 1:
            raise ValueError('max_iter must be at least 1, got {}'.format(self.max_iter))
        if self.seed < 0:
            raise ValueError('seed must be non-negative, got {}'.format(self.seed))
        if self.record_every < 1:
            raise ValueError('record_every must be at least 1, got {}'.format(self.record_every))
        if not 0 < self.confidence_delta < 1:
            raise ValueError('confidence_delta must lie in (0, 1), got {}'.format(self.confidence_delta))
        for name in ('M', 'L'):
            value = getattr(self, name)
            if value is not None and not value > 0:
                raise ValueError('{} must be positive, got {}'.format(name, value))

    def from_dict(self, parameters):
        """Reads the configuration from a hashmap of params

        Raises
        ------
        LookupError
            If `eps` or `R` is missing.
        ValueError
            If a value is out of range.
        """
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

    def to_dict(self):
        d = {}
        for param, _ in self.__class__.EXPECTED_PARAMS + self.__class__.OPT_PARAMS:
            value = getattr(self, param)
            d[param] = value.tolist() if isinstance(value, np.ndarray) else value
        return d

    @classmethod
    def from_problem_config(cls, problem_config, **options):
        """Solver parameters for the accuracy setup of an instance

        `options` sets the remaining parameters; R, eps and seed come from
        `problem_config`.
        """
        return cls(R=problem_config.R, eps=problem_config.eps, seed=problem_config.seed, **options)

    def replace(self, **changes):
        """Copy of the configuration with some parameters changed"""
        d = self.to_dict()
        d.update(changes)
        return SolverConfig(**d)
