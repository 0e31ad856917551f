#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# utilities.py
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

from pynum.exceptions import ProblemValidationError


def _float_array(value):
    return np.array(value, dtype=float).ravel()


class Utility(object):
    """ Base class for utility families

    A family describes the utilities u_k of all users at once. Derived classes
    provide the closed-form best response to a route price.

    Attributes
    ----------

    EXPECTED_PARAMS, OPT_PARAMS : list of tuple, class attribute
        List of all expected parameters (resp. optional parameters) for this family to be well defined.
        The format is `(param_name, param_type)` where `param_name` is a `str` and
        `param_type` a callable casting the raw value.
    VARIANT : str, class attribute
        Name of the family, as written in problem files.
    """

    EXPECTED_PARAMS = []
    OPT_PARAMS = []
    VARIANT = 'generic'

    def __str__(self):
        return '{} utilities'.format(self.__class__.VARIANT)

    def __eq__(self, other):
        if type(self) is not type(other):
            return False
        for param, _ in self.__class__.EXPECTED_PARAMS + self.__class__.OPT_PARAMS:
            if not np.array_equal(getattr(self, param), getattr(other, param)):
                return False
        return True

    def __ne__(self, other):
        return not self == other

    def from_dict(self, parameters):
        """Reads the family definition from a hashmap of params.

        Parameters
        ----------
        parameters : dict
            Linking parameter names and values.

        Raises
        ------
        LookupError
            If the parameter definition is incomplete (missing parameters listed in EXPECTED_PARAMS).
        ProblemValidationError
            If the values break the family's invariants.
        """

        for param, param_type in self.__class__.EXPECTED_PARAMS:
            param_value = parameters.get(param)
            if param_value is None:
                raise LookupError('Unable to find definition of parameter "{}"'.format(param))
            else:
                setattr(self, param, param_type(param_value))
        for param, param_type in self.__class__.OPT_PARAMS:
            param_value = parameters.get(param)
            if param_value is not None:
                setattr(self, param, param_type(param_value))
        self._check()
        return self

    def to_dict(self):
        d = {'variant': self.__class__.VARIANT}
        for param, _ in self.__class__.EXPECTED_PARAMS + self.__class__.OPT_PARAMS:
            value = getattr(self, param)
            d[param] = value.tolist() if isinstance(value, np.ndarray) else value
        return d

    def _check(self):
        pass

    def check_size(self, n):
        """Raises ProblemValidationError if the family cannot describe `n` users"""
        pass

    @property
    def strong_concavity(self):
        """Modulus mu of strong concavity, None when the family has none"""
        return None

    def x_max(self, n):
        """Largest rate a user can ever respond with"""
        raise NotImplementedError

    def value(self, x):
        """Per-user utilities u_k(x_k), broadcast over the last axis"""
        raise NotImplementedError

    def response(self, prices):
        """Best responses of all users to their route prices"""
        raise NotImplementedError

    def response_k(self, k, price):
        """Best response of user k alone, bit-identical to ``response(prices)[k]``"""
        raise NotImplementedError

    def unconstrained_maximizer(self, k):
        """Maximizer of u_k on the user's box, ignoring capacities"""
        raise NotImplementedError


class QuadraticUtility(Utility):
    """u_k(x) = a_k x - (sigma n / 2) x^2

    The curvature c = sigma n makes the family strongly concave with modulus
    mu = sigma n, hence a dual with Lipschitz gradient.
    """

    EXPECTED_PARAMS = [
        ('a', _float_array),
        ('sigma', float),
    ]
    VARIANT = 'quadratic'

    def __init__(self, a=None, sigma=0.1):
        if a is not None:
            self.a = _float_array(a)
            self.sigma = float(sigma)
            self._check()

    def _check(self):
        if self.a.size == 0:
            raise ProblemValidationError('quadratic utilities need at least one coefficient "a"')
        if not self.sigma > 0:
            raise ProblemValidationError('sigma must be positive, got {}'.format(self.sigma))
        if not np.all(self.a > 0):
            raise ProblemValidationError('all coefficients "a" must be positive')

    def check_size(self, n):
        if self.a.size != n:
            raise ProblemValidationError(
                'quadratic utilities describe {} users, the network has {}'.format(self.a.size, n))

    @property
    def curvature(self):
        return self.sigma*self.a.size

    @property
    def strong_concavity(self):
        return self.curvature

    def x_max(self, n):
        return float(np.max(self.a))/self.curvature

    def value(self, x):
        x = np.asarray(x, dtype=float)
        return self.a*x - 0.5*self.curvature*x**2

    def response(self, prices):
        return np.maximum(self.a - prices, 0.)/self.curvature

    def response_k(self, k, price):
        return max(self.a[k] - price, 0.)/self.curvature

    def unconstrained_maximizer(self, k):
        return self.a[k]/self.curvature


class LogUtility(Utility):
    """u_k(x) = ln x on the box [x_lo, x_hi]

    A zero (or negative) price maps to x_hi.
    """

    EXPECTED_PARAMS = [
        ('x_lo', float),
        ('x_hi', float),
    ]
    VARIANT = 'log'

    def __init__(self, x_lo=1e-6, x_hi=None):
        self.x_lo = float(x_lo)
        if x_hi is not None:
            self.x_hi = float(x_hi)
            self._check()

    def _check(self):
        if not 0 < self.x_lo < self.x_hi:
            raise ProblemValidationError(
                'log utilities need 0 < x_lo < x_hi, got x_lo={}, x_hi={}'.format(self.x_lo, self.x_hi))

    def x_max(self, n):
        return self.x_hi

    def value(self, x):
        """ln x, -inf at a zero rate"""
        with np.errstate(divide='ignore'):
            return np.log(np.asarray(x, dtype=float))

    def response(self, prices):
        prices = np.asarray(prices, dtype=float)
        with np.errstate(divide='ignore'):
            x = np.clip(1./prices, self.x_lo, self.x_hi)
        x[prices <= 0] = self.x_hi
        return x

    def response_k(self, k, price):
        if price <= 0:
            return self.x_hi
        return min(max(1./price, self.x_lo), self.x_hi)

    def unconstrained_maximizer(self, k):
        return self.x_hi


UTILITY_CLASSES = {
    QuadraticUtility.VARIANT: QuadraticUtility,
    LogUtility.VARIANT: LogUtility,
}


def utility_from_dict(parameters):
    """Builds a utility family from its hashmap definition

    Raises
    ------
    LookupError
        If the variant is missing or unknown, or a parameter is missing.
    """
    variant = parameters.get('variant')
    if variant is None:
        raise LookupError('Unable to find definition of parameter "variant"')
    if variant not in UTILITY_CLASSES:
        raise LookupError('Unknown utility variant "{}"'.format(variant))
    return UTILITY_CLASSES[variant]().from_dict(parameters)
