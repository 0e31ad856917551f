#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# exceptions.py
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

"""Exceptions raised by pynum.

Every error carries a message naming the offending field, file or operation;
the command line interface maps them onto its exit codes.
"""


class PynumError(Exception):
    """Base class for all pynum errors"""
    pass


class ProblemFormatError(PynumError, ValueError):
    """A problem file is malformed (missing field, wrong type, bad shape)"""
    pass


class ProblemValidationError(PynumError, ValueError):
    """A problem violates a structural rule (non-positive capacity, empty column, ...)"""
    pass


class UnsupportedProblemError(PynumError):
    """The selected method cannot run on this problem"""
    pass


class DegenerateCertificateError(PynumError):
    """The accuracy certificate weights sum to zero"""
    pass


class EmptyTraceError(PynumError, ValueError):
    """Primal recovery was asked for an empty set of productive steps"""
    pass


class TraceMismatchError(PynumError, ValueError):
    """Two solver traces do not share the same recorded iterations"""
    pass


class LocalityError(PynumError):
    """A message was addressed across a (link, user) pair with no incidence"""
    pass


class SpecError(PynumError, ValueError):
    """An experiment specification is invalid"""
    pass
