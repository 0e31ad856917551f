#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# rng.py
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

"""Named random substreams.

All randomness in pynum goes through :func:`substream`: the problem
generators, the feasibility repair and the stochastic solvers each draw from
their own PCG64 stream derived from the user seed, so adding a draw in one
place never shifts the numbers drawn in another.
"""

import numpy as np

STREAMS = {
    'capacity': 0,
    'incidence': 1,
    'repair': 2,
    'utility': 3,
    'solver': 4,
}


def substream(seed, name):
    """Returns a generator for the substream `name` of `seed`

    Parameters
    ----------
    seed : int
        Non-negative user seed.
    name : str
        One of the keys of `STREAMS`.

    Raises
    ------
    LookupError
        If `name` is not a known substream.
    ValueError
        If `seed` is negative.
    """
    if name not in STREAMS:
        raise LookupError('Unknown random substream "{}"'.format(name))
    seed = int(seed)
    if seed < 0:
        raise ValueError('seed must be non-negative, got {}'.format(seed))
    sequence = np.random.SeedSequence(seed, spawn_key=(STREAMS[name],))
    return np.random.Generator(np.random.PCG64(sequence))
