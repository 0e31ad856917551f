#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# test_distributed.py
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

import csv

import pytest
import numpy as np

from pynum import Solver, SolverConfig
from pynum.distributed import (
    DistributedSimulation, Message, MessageBus, MessageKind, compare_traces, run_distributed
)
from pynum.distributed.messages import link_name, user_name
from pynum.exceptions import LocalityError, TraceMismatchError, UnsupportedProblemError
from pynum.oracle import loads
from pynum.problem import (
    NetworkProblem, LogUtility, QuadraticUtility, generate_random_network, make_quadratic_utilities
)
from pynum.utils import substream


@pytest.fixture
def problem():
    network = generate_random_network(3, 10, 0)
    utilities = make_quadratic_utilities(10, 0, sigma=1.)
    return NetworkProblem(network.C, 0.995*loads(network, utilities.a/10.), utilities)


@pytest.fixture
def config():
    return SolverConfig(eps=0.1, R=0.6, max_iter=100, seed=3)


@pytest.fixture
def triangle():
    return NetworkProblem([[1, 1, 0], [0, 1, 1]], [1., 2.], LogUtility(1e-6, 2.))


def draws(seed, n, N):
    clock = substream(seed, 'solver')
    return [int(clock.integers(n)) for _ in range(N)]


@pytest.mark.parametrize('method, central', [('fgm', 'fgm'), ('sgm', 'sgm2'), ('rgem', 'rgem')])
def test_equivalence(problem, config, method, central):
    report, _ = run_distributed(method, problem, config)
    reference = Solver(problem, config).solve(central)
    assert report.method == reference.method
    assert report.iterations == reference.iterations
    assert compare_traces(report, reference) <= 1e-9
    assert np.max(np.abs(report.lam - reference.lam)) <= 1e-9
    assert np.max(np.abs(report.x - reference.x)) <= 1e-9


def test_links_know_their_own_users(triangle):
    simulation = DistributedSimulation(triangle, SolverConfig(eps=0.01, R=2., max_iter=10), 'sgm')
    assert [link.users for link in simulation.links] == [[0, 1], [1, 2]]
    assert [user.links for user in simulation.users] == [[0], [0, 1], [1]]


@pytest.mark.parametrize('method, central', [('fgm', 'fgm'), ('sgm', 'sgm2'), ('rgem', 'rgem')])
def test_asymmetric_routing(method, central):
    problem = NetworkProblem([[1, 1, 0], [0, 1, 1]], [1., 2.], QuadraticUtility([3., 4., 5.], 1.))
    config = SolverConfig(eps=0.1, R=5., max_iter=200, seed=2)
    report, _ = run_distributed(method, problem, config)
    reference = Solver(problem, config).solve(central)
    assert compare_traces(report, reference) <= 1e-9


def test_sgm_on_log_utilities(triangle):
    config = SolverConfig(eps=0.01, R=2., max_iter=500, seed=1)
    report, _ = run_distributed('sgm2', triangle, config)
    reference = Solver(triangle, config).solve('sgm2')
    assert compare_traces(report, reference) <= 1e-9


def test_fgm_messages(problem, config):
    simulation = DistributedSimulation(problem, config, 'fgm')
    report, count = simulation.run()
    nnz = problem.C.nnz
    assert sorted(simulation.bus.per_tick) == list(range(report.iterations + 1))
    assert all(v == 2*nnz for v in simulation.bus.per_tick.values())
    assert count == 2*nnz*(report.iterations + 1)
    assert report.extras['messages'] == count


def test_sgm_messages(problem, config):
    simulation = DistributedSimulation(problem, config, 'sgm')
    simulation.run()
    degrees = problem.degrees
    for t, k in enumerate(draws(config.seed, problem.n, config.max_iter)):
        assert simulation.bus.per_tick[t] == 2*degrees[k]


def test_rgem_messages(problem, config):
    simulation = DistributedSimulation(problem, config, 'rgem')
    report, _ = simulation.run()
    N = report.iterations
    degrees = problem.degrees
    for t, k in enumerate(draws(config.seed, problem.n, N), start=1):
        assert simulation.bus.per_tick[t] == 2*degrees[k]
    assert simulation.bus.per_tick[N + 1] == problem.C.nnz


def test_unknown_protocol(problem, config):
    with pytest.raises(UnsupportedProblemError):
        DistributedSimulation(problem, config, 'ellipsoid')


def test_fgm_needs_L(triangle):
    with pytest.raises(UnsupportedProblemError):
        DistributedSimulation(triangle, SolverConfig(), 'fgm')


def test_locality(triangle):
    bus = MessageBus(triangle)
    bus.send(Message(MessageKind.PRICE_UPDATE, link_name(0), user_name(1), 1., 0))
    with pytest.raises(LocalityError):
        bus.send(Message(MessageKind.PRICE_UPDATE, link_name(0), user_name(2), 1., 0))
    with pytest.raises(LocalityError):
        bus.send(Message(MessageKind.RATE_REPORT, user_name(0), link_name(1), 1., 0))


def test_delivery_order(triangle):
    bus = MessageBus(triangle)
    bus.send(Message(MessageKind.RATE_REPORT, user_name(2), link_name(1), 3., 0))
    bus.send(Message(MessageKind.RATE_REPORT, user_name(1), link_name(1), 2., 0))
    bus.send(Message(MessageKind.RATE_REPORT, user_name(1), link_name(0), 1., 0))
    inbox = bus.deliver()
    assert list(inbox) == [link_name(0), link_name(1)]
    assert [m.user for m in inbox[link_name(1)]] == [1, 2]
    assert bus.deliver() == {}


def test_message_log(triangle, tmpdir):
    config = SolverConfig(eps=0.01, R=2., max_iter=20, seed=0)
    simulation = DistributedSimulation(triangle, config, 'sgm', keep_log=True)
    _, count = simulation.run()
    path = str(tmpdir.join('messages.csv'))
    simulation.bus.write_csv(path)
    with open(path) as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ['tick', 'kind', 'from', 'to', 'payload']
    assert len(rows) == count + 1
    assert {r[1] for r in rows[1:]} == {'PriceUpdate', 'RateReport'}


def test_trace_mismatch(problem, config):
    a = Solver(problem, config.replace(record_every=1)).solve('fgm')
    b = Solver(problem, config.replace(record_every=10)).solve('fgm')
    with pytest.raises(TraceMismatchError):
        compare_traces(a, b)
