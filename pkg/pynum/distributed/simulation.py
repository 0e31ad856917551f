#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# simulation.py
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

"""Synchronous simulation of the decomposed methods.

One tick of the logical clock is one iteration of the method: links send
their prices to their users, users answer with their rates, links update
their prices. The monitor of the simulation reads actor states to fill the
history but never feeds anything back into the protocol.
"""

import logging
import math

import numpy as np

from pynum.core.method import Method
from pynum.distributed.actors import LinkActor, UserActor
from pynum.distributed.messages import MessageBus
from pynum.exceptions import TraceMismatchError, UnsupportedProblemError
from pynum.methods.fgm import fgm_coefficients
from pynum.methods.iterations import problem_iterations
from pynum.methods.rgem import rgem_parameters
from pynum.oracle.dual import primal_response
from pynum.utils.rng import substream

logger = logging.getLogger(__name__)

PROTOCOLS = ('fgm', 'sgm', 'rgem')
ALIASES = {'sgm2': 'sgm'}


class DistributedSimulation(Method):
    """
    Message-passing execution of a dual method

    Parameters
    ----------
    problem: NetworkProblem
    config: SolverConfig
    protocol: str
        'fgm', 'sgm' (the one-user estimator variant, also 'sgm2') or 'rgem'
    keep_log: bool
        keep every message for inspection

    Attributes
    ----------
    links: list of LinkActor
    users: list of UserActor
    bus: MessageBus
    """

    def __init__(self, problem, config, protocol, keep_log=False):
        protocol = ALIASES.get(protocol, protocol)
        if protocol not in PROTOCOLS:
            raise UnsupportedProblemError('No distributed protocol for "{}", expected one of {}'.format(
                protocol, ', '.join(PROTOCOLS)))
        self.protocol = protocol
        super().__init__(problem, config)
        if protocol in ('fgm', 'rgem') and self.constants.L is None:
            raise UnsupportedProblemError('{} needs strongly concave utilities'.format(protocol))
        self.bus = MessageBus(problem, keep_log)
        self.links = [LinkActor(j, float(problem.b[j]), problem.users_of(j).tolist()) for j in range(problem.m)]
        self.users = [UserActor(k, problem.column(k).tolist()) for k in range(problem.n)]

    @property
    def method_id(self):
        return 'sgm2' if self.protocol == 'sgm' else self.protocol

    def scheduled_iterations(self):
        return problem_iterations(self.protocol, self.problem, self.config, self.constants)

    def prices(self):
        return np.array([link.price for link in self.links])

    def rates(self):
        return np.array([user.rate for user in self.users])

    def _price_round(self, tick, users=None):
        for link in self.links:
            link.broadcast(self.bus, tick, None if users is None else [k for k in users if k in link.users])
        for name, messages in self.bus.deliver().items():
            self.users[messages[0].user].receive(messages)

    def _collect_reports(self):
        inbox = {}
        for name, messages in self.bus.deliver().items():
            inbox[messages[0].link] = messages
        return inbox

    def run(self):
        """Runs the protocol

        Returns
        -------
        report: SolverReport
        message_count: int
        """
        self._start_clock()
        report = getattr(self, '_run_' + self.protocol)()
        report.extras['messages'] = self.bus.total
        logger.info('{}: {} messages'.format(self.method_id, self.bus.total))
        return report, self.bus.total

    def _run_fgm(self):
        problem, L = self.problem, self.constants.L
        N_scheduled = self.scheduled_iterations()
        N = self.iteration_budget()
        if self.config.lambda0 is not None:
            for link, price in zip(self.links, np.maximum(self.config.lambda0, 0.)):
                link.price = link.start_price = float(price)
        A_prev = 0.
        for t in range(N + 1):
            alpha, A, tau = fgm_coefficients(t)
            self._price_round(t)
            for user in self.users:
                user.respond(problem.utilities)
                user.rate_avg = (A_prev*user.rate_avg + alpha*user.rate)/A
                user.report(self.bus, t)
            inbox = self._collect_reports()
            A_prev = A
            if self.due(t, t == N):
                x_hat = np.array([user.rate_avg for user in self.users])
                record = self.record(t, self.prices(), self.rates(), x_hat)
                if self.reached_target(record):
                    N = t
                    break
            if t == N:
                break
            for link in self.links:
                link.fgm_step(inbox.get(link.index, []), alpha, tau, L)
        x_hat = np.array([user.rate_avg for user in self.users])
        return self.report(self.prices(), x_hat, N, N_scheduled)

    def _run_sgm(self):
        problem = self.problem
        n = problem.n
        N = self.config.max_iter
        beta = self.config.R/(self.constants.M*math.sqrt(N))
        clock = substream(self.config.seed, 'solver')
        lam_sum = np.zeros(problem.m)
        executed = N
        for t in range(N):
            k = int(clock.integers(n))
            user = self.users[k]
            self._price_round(t, users=[k])
            user.respond(problem.utilities)
            user.rate_avg += n*user.rate
            user.report(self.bus, t)
            inbox = self._collect_reports()
            lam = self.prices()
            lam_sum += lam
            if self.due(t, t == N - 1):
                x_hat = np.array([u.rate_avg for u in self.users])/(t + 1)
                record = self.record(t, lam, primal_response(problem, lam), x_hat)
                if self.reached_target(record):
                    executed = t + 1
                    break
            for link in self.links:
                link.sgm_step(inbox.get(link.index, []), beta, n)
        self.extras['lam_avg'] = lam_sum/executed
        self.extras['beta'] = beta
        x_hat = np.array([u.rate_avg for u in self.users])/executed
        return self.report(self.prices(), x_hat, executed, N)

    def _run_rgem(self):
        problem = self.problem
        n = problem.n
        delta = self.config.eps/(8.*self.config.R**2)
        params = rgem_parameters(n, self.constants.L, delta)
        N_scheduled = self.scheduled_iterations()
        N = self.iteration_budget()
        clock = substream(self.config.seed, 'solver')
        activated = set()
        weight = 0.
        executed = N
        for t in range(1, N + 1):
            k = int(clock.integers(n))
            first_activation = k not in activated
            activated.add(k)
            user = self.users[k]
            for link in self.links:
                link.rgem_price(params, delta, n)
            self._price_round(t, users=[k])
            user.update_local(params.tau)
            user.respond(problem.utilities, user.local)
            user.report(self.bus, t)
            inbox = self._collect_reports()
            weight = 1. + params.alpha_bar*weight
            for link in self.links:
                link.rgem_absorb(k, inbox.get(link.index, []), first_activation, n)
                link.rgem_average(weight)
            if self.due(t, t == N):
                lam = self.prices()
                lam_bar = np.array([link.price_avg for link in self.links])
                record = self.record(t, lam, primal_response(problem, lam), primal_response(problem, lam_bar))
                if self.reached_target(record):
                    executed = t
                    break
        self.extras['delta'] = delta
        self.extras['lam_last'] = self.prices()
        # output round: links publish their averaged prices, users answer
        for link in self.links:
            link.broadcast(self.bus, executed + 1, value=link.price_avg)
        for name, messages in self.bus.deliver().items():
            self.users[messages[0].user].receive(messages)
        for user in self.users:
            user.respond(problem.utilities)
        lam_bar = np.array([link.price_avg for link in self.links])
        return self.report(lam_bar, self.rates(), executed, N_scheduled)


def run_distributed(method, problem, config, keep_log=False):
    """Runs `method` as a message-passing protocol

    Returns
    -------
    report: SolverReport
    message_count: int
    """
    return DistributedSimulation(problem, config, method, keep_log).run()


def compare_traces(report_a, report_b):
    """Largest componentwise deviation between the recorded dual iterates

    Raises
    ------
    TraceMismatchError
        If the reports were not recorded at the same iterations.
    """
    iterations_a, iterates_a = report_a.iterates()
    iterations_b, iterates_b = report_b.iterates()
    if iterations_a != iterations_b:
        raise TraceMismatchError('reports recorded different iterations ({} vs {} records)'.format(
            len(iterations_a), len(iterations_b)))
    deviation = 0.
    for lam_a, lam_b in zip(iterates_a, iterates_b):
        deviation = max(deviation, float(np.max(np.abs(lam_a - lam_b))))
    return deviation
