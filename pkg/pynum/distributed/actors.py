#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# actors.py
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

"""Link and user actors.

Actors only hold what the decomposed methods let them see: a link knows its
capacity, its price and the rates reported by its own users; a user knows
the prices of the links on its route and its own rate.
"""

from pynum.distributed.messages import Message, MessageKind, link_name, user_name


class LinkActor(object):
    """
    A link of the network

    Attributes
    ----------
    index: int
    capacity: float
    users: list of int
        users crossing the link, ascending
    price: float
        current link price
    grad_sum: float
        weighted sum of past gradient components (fast gradient method)
    y: dict
        last gradient term of each incident user (gradient extrapolation)
    y_sum, last_change: float
        running sum of the gradient terms of all users and its last increment
    price_avg: float
        weighted average of the prices (gradient extrapolation)
    """

    def __init__(self, index, capacity, users, price=0.):
        self.index = index
        self.name = link_name(index)
        self.capacity = capacity
        self.users = list(users)
        self.price = price
        self.start_price = price
        self.grad_sum = 0.
        self.y = {k: 0. for k in self.users}
        self.y_sum = 0.
        self.last_change = 0.
        self.price_avg = 0.

    def __repr__(self):
        return 'LinkActor({}, price={})'.format(self.index, self.price)

    def broadcast(self, bus, tick, users=None, value=None):
        """Sends the price (or `value`) to `users`, all incident users by default"""
        payload = self.price if value is None else value
        for k in (self.users if users is None else users):
            bus.send(Message(MessageKind.PRICE_UPDATE, self.name, user_name(k), payload, tick))

    def load(self, reports):
        total = 0.
        for message in reports:
            total += message.payload
        return total

    def fgm_step(self, reports, alpha, tau, L):
        g = self.capacity - self.load(reports)
        y = max(self.price - g/L, 0.)
        self.grad_sum += alpha*g
        z = max(self.start_price - self.grad_sum/L, 0.)
        self.price = tau*z + (1. - tau)*y

    def sgm_step(self, reports, beta, n):
        g = self.capacity
        for message in reports:
            g = self.capacity - n*message.payload
        self.price = max(self.price - beta*g, 0.)

    def rgem_price(self, params, delta, n):
        extrapolated = self.y_sum + params.alpha*self.last_change
        self.price = max(params.eta*self.price - extrapolated/n, 0.)/(delta + params.eta)

    def rgem_absorb(self, user, reports, first_activation, n):
        """Stores the new gradient term of the user drawn this tick

        Users off the link contribute b_j from their first activation on.
        """
        if reports:
            y_new = self.capacity - n*reports[0].payload
            y_old = self.y[user]
            self.y[user] = y_new
        else:
            y_new = self.capacity
            y_old = 0. if first_activation else self.capacity
        self.last_change = y_new - y_old
        self.y_sum += self.last_change

    def rgem_average(self, weight):
        self.price_avg = self.price_avg + (self.price - self.price_avg)/weight


class UserActor(object):
    """
    A user of the network

    Attributes
    ----------
    index: int
    links: list of int
        links of the route, ascending
    prices: dict
        last price received from each link
    local: dict
        local price of each link (gradient extrapolation)
    rate: float
        last response
    rate_avg: float
        running primal average kept by the user
    """

    def __init__(self, index, links):
        self.index = index
        self.name = user_name(index)
        self.links = list(links)
        self.prices = {j: 0. for j in self.links}
        self.local = {j: 0. for j in self.links}
        self.rate = 0.
        self.rate_avg = 0.

    def __repr__(self):
        return 'UserActor({}, rate={})'.format(self.index, self.rate)

    def receive(self, messages):
        for message in messages:
            self.prices[message.link] = message.payload

    def route_price(self, prices=None):
        prices = self.prices if prices is None else prices
        total = 0
        for j in self.links:
            total += prices[j]
        return total

    def respond(self, utilities, prices=None):
        self.rate = utilities.response_k(self.index, self.route_price(prices))
        return self.rate

    def update_local(self, tau):
        for j in self.links:
            self.local[j] = (self.prices[j] + tau*self.local[j])/(1. + tau)

    def report(self, bus, tick):
        for j in self.links:
            bus.send(Message(MessageKind.RATE_REPORT, self.name, link_name(j), self.rate, tick))
