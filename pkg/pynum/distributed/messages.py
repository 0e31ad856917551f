#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# messages.py
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
from enum import Enum

from pynum.exceptions import LocalityError


def link_name(j):
    return 'link_{}'.format(j)


def user_name(k):
    return 'user_{}'.format(k)


def actor_index(name):
    return int(name.split('_')[1])


class MessageKind(Enum):
    PRICE_UPDATE = 'PriceUpdate'
    RATE_REPORT = 'RateReport'


class Message(object):
    """A scalar exchanged between a link and a user during one tick

    A PriceUpdate carries the link price from a link to a user, a RateReport
    the user rate from a user to a link.
    """

    __slots__ = ('kind', 'sender', 'receiver', 'payload', 'tick')

    def __init__(self, kind, sender, receiver, payload, tick):
        self.kind = kind
        self.sender = sender
        self.receiver = receiver
        self.payload = payload
        self.tick = tick

    def __repr__(self):
        return 'Message({}, {} -> {}, {}, tick={})'.format(
            self.kind.value, self.sender, self.receiver, self.payload, self.tick)

    @property
    def link(self):
        return actor_index(self.sender if self.kind is MessageKind.PRICE_UPDATE else self.receiver)

    @property
    def user(self):
        return actor_index(self.receiver if self.kind is MessageKind.PRICE_UPDATE else self.sender)


class MessageBus(object):
    """
    Synchronous message exchange between link and user actors

    Messages sent during a phase are held until :meth:`deliver`, which hands
    them out sorted by link index, then user index.

    Attributes
    ----------
    log: list of Message
        every message sent, when logging is on
    per_tick: dict
        tick -> number of messages sent
    total: int
        number of messages sent

    Raises
    ------
    LocalityError
        When a message is addressed across a (link, user) pair outside the
        routing matrix.
    """

    def __init__(self, problem, keep_log=False):
        self.edges = set(zip(*problem.C.nonzero()))
        self.keep_log = keep_log
        self.log = []
        self.per_tick = {}
        self.total = 0
        self._pending = []

    def send(self, message):
        if (message.link, message.user) not in self.edges:
            raise LocalityError('link {} and user {} are not connected'.format(message.link, message.user))
        self._pending.append(message)
        self.per_tick[message.tick] = self.per_tick.get(message.tick, 0) + 1
        self.total += 1
        if self.keep_log:
            self.log.append(message)

    def deliver(self):
        """Pending messages grouped by receiver, each group in (link, user) order"""
        inbox = {}
        for message in sorted(self._pending, key=lambda msg: (msg.link, msg.user)):
            inbox.setdefault(message.receiver, []).append(message)
        self._pending = []
        return inbox

    def write_csv(self, path):
        """Dumps the log as `tick,kind,from,to,payload` rows"""
        with open(path, 'w', newline='') as fh:
            writer = csv.writer(fh, lineterminator='\n')
            writer.writerow(['tick', 'kind', 'from', 'to', 'payload'])
            for message in self.log:
                writer.writerow([message.tick, message.kind.value, message.sender, message.receiver,
                                 repr(float(message.payload))])
