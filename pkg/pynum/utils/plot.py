#! /usr/bin/env python3
# -*- coding:utf8 -*-
#
# plot.py
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

import matplotlib
from matplotlib.figure import Figure
import numpy as np

from pynum.exceptions import EmptyTraceError

SVG_RC = {
    'svg.hashsalt': 'pynum',
    'svg.fonttype': 'path',
}


def gap_series(report):
    """Recorded iterations and |gap|, the gap to the best dual value when no primal estimate was recorded"""
    iterations = np.array([r.iteration for r in report.history])
    if all(r.gap is not None for r in report.history):
        gaps = np.array([abs(r.gap) for r in report.history])
    else:
        phi = np.array([r.phi for r in report.history])
        gaps = phi - phi.min()
    return iterations, gaps


def plot_history(ax_gap, ax_feas, report, label=None):
    """
    Plots the convergence history of one report on two given axes

    Parameters
    ----------
    ax_gap, ax_feas: matplotlib.axes.Axes
        axes receiving the gap and the feasibility violation
    report: SolverReport
        report with a non-empty history
    label: str, optional
        legend entry, defaults to the method id
    """
    label = report.method if label is None else label
    iterations, gaps = gap_series(report)
    ax_gap.plot(iterations, gaps, lw=1., label=label)
    feas = [(r.iteration, r.feas) for r in report.history if r.feas is not None]
    if feas:
        it, values = zip(*feas)
        ax_feas.plot(it, values, lw=1., label=label)


def plot_convergence(reports, out):
    """Writes gap and feasibility against iteration for all reports as an SVG file

    The output bytes only depend on the reports.

    Raises
    ------
    EmptyTraceError
        If no report is given or one of them has an empty history.
    """
    if not reports:
        raise EmptyTraceError('nothing to plot')
    for report in reports:
        if not report.history:
            raise EmptyTraceError('report of {} has an empty history'.format(report.method))
    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(8, 6))
        ax_gap, ax_feas = fig.subplots(2, 1, sharex=True)
        for report in reports:
            plot_history(ax_gap, ax_feas, report)
        ax_gap.set_yscale('log', nonpositive='mask')
        ax_feas.set_yscale('log', nonpositive='mask')
        ax_gap.set_ylabel('gap')
        ax_feas.set_ylabel('feasibility violation')
        ax_feas.set_xlabel('iteration')
        ax_gap.legend()
        fig.savefig(out, format='svg', metadata={'Date': None})
    return out
