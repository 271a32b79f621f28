# Copyright (C) 2026  The spin_modulation authors

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

r"""Transition times over a (theta0, thetaf) grid

The estimated quantities depend on theta0 and thetaf only. The exact ones
also depend on the phases, which are held fixed over the grid.
"""

from math import pi

import numpy
import pandas as pd

from spin_modulation.bounds import k2_prime, k4_prime
from spin_modulation.defaults import defaults
from spin_modulation.synthesis import (
    ceil_pos_int, detuning_ratio, rotation_angle)

#: quantities understood by sweep_grid
quantities = ('apm1', 'fapm1', 'diff', 'hybrid-min',
              'apm1-exact', 'fapm1-exact')


def apm1_times(params, theta0, thetaf, phi0, phif):
    r"""Exact APM1 transition times, vectorized over theta0 and thetaf"""
    g = rotation_angle(theta0, thetaf)
    k2 = ceil_pos_int(g * params.omega0 / (2 * pi * params.omega1_max)
                      + (phif - phi0) / (2 * pi))
    return (2 * k2 * pi + phi0 - phif) / params.omega0


def fapm1_times(params, theta0, thetaf, phi0, phif):
    r"""Exact FAPM1 transition times, vectorized over theta0 and thetaf"""
    if params.band_min == 0:
        raise ValueError("Frequency modulation needs a non zero band")
    theta_u = (numpy.asarray(theta0) + thetaf) / 2
    pc = pi * numpy.cos(theta_u)
    k4 = ceil_pos_int(detuning_ratio(params, theta_u)
                      + (phif - phi0 - pc) / (2 * pi))
    return (2 * k4 * pi - phif + phi0 + pc) / params.omega0


def sweep_grid(params, quantity='apm1', n=None, phi0=None, phif=None):
    r"""Tabulate a transition time over an n x n grid of theta0 and thetaf

    Parameters
    ----------
    params : PhysicalParams
    quantity : string
        'apm1' or 'fapm1' for the estimated one stage times, 'diff' for
        fapm1 minus apm1, 'hybrid-min' for the smaller of the two, and
        'apm1-exact' or 'fapm1-exact' for the exact times
    n : int
        points per axis, from 0 to pi inclusive (defaults.grid if None)
    phi0, phif : float
        phases used by the exact quantities (defaults.phi0 and
        defaults.phif if None)

    Returns
    -------
    pandas DataFrame with columns theta0, thetaf, value (seconds), theta0
    varying slowest

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> df = sweep_grid(PhysicalParams(**defaults.desk), 'fapm1', n=3)
    >>> list(df.columns), len(df)
    (['theta0', 'thetaf', 'value'], 9)
    """
    n = defaults.grid if n is None else int(n)
    phi0 = defaults.phi0 if phi0 is None else phi0
    phif = defaults.phif if phif is None else phif
    phi0, phif = phi0 % defaults.two_pi, phif % defaults.two_pi
    if n < 2:
        raise ValueError("Grid needs at least 2 points per axis, got {:}"
                         .format(n))
    if quantity not in quantities:
        raise ValueError("Unknown quantity {:}; expected one of {:}".format(
            quantity, ', '.join(quantities)))
    theta = numpy.linspace(0, pi, n)
    theta0, thetaf = (x.ravel() for x in
                      numpy.meshgrid(theta, theta, indexing='ij'))
    w0 = params.omega0
    if quantity == 'apm1-exact':
        value = apm1_times(params, theta0, thetaf, phi0, phif)
    elif quantity == 'fapm1-exact':
        value = fapm1_times(params, theta0, thetaf, phi0, phif)
    else:
        t2 = 2 * pi * k2_prime(params, theta0, thetaf) / w0
        if quantity == 'apm1':
            value = t2
        else:
            t4 = 2 * pi * k4_prime(params, theta0, thetaf) / w0
            value = {'fapm1': t4,
                     'diff': t4 - t2,
                     'hybrid-min': numpy.minimum(t2, t4)}[quantity]
    return pd.DataFrame({'theta0': theta0, 'thetaf': thetaf, 'value': value})
