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

r"""Worst case transition times and large ratio estimates

The bound_* functions give a transition time that the corresponding
algorithm never exceeds, whatever the pair of states. The approx_*
functions estimate the one stage transition times from theta0 and thetaf
alone, which is accurate when omega0 is much larger than omega1_max and
the frequency band.
"""

from collections import namedtuple
from math import pi

import numpy

from spin_modulation.algorithms import algorithm
from spin_modulation.spin import BlochAngles
from spin_modulation.synthesis import (
    ceil_pos_int, detuning_ratio, rotation_angle)


class ApproxEstimate(namedtuple('ApproxEstimate',
                                'k_prime time_estimate error_bound')):
    r"""Estimated number of turns, the transition time it implies, and the
    largest possible distance of that time from the exact one (seconds)"""
    __slots__ = ()


def bound_apm3(params):
    r"""Worst case transition time of APM3: 4 pi/omega1_max + 7.5 pi/omega0

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> from spin_modulation.defaults import defaults
    >>> round(bound_apm3(PhysicalParams(**defaults.proton)), 7)
    0.0002514
    """
    return 4 * pi / params.omega1_max + 7.5 * pi / params.omega0


def bound_apm1(params):
    r"""Worst case transition time of APM1: 4 pi/omega1_max + 6 pi/omega0"""
    return 4 * pi / params.omega1_max + 6 * pi / params.omega0


def bound_fapm(params):
    r"""Worst case transition time of FAPM2 and FAPM1

    pi / min(omega1_max, omega_b_minus, omega_b_plus) + 8 pi/omega0, which
    is inf if the frequency band is empty

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> bound_fapm(PhysicalParams(1000, 100, 0, 200))
    inf
    """
    with numpy.errstate(divide='ignore'):
        return float(pi / numpy.float64(params.omega_min)
                     + 8 * pi / params.omega0)


def bound(params, algo):
    r"""Worst case transition time of any algorithm constant

    The hybrid scheduler never does worse than the better of its two
    candidates; the simplified hybrid may pick either.
    """
    bounds = {algorithm.APM3: bound_apm3,
              algorithm.APM1: bound_apm1,
              algorithm.FAPM2: bound_fapm,
              algorithm.FAPM1: bound_fapm}
    if algo in bounds:
        return bounds[algo](params)
    if algo == algorithm.HYBRID:
        return min(bound_apm1(params), bound_fapm(params))
    if algo == algorithm.HYBRID_SIMPLE:
        return max(bound_apm1(params), bound_fapm(params))
    raise ValueError("Unknown algorithm {:}".format(algo))


def feasible_within(params, T, algo):
    r"""True if algo is guaranteed to reach any target within T seconds

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> from spin_modulation.defaults import defaults
    >>> p = PhysicalParams(**defaults.proton)
    >>> feasible_within(p, 1e-4, algorithm.APM1)
    False
    >>> feasible_within(p, 1e-4, algorithm.FAPM1)
    True
    """
    return bool(bound(params, algo) <= T)


def k2_prime(params, theta0, thetaf):
    r"""Estimated number of turns of APM1, ignoring the phases

    Smallest positive k >= rotation_angle(theta0, thetaf) omega0 /
    (2 pi omega1_max). Works on numpy arrays.
    """
    g = rotation_angle(theta0, thetaf)
    return ceil_pos_int(g * params.omega0 / (2 * pi * params.omega1_max))


def k4_prime(params, theta0, thetaf):
    r"""Estimated number of turns of FAPM1, ignoring the phases

    Smallest positive k >= detuning_ratio(params, (theta0 + thetaf)/2).
    Works on numpy arrays. Raises ValueError if the band is empty.
    """
    if params.band_min == 0:
        raise ValueError("Frequency modulation needs a non zero band")
    return ceil_pos_int(detuning_ratio(params,
                                       (numpy.asarray(theta0) + thetaf) / 2))


def approx_apm1(params, init, target):
    r"""Estimate the APM1 transition time from theta0 and thetaf

    Returns
    -------
    ApproxEstimate with error_bound 4 pi/omega0

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> from spin_modulation.defaults import defaults
    >>> p = PhysicalParams(**defaults.proton)
    >>> e = approx_apm1(p, (pi / 4, 0), (3 * pi / 4, 0))
    >>> e.k_prime, round(e.time_estimate, 8)
    (2500, 3.142e-05)
    """
    init, target = BlochAngles(*init), BlochAngles(*target)
    k = k2_prime(params, init.theta, target.theta)
    w0 = params.omega0
    return ApproxEstimate(k, 2 * k * pi / w0, 4 * pi / w0)


def approx_fapm1(params, init, target):
    r"""Estimate the FAPM1 transition time from theta0 and thetaf

    Returns
    -------
    ApproxEstimate with error_bound 6 pi/omega0
    """
    init, target = BlochAngles(*init), BlochAngles(*target)
    k = k4_prime(params, init.theta, target.theta)
    w0 = params.omega0
    return ApproxEstimate(k, 2 * k * pi / w0, 6 * pi / w0)
