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

r"""Choosing between the one stage resonant and detuned designs

hybrid_select compares the exact Larmor phases of APM1 and FAPM1 and
returns the faster schedule. simplified_hybrid only compares theta0 with
thetaf, which agrees with the exact choice up to a few Larmor periods.
Both assume the frequency band is at least as wide as omega1_max and
warn otherwise.
"""

import warnings
from math import inf, pi

from spin_modulation.bounds import approx_apm1, approx_fapm1
from spin_modulation.spin import BlochAngles
from spin_modulation.synthesis import (
    apm1_design, fapm1_design, synth_apm1, synth_fapm1)


def check_band(params):
    r"""Warn if the band is narrower than omega1_max

    Returns
    -------
    boolean: True if the band is wide enough
    """
    if params.band_min < params.omega1_max:
        warnings.warn(
            "Frequency band min({:}, {:}) is narrower than omega1_max={:}; "
            "the hybrid choice may not be the faster one".format(
                params.omega_b_minus, params.omega_b_plus, params.omega1_max))
        return False
    return True


def hybrid_select(params, init, target, t0=None):
    r"""The faster of APM1 and FAPM1 by exact comparison of their phases

    FAPM1 is chosen only if the APM1 phase is strictly larger. An empty
    frequency band counts as an infinite FAPM1 phase, so APM1 is chosen.

    Parameters
    ----------
    params : PhysicalParams
    init, target : BlochAngles or (theta, phi) tuple
    t0 : float
        start time (defaults.t0 if None)

    Returns
    -------
    SynthesisResult

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> from spin_modulation.defaults import defaults
    >>> p = PhysicalParams(**defaults.proton)
    >>> hybrid_select(p, (3 * pi / 4, 5 * pi / 4), (pi / 4, pi / 4)).tag
    'FAPM1'
    >>> hybrid_select(p, (pi / 4, pi / 4), (3 * pi / 4, 5 * pi / 4)).tag
    'APM1'
    """
    init, target = BlochAngles(*init), BlochAngles(*target)
    check_band(params)
    _, phi_k2, _ = apm1_design(params, init, target)
    if params.band_min > 0:
        _, phi_k4, _ = fapm1_design(params, init, target)
    else:
        phi_k4 = inf
    if phi_k2 > phi_k4:
        return synth_fapm1(params, init, target, t0)
    return synth_apm1(params, init, target, t0)


def simplified_hybrid(params, init, target, t0=None):
    r"""FAPM1 if theta0 > thetaf, otherwise APM1

    APM1 is also used when the frequency band is empty.

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> from spin_modulation.defaults import defaults
    >>> p = PhysicalParams(**defaults.desk)
    >>> simplified_hybrid(p, (1.0, 0.0), (1.0, 2.0)).tag
    'APM1'
    """
    init, target = BlochAngles(*init), BlochAngles(*target)
    check_band(params)
    if init.theta > target.theta and params.band_min > 0:
        return synth_fapm1(params, init, target, t0)
    return synth_apm1(params, init, target, t0)


def hybrid_discrepancy(params, init, target, t0=None):
    r"""Extra time (seconds) spent by simplified_hybrid over hybrid_select

    Never more than 11 pi/omega0.
    """
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        exact = hybrid_select(params, init, target, t0)
        simple = simplified_hybrid(params, init, target, t0)
    return abs(exact.transition_time - simple.transition_time)


def simplified_hybrid_estimate(params, init, target):
    r"""Estimated transition time of simplified_hybrid from the thetas

    approx_fapm1 if theta0 > thetaf and the band is not empty, otherwise
    approx_apm1, matching simplified_hybrid.

    Returns
    -------
    ApproxEstimate

    Examples
    --------
    >>> from spin_modulation.synthesis import PhysicalParams
    >>> from spin_modulation.defaults import defaults
    >>> p = PhysicalParams(**defaults.proton)
    >>> e = simplified_hybrid_estimate(p, (3 * pi / 4, 0), (pi / 4, 0))
    >>> e.k_prime, round(e.error_bound * p.omega0 / pi, 9)
    (5000, 6.0)
    """
    init, target = BlochAngles(*init), BlochAngles(*target)
    if init.theta > target.theta and params.band_min > 0:
        return approx_fapm1(params, init, target)
    return approx_apm1(params, init, target)
