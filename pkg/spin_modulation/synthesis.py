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

r"""Pulse design algorithms for exact spin state transfer

Each synth_* function maps a hardware envelope, an initial and a target
state to a Schedule that carries the initial state exactly onto the
target (up to global phase) under the lab frame equation solved by
propagator.propagate.

* APM3: free precession, a resonant pulse at full amplitude, free
  precession
* APM1: one resonant pulse whose amplitude and phase are designed
* FAPM2: free precession, then one detuned pulse
* FAPM1: one detuned pulse whose amplitude, phase and carrier frequency
  are designed

Each algorithm picks the smallest admissible positive integer k for the
number of Larmor turns and the transition time follows from k.
"""

from collections import namedtuple
from math import cos, floor, pi, sin

import numpy
from numpy import where

from spin_modulation.algorithms import algorithm
from spin_modulation.defaults import defaults
from spin_modulation.propagator import PulseSegment, Schedule
from spin_modulation.spin import BlochAngles


def _where(condition, x, y):
    # numpy.where for arrays, a plain choice for scalars and 0-d arrays
    if numpy.ndim(condition):
        return where(condition, x, y)
    return x if condition else y


def ceil_pos_int(x):
    r"""Smallest positive integer k with k >= x

    A value within defaults.snap_tol (relative) of an integer is treated as
    that integer, so that float noise in x never adds a whole turn.

    Parameters
    ----------
    x : float or numpy array

    Returns
    -------
    int or numpy array of int

    Examples
    --------
    >>> ceil_pos_int(2500.5)
    2501
    >>> ceil_pos_int(-3.2)
    1
    >>> ceil_pos_int(5.0), ceil_pos_int(5.0 + 1e-12), ceil_pos_int(5.001)
    (5, 5, 6)
    >>> ceil_pos_int(numpy.array([0.2, 1.5, 7.0]))
    array([1, 2, 7])
    """
    x = numpy.asarray(x, dtype=float)
    n = numpy.round(x)
    snap = abs(x - n) <= defaults.snap_tol * numpy.maximum(1.0, abs(x))
    k = numpy.maximum(_where(snap, n, numpy.ceil(x)), 1).astype(int)
    return k.item() if k.ndim == 0 else k


class PhysicalParams(namedtuple(
        'PhysicalParams', 'omega0 omega1_max omega_b_minus omega_b_plus')):
    r"""Hardware envelope, all in rad/s

    Parameters
    ----------
    omega0 : float
        Larmor frequency, > 0
    omega1_max : float
        largest drive amplitude, > 0
    omega_b_minus, omega_b_plus : float
        the carrier may range over [omega0 - omega_b_minus,
        omega0 + omega_b_plus]. Both >= 0 and omega_b_minus < omega0

    Examples
    --------
    >>> PhysicalParams(**defaults.desk).band_min
    200.0
    >>> PhysicalParams(1000, 0, 10, 10)
    Traceback (most recent call last):
    ...
    ValueError: omega1_max must be positive, got 0.0
    """
    __slots__ = ()

    def __new__(cls, omega0, omega1_max, omega_b_minus=0.0, omega_b_plus=0.0):
        omega0, omega1_max = float(omega0), float(omega1_max)
        omega_b_minus, omega_b_plus = float(omega_b_minus), float(omega_b_plus)
        if not omega0 > 0:
            raise ValueError("omega0 must be positive, got {:}".format(omega0))
        if not omega1_max > 0:
            raise ValueError(
                "omega1_max must be positive, got {:}".format(omega1_max))
        if not (omega_b_minus >= 0 and omega_b_plus >= 0):
            raise ValueError("Negative frequency band ({:}, {:})".format(
                omega_b_minus, omega_b_plus))
        if not omega_b_minus < omega0:
            raise ValueError(
                "omega_b_minus={:} would allow a non positive carrier"
                .format(omega_b_minus))
        return super().__new__(cls, omega0, omega1_max,
                               omega_b_minus, omega_b_plus)

    @property
    def band_min(self):
        r"""min(omega_b_minus, omega_b_plus)"""
        return min(self.omega_b_minus, self.omega_b_plus)

    @property
    def omega_min(self):
        r"""min(omega1_max, omega_b_minus, omega_b_plus)"""
        return min(self.omega1_max, self.band_min)


class SynthesisResult(namedtuple('SynthesisResult',
                                 'schedule algorithm k_index phi_k')):
    r"""Output of a pulse design algorithm

    Attributes
    ----------
    schedule : Schedule
    algorithm : int
        one of algorithm.APM3, APM1, FAPM2, FAPM1
    k_index : int
        the number of turns k chosen by the algorithm, >= 1
    phi_k : float
        Larmor phase accumulated over the designed pulse and the free
        precession that follows it (radians)
    """
    __slots__ = ()

    @property
    def transition_time(self):
        r"""Total schedule duration t_f - t0 in seconds"""
        return self.schedule.duration

    @property
    def tag(self):
        r"""Name of the algorithm that produced the schedule"""
        return algorithm.name(self.algorithm)


def _angles(init, target):
    return BlochAngles(*init), BlochAngles(*target)


def _t0(t0):
    return defaults.t0 if t0 is None else float(t0)


def rotation_angle(theta0, thetaf, improved=True):
    r"""Nutation angle of a resonant pulse taking theta0 to thetaf

    thetaf - theta0 when it is non negative and improved is True,
    otherwise 4 pi + thetaf - theta0. Works on numpy arrays.

    Examples
    --------
    >>> rotation_angle(0.0, 1.0), rotation_angle(1.0, 0.0) == 4 * pi - 1
    (1.0, True)
    """
    forward = numpy.logical_and(improved, numpy.asarray(thetaf >= theta0))
    return _where(forward, thetaf - theta0, 4 * pi + thetaf - theta0)


def detuning_ratio(params, theta_u):
    r"""The larger of the amplitude and detuning constraints on the number
    of turns of a detuned pulse with tilt theta_u

    max(omega0 sin(theta_u) / (2 omega1_max),
    omega0 |cos(theta_u)| / (2 min(omega_b_minus, omega_b_plus)))

    A zero band gives inf (nan if cos(theta_u) is also 0).
    """
    with numpy.errstate(divide='ignore', invalid='ignore'):
        amplitude = (params.omega0 * numpy.sin(theta_u)
                     / (2 * params.omega1_max))
        detuning = (params.omega0 * abs(numpy.cos(theta_u))
                    / (2 * numpy.float64(params.band_min)))
    return numpy.maximum(amplitude, detuning)


def apm3_design(params, init, target, improved=True):
    r"""Return (k1, t1 - t0, rotation angle) of the three stage design"""
    init, target = _angles(init, target)
    w0 = params.omega0
    g = rotation_angle(init.theta, target.theta, improved)
    if improved and init.phi >= pi / 2:
        wait = (init.phi - pi / 2) / w0
    else:
        wait = (init.phi + 3 * pi / 2) / w0
    k1 = ceil_pos_int(g * w0 / (2 * pi * params.omega1_max) - 0.25
                      + target.phi / (2 * pi))
    return k1, wait, g


def apm1_design(params, init, target, improved=True):
    r"""Return (k2, phi_k, rotation angle) of the one stage resonant design

    phi_k = 2 k2 pi + phi0 - phif is the Larmor phase swept by the pulse.

    Examples
    --------
    >>> p = PhysicalParams(**defaults.proton)
    >>> init, target = (pi / 4, pi / 4), (3 * pi / 4, 5 * pi / 4)
    >>> k2, phi_k, g = apm1_design(p, init, target)
    >>> k2, round(phi_k / pi, 9)
    (2501, 5001.0)
    """
    init, target = _angles(init, target)
    w0 = params.omega0
    g = rotation_angle(init.theta, target.theta, improved)
    k2 = ceil_pos_int(g * w0 / (2 * pi * params.omega1_max)
                      + (target.phi - init.phi) / (2 * pi))
    return k2, 2 * k2 * pi + init.phi - target.phi, g


def _fapm_design(params, init, target, phase_offset):
    # phase_offset is 0 for the two stage design and phi0 for the one stage
    init, target = _angles(init, target)
    if params.band_min == 0:
        raise ValueError("Frequency modulation needs a non zero band, got "
                         "omega_b_minus={:}, omega_b_plus={:}".format(
                             params.omega_b_minus, params.omega_b_plus))
    theta_u = (init.theta + target.theta) / 2
    pc = pi * cos(theta_u)
    r_b = (target.phi - phase_offset - pc) / (2 * pi)
    k = ceil_pos_int(detuning_ratio(params, theta_u).item() + r_b)
    return k, 2 * k * pi - target.phi + phase_offset + pc, theta_u


def fapm2_design(params, init, target):
    r"""Return (k3, phi_k, theta_u) of the two stage detuned design"""
    return _fapm_design(params, init, target, 0.0)


def fapm1_design(params, init, target):
    r"""Return (k4, phi_k, theta_u) of the one stage detuned design

    Examples
    --------
    >>> p = PhysicalParams(**defaults.proton)
    >>> init, target = (pi / 4, pi / 4), (3 * pi / 4, 5 * pi / 4)
    >>> k4, phi_k, _ = fapm1_design(p, init, target)
    >>> k4, round(phi_k / pi, 9)
    (5001, 10001.0)
    """
    init = BlochAngles(*init)
    return _fapm_design(params, init, target, init.phi)


def _detuned_pulse(params, phi_k, theta_u, turns):
    # amplitude and carrier of a pulse sweeping phi_k of Larmor phase
    w0 = params.omega0
    omega1 = min(w0 * pi * sin(theta_u) / phi_k, params.omega1_max)
    omega_rf = min(max(turns * w0 / phi_k, w0 - params.omega_b_minus),
                   w0 + params.omega_b_plus)
    return omega1, omega_rf


def synth_apm3(params, init, target, t0=None, improved=True):
    r"""Three stage amplitude-phase modulation

    Free precession until the phase of the state is pi/2 (mod 2 pi), a
    resonant pulse at omega1_max nutating theta by the rotation angle, and
    free precession until the phase reaches phif.

    Parameters
    ----------
    params : PhysicalParams
    init, target : BlochAngles or (theta, phi) tuple
    t0 : float
        start time (defaults.t0 if None)
    improved : boolean
        if False the first wait is always (phi0 + 3 pi/2)/omega0 and the
        rotation angle is always 4 pi + thetaf - theta0

    Returns
    -------
    SynthesisResult

    Examples
    --------
    >>> p = PhysicalParams(**defaults.desk)
    >>> r = synth_apm3(p, (pi / 2, pi), (pi, 0))
    >>> r.k_index, round(r.transition_time / (7 * pi / 1000), 12)
    (3, 1.0)
    """
    t0 = _t0(t0)
    init, target = _angles(init, target)
    w0, w1 = params.omega0, params.omega1_max
    k1, wait, g = apm3_design(params, init, target, improved)
    t1 = t0 + wait
    pulse = g / w1
    phi_k = 2 * k1 * pi + pi / 2 - target.phi
    tail = max(phi_k / w0 - pulse, 0.0)
    segments = [PulseSegment(wait, 0.0, w0),
                PulseSegment(pulse, w1, w0, -w0 * t1),
                PulseSegment(tail, 0.0, w0)]
    return SynthesisResult(Schedule(t0, segments), algorithm.APM3, k1, phi_k)


def synth_apm1(params, init, target, t0=None, improved=True):
    r"""One stage amplitude-phase modulation

    A single resonant pulse with phase pi/2 - phi0 at t0 and amplitude
    chosen so that it nutates theta by the rotation angle while the Larmor
    phase sweeps phi_k.

    Parameters
    ----------
    params : PhysicalParams
    init, target : BlochAngles or (theta, phi) tuple
    t0 : float
        start time (defaults.t0 if None)
    improved : boolean
        if False the rotation angle is always 4 pi + thetaf - theta0

    Returns
    -------
    SynthesisResult

    Examples
    --------
    >>> p = PhysicalParams(**defaults.desk)
    >>> r = synth_apm1(p, (pi / 2, 0), (pi / 2, 0))
    >>> r.k_index, r.schedule.segments[0].omega1
    (1, 0.0)
    >>> round(r.transition_time / (2 * pi / 1000), 12)
    1.0
    """
    t0 = _t0(t0)
    init, target = _angles(init, target)
    w0 = params.omega0
    k2, phi_k, g = apm1_design(params, init, target, improved)
    omega1 = min(g * w0 / phi_k, params.omega1_max)
    phi1 = pi / 2 - init.phi
    seg = PulseSegment(phi_k / w0, omega1, w0, phi1 - w0 * t0)
    return SynthesisResult(Schedule(t0, [seg]), algorithm.APM1, k2, phi_k)


def synth_fapm2(params, init, target, t0=None):
    r"""Two stage frequency-amplitude-phase modulation

    Free precession until the phase of the state is 0 (mod 2 pi), then one
    pulse about the axis tilted (theta0 + thetaf)/2 from z, detuned so that
    it turns the state by exactly pi about that axis.

    Parameters
    ----------
    params : PhysicalParams
        the band must not be empty
    init, target : BlochAngles or (theta, phi) tuple
    t0 : float
        start time (defaults.t0 if None)

    Returns
    -------
    SynthesisResult

    Examples
    --------
    >>> p = PhysicalParams(**defaults.desk)
    >>> r = synth_fapm2(p, (pi / 2, 0), (pi / 2, 0))
    >>> seg = r.schedule.segments[-1]
    >>> r.k_index, round(seg.omega1, 9), round(seg.omega_rf, 9)
    (5, 100.0, 1000.0)
    """
    t0 = _t0(t0)
    init, target = _angles(init, target)
    w0 = params.omega0
    k3, phi_k, theta_u = fapm2_design(params, init, target)
    omega1, omega_rf = _detuned_pulse(params, phi_k, theta_u,
                                      2 * k3 * pi - target.phi)
    wait = init.phi / w0
    t1 = t0 + wait
    segments = [PulseSegment(wait, 0.0, w0),
                PulseSegment(phi_k / w0, omega1, omega_rf, -omega_rf * t1)]
    return SynthesisResult(Schedule(t0, segments), algorithm.FAPM2, k3, phi_k)


def synth_fapm1(params, init, target, t0=None):
    r"""One stage frequency-amplitude-phase modulation

    A single detuned pulse with phase -phi0 at t0 turning the state by pi
    about the axis tilted (theta0 + thetaf)/2 from z.

    Parameters
    ----------
    params : PhysicalParams
        the band must not be empty
    init, target : BlochAngles or (theta, phi) tuple
    t0 : float
        start time (defaults.t0 if None)

    Returns
    -------
    SynthesisResult
    """
    t0 = _t0(t0)
    init, target = _angles(init, target)
    w0 = params.omega0
    k4, phi_k, theta_u = fapm1_design(params, init, target)
    omega1, omega_rf = _detuned_pulse(params, phi_k, theta_u,
                                      2 * k4 * pi - target.phi + init.phi)
    seg = PulseSegment(phi_k / w0, omega1, omega_rf,
                       -init.phi - omega_rf * t0)
    return SynthesisResult(Schedule(t0, [seg]), algorithm.FAPM1, k4, phi_k)


def synthesize(params, init, target, t0=None, algo=algorithm.HYBRID):
    r"""Run the design algorithm algo

    Parameters
    ----------
    params : PhysicalParams
    init, target : BlochAngles or (theta, phi) tuple
    t0 : float
        start time (defaults.t0 if None)
    algo : int
        any constant of the algorithm class

    Returns
    -------
    SynthesisResult (for the hybrid tags the algorithm field records the
    algorithm that was selected)
    """
    # import here as hybrid builds on this module
    from spin_modulation.hybrid import hybrid_select, simplified_hybrid
    dispatch = {algorithm.APM3: synth_apm3,
                algorithm.APM1: synth_apm1,
                algorithm.FAPM2: synth_fapm2,
                algorithm.FAPM1: synth_fapm1,
                algorithm.HYBRID: hybrid_select,
                algorithm.HYBRID_SIMPLE: simplified_hybrid}
    if algo not in dispatch:
        raise ValueError("Unknown algorithm {:}".format(algo))
    return dispatch[algo](params, init, target, t0)


def worst_case_k(params, algo):
    r"""Largest k the algorithm can choose over all pairs of states

    For APM3 and APM1 this is the bound for a backward nutation
    (thetaf < theta0), which dominates. For FAPM2 and FAPM1 it is
    floor(R + 5/2) with R = omega0 / (2 min(omega1_max, omega_b_minus,
    omega_b_plus)). The improved variants are assumed.

    Examples
    --------
    >>> p = PhysicalParams(**defaults.desk)
    >>> [worst_case_k(p, a) for a in (algorithm.APM3, algorithm.APM1,
    ...                               algorithm.FAPM2, algorithm.FAPM1)]
    [21, 21, 7, 7]
    """
    ratio = params.omega0 / params.omega1_max
    if algo == algorithm.APM3:
        return ceil_pos_int(2 * ratio + 0.75)
    if algo == algorithm.APM1:
        return ceil_pos_int(2 * ratio + 1)
    if algo in (algorithm.FAPM2, algorithm.FAPM1):
        if params.band_min == 0:
            raise ValueError("Frequency modulation needs a non zero band")
        r_star = params.omega0 / (2 * params.omega_min)
        return int(floor(r_star + 2.5))
    raise ValueError("No k bound for algorithm {:}".format(
        algorithm._names.get(algo, algo)))
