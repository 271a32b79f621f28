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

r"""Evolution of a spin under a piecewise constant control program

The lab frame equation is

    d psi/dt = i {w0 Sz + w1 [Sx cos(wrf t + phi) - Sy sin(wrf t + phi)]} psi

with t the absolute lab time. propagate solves it exactly segment by
segment in the frame co-rotating with the carrier; rk4_oracle integrates
it directly and is only used to cross-check propagate.
"""

import json
from cmath import exp as cexp
from collections import namedtuple
from math import atan2, ceil, hypot, pi, sqrt

import pandas as pd

from spin_modulation.defaults import defaults
from spin_modulation.spin import SpinState, rot_z, su2_exp


class PulseSegment(namedtuple('PulseSegment',
                              'duration omega1 omega_rf phi')):
    r"""One constant piece of the control program

    Parameters
    ----------
    duration : float
        seconds, >= 0
    omega1 : float
        drive amplitude in rad/s, >= 0. Zero means free precession
    omega_rf : float
        carrier frequency in rad/s, > 0
    phi : float
        carrier phase in radians, referenced to absolute lab time, so the
        drive is cos(omega_rf t + phi)
    """
    __slots__ = ()

    def __new__(cls, duration, omega1, omega_rf, phi=0.0):
        duration, omega1 = float(duration), float(omega1)
        omega_rf, phi = float(omega_rf), float(phi)
        if duration < 0:
            raise ValueError("Negative segment duration {:}".format(duration))
        if omega1 < 0:
            raise ValueError("Negative drive amplitude {:}".format(omega1))
        if omega_rf <= 0:
            raise ValueError(
                "Carrier frequency must be positive, got {:}".format(omega_rf))
        return super().__new__(cls, duration, omega1, omega_rf, phi)


class Schedule(namedtuple('Schedule', 't0 segments')):
    r"""Contiguous segments starting at t0

    Segment i starts where segment i-1 ends, so the boundaries are the
    cumulative sums of the durations.

    Examples
    --------
    >>> segs = [PulseSegment(1.0, 0, 5.0), PulseSegment(2.0, 1, 5.0)]
    >>> s = Schedule(0.0, segs)
    >>> s.boundaries()
    [0.0, 1.0, 3.0]
    >>> s.duration
    3.0
    """
    __slots__ = ()

    def __new__(cls, t0=0.0, segments=()):
        return super().__new__(cls, float(t0), tuple(segments))

    @property
    def duration(self):
        r"""Total duration t_f - t0 in seconds"""
        return float(sum(seg.duration for seg in self.segments))

    def boundaries(self):
        r"""Return [t0, t1, ..., t_f]"""
        bounds = [self.t0]
        for seg in self.segments:
            bounds.append(bounds[-1] + seg.duration)
        return bounds

    def frame(self):
        r"""Return the schedule as a DataFrame, one row per segment

        Columns are start, end, duration, omega1, omega_rf and phi
        """
        bounds = self.boundaries()
        df = pd.DataFrame(list(self.segments), columns=PulseSegment._fields)
        df.insert(0, 'start', bounds[:-1])
        df.insert(1, 'end', bounds[1:])
        return df

    def to_json(self, omega0):
        r"""Serialize to the schedule file format

        Parameters
        ----------
        omega0 : float
            Larmor frequency the schedule was designed for (rad/s)

        Returns
        -------
        string
        """
        d = dict(t0=self.t0, omega0=float(omega0),
                 segments=[seg._asdict() for seg in self.segments])
        return json.dumps(d, indent=2)

    @staticmethod
    def from_json(text):
        r"""Parse the schedule file format

        Returns
        -------
        tuple (Schedule, omega0)

        Raises ValueError if the text is not a valid schedule
        """
        try:
            d = json.loads(text)
            segments = [PulseSegment(s['duration'], s['omega1'],
                                     s['omega_rf'], s['phi'])
                        for s in d['segments']]
            return Schedule(d['t0'], segments), float(d['omega0'])
        except (KeyError, TypeError, AttributeError) as e:
            raise ValueError("Malformed schedule: {:}".format(e)) from e


class RotatingFrameParams(namedtuple('RotatingFrameParams', 'r_u theta_u')):
    r"""Rate r_u and axis tilt theta_u of the rotation seen in the frame
    co-rotating with the carrier"""
    __slots__ = ()


def rotating_frame_params(omega0, seg):
    r"""Return the rotating frame rate and axis of a segment

    r_u = sqrt((omega0 - omega_rf)^2 + omega1^2), cos(theta_u) r_u =
    omega0 - omega_rf and sin(theta_u) r_u = omega1. theta_u is 0 when
    r_u is 0.

    Examples
    --------
    >>> rotating_frame_params(1000, PulseSegment(1, 100, 1000))
    RotatingFrameParams(r_u=100.0, theta_u=1.5707963267948966)
    >>> rotating_frame_params(1000, PulseSegment(1, 0, 900))
    RotatingFrameParams(r_u=100.0, theta_u=0.0)
    """
    detuning = omega0 - seg.omega_rf
    return RotatingFrameParams(hypot(detuning, seg.omega1),
                               atan2(seg.omega1, detuning))


def segment_propagator(omega0, seg, tau=0.0, phi1=None):
    r"""Exact propagator of one segment starting at lab time tau

    Returns exp(i(omega_rf dt + phi1) Sz) exp(i r_u dt S_theta_u)
    exp(-i phi1 Sz) with dt the segment duration.

    Parameters
    ----------
    omega0 : float
        Larmor frequency (rad/s)
    seg : PulseSegment
    tau : float
        lab time at which the segment starts
    phi1 : float or None
        carrier phase referenced to the segment start. If None it is
        seg.phi + seg.omega_rf * tau

    Returns
    -------
    2x2 complex numpy array
    """
    if phi1 is None:
        phi1 = seg.phi + seg.omega_rf * tau
    rf = rotating_frame_params(omega0, seg)
    dt = seg.duration
    return (rot_z(seg.omega_rf * dt + phi1)
            @ su2_exp(rf.theta_u, rf.r_u * dt)
            @ rot_z(-phi1))


def propagate(omega0, schedule, psi0):
    r"""Evolve psi0 through every segment of a schedule analytically

    Parameters
    ----------
    omega0 : float
        Larmor frequency (rad/s)
    schedule : Schedule
    psi0 : SpinState
        state at schedule.t0

    Returns
    -------
    SpinState at the end of the schedule
    """
    psi = psi0.vector
    tau = schedule.t0
    for seg in schedule.segments:
        psi = segment_propagator(omega0, seg, tau) @ psi
        tau += seg.duration
    return SpinState.from_vector(psi)


def default_dt(omega0, schedule):
    r"""RK4 step with defaults.samples_per_period steps per period of the
    fastest of omega0 and the carriers"""
    fastest = max([omega0] + [seg.omega_rf for seg in schedule.segments])
    return 2 * pi / fastest / defaults.samples_per_period


def rk4_oracle(omega0, schedule, psi0, dt=None, full_output=False):
    r"""Integrate the lab frame equation with fixed step classic RK4

    Every segment boundary is a step boundary: a segment of duration T is
    split into ceil(T/dt) equal steps. The state is renormalized after
    every step.

    Parameters
    ----------
    omega0 : float
        Larmor frequency (rad/s)
    schedule : Schedule
    psi0 : SpinState
        state at schedule.t0
    dt : float or None
        largest step in seconds (default_dt if None). Must be positive and
        not longer than the whole schedule
    full_output : boolean
        if True also return the drift

    Returns
    -------
    SpinState, or tuple (SpinState, drift) if full_output is True. drift
    is the largest single step departure of the norm from 1 before
    renormalization
    """
    dt = default_dt(omega0, schedule) if dt is None else dt
    if not dt > 0:
        raise ValueError("RK4 step must be positive, got {:}".format(dt))
    if schedule.duration > 0 and dt > schedule.duration:
        raise ValueError("RK4 step {:} longer than the schedule ({:} s)"
                         .format(dt, schedule.duration))
    up, down = psi0
    drift = 0.0
    tau = schedule.t0
    for seg in schedule.segments:
        if seg.duration == 0:
            continue
        n = ceil(seg.duration / dt)
        h = seg.duration / n
        w1, wrf = seg.omega1, seg.omega_rf
        half_turn = cexp(0.5j * wrf * h)

        def rhs(e, u, d):
            # e = exp(i(wrf t + phi)) is the carrier at the stage time
            return (0.5j * (omega0 * u + w1 * e * d),
                    0.5j * (w1 * e.conjugate() * u - omega0 * d))

        for i in range(n):
            e0 = cexp(1j * (wrf * (tau + i * h) + seg.phi))
            e_mid = e0 * half_turn
            e1 = e_mid * half_turn
            k1u, k1d = rhs(e0, up, down)
            k2u, k2d = rhs(e_mid, up + 0.5 * h * k1u, down + 0.5 * h * k1d)
            k3u, k3d = rhs(e_mid, up + 0.5 * h * k2u, down + 0.5 * h * k2d)
            k4u, k4d = rhs(e1, up + h * k3u, down + h * k3d)
            up += h / 6 * (k1u + 2 * k2u + 2 * k3u + k4u)
            down += h / 6 * (k1d + 2 * k2d + 2 * k3d + k4d)
            norm = sqrt(abs(up) ** 2 + abs(down) ** 2)
            drift = max(drift, abs(norm - 1))
            up, down = up / norm, down / norm
        tau += seg.duration
    state = SpinState(up, down)
    return (state, drift) if full_output else state
