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

r"""Spin-1/2 states and closed form SU(2) rotations

Conventions: the spin operators are half the standard Pauli matrices,
a state is ``cos(theta/2)|up> + exp(i phi) sin(theta/2)|down>`` and every
rotation is written ``exp(i angle S)`` (note the sign), which is the form
in which the equation of motion ``d psi/dt = i H psi`` is solved.
A Unitary2 is a 2x2 complex numpy array.
"""

import warnings
from cmath import exp as cexp, phase
from collections import namedtuple
from math import atan2, cos, pi, sin

import numpy
from numpy import array, eye, vdot

from spin_modulation.defaults import defaults

#: spin operators (half the Pauli matrices)
Sx = 0.5 * array([[0, 1], [1, 0]], dtype=complex)
Sy = 0.5 * array([[0, -1j], [1j, 0]], dtype=complex)
Sz = 0.5 * array([[1, 0], [0, -1]], dtype=complex)
I2 = eye(2, dtype=complex)


class BlochAngles(namedtuple('BlochAngles', 'theta phi')):
    r"""Polar angle theta and azimuthal phase phi of a pure spin state

    theta is clamped to [0, pi] (with a warning if it was out of range by
    more than defaults.theta_tol) and phi is wrapped into [0, 2 pi).

    Examples
    --------
    >>> a = BlochAngles(pi / 2, -pi / 2)
    >>> round(a.phi, 12) == round(3 * pi / 2, 12)
    True
    >>> BlochAngles(1.0, 4 * pi)
    BlochAngles(theta=1.0, phi=0.0)
    """
    __slots__ = ()

    def __new__(cls, theta, phi=0.0):
        theta, phi = float(theta), float(phi)
        if theta < -defaults.theta_tol or theta > pi + defaults.theta_tol:
            warnings.warn("theta={:} outside [0, pi] clamped".format(theta))
        theta = min(max(theta, 0.0), pi)
        phi = phi % defaults.two_pi
        if phi >= defaults.two_pi:  # -tiny % 2pi rounds up to 2pi
            phi = 0.0
        return super().__new__(cls, theta, phi)


class SpinState(namedtuple('SpinState', 'amp_up amp_down')):
    r"""Normalized amplitudes of |up> and |down>

    Raises ValueError if the squared amplitudes do not sum to 1 within
    defaults.norm_tol. Use SpinState.from_vector(v, normalize=True) to
    build a state from an arbitrary nonzero vector.
    """
    __slots__ = ()

    def __new__(cls, amp_up, amp_down):
        amp_up, amp_down = complex(amp_up), complex(amp_down)
        norm2 = abs(amp_up) ** 2 + abs(amp_down) ** 2
        if abs(norm2 - 1) > defaults.norm_tol:
            raise ValueError(
                "State ({:}, {:}) is not normalized: |psi|^2={:}".format(
                    amp_up, amp_down, norm2))
        return super().__new__(cls, amp_up, amp_down)

    @staticmethod
    def from_vector(v, normalize=False):
        r"""Build a state from a length 2 complex vector

        Parameters
        ----------
        v : sequence of two complex numbers
        normalize : boolean
            if True v is divided by its norm first
        """
        v = numpy.asarray(v, dtype=complex)
        if normalize:
            v = v / numpy.linalg.norm(v)
        return SpinState(v[0].item(), v[1].item())

    @property
    def vector(self):
        r"""The state as a complex numpy array of length 2"""
        return array([self.amp_up, self.amp_down], dtype=complex)


class TiltedAxis(namedtuple('TiltedAxis', 'theta_u')):
    r"""Rotation axis in the x-z plane, tilted theta_u from z

    The generator is S_theta_u = cos(theta_u) Sz + sin(theta_u) Sx
    """
    __slots__ = ()

    def __new__(cls, theta_u):
        theta_u = float(theta_u)
        if not 0 <= theta_u <= pi:
            raise ValueError(
                "theta_u={:} outside [0, pi]".format(theta_u))
        return super().__new__(cls, theta_u)

    def operator(self):
        r"""Return S_theta_u as a 2x2 complex array"""
        return cos(self.theta_u) * Sz + sin(self.theta_u) * Sx


def bloch_to_state(angles):
    r"""Return cos(theta/2)|up> + exp(i phi) sin(theta/2)|down>

    Parameters
    ----------
    angles : BlochAngles

    Returns
    -------
    SpinState

    Examples
    --------
    >>> bloch_to_state(BlochAngles(0, 0))
    SpinState(amp_up=(1+0j), amp_down=0j)
    >>> s = bloch_to_state(BlochAngles(pi / 2, pi / 2))
    >>> round(s.amp_down.imag, 12), round(abs(s.amp_up) ** 2, 12)
    (0.707106781187, 0.5)
    """
    theta, phi = angles
    return SpinState(cos(theta / 2), cexp(1j * phi) * sin(theta / 2))


def state_to_bloch(state):
    r"""Return the Bloch angles of a state, stripping its global phase

    At the poles (one amplitude exactly zero) phi is 0 by convention.

    Parameters
    ----------
    state : SpinState

    Returns
    -------
    BlochAngles

    Examples
    --------
    >>> state_to_bloch(SpinState(1, 0))
    BlochAngles(theta=0.0, phi=0.0)
    >>> a = state_to_bloch(SpinState(0.5, 0.75 ** 0.5 * cexp(1j)))
    >>> round(a.theta, 12) == round(2 * pi / 3, 12), round(a.phi, 12)
    (True, 1.0)
    """
    up, down = state
    theta = 2 * atan2(abs(down), abs(up))
    if abs(up) == 0 or abs(down) == 0:
        return BlochAngles(theta, 0.0)
    return BlochAngles(theta, phase(down) - phase(up))


def fidelity(a, b):
    r"""Return |<a|b>|, which is 1 iff a and b differ by a global phase

    Examples
    --------
    >>> fidelity(SpinState(1, 0), SpinState(0, 1))
    0.0
    >>> fidelity(SpinState(1, 0), SpinState(1j, 0))
    1.0
    """
    return min(1.0, abs(vdot(a.vector, b.vector)).item())


def su2_exp(axis, angle):
    r"""Return exp(i angle S_theta_u) in closed form

    exp(i a S) = cos(a/2) I + i sin(a/2) (cos(theta_u) sigma_z
    + sin(theta_u) sigma_x). With theta_u = pi/2 this is exp(i a Sx).

    Parameters
    ----------
    axis : TiltedAxis or float
        the axis, or its tilt theta_u in radians
    angle : float
        rotation angle in radians

    Returns
    -------
    2x2 complex numpy array

    Examples
    --------
    >>> (su2_exp(TiltedAxis(0.7), 0.0) == I2).all().item()
    True
    """
    theta_u = axis.theta_u if isinstance(axis, TiltedAxis) else axis
    c, s = cos(angle / 2), sin(angle / 2)
    nz, nx = cos(theta_u), sin(theta_u)
    return array([[c + 1j * s * nz, 1j * s * nx],
                  [1j * s * nx, c - 1j * s * nz]], dtype=complex)


def rot_z(angle):
    r"""Return exp(i angle Sz) = diag(exp(i angle/2), exp(-i angle/2))

    Applied to a state it lowers phi by angle.

    Examples
    --------
    >>> (rot_z(0.0) == I2).all().item()
    True
    >>> (abs(rot_z(2 * pi) + I2) < 1e-15).all().item()
    True
    """
    return array([[cexp(0.5j * angle), 0],
                  [0, cexp(-0.5j * angle)]], dtype=complex)


def evolve(U, state):
    r"""Apply the 2x2 unitary U to a SpinState"""
    return SpinState.from_vector(U @ state.vector)


def is_unitary(U, tol=None):
    r"""True if U^dagger U equals the identity entrywise within tol"""
    tol = defaults.norm_tol if tol is None else tol
    return bool((abs(U.conj().T @ U - I2) <= tol).all())
