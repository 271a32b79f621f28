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

from math import pi


class defaults:
    """Default values for synthesis, verification, sweeps and the CLI

    * The first set of defaults are named hardware envelopes. Each is a
      dict of PhysicalParams keyword arguments, so that
      ``PhysicalParams(**defaults.proton)`` builds one.
    * The second set are numerical tolerances.
    * The third set are defaults for the sweep and the command line.
    """
    # ########## named hardware envelopes (rad/s) #############
    #: 1H at 500 MHz with a 50 kHz drive and a band at least as wide
    proton = dict(omega0=5e8, omega1_max=5e4,
                  omega_b_minus=5e4, omega_b_plus=5e4)
    #: the 50 MHz Larmor variant quoted for the frequency modulated bounds
    low_field = dict(omega0=5e7, omega1_max=5e4,
                     omega_b_minus=5e4, omega_b_plus=5e4)
    #: small ratios so that the lab frame can be integrated numerically
    desk = dict(omega0=1000.0, omega1_max=100.0,
                omega_b_minus=200.0, omega_b_plus=200.0)
    #: envelope used when nothing is specified
    params = proton

    # ########## tolerances #############
    #: relative distance below an integer that still counts as the integer
    snap_tol = 1e-9
    #: allowed departure of |amp_up|^2 + |amp_down|^2 from 1
    norm_tol = 1e-12
    #: theta beyond [0, pi] by more than this is clamped with a warning
    theta_tol = 1e-12
    #: a schedule verifies if its fidelity is at least 1 - verify_tol
    verify_tol = 1e-6
    #: RK4 steps per carrier period when dt is not given
    samples_per_period = 200

    # ########## sweep and command line #############
    #: grid points per axis in a (theta0, thetaf) sweep
    grid = 101
    #: initial phase used by sweeps (estimates do not depend on it)
    phi0 = 0.0
    #: target phase used by sweeps (estimates do not depend on it)
    phif = 0.0
    #: start time of synthesized schedules
    t0 = 0.0
    #: one full turn
    two_pi = 2 * pi
