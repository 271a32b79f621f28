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

import numpy
from scipy.stats import uniform

from spin_modulation.spin import BlochAngles


def _angles(u, v):
    # cos(theta) uniform on [-1, 1] and phi uniform on [0, 2 pi)
    theta = numpy.arccos(numpy.clip(2 * u - 1, -1, 1))
    return [BlochAngles(t, 2 * pi * p) for t, p in zip(theta, v)]


def random_bloch(n, random_state=None):
    r"""n states drawn uniformly from the Bloch sphere

    Parameters
    ----------
    n : int
    random_state : None, int or numpy Generator
        passed on to scipy.stats.uniform.rvs

    Returns
    -------
    list of BlochAngles

    Examples
    --------
    >>> len(random_bloch(5, random_state=1))
    5
    >>> random_bloch(3, 7) == random_bloch(3, 7)
    True
    """
    u = uniform.rvs(size=(n, 2), random_state=random_state)
    return _angles(u[:, 0], u[:, 1])


def random_pairs(n, random_state=None):
    r"""n independent (initial, target) pairs of uniform random states

    Returns
    -------
    list of tuples (BlochAngles, BlochAngles)
    """
    u = uniform.rvs(size=(n, 4), random_state=random_state)
    return list(zip(_angles(u[:, 0], u[:, 1]), _angles(u[:, 2], u[:, 3])))
