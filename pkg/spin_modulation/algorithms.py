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

class algorithm:
    r"""Defines constants to denote the pulse design algorithms.
    Used as the algorithm tag of SynthesisResult and as the algorithm
    argument of synthesize, worst_case_k and feasible_within

    Attributes
    ----------
    APM3 : int
        Equals 1. Three stage amplitude-phase modulation:
        free precession, a resonant pulse, free precession
    APM1 : int
        Equals 2. One resonant pulse with a designed phase and amplitude
    FAPM2 : int
        Equals 3. Free precession, then one detuned pulse
    FAPM1 : int
        Equals 4. One detuned pulse with designed phase, amplitude and
        carrier frequency
    HYBRID : int
        Equals 5. The faster of APM1 and FAPM1 by exact comparison
    HYBRID_SIMPLE : int
        Equals 6. FAPM1 if theta0 > thetaf else APM1
    """
    APM3 = 1
    APM1 = 2
    FAPM2 = 3
    FAPM1 = 4
    HYBRID = 5
    HYBRID_SIMPLE = 6

    _names = {1: 'APM3', 2: 'APM1', 3: 'FAPM2', 4: 'FAPM1',
              5: 'HYBRID', 6: 'HYBRID_SIMPLE'}

    @staticmethod
    def name(algo):
        r"""Return the tag of an algorithm constant

        Examples
        --------
        >>> algorithm.name(algorithm.FAPM1)
        'FAPM1'
        """
        return algorithm._names[algo]

    @staticmethod
    def from_name(name):
        r"""Parse an algorithm tag, case insensitive, '-' same as '_'

        Examples
        --------
        >>> algorithm.from_name('hybrid-simple') == algorithm.HYBRID_SIMPLE
        True
        >>> algorithm.from_name('apm2')
        Traceback (most recent call last):
        ...
        ValueError: Unknown algorithm apm2
        """
        key = name.upper().replace('-', '_')
        for algo, tag in algorithm._names.items():
            if tag == key:
                return algo
        raise ValueError("Unknown algorithm {:}".format(name))
