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

from spin_modulation.algorithms import algorithm  # noqa: F401
from spin_modulation.defaults import defaults  # noqa: F401

from spin_modulation.spin import (  # noqa: F401
    Sx, Sy, Sz, I2, BlochAngles, SpinState, TiltedAxis,
    bloch_to_state, state_to_bloch, fidelity, su2_exp, rot_z, evolve,
    is_unitary)
from spin_modulation.propagator import (  # noqa: F401
    PulseSegment, Schedule, RotatingFrameParams, rotating_frame_params,
    segment_propagator, propagate, rk4_oracle)
from spin_modulation.synthesis import (  # noqa: F401
    PhysicalParams, SynthesisResult, ceil_pos_int,
    synth_apm3, synth_apm1, synth_fapm2, synth_fapm1, synthesize,
    worst_case_k)
from spin_modulation.bounds import (  # noqa: F401
    ApproxEstimate, bound_apm3, bound_apm1, bound_fapm, feasible_within,
    k2_prime, k4_prime, approx_apm1, approx_fapm1)
from spin_modulation.hybrid import (  # noqa: F401
    hybrid_select, simplified_hybrid, hybrid_discrepancy,
    simplified_hybrid_estimate)
from spin_modulation.sampling import random_bloch, random_pairs  # noqa: F401
from spin_modulation.sweep import sweep_grid  # noqa: F401
