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
import pytest

from spin_modulation import (
    defaults, BlochAngles, PhysicalParams, bloch_to_state, fidelity,
    hybrid_discrepancy, hybrid_select, propagate, random_pairs,
    simplified_hybrid, simplified_hybrid_estimate, synth_apm3, synth_apm1,
    synth_fapm2, synth_fapm1)
from spin_modulation.sweep import apm1_times, fapm1_times


def check_hybrids(params, pairs, verbose=True):
    r"""Both schedulers reach the target, the exact one is never slower
    than any single algorithm, and they differ by at most 11 pi/omega0

    Returns
    -------
    int: number of pairs with at least one failure
    """
    err_count = 0
    limit = 11 * pi / params.omega0
    for init, target in pairs:
        problems = []
        exact = hybrid_select(params, init, target)
        simple = simplified_hybrid(params, init, target)
        times = [s(params, init, target).transition_time
                 for s in (synth_apm1, synth_fapm1, synth_apm3, synth_fapm2)]
        if exact.transition_time != min(times[:2]):
            problems.append("not the faster one stage design")
        if exact.transition_time > min(times) * (1 + 1e-12):
            problems.append("slower than a single algorithm")
        for r in (exact, simple):
            final = propagate(params.omega0, r.schedule,
                              bloch_to_state(init))
            if fidelity(final, bloch_to_state(target)) < 1 - 1e-9:
                problems.append(f"{r.tag} misses the target")
        gap = hybrid_discrepancy(params, init, target)
        if gap > limit:
            problems.append(f"discrepancy {gap!r}")
        if problems:
            err_count += 1
            verbose and print(f"{init} -> {target}:", ", ".join(problems))
    return err_count


@pytest.mark.parametrize('envelope', [defaults.proton, defaults.low_field,
                                      defaults.desk])
def test_hybrids(envelope):
    params = PhysicalParams(**envelope)
    assert check_hybrids(params, random_pairs(1000, random_state=51)) == 0


def test_worked_examples():
    params = PhysicalParams(**defaults.proton)
    r = hybrid_select(params, (3 * pi / 4, 5 * pi / 4), (pi / 4, pi / 4))
    assert r.tag == 'FAPM1'
    assert r.transition_time == pytest.approx(6.28e-5, rel=2e-3)
    r = hybrid_select(params, (pi / 4, pi / 4), (3 * pi / 4, 5 * pi / 4))
    assert r.tag == 'APM1'
    assert r.transition_time == pytest.approx(3.14e-5, rel=2e-3)


def test_simplified_branches():
    params = PhysicalParams(**defaults.proton)
    assert simplified_hybrid(params, (3 * pi / 4, 0), (pi / 4, 0)).tag \
        == 'FAPM1'
    assert simplified_hybrid(params, (pi / 4, 0), (3 * pi / 4, 0)).tag \
        == 'APM1'
    assert simplified_hybrid(params, (1.0, 0), (1.0, 3.0)).tag == 'APM1'


def test_identity_transfer():
    params = PhysicalParams(**defaults.desk)
    state = (2.0, 1.0)
    r = hybrid_select(params, state, state)
    final = propagate(params.omega0, r.schedule, bloch_to_state(state))
    assert fidelity(final, bloch_to_state(state)) > 1 - 1e-12
    assert r.transition_time <= 2 * pi / params.omega0 * 3


def test_disagreement_region():
    params = PhysicalParams(**defaults.desk)
    theta = numpy.linspace(0, pi, 21)
    phi = numpy.linspace(0, 2 * pi, 41)[:-1]
    theta0, thetaf, phi0, phif = numpy.meshgrid(theta, theta, phi, phi,
                                                indexing='ij')
    t2 = apm1_times(params, theta0, thetaf, phi0, phif)
    t4 = fapm1_times(params, theta0, thetaf, phi0, phif)
    exact_fapm = t2 > t4
    simple_fapm = theta0 > thetaf
    disagree = exact_fapm != simple_fapm
    gap = numpy.where(disagree, abs(t2 - t4), 0.0)
    assert disagree.any()
    assert gap.max() <= 11 * pi / params.omega0
    # replay a few clear disagreement cells through the schedulers
    for i in numpy.flatnonzero(gap > 1e-3 / params.omega0)[:20]:
        init = BlochAngles(theta0.flat[i], phi0.flat[i])
        target = BlochAngles(thetaf.flat[i], phif.flat[i])
        d = hybrid_discrepancy(params, init, target)
        assert d > 0 and d == pytest.approx(gap.flat[i], rel=1e-9)


def test_narrow_band_warns_but_selects():
    params = PhysicalParams(1000, 100, 50, 200)
    init, target = (2.5, 1.0), (0.5, 4.0)
    for scheduler in (hybrid_select, simplified_hybrid):
        with pytest.warns(UserWarning):
            r = scheduler(params, init, target)
        final = propagate(params.omega0, r.schedule, bloch_to_state(init))
        assert fidelity(final, bloch_to_state(target)) > 1 - 1e-9


def test_simplified_estimate():
    params = PhysicalParams(**defaults.proton)
    for init, target in random_pairs(300, random_state=52):
        est = simplified_hybrid_estimate(params, init, target)
        r = simplified_hybrid(params, init, target)
        assert abs(r.transition_time - est.time_estimate) <= est.error_bound
        want = (6 if r.tag == 'FAPM1' else 4) * pi / params.omega0
        assert est.error_bound == pytest.approx(want, rel=1e-12)


def test_empty_band_falls_back_to_resonant():
    params = PhysicalParams(1000, 100, 0, 200)
    for init, target in (((1.0, 0.0), (2.0, 0.0)),
                         ((2.5, 1.0), (0.5, 4.0))):
        for scheduler in (hybrid_select, simplified_hybrid):
            with pytest.warns(UserWarning):
                r = scheduler(params, init, target)
            assert r.tag == 'APM1'
            final = propagate(params.omega0, r.schedule,
                              bloch_to_state(init))
            assert fidelity(final, bloch_to_state(target)) > 1 - 1e-9
        assert hybrid_discrepancy(params, init, target) == 0
        assert simplified_hybrid_estimate(params, init, target).error_bound \
            == pytest.approx(4 * pi / params.omega0, rel=1e-12)
