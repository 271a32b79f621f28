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

from math import inf, pi

import numpy
import pytest

from spin_modulation import (
    algorithm, defaults, PhysicalParams, approx_apm1, approx_fapm1,
    bound_apm1, bound_apm3, bound_fapm, feasible_within, k2_prime, k4_prime,
    random_pairs, synth_apm1, synth_fapm1)


def check_estimates(params, pairs, verbose=True):
    r"""Compare the one stage estimates with the exact transition times

    Returns
    -------
    int: number of estimates further from the exact time than their
    error_bound
    """
    err_count = 0
    for init, target in pairs:
        for synth, approx in ((synth_apm1, approx_apm1),
                              (synth_fapm1, approx_fapm1)):
            exact = synth(params, init, target).transition_time
            est = approx(params, init, target)
            if abs(exact - est.time_estimate) > est.error_bound:
                err_count += 1
                verbose and print(f"{approx.__name__} {init} -> {target}:",
                                  f"{exact=!r} {est}")
    return err_count


@pytest.mark.parametrize('envelope', [defaults.proton, defaults.low_field,
                                      defaults.desk])
def test_estimates_within_error_bound(envelope):
    params = PhysicalParams(**envelope)
    assert check_estimates(params, random_pairs(1000, random_state=41)) == 0


def test_worst_case_values():
    proton = PhysicalParams(**defaults.proton)
    assert bound_apm3(proton) == pytest.approx(2.512e-4, rel=1e-3)
    assert bound_apm1(proton) == pytest.approx(2.512e-4, rel=1e-3)
    assert bound_fapm(proton) == pytest.approx(6.28e-5, rel=2e-3)
    # 8 pi/omega0 is 0.8% of pi/omega1_max at the 50 MHz Larmor frequency
    low = PhysicalParams(**defaults.low_field)
    assert bound_fapm(low) == pytest.approx(1.008 * pi / 5e4, rel=1e-12)
    assert bound_fapm(low) == pytest.approx(6.28e-5, rel=1e-2)
    assert 0.24 <= bound_fapm(proton) / bound_apm1(proton) <= 0.26


def test_bound_formulas():
    desk = PhysicalParams(**defaults.desk)
    assert bound_apm3(desk) == pytest.approx(4 * pi / 100 + 7.5 * pi / 1000)
    assert bound_apm1(desk) == pytest.approx(0.04 * pi + 0.006 * pi)
    assert bound_apm1(desk) < bound_apm3(desk)
    equal = PhysicalParams(1000, 1000, 10, 10)
    assert bound_apm3(equal) > 0
    assert bound_apm3(PhysicalParams(1000, 1000)) == pytest.approx(
        11.5 * pi / 1000)
    narrow = PhysicalParams(1000, 100, 200, 10)
    assert bound_fapm(narrow) == pytest.approx(pi / 10 + 8 * pi / 1000)
    assert bound_fapm(PhysicalParams(1000, 100, 200, 0)) == inf


def test_bounds_decrease_with_envelope():
    base = PhysicalParams(**defaults.desk)
    for field in ('omega0', 'omega1_max', 'omega_b_minus', 'omega_b_plus'):
        wider = base._replace(**{field: getattr(base, field) * 1.5})
        for bound in (bound_apm3, bound_apm1, bound_fapm):
            assert bound(wider) <= bound(base)


def test_feasible_within():
    params = PhysicalParams(**defaults.proton)
    T = bound_apm1(params)
    assert feasible_within(params, T, algorithm.APM1)
    assert not feasible_within(params, T * 0.999, algorithm.APM1)
    assert not feasible_within(params, T, algorithm.APM3)
    assert feasible_within(params, 6.3e-5, algorithm.HYBRID)
    assert not feasible_within(params, 6.3e-5, algorithm.HYBRID_SIMPLE)
    with pytest.raises(ValueError):
        feasible_within(params, 1.0, 0)


def test_estimates_ignore_phases():
    params = PhysicalParams(**defaults.proton)
    for (t0, p0), (tf, pf) in random_pairs(200, random_state=42):
        for approx in (approx_apm1, approx_fapm1):
            a = approx(params, (t0, p0), (tf, pf))
            b = approx(params, (t0, 0.0), (tf, 3.0))
            assert a == b


def test_estimated_turns():
    params = PhysicalParams(**defaults.proton)
    assert approx_apm1(params, (pi / 4, 0), (3 * pi / 4, 0)).k_prime == 2500
    assert approx_apm1(params, (1.0, 0), (1.0, 2.0)).k_prime == 1
    assert approx_fapm1(params, (3 * pi / 4, 0), (pi / 4, 0)).k_prime == 5000
    e = approx_fapm1(params, (0, 0), (0, 0))
    assert e.k_prime == 5000 and e.error_bound == 6 * pi / params.omega0
    assert e.time_estimate == pytest.approx(6.28e-5, rel=1e-3)


def test_estimated_turns_vectorized():
    params = PhysicalParams(**defaults.desk)
    theta0 = numpy.array([0.0, 1.0, 2.0, 3.0])
    thetaf = numpy.array([3.0, 1.0, 0.5, 0.0])
    k2, k4 = k2_prime(params, theta0, thetaf), k4_prime(params, theta0, thetaf)
    for i in range(4):
        assert k2[i] == k2_prime(params, theta0[i], thetaf[i])
        assert k4[i] == k4_prime(params, theta0[i], thetaf[i])
    with pytest.raises(ValueError):
        k4_prime(PhysicalParams(1000, 100, 0, 10), 1.0, 2.0)


def test_turns_order_follows_thetas():
    params = PhysicalParams(**defaults.proton)
    theta = numpy.linspace(0, pi, 101)
    theta0, thetaf = (x.ravel() for x in
                      numpy.meshgrid(theta, theta, indexing='ij'))
    k2, k4 = k2_prime(params, theta0, thetaf), k4_prime(params, theta0, thetaf)
    up = thetaf > theta0
    down = thetaf < theta0
    assert (k2[up] <= k4[up]).all()
    assert (k2[down] > k4[down]).all()
