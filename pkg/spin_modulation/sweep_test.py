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
    defaults, PhysicalParams, sweep_grid, synth_apm1, synth_fapm1)


@pytest.fixture
def proton():
    return PhysicalParams(**defaults.proton)


@pytest.fixture
def desk():
    return PhysicalParams(**defaults.desk)


def test_grid_layout(desk):
    df = sweep_grid(desk, 'apm1', n=4)
    assert list(df.columns) == ['theta0', 'thetaf', 'value']
    assert len(df) == 16
    assert (df['theta0'][:4] == 0).all()
    assert df['thetaf'][:4].tolist() == pytest.approx(
        numpy.linspace(0, pi, 4).tolist())
    assert df['theta0'].iloc[-1] == pi


def test_worst_cases_on_the_proton_grid(proton):
    one_turn = pi / proton.omega1_max
    apm1 = sweep_grid(proton, 'apm1')['value']
    fapm1 = sweep_grid(proton, 'fapm1')['value']
    assert len(apm1) == 101 * 101
    assert apm1.max() == pytest.approx(4 * one_turn, rel=1e-2)
    assert fapm1.max() == pytest.approx(one_turn, rel=1e-2)


def test_difference_sign(proton):
    df = sweep_grid(proton, 'diff')
    up = df['thetaf'] > df['theta0']
    down = df['thetaf'] < df['theta0']
    assert (df['value'][down] < 0).all()
    assert (df['value'][up] >= 0).all()
    ties = df[up & (df['value'] == 0)]
    assert ties[['theta0', 'thetaf']].values.tolist() == [[0.0, pi]]


def test_hybrid_min(desk):
    apm1 = sweep_grid(desk, 'apm1', n=11)['value']
    fapm1 = sweep_grid(desk, 'fapm1', n=11)['value']
    both = sweep_grid(desk, 'hybrid-min', n=11)['value']
    assert (both == numpy.minimum(apm1, fapm1)).all()
    diff = sweep_grid(desk, 'diff', n=11)['value']
    assert (diff == fapm1 - apm1).all()


def test_estimates_ignore_phases(desk):
    for quantity in ('apm1', 'fapm1', 'diff', 'hybrid-min'):
        a = sweep_grid(desk, quantity, n=11)
        b = sweep_grid(desk, quantity, n=11, phi0=1.0, phif=4.0)
        assert a.equals(b)


def test_exact_quantities_match_synthesis(desk):
    phi0, phif = 0.5, 2.0
    for quantity, synth in (('apm1-exact', synth_apm1),
                            ('fapm1-exact', synth_fapm1)):
        df = sweep_grid(desk, quantity, n=5, phi0=phi0, phif=phif)
        for theta0, thetaf, value in df.itertuples(index=False):
            r = synth(desk, (theta0, phi0), (thetaf, phif))
            assert value == pytest.approx(r.transition_time, rel=1e-9)


def test_exact_quantities_near_estimates(desk):
    w0 = desk.omega0
    for estimate, exact, error in (('apm1', 'apm1-exact', 4 * pi / w0),
                                   ('fapm1', 'fapm1-exact', 6 * pi / w0)):
        a = sweep_grid(desk, estimate, n=21)['value']
        b = sweep_grid(desk, exact, n=21, phi0=1.0, phif=4.0)['value']
        assert (abs(a - b) <= error).all()


def test_exact_phases_are_wrapped(desk):
    a = sweep_grid(desk, 'apm1-exact', n=5, phi0=1.0, phif=4.0)
    b = sweep_grid(desk, 'apm1-exact', n=5, phi0=1.0 + 2 * pi,
                   phif=4.0 - 2 * pi)
    assert numpy.allclose(a['value'], b['value'], rtol=1e-12)


@pytest.mark.parametrize('kw', [dict(n=1), dict(quantity='fapm3'),
                                dict(quantity='fapm1-exact', n=0)])
def test_invalid_sweeps(desk, kw):
    with pytest.raises(ValueError):
        sweep_grid(desk, **kw)


def test_zero_band_only_breaks_detuned_quantities():
    params = PhysicalParams(1000, 100, 0, 200)
    assert len(sweep_grid(params, 'apm1', n=3)) == 9
    with pytest.raises(ValueError):
        sweep_grid(params, 'fapm1', n=3)
