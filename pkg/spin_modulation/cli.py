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

r"""Command line front end

    spin-modulation synthesize --algo hybrid --theta0 ... --out s.json
    spin-modulation verify --schedule s.json --theta0 ... --method rk4
    spin-modulation sweep --quantity diff --grid 101 > diff.csv
    spin-modulation bounds --preset low_field

Exit codes: 0 success, 1 invalid input, 2 verification failed.
"""

import argparse
import sys
from math import pi

import pandas as pd

from spin_modulation.algorithms import algorithm
from spin_modulation.bounds import bound, feasible_within
from spin_modulation.defaults import defaults
from spin_modulation.propagator import Schedule, propagate, rk4_oracle
from spin_modulation.spin import BlochAngles, bloch_to_state, fidelity
from spin_modulation.sweep import quantities, sweep_grid
from spin_modulation.synthesis import PhysicalParams, synthesize

presets = {'proton': defaults.proton,
           'low_field': defaults.low_field,
           'desk': defaults.desk}

algo_choices = ('apm3', 'apm1', 'fapm2', 'fapm1', 'hybrid', 'hybrid-simple')


class ArgumentParser(argparse.ArgumentParser):
    r"""argparse parser whose usage errors exit with status 1"""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, "{:}: error: {:}\n".format(self.prog, message))


def add_params_flags(p):
    p.add_argument('--preset', choices=sorted(presets), default=None,
                   help="named envelope; explicit flags override it")
    p.add_argument('--omega0', type=float, help="Larmor frequency (rad/s)")
    p.add_argument('--omega1max', type=float, help="drive limit (rad/s)")
    p.add_argument('--wb-minus', type=float, help="band below omega0")
    p.add_argument('--wb-plus', type=float, help="band above omega0")


def add_state_flags(p, required=True):
    for name in ('theta0', 'phi0', 'thetaf', 'phif'):
        p.add_argument('--' + name, type=float, required=required,
                       help="radians")


def params_from_args(args):
    base = presets[args.preset] if args.preset else defaults.params
    given = dict(omega0=args.omega0, omega1_max=args.omega1max,
                 omega_b_minus=args.wb_minus, omega_b_plus=args.wb_plus)
    kw = {k: base[k] if v is None else v for k, v in given.items()}
    return PhysicalParams(**kw)


def states_from_args(args):
    for name in ('theta0', 'thetaf'):
        theta = getattr(args, name)
        if not 0 <= theta <= pi:
            raise ValueError("{:}={:} outside [0, pi]".format(name, theta))
    return (BlochAngles(args.theta0, args.phi0),
            BlochAngles(args.thetaf, args.phif))


def cmd_synthesize(args):
    params = params_from_args(args)
    init, target = states_from_args(args)
    algo = algorithm.from_name(args.algo)
    result = synthesize(params, init, target, args.t0, algo)
    text = result.schedule.to_json(params.omega0)
    print("{:} k={:} time={:#.17g}".format(result.tag, result.k_index,
                                       result.transition_time))
    if args.out:
        with open(args.out, 'w') as f:
            f.write(text + '\n')
    else:
        print(text)
    return 0


def cmd_verify(args):
    init, target = states_from_args(args)
    try:
        with open(args.schedule) as f:
            schedule, omega0 = Schedule.from_json(f.read())
    except OSError as e:
        raise ValueError("Cannot read {:}: {:}".format(args.schedule, e))
    omega0 = omega0 if args.omega0 is None else args.omega0
    psi0 = bloch_to_state(init)
    if args.method == 'rk4':
        final, drift = rk4_oracle(omega0, schedule, psi0, args.dt,
                                  full_output=True)
    else:
        final, drift = propagate(omega0, schedule, psi0), None
    fid = fidelity(final, bloch_to_state(target))
    print("fidelity={!r}".format(fid))
    if drift is not None:
        print("drift={!r}".format(drift))
    return 0 if fid >= 1 - defaults.verify_tol else 2


def cmd_sweep(args):
    params = params_from_args(args)
    df = sweep_grid(params, args.quantity, args.grid, args.phi0, args.phif)
    df.to_csv(args.out if args.out else sys.stdout, index=False)
    return 0


def cmd_bounds(args):
    params = params_from_args(args)
    algos = (algorithm.APM3, algorithm.APM1, algorithm.FAPM2,
             algorithm.FAPM1)
    df = pd.DataFrame(
        {'bound': [bound(params, a) for a in algos]},
        index=pd.Index([algorithm.name(a) for a in algos], name='algorithm'))
    if args.within is not None:
        df['feasible'] = [feasible_within(params, args.within, a)
                          for a in algos]
    print(df.to_string(float_format=repr))
    return 0


def build_parser():
    parser = ArgumentParser(
        prog='spin-modulation',
        description="Exact spin-1/2 state transfer by modulated pulses")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('synthesize', help="design a pulse schedule")
    p.add_argument('--algo', choices=algo_choices, default='hybrid')
    add_state_flags(p)
    add_params_flags(p)
    p.add_argument('--t0', type=float, default=None, help="start time (s)")
    p.add_argument('--out', help="schedule file (stdout if omitted)")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser('verify', help="replay a schedule file")
    p.add_argument('--schedule', required=True)
    add_state_flags(p)
    p.add_argument('--omega0', type=float,
                   help="Larmor frequency (rad/s), default from the file")
    p.add_argument('--method', choices=('analytic', 'rk4'),
                   default='analytic')
    p.add_argument('--dt', type=float, default=None, help="RK4 step (s)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser('sweep', help="tabulate times over theta0, thetaf")
    p.add_argument('--grid', type=int, default=defaults.grid)
    p.add_argument('--quantity', choices=quantities, default='apm1')
    p.add_argument('--phi0', type=float, default=defaults.phi0)
    p.add_argument('--phif', type=float, default=defaults.phif)
    add_params_flags(p)
    p.add_argument('--out', help="CSV file (stdout if omitted)")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser('bounds', help="worst case transition times")
    add_params_flags(p)
    p.add_argument('--within', type=float, default=None,
                   help="also report feasibility within this time (s)")
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv=None):
    r"""Run the command line and return the exit code"""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    try:
        return args.func(args)
    except ValueError as e:
        print("error: {:}".format(e), file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
