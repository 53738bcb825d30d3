"""Command-line interface: a thin shell over the library operations.

Exit codes: 0 success, 1 validation or bound failure, 2 usage/parse error.
Every randomized subcommand takes an explicit --seed; identical argv give
byte-identical outputs.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .assignment import lll_resample
from .codefile import CodeFileError, load_code, save_code
from .distance import EnumerationBudgetError, soundness
from .model import CssCode, InvalidCodeError, params, validate
from .model import dualize as dualize_code
from .pipeline import (
    ExponentVector,
    balance,
    exponents_clasympt,
    exponents_theorem1,
    nu_from_mu,
    weight_reduce,
)
from .transforms import Assignment, alt_qubit_split_all, split_all_x_generators, thicken
from . import fixtures


def _print_params(p) -> None:
    line = (
        f"N={p.n} K={p.k} nX={p.n_x} nZ={p.n_z} "
        f"wX={p.w_x} wZ={p.w_z} qX={p.q_x} qZ={p.q_z} WX={p.w_total_x} WZ={p.w_total_z}"
    )
    if p.d_x is not None:
        line += f" dX={p.d_x.value}{'' if p.d_x.exact else '+'}"
    if p.d_z is not None:
        line += f" dZ={p.d_z.value}{'' if p.d_z.exact else '+'}"
    print(line)


def _save(args, code: CssCode, derived_by: str) -> None:
    save_code(args.output, code, metadata={"derived_by": derived_by})


def cmd_validate(args) -> int:
    code = load_code(args.file)
    report = validate(code)
    print(f"commutation: {'ok' if report.commutes else 'FAILED'}")
    for pair in report.anticommuting_pairs:
        print(f"  anticommuting pair: X row {pair[0]}, Z row {pair[1]}")
    for warning in report.warnings():
        print(f"  warning: {warning}")
    return 0 if report.ok else 1


def cmd_params(args) -> int:
    code = load_code(args.file)
    _print_params(params(code, distance_cap=args.distance_cap))
    return 0


def cmd_split_x(args) -> int:
    code = load_code(args.file)
    out, trace = split_all_x_generators(code)
    _save(args, out, "split-x")
    print(f"split {len(trace.steps)} generators, added {trace.delta} cut qubits")
    return 0


def cmd_thicken(args) -> int:
    code = load_code(args.file)
    if args.all_k_one:
        assignment = Assignment.all_ones(args.l, code.n_z)
        derived = f"thicken l={args.l} all-k-one"
    else:
        if args.seed is None:
            print("thicken --w requires --seed", file=sys.stderr)
            return 2
        outcome = lll_resample(code, args.l, args.w, seed=args.seed)
        assignment = outcome.assignment
        derived = f"thicken l={args.l} w={args.w} seed={args.seed}"
        print(
            f"assignment: load={outcome.max_copied_load} target_met={outcome.target_met} "
            f"rounds={outcome.resample_rounds}"
        )
    out = thicken(code, assignment)
    _save(args, out, derived)
    _print_params(params(out))
    return 0


def cmd_alt_split(args) -> int:
    code = load_code(args.file)
    out = alt_qubit_split_all(code)
    _save(args, out, "alt-split")
    _print_params(params(out))
    return 0


def cmd_dualize(args) -> int:
    code = load_code(args.file)
    _save(args, dualize_code(code), "dualize")
    return 0


def cmd_reduce(args) -> int:
    code = load_code(args.file)
    if args.epsilon is not None:
        out, report = weight_reduce(code, epsilon=Fraction(args.epsilon), seed=args.seed)
    else:
        if args.w is None or args.l is None:
            print("reduce needs --epsilon or both --w and --l", file=sys.stderr)
            return 2
        out, report = weight_reduce(code, w=args.w, l=args.l, seed=args.seed)
    _save(args, out, f"reduce seed={args.seed}")
    if args.report is not None:
        with open(args.report, "w", encoding="utf-8") as f:
            json.dump(report.as_dict(), f, indent=2)
            f.write("\n")
    _print_params(report.output_params)
    for note in report.notes:
        print(f"note: {note}")
    failed = report.failed_checks()
    for check in failed:
        print(f"FAILED bound: {check.name}: {check.detail}")
    print(f"bounds: {'all passed' if report.all_passed() else 'FAILED'}")
    return 0 if report.all_passed() else 1


def cmd_balance(args) -> int:
    code = load_code(args.file)
    hint = None
    if args.dx is not None or args.dz is not None:
        if args.dx is None or args.dz is None:
            print("balance needs both --dx and --dz or neither", file=sys.stderr)
            return 2
        hint = (args.dx, args.dz)
    out, report = balance(code, distance_hint=hint)
    _save(args, out, "balance")
    for note in report.notes:
        print(f"note: {note}")
    _print_params(report.output_params)
    return 0 if report.all_passed() else 1


def cmd_soundness(args) -> int:
    code = load_code(args.file)
    est = soundness(code, args.side, weight_cap=args.w_cap)
    if est.epsilon is None:
        print(f"soundness_{args.side}: no violating operator up to weight {args.w_cap}")
    else:
        print(
            f"soundness_{args.side} = {est.epsilon} "
            f"(~{float(est.epsilon):.6g}) attained at support {est.attained_at.support()}"
        )
    return 0


def _exponent_vector(args) -> ExponentVector:
    values = {}
    for name in ("alpha_x", "alpha_z", "beta_x", "beta_z", "sigma_x", "sigma_z", "tau_x", "tau_z"):
        raw = getattr(args, name)
        if raw is None:
            raise ValueError(f"--{name.replace('_', '-')} is required")
        values[name] = Fraction(raw)
    return ExponentVector(**values)


def cmd_exponents(args) -> int:
    if args.nu is not None:
        print(f"nu = {nu_from_mu(Fraction(args.nu))}")
        return 0
    if args.epsilon is None:
        print("exponents needs --epsilon", file=sys.stderr)
        return 2
    eps = Fraction(args.epsilon)
    e = _exponent_vector(args)
    if args.clasympt:
        out = exponents_clasympt(e, eps)
        for name in ("alpha_x", "alpha_z", "beta_x", "beta_z", "sigma_x", "sigma_z", "tau_x", "tau_z"):
            value = getattr(out, name)
            print(f"{name}' = {value} (~{float(value):.12g})")
    else:
        tau_x, tau_z, sigma_z_prime = exponents_theorem1(e, eps)
        print(f"tau_x_new = {tau_x} (~{float(tau_x):.12g})")
        print(f"tau_z_new = {tau_z} (~{float(tau_z):.12g})")
        print(f"sigma_z_phase1 = {sigma_z_prime} (~{float(sigma_z_prime):.12g})")
    return 0


def cmd_fixture(args) -> int:
    kwargs = {}
    if args.L is not None:
        kwargs["L"] = args.L
    if args.n is not None:
        kwargs["n"] = args.n
    if args.n_x is not None:
        kwargs["n_x"] = args.n_x
    if args.n_z is not None:
        kwargs["n_z"] = args.n_z
    if args.seed is not None:
        kwargs["seed"] = args.seed
    if args.max_weight is not None:
        kwargs["max_weight"] = args.max_weight
    code = fixtures.fixture(args.name, **kwargs)
    _save(args, code, f"fixture {args.name}")
    _print_params(params(code))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cssreduce",
        description="Weight-reduction transforms for CSS stabilizer codes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check commutation and report warnings")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("params", help="print the code parameter vector")
    p.add_argument("file")
    p.add_argument("--distance-cap", type=int, default=None)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("split-x", help="split all X generators to weight <= 3")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_split_x)

    p = sub.add_parser("thicken", help="product with an interval of length l")
    p.add_argument("file")
    p.add_argument("--l", type=int, required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all-k-one", action="store_true")
    group.add_argument("--w", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_thicken)

    p = sub.add_parser("alt-split", help="cap the X degree by splitting qubits")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_alt_split)

    p = sub.add_parser("dualize", help="swap the X and Z sides")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("reduce", help="full two-phase weight reduction")
    p.add_argument("file")
    p.add_argument("--epsilon")
    p.add_argument("--w", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--report")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("balance", help="equalize the X and Z distances")
    p.add_argument("file")
    p.add_argument("--dx", type=int)
    p.add_argument("--dz", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_balance)

    p = sub.add_parser("soundness", help="brute-force soundness estimate")
    p.add_argument("file")
    p.add_argument("--side", choices=["x", "z"], required=True)
    p.add_argument("--w-cap", type=int, default=4)
    p.set_defaults(func=cmd_soundness)

    p = sub.add_parser("exponents", help="asymptotic exponent calculators")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--theorem1", action="store_true")
    mode.add_argument("--clasympt", action="store_true")
    mode.add_argument("--nu", help="evaluate the balancing exponent at mu")
    p.add_argument("--epsilon")
    for name in ("alpha-x", "alpha-z", "beta-x", "beta-z", "sigma-x", "sigma-z", "tau-x", "tau-z"):
        p.add_argument(f"--{name}")
    p.set_defaults(func=cmd_exponents)

    p = sub.add_parser("fixture", help="write a reference code")
    p.add_argument(
        "name",
        choices=["steane", "toric", "repetition_triangle", "window_grid", "random_css"],
    )
    p.add_argument("--L", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--n-x", type=int)
    p.add_argument("--n-z", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--max-weight", type=int)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_fixture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    try:
        return args.func(args)
    except CodeFileError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (InvalidCodeError, EnumerationBudgetError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
