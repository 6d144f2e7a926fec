"""Command line interface.

Exit codes: 0 success, 1 a verification failed, 2 bad input. With ``--json``
exactly one JSON document goes to stdout; diagnostics always go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import braid, entangler, oracle, segre
from .formats import (
    FormatError,
    dump_json,
    load_json,
    operator_from_json,
    operator_to_json,
    phases_from_json,
    state_from_json,
    state_to_json,
)
from .qstate import PureState, ghz_state, uniform_product, w_state

PASS_THRESHOLD = 1e-10


class InputError(Exception):
    pass


@dataclass
class CommandOutcome:
    exit_code: int
    report: dict
    lines: list[str] = field(default_factory=list)


def _fmt(x: float) -> str:
    return f"{x:.6g}"


def _fmt_c(z: complex) -> str:
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _read_state(path) -> PureState:
    return state_from_json(load_json(path))


def cmd_build(args) -> CommandOutcome:
    phases = phases_from_json(load_json(args.phases))
    R = entangler.multi_qubit_r(phases)
    dump_json(operator_to_json(R, dense=args.format == "dense"), args.out)
    res = entangler.unitarity_residual(R)
    code = 0 if res < PASS_THRESHOLD else 1
    return CommandOutcome(
        code,
        {"qubits": R.qubit_count, "nonzeros": R.dim, "format": args.format,
         "unitarity_residual": res, "out": str(args.out)},
        [f"built {R.qubit_count}-qubit entangler ({R.dim} nonzeros) -> {args.out}",
         f"unitarity residual: {_fmt(res)}"],
    )


def cmd_apply(args) -> CommandOutcome:
    phases = phases_from_json(load_json(args.phases))
    R = entangler.multi_qubit_r(phases)
    s = _read_state(args.state) if args.state else uniform_product(phases.qubit_count)
    if s.qubit_count != R.qubit_count:
        raise InputError(f"state has {s.qubit_count} qubits, phases have {R.qubit_count}")
    out = entangler.apply(R, s)
    dump_json(state_to_json(out), args.out)
    report = {"qubits": out.qubit_count, "norm_squared": out.norm_squared, "out": str(args.out)}
    lines = [f"applied {R.qubit_count}-qubit entangler -> {args.out}",
             f"output norm^2: {_fmt(out.norm_squared)}"]
    code = 0
    if args.verify:
        if R.qubit_count > entangler.MAX_DENSE_QUBITS:
            raise InputError(f"--verify needs at most {entangler.MAX_DENSE_QUBITS} qubits")
        ref = oracle.dense_reference_apply(R.to_dense(), s)
        diff = float(np.max(np.abs(ref.amplitudes - out.amplitudes)))
        report["dense_difference"] = diff
        lines.append(f"dense reference difference: {_fmt(diff)}")
        code = 0 if diff < PASS_THRESHOLD else 1
    return CommandOutcome(code, report, lines)


def cmd_measure(args) -> CommandOutcome:
    s = _read_state(args.state)
    m = s.qubit_count
    if m < 2:
        raise InputError("measure needs at least 2 qubits")
    report: dict = {"qubits": m, "norm_squared": s.norm_squared}
    lines = [f"qubits: {m}", f"norm^2: {_fmt(s.norm_squared)}"]
    if m == 2:
        c = segre.concurrence_2q(s)
        report["concurrence"] = c
        report["concurrence_normalized"] = c / s.norm_squared if s.norm_squared else 0.0
        lines.append(f"concurrence: {_fmt(c)} (normalized {_fmt(report['concurrence_normalized'])})")
    if m == 3:
        T = segre.three_qubit_generators(s)
        report["generators"] = {k: [v.real, v.imag] for k, v in T.items()}
        report["measure_3q"] = segre.measure_3q(s)
        lines += [f"{k:>4}: {_fmt_c(v)}" for k, v in T.items()]
        lines.append(f"measure_3q: {_fmt(report['measure_3q'])}")
    flats = [segre.minors_2x2(segre.flattening(s, j)) for j in range(1, m + 1)]
    max_minors = [float(np.abs(v).max()) for v in flats]
    report["measure_mq"] = segre.measure_from_minors(flats)
    report["max_abs_minor"] = max_minors
    report["measure"] = report.get("measure_3q", report["measure_mq"])
    lines.append(f"measure_mq: {_fmt(report['measure_mq'])}")
    lines += [f"max |minor| of X^{j}: {_fmt(v)}" for j, v in enumerate(max_minors, start=1)]
    if args.report:
        dump_json(segre.segre_generators(s).to_json(measure=report["measure"]), args.report)
        lines.append(f"generator report -> {args.report}")
    return CommandOutcome(0, report, lines)


def cmd_separability(args) -> CommandOutcome:
    s = _read_state(args.state)
    m = s.qubit_count
    if m < 2:
        raise InputError("separability needs at least 2 qubits")
    if s.norm_squared == 0:
        raise InputError("the zero state has no separability verdict")
    if args.partition is not None and not 1 <= args.partition <= m:
        raise InputError(f"--partition must be in 1..{m}")
    js = [args.partition] if args.partition is not None else list(range(1, m + 1))
    verdicts = {j: segre.is_j_separable(s, j, args.tol) for j in js}
    report: dict = {"qubits": m, "tol": args.tol, "separable": {str(j): v for j, v in verdicts.items()}}
    lines = [f"qubit {j}: {'separable' if v else 'entangled with the rest'}" for j, v in verdicts.items()]
    if args.partition is None:
        report["fully_separable"] = all(verdicts.values())
        lines.append(f"fully separable: {report['fully_separable']}")
    code = 0
    if args.verify:
        agree = True
        peels = {}
        for j in js:
            peel = oracle.peel_qubit(s, j, args.tol)
            peels[str(j)] = {"success": peel.success, "residual": peel.residual}
            agree &= peel.success == verdicts[j]
        report["oracle_peel"] = peels
        if args.partition is None:
            fac = oracle.try_factor(s, args.tol)
            report["oracle_factor"] = {"success": fac.success, "residual": fac.residual}
            agree &= fac.success == report["fully_separable"]
        report["oracle_agrees"] = agree
        lines.append(f"oracle agrees: {agree}")
        code = 0 if agree else 1
    return CommandOutcome(code, report, lines)


def _two_strand_from_args(args):
    if args.operator:
        mat = operator_from_json(load_json(args.operator))
        try:
            return braid.TwoStrandOperator.from_matrix(mat)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    phases = phases_from_json(load_json(args.phases), unitary_grade=False)
    if phases.qubit_count != 2:
        raise InputError(
            f"--what {args.what} needs a 2-qubit phase file or --operator, got {phases.qubit_count} qubits"
        )
    return entangler.two_qubit_r(*phases.phases, gate=False)


def cmd_check(args) -> CommandOutcome:
    if bool(args.phases) == bool(args.operator):
        raise InputError("give exactly one of --phases or --operator")
    residuals: dict[str, float] = {}
    if args.what == "unitarity":
        if args.operator:
            residuals["unitarity"] = entangler.unitarity_residual(operator_from_json(load_json(args.operator)))
        else:
            phases = phases_from_json(load_json(args.phases), unitary_grade=False)
            residuals["unitarity"] = entangler.unitarity_residual(entangler.multi_qubit_r(phases, gate=False))
    elif args.what == "ybe":
        residuals["ybe"] = braid.ybe_residual(_two_strand_from_args(args))
    else:
        if args.strands < 3:
            raise InputError("--strands must be at least 3 for braid checks")
        far, br = braid.braid_relation_residuals(_two_strand_from_args(args), args.strands)
        residuals["far_commutation"] = far
        residuals["braid"] = br
    ok = all(v < PASS_THRESHOLD for v in residuals.values())
    lines = [f"{k} residual: {_fmt(v)}" for k, v in residuals.items()]
    lines.append("PASS" if ok else "FAIL")
    return CommandOutcome(0 if ok else 1, {"what": args.what, "residuals": residuals,
                                           "threshold": PASS_THRESHOLD, "pass": ok}, lines)


def cmd_demo(args) -> CommandOutcome:
    m = args.qubits
    if args.state == "ghz":
        if m < 2:
            raise InputError("ghz needs at least 2 qubits")
        s = ghz_state(m)
    elif args.state == "w":
        if m < 3:
            raise InputError("w needs at least 3 qubits")
        s = w_state(m)
    else:
        if m < 2:
            raise InputError("product needs at least 2 qubits")
        s = uniform_product(m)
    dump_json(state_to_json(s), args.out)
    return CommandOutcome(0, {"state": args.state, "qubits": m, "out": str(args.out)},
                          [f"wrote {args.state} state on {m} qubits -> {args.out}"])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidgate", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit one JSON document on stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct the entangler from a phase file")
    p.add_argument("--phases", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--format", choices=["sparse", "dense"], default="sparse")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("apply", help="apply the entangler to a state")
    p.add_argument("--phases", required=True)
    p.add_argument("--state", help="input state file (default: (|1>+|2>)^m)")
    p.add_argument("--out", required=True)
    p.add_argument("--verify", action="store_true", help="cross-check against a dense product")
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("measure", help="concurrence and Segre-minor measures of a state")
    p.add_argument("--state", required=True)
    p.add_argument("--report", help="write the full generator report here")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("separability", help="single-qubit separability verdicts")
    p.add_argument("--state", required=True)
    p.add_argument("--tol", type=float, default=segre.DEFAULT_TOL)
    p.add_argument("--partition", type=int, help="only test qubit j against the rest")
    p.add_argument("--verify", action="store_true", help="cross-check with the factorization oracle")
    p.set_defaults(func=cmd_separability)

    p = sub.add_parser("check", help="Yang-Baxter, braid and unitarity residuals")
    p.add_argument("--phases")
    p.add_argument("--operator", help="operator file (sparse or dense export)")
    p.add_argument("--what", choices=["ybe", "braid", "unitarity"], required=True)
    p.add_argument("--strands", type=int, default=3)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("demo", help="write a named example state")
    p.add_argument("--state", choices=["ghz", "w", "product"], required=True)
    p.add_argument("--qubits", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_demo)
    return parser


def run(argv=None) -> CommandOutcome:
    args = build_parser().parse_args(argv)
    try:
        outcome = args.func(args)
    except (InputError, FormatError, ValueError, OSError, np.linalg.LinAlgError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        outcome = CommandOutcome(2, {"error": str(exc)})
    outcome.report.setdefault("exit_code", outcome.exit_code)
    if args.json:
        print(json.dumps(outcome.report))
    else:
        for line in outcome.lines:
            print(line)
    return outcome


def main(argv=None) -> int:
    return run(argv).exit_code


if __name__ == "__main__":
    sys.exit(main())
