"""Command-line surface tying the identity engine, synthesizer and simulator.

Subcommands:

    verify-identity --n N [--recurrent-only --samples K]
    synth --controls N --gate SPEC [--optimize] --out PATH
    check --circuit PATH --controls N --gate SPEC
    simulate --circuit PATH --input BITS

Exit codes are a stable contract: 0 success / all checks pass, 1 a
verification failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from . import z2identity
from .simulator import (
    MAX_WIDTH,
    basis_state,
    circuit_unitary,
    index_bits,
    operator_distance,
    reference_mcu,
    run_circuit,
)
from .synthesize import peephole_cancel, synth_mcu
from .textio import CircuitFormatError, parse_gate_spec, read_circuit, write_circuit

RECURRENT_LIMIT = 24
CHECK_TOLERANCE = 1e-9
AMPLITUDE_FLOOR = 1e-12


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _fmt_number(x: float) -> str:
    out = f"{x:.12g}"
    if "." not in out and "e" not in out and "inf" not in out and "nan" not in out:
        out += ".0"
    return out


def _fmt_amplitude(z: complex) -> str:
    re, im = z.real, z.imag
    if abs(im) <= AMPLITUDE_FLOOR:
        return _fmt_number(re)
    if abs(re) <= AMPLITUDE_FLOOR:
        return f"{_fmt_number(im)}j"
    sign = "+" if im >= 0 else "-"
    return f"{_fmt_number(re)}{sign}{_fmt_number(abs(im))}j"


def cmd_verify_identity(args: argparse.Namespace) -> int:
    n = args.n
    if args.recurrent_only:
        if not 1 <= n <= RECURRENT_LIMIT:
            return _usage_error(f"--recurrent-only supports 1 <= n <= {RECURRENT_LIMIT}")
        if args.samples < 1:
            return _usage_error("--samples must be at least 1")
    elif not 1 <= n <= z2identity.EXHAUSTIVE_LIMIT:
        return _usage_error(
            f"full mode supports 1 <= n <= {z2identity.EXHAUSTIVE_LIMIT}"
            " (use --recurrent-only beyond that)"
        )

    reports = []
    if args.recurrent_only:
        for k in range(1, n + 1):
            reports.append(z2identity.verify_closed_form_sampled(k, args.samples, seed=k))
    else:
        for k in range(1, n + 1):
            reports.append(z2identity.verify_closed_form(k))
        for k in range(2, n + 1):
            reports.append(z2identity.verify_append_recurrence(k))

    reports.append(z2identity.verify_xor_int_laws(-8, 8))
    for k in range(1, n + 1):
        reports.append(z2identity.verify_sum_shift_laws(k, trials=500, seed=k))
    reports.append(z2identity.verify_alternating_binomial(2, 60))

    for report in reports:
        print(report.summary())
    if all(r.passed for r in reports):
        print("all checks passed")
        return 0
    return 1


def _counts_line(circuit) -> str:
    c = circuit.counts()
    return f"cnot={c.cnot} cv={c.cv} cvdg={c.cvdg} total={c.total}"


def cmd_synth(args: argparse.Namespace) -> int:
    if args.controls < 1:
        return _usage_error("--controls must be at least 1")
    try:
        u = parse_gate_spec(args.gate)
    except CircuitFormatError as exc:
        return _usage_error(str(exc))

    circuit = synth_mcu(args.controls, u)
    if args.optimize:
        optimized = peephole_cancel(circuit)
        print(f"before: {_counts_line(circuit)}")
        print(f"after:  {_counts_line(optimized)}")
        circuit = optimized
    else:
        print(_counts_line(circuit))

    header = f"controls={args.controls} gate={args.gate}"
    try:
        write_circuit(circuit, args.out, header=header)
    except OSError as exc:
        return _usage_error(f"cannot write {args.out}: {exc}")
    print(f"wrote {args.out}")
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    if args.controls < 1:
        return _usage_error("--controls must be at least 1")
    try:
        u = parse_gate_spec(args.gate)
        circuit = read_circuit(args.circuit)
    except (CircuitFormatError, OSError) as exc:
        return _usage_error(str(exc))

    if circuit.width != args.controls + 1:
        return _usage_error(
            f"circuit width {circuit.width} does not match controls+1 = {args.controls + 1}"
        )
    if circuit.width > MAX_WIDTH:
        return _usage_error(f"width {circuit.width} exceeds the simulation cap {MAX_WIDTH}")
    try:
        actual = circuit_unitary(circuit)
    except ValueError as exc:
        return _usage_error(str(exc))

    distance = operator_distance(actual, reference_mcu(args.controls, u))
    print(f"distance {distance:.12g}")
    if distance < CHECK_TOLERANCE:
        print("PASS")
        return 0
    print(f"FAIL (tolerance {CHECK_TOLERANCE})")
    return 1


def cmd_simulate(args: argparse.Namespace) -> int:
    try:
        circuit = read_circuit(args.circuit)
    except (CircuitFormatError, OSError) as exc:
        return _usage_error(str(exc))

    if any(ch not in "01" for ch in args.input) or not args.input:
        return _usage_error(f"--input must be a nonempty bitstring, got {args.input!r}")
    if len(args.input) != circuit.width:
        return _usage_error(
            f"input has {len(args.input)} bits, circuit width is {circuit.width}"
        )

    state = basis_state([int(ch) for ch in args.input])
    try:
        final = run_circuit(circuit, state)
    except ValueError as exc:
        return _usage_error(str(exc))

    for index in range(final.shape[0]):
        amp = final[index]
        if abs(amp) > AMPLITUDE_FLOOR:
            label = "".join(str(b) for b in index_bits(index, circuit.width))
            print(f"|{label}⟩: {_fmt_amplitude(amp)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mcusynth",
        description="Synthesize n-controlled single-qubit unitaries from cnot and "
        "controlled-V gates, and verify them against a dense-matrix oracle.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "verify-identity",
        help="exhaustively check the parity-sum identities the synthesis rests on",
    )
    p.add_argument("--n", type=int, required=True, help="largest bit-vector width to check")
    p.add_argument(
        "--recurrent-only",
        action="store_true",
        help="skip direct enumeration; sample the recurrent form instead",
    )
    p.add_argument("--samples", type=int, default=1000, help="samples per n in recurrent mode")
    p.set_defaults(func=cmd_verify_identity)

    p = sub.add_parser("synth", help="synthesize an n-controlled gate to a circuit file")
    p.add_argument("--controls", type=int, required=True)
    p.add_argument("--gate", required=True, help="named gate (I X Y Z H S T) or @matrix.json")
    p.add_argument("--optimize", action="store_true", help="run peephole cancellation")
    p.add_argument("--out", required=True, help="output circuit file")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("check", help="compare a circuit file against the reference operator")
    p.add_argument("--circuit", required=True)
    p.add_argument("--controls", type=int, required=True)
    p.add_argument("--gate", required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("simulate", help="run a circuit file on a basis state")
    p.add_argument("--circuit", required=True)
    p.add_argument("--input", required=True, help="bitstring, one bit per qubit")
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
