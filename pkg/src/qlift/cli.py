"""Command-line interface.

Exit codes: 0 on success, 1 on a domain error (e.g. a failed verification or a
non-unitary input), 2 on a parse error (malformed files or arguments).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import io as qio
from .encodings import BUILTIN_ENCODINGS, Encoding, builtin_encoding
from .entanglement import classify_bipartite, schmidt
from .linalg import ConvergenceError, principal_unitary_sqrt
from .simulator import basis_probabilities, run_circuit
from .synthesis import (
    ClassicalFunction,
    enumerate_permutation_quantizations,
    named_gate,
    quantization_report,
    quantize_irreversible,
    quantize_reversible,
)

_GATE_HELP = (
    "circuit gates: NOT, SQRT_NOT, H, R(<radians>), CNOT, C(<2x2 matrix file>), "
    "SWAP, or a path to a matrix file.  H uses the unitary 1/sqrt(2) "
    "normalization; the 1/2-normalized variant sometimes quoted is not "
    "unitary and is rejected."
)


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _encoding(ref: str) -> Encoding:
    if ref in BUILTIN_ENCODINGS:
        return builtin_encoding(ref)
    return qio.parse_encoding_file(
        _read(ref), name=os.path.splitext(os.path.basename(ref))[0]
    )


def _load_table(path: str) -> ClassicalFunction:
    return qio.parse_truth_table(_read(path))


def _print_matrix(m) -> None:
    print(qio.format_matrix(m))


def _index_digits(i: int, d: int, n: int) -> str:
    digits = []
    for _ in range(n):
        digits.append(str(i % d))
        i //= d
    return "".join(reversed(digits))


def cmd_synth(args) -> int:
    f = _load_table(args.table)
    enc = _encoding(args.encoding)
    if f.is_reversible:
        gate = quantize_reversible(f, enc)
    else:
        gate = quantize_irreversible(f, enc)
    _print_matrix(gate.matrix)
    return 0


def cmd_sqrt(args) -> int:
    enc = _encoding(args.encoding)
    if args.matrix_or_name in ("NOT", "SQRT_NOT", "H", "CNOT", "SWAP"):
        m = named_gate(args.matrix_or_name, enc)
    else:
        m = qio.parse_matrix(_read(args.matrix_or_name))
    _print_matrix(principal_unitary_sqrt(m))
    return 0


def cmd_run(args) -> int:
    doc = qio.parse_circuit(_read(args.circuit), base_dir=os.path.dirname(os.path.abspath(args.circuit)))
    state = run_circuit(doc.to_circuit(), args.input)
    d = doc.encoding.ambient_dim
    print("amplitudes:")
    for i, amp in enumerate(state.amplitudes):
        print(f"{i} {_index_digits(i, d, doc.width)} {qio.format_complex(amp)}")
    print("probabilities:")
    for i, p in basis_probabilities(state):
        print(f"{i} {p!r}")
    return 0


def cmd_schmidt(args) -> int:
    try:
        dim_a, dim_b = (int(x) for x in args.dims.split(","))
    except ValueError:
        raise qio.ParseError(
            [qio.Diagnostic(1, 1, f"--dims expects 'A,B' with integers, got {args.dims!r}")]
        ) from None
    vec = qio.parse_state(_read(args.state))
    result = schmidt(vec, dim_a, dim_b)
    verdict = classify_bipartite(vec, dim_a, dim_b)
    print("coefficients:", " ".join(repr(float(c)) for c in result.coefficients))
    print("rank:", result.rank)
    print("classification:", verdict.value)
    return 0


def cmd_enumerate(args) -> int:
    f = _load_table(args.table)
    enc = _encoding(args.encoding)
    matrices = enumerate_permutation_quantizations(f, enc)
    print("count:", len(matrices))
    for m in matrices:
        print()
        _print_matrix(m)
    return 0


def cmd_verify(args) -> int:
    m = qio.parse_matrix(_read(args.matrix))
    f = _load_table(args.table)
    enc = _encoding(args.encoding)
    report = quantization_report(m, f, enc, args.tol)
    print("verdict:", "true" if report.ok else "false")
    print(f"unitarity residual: {report.unitarity_residual:.3e}")
    for check in report.subspace_checks:
        print(check.describe())
    if report.complement_residual is not None:
        status = "ok" if report.complement_residual <= args.tol else "VIOLATED"
        print(f"fixed complement: {status} (residual {report.complement_residual:.3e})")
    for msg in report.failures():
        print("failure:", msg)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlift",
        description=(
            "Encode classical bits into quantum state spaces, synthesize gates "
            "from truth tables, analyze bipartite entanglement, and run small "
            "circuits."
        ),
        epilog=_GATE_HELP,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("synth", help="synthesize a unitary from a truth table")
    p.add_argument("table", help="truth table file")
    p.add_argument("--encoding", default="qubit", help="builtin name or encoding file")
    p.set_defaults(func=cmd_synth)

    p = sub.add_parser("sqrt", help="print the principal square root of a gate")
    p.add_argument("matrix_or_name", help="matrix file, or NOT/SQRT_NOT/H/CNOT/SWAP")
    p.add_argument("--encoding", default="qubit", help="encoding for named gates")
    p.set_defaults(func=cmd_sqrt)

    p = sub.add_parser("run", help="run a circuit file", epilog=_GATE_HELP)
    p.add_argument("circuit", help="circuit file")
    p.add_argument("--input", required=True, help="input bit string")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("schmidt", help="Schmidt-decompose a bipartite state")
    p.add_argument("state", help="state file (amplitudes)")
    p.add_argument("--dims", required=True, help="subsystem dimensions, e.g. 2,2")
    p.set_defaults(func=cmd_schmidt)

    p = sub.add_parser("enumerate", help="list all permutation-matrix quantizations")
    p.add_argument("table", help="truth table file (reversible)")
    p.add_argument("--encoding", default="qubit")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="check a matrix against a truth table")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("table", help="truth table file")
    p.add_argument("--encoding", default="qubit")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except qio.ParseError as exc:
        for d in exc.diagnostics:
            print(str(d), file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
