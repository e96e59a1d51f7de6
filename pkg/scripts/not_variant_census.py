#!/usr/bin/env python3
"""Census of permutation-matrix NOT gates across the built-in encodings.

Enumerates every 0/1 permutation matrix that realizes bit negation under each
encoding, then puts a few well-known defective candidates through the same
checker to show why they fail: a candidate with an all-zero row (not unitary),
the partial flip that leaves logical 0 untouched, and the 4x4 anti-diagonal,
which swaps basis vectors *within* each logical subspace and therefore
realizes the identity function, not negation.
"""

import numpy as np

from qlift import (
    ClassicalFunction,
    builtin_encoding,
    enumerate_permutation_quantizations,
    is_quantization_of,
    kron,
    quantization_report,
)
from qlift.io import format_matrix

NEGATION = ClassicalFunction.negation()
X = np.array([[0, 1], [1, 0]], dtype=complex)

CANDIDATES = {
    "zero-row candidate": np.array(
        [[0, 0, 1, 0], [0, 0, 0, 0], [1, 0, 0, 0], [0, 1, 0, 1]], dtype=complex
    ),
    "partial flip (e3<->e4 only)": np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    "anti-diagonal (kron(X, X))": kron(X, X),
}


def main():
    for name in ("qubit", "qutrit", "ququart", "matrix2"):
        enc = builtin_encoding(name)
        found = enumerate_permutation_quantizations(NEGATION, enc)
        print(f"== {name}: {len(found)} permutation NOT gate(s)")
        for m in found:
            print(format_matrix(m))
            print()

    enc = builtin_encoding("matrix2")
    print("== defective candidates under the matrix-unit encoding")
    for label, candidate in CANDIDATES.items():
        report = quantization_report(candidate, NEGATION, enc, 1e-9)
        print(f"-- {label}: {'accepted' if report.ok else 'rejected'}")
        for msg in report.failures():
            print(f"   {msg}")

    anti = CANDIDATES["anti-diagonal (kron(X, X))"]
    if is_quantization_of(anti, ClassicalFunction.identity(1), enc, 1e-9):
        print("   note: the anti-diagonal realizes the identity function instead")


if __name__ == "__main__":
    main()
