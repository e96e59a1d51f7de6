#!/usr/bin/env python3
"""End-to-end walkthrough: build an entangling circuit, run it, and analyze
the output state's Schmidt structure."""

import numpy as np

from qlift import (
    Circuit,
    CircuitStep,
    basis_probabilities,
    builtin_encoding,
    classify_bipartite,
    run_circuit,
    schmidt,
)


def main():
    qubit = builtin_encoding("qubit")
    circuit = Circuit(
        qubit, 2, (CircuitStep("H", (0,)), CircuitStep("CNOT", (0, 1)))
    )
    state = run_circuit(circuit, "00")

    print("final amplitudes:", np.round(state.amplitudes, 12))
    print("probabilities:")
    for idx, p in basis_probabilities(state):
        print(f"  |{idx:02b}>  {p:.6f}")

    result = schmidt(state, 2, 2)
    print("schmidt coefficients:", np.round(result.coefficients, 12))
    print("schmidt rank:", result.rank)
    print("classification:", classify_bipartite(state, 2, 2).value)


if __name__ == "__main__":
    main()
