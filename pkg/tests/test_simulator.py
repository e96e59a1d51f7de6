import numpy as np
import pytest

from qlift import encodings as en
from qlift import linalg as la
from qlift import simulator as sim
from qlift import synthesis as sy
from helpers import random_complex, random_unitary

QUBIT = en.builtin_encoding("qubit")
QUTRIT = en.builtin_encoding("qutrit")
MATRIX2 = en.builtin_encoding("matrix2")

BELL = sim.Circuit(QUBIT, 2, (sim.CircuitStep("H", (0,)), sim.CircuitStep("CNOT", (0, 1))))


class TestApplyGate:
    def test_conditional_not_flips_target(self):
        out = sim.apply_gate(en.encode_bits(QUBIT, "10"), sy.cnot(), (0, 1))
        assert np.array_equal(out.amplitudes, en.encode_bits(QUBIT, "11").amplitudes)

    def test_identity_is_noop(self):
        rng = np.random.default_rng(5)
        s = en.QuantumState(random_complex(rng, (8,)), QUBIT, 3)
        out = sim.apply_gate(s, np.eye(2), (1,))
        assert np.allclose(out.amplitudes, s.amplitudes)

    def test_hadamard_twice_restores(self):
        s = en.encode_bits(QUBIT, "0")
        out = sim.apply_gate(sim.apply_gate(s, sy.hadamard(), (0,)), sy.hadamard(), (0,))
        assert np.allclose(out.amplitudes, [1, 0], atol=1e-15)

    def test_norm_preserved(self):
        rng = np.random.default_rng(7)
        s = en.QuantumState(random_complex(rng, (8,)), QUBIT, 3)
        out = sim.apply_gate(s, random_unitary(rng, 4), (2, 0))
        assert abs(out.norm - s.norm) <= 1e-10

    def test_target_order_matters_consistently(self):
        """g on targets (1,0) equals SWAP g SWAP on targets (0,1)."""
        rng = np.random.default_rng(11)
        s = en.QuantumState(random_complex(rng, (4,)), QUBIT, 2)
        g = random_unitary(rng, 4)
        a = sim.apply_gate(s, g, (1, 0)).amplitudes
        b = sim.apply_gate(s, sy.swap() @ g @ sy.swap(), (0, 1)).amplitudes
        assert np.linalg.norm(a - b) <= 1e-12

    def test_rejects_non_unitary(self):
        with pytest.raises(ValueError, match="unitary"):
            sim.apply_gate(en.encode_bits(QUBIT, "0"), np.array([[1, 1], [0, 1]]), (0,))

    def test_rejects_bad_targets(self):
        s = en.encode_bits(QUBIT, "00")
        with pytest.raises(ValueError, match="out of range"):
            sim.apply_gate(s, np.eye(2), (2,))
        with pytest.raises(ValueError, match="duplicate"):
            sim.apply_gate(s, np.eye(4), (0, 0))

    def test_rejects_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension"):
            sim.apply_gate(en.encode_bits(QUTRIT, "0"), np.eye(2), (0,))


class TestTensorGate:
    # Slices of the printed (2,2,4) flip tensor.
    FLIP = np.stack(
        [
            np.array([[0, 0], [0, 1]]),
            np.array([[0, 0], [1, 0]]),
            np.array([[0, 1], [0, 0]]),
            np.array([[1, 0], [0, 0]]),
        ],
        axis=-1,
    ).astype(complex)

    def test_flip_tensor_action(self):
        """Frozen from the trace oracle: x11 and x22 swap, off-diagonal fixed."""
        x = np.array([[1, 2], [3, 4]], dtype=complex)
        out = sim.apply_tensor_gate_matrixenc(x, self.FLIP)
        assert np.array_equal(out, np.array([[4, 2], [3, 1]], dtype=complex))

    def test_zero_tensor(self):
        out = sim.apply_tensor_gate_matrixenc(np.eye(2), np.zeros((2, 2, 4)))
        assert np.array_equal(out, np.zeros((2, 2), dtype=complex))

    def test_identity_tensor(self):
        t = la.matrix_to_tensor(np.eye(4), 2, 2)
        rng = np.random.default_rng(13)
        x = random_complex(rng, (2, 2))
        assert np.allclose(sim.apply_tensor_gate_matrixenc(x, t), x)

    def test_matches_matrix_route(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            g = random_complex(rng, (4, 4))
            x = random_complex(rng, (2, 2))
            t = la.matrix_to_tensor(g, 2, 2)
            lhs = sim.apply_tensor_gate_matrixenc(x, t)
            rhs = la.unres(g @ la.res(x), 2, 2)
            assert np.linalg.norm(lhs - rhs) <= 1e-12 * max(1.0, np.linalg.norm(rhs))

    def test_tensor_step_in_circuit(self):
        g = sy.quantize_reversible(sy.ClassicalFunction.negation(), MATRIX2).matrix
        t = la.matrix_to_tensor(g, 2, 2)
        circ = sim.Circuit(MATRIX2, 1, (sim.CircuitStep(t, (0,)),))
        out = sim.run_circuit(circ, "0")
        assert np.array_equal(out.amplitudes, g @ en.encode_bits(MATRIX2, "0").amplitudes)


class TestRunCircuit:
    def test_bell_preparation(self):
        out = sim.run_circuit(BELL, "00")
        assert np.allclose(out.amplitudes, np.array([1, 0, 0, 1]) / np.sqrt(2), atol=1e-12)

    def test_empty_circuit(self):
        out = sim.run_circuit(sim.Circuit(QUBIT, 2, ()), "01")
        assert np.array_equal(out.amplitudes, [0, 1, 0, 0])

    def test_qutrit_negation(self):
        circ = sim.Circuit(QUTRIT, 1, (sim.CircuitStep("NOT", (0,)),))
        out = sim.run_circuit(circ, "0")
        assert np.array_equal(out.amplitudes, [0, 0, 1])

    def test_norm_preserved_over_many_steps(self):
        rng = np.random.default_rng(19)
        steps = []
        for _ in range(20):
            k = int(rng.integers(1, 3))
            targets = tuple(rng.choice(3, size=k, replace=False).tolist())
            steps.append(sim.CircuitStep(random_unitary(rng, 2**k), targets))
        out = sim.run_circuit(sim.Circuit(QUBIT, 3, tuple(steps)), "000")
        assert abs(out.norm - 1) <= 1e-9

    def test_input_width_checked(self):
        with pytest.raises(ValueError, match="width"):
            sim.run_circuit(BELL, "0")

    def test_width_cap(self):
        with pytest.raises(ValueError, match="cap"):
            sim.run_circuit(sim.Circuit(QUBIT, 21, ()), "0" * 21)

    def test_named_phase_gate_step(self):
        circ = sim.Circuit(
            QUBIT, 1, (sim.CircuitStep("R", (0,), phi=np.pi),)
        )
        out = sim.run_circuit(circ, "1")
        assert np.allclose(out.amplitudes, [0, -1])


class TestBasisProbabilities:
    def test_equal_superposition(self):
        s = en.QuantumState(np.array([1, 1j]) / np.sqrt(2), QUBIT, 1)
        probs = sim.basis_probabilities(s)
        assert probs[0][0] == 0 and abs(probs[0][1] - 0.5) <= 1e-12
        assert probs[1][0] == 1 and abs(probs[1][1] - 0.5) <= 1e-12

    def test_basis_state(self):
        probs = sim.basis_probabilities(en.encode_bits(QUBIT, "1"))
        assert probs == [(0, 0.0), (1, 1.0)]

    def test_bell_state(self):
        probs = dict(sim.basis_probabilities(sim.run_circuit(BELL, "00")))
        assert abs(probs[0] - 0.5) <= 1e-12 and abs(probs[3] - 0.5) <= 1e-12
        assert probs[1] <= 1e-12 and probs[2] <= 1e-12

    def test_sums_to_one_and_phase_invariant(self):
        rng = np.random.default_rng(23)
        for _ in range(10):
            amps = random_complex(rng, (9,))
            s = en.QuantumState(amps, QUTRIT, 2)
            probs = sim.basis_probabilities(s)
            assert abs(sum(p for _, p in probs) - 1) <= 1e-12
            rotated = en.QuantumState(np.exp(1j * rng.uniform(0, 7)) * amps, QUTRIT, 2)
            probs2 = sim.basis_probabilities(rotated)
            assert all(abs(p - q) <= 1e-12 for (_, p), (_, q) in zip(probs, probs2))
