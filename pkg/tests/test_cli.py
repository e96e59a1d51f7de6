import os
import subprocess
import sys

import numpy as np
import pytest

from qlift.cli import main
from qlift.io import parse_complex

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def fx(name):
    return os.path.join(FIXTURES, name)


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSynth:
    def test_qubit_negation(self, capsys):
        code, out, _ = run_cli(capsys, "synth", fx("not.tt"), "--encoding", "qubit")
        assert code == 0
        values = [
            [parse_complex(tok) for tok in line.split()]
            for line in out.strip().splitlines()
        ]
        assert np.array_equal(np.array(values), np.array([[0, 1], [1, 0]]))

    def test_irreversible_table_synthesized_via_closure(self, capsys, tmp_path):
        table = tmp_path / "const1.tt"
        table.write_text("in 1 out 1\n0 -> 1\n1 -> 1\n")
        code, out, _ = run_cli(capsys, "synth", str(table))
        assert code == 0
        assert len(out.strip().splitlines()) == 4  # two-qubit gate

    def test_custom_encoding_file(self, capsys):
        code, out, _ = run_cli(
            capsys, "synth", fx("not.tt"), "--encoding", fx("qutrit_like.enc")
        )
        assert code == 0
        assert len(out.strip().splitlines()) == 3

    def test_missing_file_is_parse_error(self, capsys):
        code, _, err = run_cli(capsys, "synth", fx("nope.tt"))
        assert code == 2 and err


class TestSqrt:
    def test_named_negation(self, capsys):
        code, out, _ = run_cli(capsys, "sqrt", "NOT")
        assert code == 0
        rows = [
            [parse_complex(tok) for tok in line.split()]
            for line in out.strip().splitlines()
        ]
        expected = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]])
        assert np.allclose(np.array(rows), expected, atol=1e-12)

    def test_matrix_file(self, capsys):
        code, out, _ = run_cli(capsys, "sqrt", fx("x.mat"))
        assert code == 0

    def test_non_unitary_is_domain_error(self, capsys, tmp_path):
        shear = tmp_path / "shear.mat"
        shear.write_text("1 1\n0 1\n")
        code, _, err = run_cli(capsys, "sqrt", str(shear))
        assert code == 1 and "unitary" in err


class TestRun:
    def test_bell_circuit(self, capsys):
        code, out, _ = run_cli(capsys, "run", fx("bell.circ"), "--input", "00")
        assert code == 0
        lines = out.splitlines()
        amp_start = lines.index("amplitudes:") + 1
        prob_start = lines.index("probabilities:") + 1
        amps = {}
        for line in lines[amp_start : prob_start - 1]:
            idx, _bits, value = line.split()
            amps[int(idx)] = parse_complex(value)
        probs = {}
        for line in lines[prob_start:]:
            idx, value = line.split()
            probs[int(idx)] = float(value)
        assert abs(abs(amps[0]) ** 2 - 0.5) <= 1e-12
        assert abs(abs(amps[3]) ** 2 - 0.5) <= 1e-12
        assert abs(sum(probs.values()) - 1) <= 1e-12

    def test_byte_identical_output(self, capsys):
        _, out1, _ = run_cli(capsys, "run", fx("bell.circ"), "--input", "00")
        _, out2, _ = run_cli(capsys, "run", fx("bell.circ"), "--input", "00")
        assert out1 == out2

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.circ"
        bad.write_text("H 0\n")
        code, _, err = run_cli(capsys, "run", str(bad), "--input", "0")
        assert code == 2 and "line 1" in err

    def test_wrong_input_width_is_domain_error(self, capsys):
        code, _, err = run_cli(capsys, "run", fx("bell.circ"), "--input", "0")
        assert code == 1 and err


class TestSchmidt:
    def test_bell_state(self, capsys):
        code, out, _ = run_cli(
            capsys, "schmidt", fx("bell_state.vec"), "--dims", "2,2"
        )
        assert code == 0
        lines = dict(line.split(":", 1) for line in out.strip().splitlines())
        coeffs = [float(x) for x in lines["coefficients"].split()]
        assert np.allclose(coeffs, [1 / np.sqrt(2)] * 2, atol=1e-10)
        assert lines["rank"].strip() == "2"
        assert lines["classification"].strip() == "entangled"

    def test_bad_dims_is_parse_error(self, capsys):
        code, _, err = run_cli(
            capsys, "schmidt", fx("bell_state.vec"), "--dims", "2;2"
        )
        assert code == 2 and "--dims" in err


class TestEnumerate:
    def test_ququart_count(self, capsys):
        code, out, _ = run_cli(
            capsys, "enumerate", fx("not.tt"), "--encoding", "ququart"
        )
        assert code == 0
        assert out.startswith("count: 4")
        # four matrices, blank-line separated
        assert out.count("\n\n") == 4


class TestVerify:
    """Exit-code contract over the six-fixture set."""

    CASES = [
        ("x.mat", "not.tt", "qubit", 0),
        ("not4.mat", "not.tt", "ququart", 0),
        ("antidiag.mat", "not.tt", "matrix2", 1),
        ("h.mat", "not.tt", "qubit", 1),
        ("bad.mat", "not.tt", "qubit", 2),
        ("x.mat", "bad_table.tt", "qubit", 2),
    ]

    @pytest.mark.parametrize("matrix,table,encoding,expected", CASES)
    def test_exit_codes(self, capsys, matrix, table, encoding, expected):
        code, out, err = run_cli(
            capsys, "verify", fx(matrix), fx(table), "--encoding", encoding
        )
        assert code == expected
        if expected == 0:
            assert "verdict: true" in out
        if expected == 1:
            assert "verdict: false" in out and "failure:" in out
        if expected == 2:
            assert err

    def test_antidiagonal_diagnostic_names_subspace(self, capsys):
        _, out, _ = run_cli(
            capsys, "verify", fx("antidiag.mat"), fx("not.tt"), "--encoding", "matrix2"
        )
        assert "logical subspace '0'" in out


class TestModuleEntryPoint:
    def test_python_dash_m(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qlift", "synth", fx("not.tt")],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == 0
        assert "1.0+0.0i" in proc.stdout

    def test_help_mentions_h_normalization(self):
        proc = subprocess.run(
            [sys.executable, "-m", "qlift", "--help"], capture_output=True, text=True
        )
        assert proc.returncode == 0
        assert "1/sqrt(2)" in proc.stdout
