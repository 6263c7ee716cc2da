import json

import pytest

from mcusynth.cli import main
from mcusynth.textio import read_circuit
from mcusynth.unitary2 import H, NAMED_GATES


class TestVerifyIdentity:
    def test_small_n_passes(self, capsys):
        assert main(["verify-identity", "--n", "3"]) == 0
        out = capsys.readouterr().out
        assert "closed-form n=3: PASS (8 assignments)" in out
        assert "recurrence n=3: PASS" in out
        assert "xor-int-laws [-8,8]: PASS (4913 triples)" in out
        assert "sum-shift-laws n=3: PASS" in out
        assert "alternating-binomial n=2..60: PASS (59 values)" in out
        assert "all checks passed" in out

    def test_out_of_range(self, capsys):
        assert main(["verify-identity", "--n", "0"]) == 2
        assert main(["verify-identity", "--n", "15"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_recurrent_only(self, capsys):
        assert main(["verify-identity", "--n", "20", "--recurrent-only", "--samples", "200"]) == 0
        out = capsys.readouterr().out
        assert "closed-form (sampled) n=20: PASS (200 samples)" in out

    def test_recurrent_only_out_of_range(self):
        assert main(["verify-identity", "--n", "25", "--recurrent-only"]) == 2

    def test_zero_samples(self):
        assert main(["verify-identity", "--n", "5", "--recurrent-only", "--samples", "0"]) == 2


class TestSynth:
    def test_writes_circuit_and_counts(self, tmp_path, capsys):
        out_file = tmp_path / "toffoli.circ"
        assert main(["synth", "--controls", "2", "--gate", "X", "--out", str(out_file)]) == 0
        printed = capsys.readouterr().out
        assert "cnot=2 cv=2 cvdg=1 total=5" in printed
        circuit = read_circuit(out_file)
        assert circuit.width == 3
        assert len(circuit) == 5

    def test_three_controls_total(self, tmp_path, capsys):
        out_file = tmp_path / "c3x.circ"
        assert main(["synth", "--controls", "3", "--gate", "X", "--out", str(out_file)]) == 0
        assert "total=17" in capsys.readouterr().out

    def test_single_control_identity(self, tmp_path, capsys):
        out_file = tmp_path / "ci.circ"
        assert main(["synth", "--controls", "1", "--gate", "I", "--out", str(out_file)]) == 0
        assert len(read_circuit(out_file)) == 1
        assert main(["check", "--circuit", str(out_file), "--controls", "1", "--gate", "I"]) == 0

    def test_optimize_prints_before_after(self, tmp_path, capsys):
        out_file = tmp_path / "c.circ"
        args = ["synth", "--controls", "4", "--gate", "H", "--optimize", "--out", str(out_file)]
        assert main(args) == 0
        printed = capsys.readouterr().out
        assert "before: " in printed and "after:  " in printed
        assert len(read_circuit(out_file)) <= 49

    def test_bad_gate_name(self, tmp_path):
        assert main(["synth", "--controls", "2", "--gate", "Q", "--out", str(tmp_path / "x")]) == 2

    def test_zero_controls(self, tmp_path):
        assert main(["synth", "--controls", "0", "--gate", "X", "--out", str(tmp_path / "x")]) == 2

    def test_unwritable_path(self, tmp_path):
        target = tmp_path / "missing-dir" / "c.circ"
        assert main(["synth", "--controls", "1", "--gate", "X", "--out", str(target)]) == 2

    def test_explicit_matrix_gate(self, tmp_path, capsys):
        gate_file = tmp_path / "h.json"
        payload = {
            "matrix": [
                [[float(H[r, c].real), float(H[r, c].imag)] for c in range(2)]
                for r in range(2)
            ]
        }
        gate_file.write_text(json.dumps(payload))
        out_file = tmp_path / "ch.circ"
        spec = f"@{gate_file}"
        assert main(["synth", "--controls", "2", "--gate", spec, "--out", str(out_file)]) == 0
        assert main(["check", "--circuit", str(out_file), "--controls", "2", "--gate", spec]) == 0

    def test_rounded_matrix_survives_full_pipeline(self, tmp_path):
        # decimals truncated to 10 digits: unitary only to ~1e-10, which the
        # ingest tolerance admits and the whole synth/check path must accept
        gate_file = tmp_path / "rounded.json"
        payload = {
            "matrix": [
                [[round(float(H[r, c].real), 10), round(float(H[r, c].imag), 10)] for c in range(2)]
                for r in range(2)
            ]
        }
        gate_file.write_text(json.dumps(payload))
        out_file = tmp_path / "rh.circ"
        spec = f"@{gate_file}"
        assert main(["synth", "--controls", "3", "--gate", spec, "--out", str(out_file)]) == 0
        assert main(["check", "--circuit", str(out_file), "--controls", "3", "--gate", spec]) == 0


class TestCheck:
    def synth(self, tmp_path, controls, gate):
        out_file = tmp_path / f"c{controls}{gate}.circ"
        assert main(["synth", "--controls", str(controls), "--gate", gate, "--out", str(out_file)]) == 0
        return out_file

    def test_passes_on_fresh_synthesis(self, tmp_path, capsys):
        path = self.synth(tmp_path, 2, "X")
        assert main(["check", "--circuit", str(path), "--controls", "2", "--gate", "X"]) == 0
        out = capsys.readouterr().out
        assert "distance" in out and "PASS" in out

    def test_fails_after_deleting_a_gate(self, tmp_path, capsys):
        path = self.synth(tmp_path, 2, "X")
        lines = path.read_text().splitlines()
        gate_lines = [l for l in lines if l.split() and l.split()[0] in ("cnot", "cv", "cvdg")]
        lines.remove(gate_lines[-1])
        path.write_text("\n".join(lines) + "\n")
        assert main(["check", "--circuit", str(path), "--controls", "2", "--gate", "X"]) == 1
        assert "FAIL" in capsys.readouterr().out

    def test_width_mismatch(self, tmp_path):
        path = self.synth(tmp_path, 2, "X")
        assert main(["check", "--circuit", str(path), "--controls", "3", "--gate", "X"]) == 2

    def test_unparseable_file(self, tmp_path):
        path = tmp_path / "garbage.circ"
        path.write_text("this is not a circuit\n")
        assert main(["check", "--circuit", str(path), "--controls", "2", "--gate", "X"]) == 2

    def test_missing_file(self, tmp_path):
        missing = tmp_path / "none.circ"
        assert main(["check", "--circuit", str(missing), "--controls", "2", "--gate", "X"]) == 2

    def test_missing_binding(self, tmp_path):
        path = tmp_path / "nobind.circ"
        path.write_text("qubits 2\ncv 0 1\n")
        assert main(["check", "--circuit", str(path), "--controls", "1", "--gate", "X"]) == 2

    @pytest.mark.parametrize("gate", sorted(NAMED_GATES))
    def test_all_named_gates_round_trip(self, gate, tmp_path):
        for controls in range(1, 6):
            path = self.synth(tmp_path, controls, gate)
            args = ["check", "--circuit", str(path), "--controls", str(controls), "--gate", gate]
            assert main(args) == 0, (controls, gate)


class TestSimulate:
    def test_single_cnot(self, tmp_path, capsys):
        path = tmp_path / "cx.circ"
        path.write_text("qubits 2\ncnot 0 1\n")
        assert main(["simulate", "--circuit", str(path), "--input", "10"]) == 0
        assert capsys.readouterr().out == "|11⟩: 1.0\n"

    def test_empty_circuit(self, tmp_path, capsys):
        path = tmp_path / "idle.circ"
        path.write_text("qubits 4\n")
        assert main(["simulate", "--circuit", str(path), "--input", "0110"]) == 0
        assert capsys.readouterr().out == "|0110⟩: 1.0\n"

    def test_toffoli_flip(self, tmp_path, capsys):
        out_file = tmp_path / "t.circ"
        assert main(["synth", "--controls", "2", "--gate", "X", "--out", str(out_file)]) == 0
        capsys.readouterr()
        assert main(["simulate", "--circuit", str(out_file), "--input", "110"]) == 0
        assert capsys.readouterr().out.strip() == "|111⟩: 1.0"

    def test_superposition_amplitudes(self, tmp_path, capsys):
        out_file = tmp_path / "ch.circ"
        assert main(["synth", "--controls", "1", "--gate", "H", "--out", str(out_file)]) == 0
        capsys.readouterr()
        assert main(["simulate", "--circuit", str(out_file), "--input", "10"]) == 0
        out = capsys.readouterr().out
        assert "|10⟩: 0.707106781187" in out
        assert "|11⟩: 0.707106781187" in out

    def test_length_mismatch(self, tmp_path):
        path = tmp_path / "cx.circ"
        path.write_text("qubits 2\ncnot 0 1\n")
        assert main(["simulate", "--circuit", str(path), "--input", "101"]) == 2

    def test_non_bit_input(self, tmp_path):
        path = tmp_path / "cx.circ"
        path.write_text("qubits 2\ncnot 0 1\n")
        assert main(["simulate", "--circuit", str(path), "--input", "1a"]) == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["synth", "--controls", "2"])
    assert exc.value.code == 2
