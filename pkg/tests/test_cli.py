import json
from fractions import Fraction

import pytest

from dhspec import parse_ht
from dhspec.cli import main

WORKED = "vertices: 5\nedge: tail 1 2 ; head 3\nedge: tail 1 4 ; head 2 5\n"
COUNTEREXAMPLE = "vertices: 4\nedge: tail 1 3 ; head 2\nedge: tail 4 2 ; head 3\n"
CYCLE = (
    "vertices: 3\n"
    "edge: tail 1 ; head 2 3\n"
    "edge: tail 2 ; head 1 3\n"
    "edge: tail 3 ; head 1 2\n"
)
FOUR_UNIFORM = "vertices: 6\nedge: tail 1 2 ; head 3 4\nedge: tail 3 5 ; head 2 6\n"


@pytest.fixture
def worked_path(tmp_path):
    path = tmp_path / "worked.dhg"
    path.write_text(WORKED)
    return str(path)


@pytest.fixture
def counter_path(tmp_path):
    path = tmp_path / "counter.dhg"
    path.write_text(COUNTEREXAMPLE)
    return str(path)


@pytest.fixture
def cycle_path(tmp_path):
    path = tmp_path / "cycle.dhg"
    path.write_text(CYCLE)
    return str(path)


def run_json(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip().startswith("{") else out


class TestBuild:
    def test_worked_out_adjacency(self, worked_path, capsys):
        code = main(["build", worked_path, "--tensor", "out-adj"])
        assert code == 0
        tensor = parse_ht(capsys.readouterr().out)
        values = sorted(tensor.entries.values())
        assert tensor.nnz == 12
        assert values.count(Fraction(1, 4)) == 8
        assert values.count(Fraction(1, 2)) == 4

    def test_edgeless_build_is_header_only(self, tmp_path, capsys):
        path = tmp_path / "empty.dhg"
        path.write_text("vertices: 4\n")
        assert main(["build", str(path), "--tensor", "out-adj"]) == 0
        assert capsys.readouterr().out == "order 2 dim 4\n"

    def test_cycle_laplacian_needs_relaxation_flag(self, cycle_path, capsys):
        assert main(["build", cycle_path, "--tensor", "out-lap"]) == 1
        capsys.readouterr()
        code = main(
            ["build", cycle_path, "--tensor", "out-lap", "--allow-shared-unions"]
        )
        assert code == 0
        tensor = parse_ht(capsys.readouterr().out)
        values = sorted(tensor.entries.values())
        assert values.count(Fraction(1)) == 3
        assert values.count(Fraction(-1, 2)) == 6

    def test_round_trip_through_file(self, worked_path, tmp_path, capsys):
        out_path = tmp_path / "tensor.ht"
        main(["build", worked_path, "--tensor", "in-adj", "--out", str(out_path)])
        first = out_path.read_text()
        rebuilt = parse_ht(first)
        main(["build", worked_path, "--tensor", "in-adj"])
        assert parse_ht(capsys.readouterr().out) == rebuilt


class TestSolvers:
    def test_degrees(self, worked_path, capsys):
        code, payload = run_json(capsys, ["degrees", worked_path])
        assert code == 0
        assert payload["results"]["out_degrees"] == [2, 1, 0, 1, 0]
        assert payload["results"]["rank"] == 4
        assert payload["results"]["uniform"] is False

    def test_bounds_are_degree_extremes(self, worked_path, capsys):
        code, payload = run_json(capsys, ["bounds", worked_path])
        assert code == 0
        bounds = payload["results"]["bounds"]
        assert bounds["lower"] == "0"
        assert bounds["upper"] == "2"

    def test_refined_bounds_closed_form(self, tmp_path, capsys):
        text = (
            "vertices: 5\n"
            "edge: tail 2 5 ; head 1\n"
            "edge: tail 3 5 ; head 2\n"
            "edge: tail 4 5 ; head 3\n"
            "edge: tail 4 5 ; head 2\n"
            "edge: tail 2 3 ; head 4\n"
            "edge: tail 1 ; head 2 3\n"
        )
        path = tmp_path / "degrees.dhg"
        path.write_text(text)
        code, payload = run_json(capsys, ["refined-bounds", str(path)])
        assert code == 0
        bounds = payload["results"]["bounds"]
        assert bounds["lower"] == pytest.approx(1.5874, abs=1e-4)
        assert bounds["upper"] == pytest.approx(2.5198, abs=1e-4)

    def test_rho_on_out_regular_cycle(self, cycle_path, capsys):
        code, payload = run_json(
            capsys, ["rho", cycle_path, "--allow-shared-unions"]
        )
        assert code == 0
        assert payload["results"]["rho"] == pytest.approx(1.0, abs=1e-10)

    def test_rho_nonconvergence_exit_code(self, worked_path, capsys):
        code = main(["rho", worked_path, "--max-iter", "1"])
        assert code == 2

    def test_zmax_on_even_order(self, tmp_path, capsys):
        path = tmp_path / "four.dhg"
        path.write_text(FOUR_UNIFORM)
        code, payload = run_json(capsys, ["zmax", str(path)])
        assert code == 0
        assert payload["results"]["value"] >= 0
        assert payload["results"]["residual"] <= 1e-10

    def test_zmax_odd_order_is_input_error(self, cycle_path):
        assert main(["zmax", cycle_path, "--allow-shared-unions"]) == 1


class TestVerifyAndStructural:
    def test_verify_exact_h_pair(self, cycle_path, capsys):
        code, payload = run_json(
            capsys,
            [
                "verify",
                cycle_path,
                "--allow-shared-unions",
                "--kind",
                "H",
                "--value",
                "1",
                "--vector",
                "1,1,1",
            ],
        )
        assert code == 0
        cert = payload["results"]["certificate"]
        assert cert["exact"] is True
        assert cert["residual"] == "0"

    def test_verify_z_pair_unit_norm(self, worked_path, capsys):
        code, payload = run_json(
            capsys,
            [
                "verify",
                worked_path,
                "--kind",
                "Z",
                "--value",
                "0",
                "--vector",
                "0,0,1,0,0",
            ],
        )
        assert code == 0
        assert payload["results"]["certificate"]["exact"] is True

    def test_structural_support_vector(self, worked_path, capsys):
        code, payload = run_json(
            capsys, ["structural", worked_path, "--support", "3"]
        )
        assert code == 0
        cert = payload["results"]["certificate"]
        assert cert["exact"] is True
        assert cert["value"] == "0"

    def test_structural_edge_vector(self, tmp_path, capsys):
        path = tmp_path / "single.dhg"
        path.write_text("vertices: 6\nedge: tail 1 2 3 ; head 4 5\n")
        code, payload = run_json(
            capsys,
            ["structural", str(path), "--edge", "0", "--h", "4"],
        )
        assert code == 0
        assert payload["results"]["support"] == [1, 2, 3, 4]
        assert payload["results"]["certificate"]["exact"] is True


class TestChecks:
    def test_strong_connectivity_failure_gives_witness(self, counter_path, capsys):
        code, payload = run_json(
            capsys, ["check", counter_path, "--name", "strong-connectivity"]
        )
        assert code == 3
        assert payload["results"]["passed"] is False
        assert payload["results"]["details"]["witness"] == [2, 1]

    def test_weak_passes_weak_star_fails(self, counter_path, capsys):
        code, _ = run_json(capsys, ["check", counter_path, "--name", "weak"])
        assert code == 0
        code, _ = run_json(capsys, ["check", counter_path, "--name", "weak-star"])
        assert code == 3

    def test_isospectral_on_uniform(self, tmp_path, capsys):
        path = tmp_path / "four.dhg"
        path.write_text(FOUR_UNIFORM)
        code, payload = run_json(capsys, ["check", str(path), "--name", "isospectral"])
        assert code == 0
        assert payload["results"]["passed"] is True

    def test_degree_lemma(self, worked_path, capsys):
        code, _ = run_json(capsys, ["check", worked_path, "--name", "degree-lemma"])
        assert code == 0

    def test_symmetrize_b_on_uniform(self, cycle_path, capsys):
        code, _ = run_json(
            capsys,
            ["check", cycle_path, "--allow-shared-unions", "--name", "symmetrize-b"],
        )
        assert code == 0

    def test_laplacian_and_signless_theorems(self, worked_path, capsys):
        for name in ("laplacian-theorem", "signless-theorem"):
            code, payload = run_json(capsys, ["check", worked_path, "--name", name])
            assert code == 0, payload

    def test_subadditivity_check(self, tmp_path, capsys):
        path = tmp_path / "four.dhg"
        path.write_text(FOUR_UNIFORM)
        code, payload = run_json(
            capsys, ["check", str(path), "--name", "subadditivity"]
        )
        assert code == 0
        assert payload["results"]["passed"] is True


class TestConnectivityAndReport:
    def test_connectivity_hierarchy(self, counter_path, capsys):
        code, payload = run_json(capsys, ["connectivity", counter_path])
        assert code == 0
        results = payload["results"]
        assert results["strongly_connected"] is False
        assert results["witness"] == [2, 1]
        assert results["weakly_irreducible"] is True
        assert results["weak_star_irreducible"] is False

    def test_report_runs(self, worked_path, capsys):
        code, payload = run_json(capsys, ["report", worked_path])
        assert code == 0
        assert payload["results"]["laplacian"]["ones_exact"] is True
        copositivity = payload["results"]["laplacian_copositivity"]
        assert copositivity["certificate"] == "grid-search"
        assert Fraction(copositivity["min_value"]) >= 0

    def test_report_respects_resolution_cap(self, worked_path, capsys):
        code, payload = run_json(capsys, ["report", worked_path, "--resolution", "80"])
        assert code == 0
        assert "skipped" in payload["results"]["laplacian_copositivity"]

    def test_report_is_byte_deterministic(self, worked_path, capsys):
        main(["report", worked_path, "--seed", "7"])
        first = capsys.readouterr().out
        main(["report", worked_path, "--seed", "7"])
        second = capsys.readouterr().out
        assert first == second


class TestPlumbing:
    def test_parse_error_exit_code(self, tmp_path):
        path = tmp_path / "bad.dhg"
        path.write_text("vertices: x\n")
        assert main(["degrees", str(path)]) == 1

    def test_duplicate_union_exit_code(self, tmp_path):
        path = tmp_path / "dup.dhg"
        path.write_text(
            "vertices: 3\nedge: tail 1 ; head 2 3\nedge: tail 2 3 ; head 1\n"
        )
        assert main(["degrees", str(path)]) == 1

    def test_seed_env_override(self, worked_path, capsys, monkeypatch):
        monkeypatch.setenv("DHSPEC_SEED", "99")
        _, payload = run_json(capsys, ["degrees", worked_path])
        assert payload["seed"] == 99
        monkeypatch.delenv("DHSPEC_SEED")
        _, payload = run_json(capsys, ["degrees", worked_path])
        assert payload["seed"] == 0x5EED

    def test_seed_flag_beats_env(self, worked_path, capsys, monkeypatch):
        monkeypatch.setenv("DHSPEC_SEED", "99")
        _, payload = run_json(capsys, ["degrees", worked_path, "--seed", "5"])
        assert payload["seed"] == 5

    def test_text_format(self, worked_path, capsys):
        code = main(["degrees", worked_path, "--format", "text"])
        assert code == 0
        out = capsys.readouterr().out
        assert out.startswith("# degrees")
        assert "out_degrees" in out

    def test_fingerprint_present(self, worked_path, capsys):
        _, payload = run_json(capsys, ["degrees", worked_path])
        assert len(payload["fingerprint"]) == 64
