"""Unit tests for the liequiver command line."""

import json

import pytest

from cli import run, run_verification, verification_tasks
from cli.parser import parse_weight, parse_window
from models import JobConfig, LieQuiverError, LieQuiverErrorType, LieType, Weight
from services import enumerate_extremal, psi_c


class TestParser:
    """Test cases for argument helpers."""

    def test_weight(self):
        """Test a weight of the right rank."""
        assert parse_weight("1,0,2", 3) == Weight((1, 0, 2))

    def test_weight_wrong_rank(self):
        """Test a weight with too few coordinates."""
        with pytest.raises(LieQuiverError) as exc_info:
            parse_weight("1,0", 3)

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT

    def test_window(self):
        """Test lo:hi windows."""
        assert parse_window("0,0:2,2", 2) == (Weight((0, 0)), Weight((2, 2)))

    def test_window_without_colon(self):
        """Test a window must have two ends."""
        with pytest.raises(LieQuiverError) as exc_info:
            parse_window("0,0", 2)

        assert exc_info.value.error_type == LieQuiverErrorType.INVALID_INPUT


class TestCommands:
    """Test cases for command output and exit codes."""

    def test_roots(self, capsys):
        """Test the root listing for C2."""
        code = run(["roots", "--type", "C", "--rank", "2"])

        assert code == 0
        assert capsys.readouterr().out.splitlines()[0] == "C2: 4 positive roots"

    def test_roots_json(self, capsys):
        """Test JSON output of the root listing."""
        run(["roots", "--type", "C", "--rank", "2", "--json"])
        data = json.loads(capsys.readouterr().out)

        assert data["cartan"] == [[2, -2], [-1, 2]]
        assert len(data["roots"]) == 4

    def test_families_count(self, capsys):
        """Test the vertex count of Xi_0((6,5))."""
        code = run(["families", "--xi", "6,5", "--parity", "0", "--count"])

        assert code == 0
        assert capsys.readouterr().out.strip() == "21"

    def test_relations(self, capsys):
        """Test the relation listing of the doubled root."""
        code = run(["relations", "--type", "C", "--rank", "2", "--psi", "1,2", "--lam", "2,0", "--eta", "2,2"])
        out = capsys.readouterr().out

        assert code == 0
        assert "case=doubled-root/t3" in out
        assert "4 3 -16" in out

    def test_family_relations(self, capsys):
        """Test the lattice relations on a windowed component of Psi(1,3)."""
        code = run(["relations", "--type", "C", "--rank", "3", "--psi", "1,3", "--lam", "1,1,1", "--family", "2,2,2"])
        out = capsys.readouterr().out

        assert code == 0
        assert out.splitlines()[0] == "1 relations"
        assert "(0, 0) <- (2, 2): 9*(0, 0)(1, 1) 4*(0, 1)(0, 1) -25*(1, 1)(0, 0)" in out

    def test_quiver_window(self, capsys):
        """Test the box window summary."""
        code = run(["quiver", "--type", "C", "--rank", "2", "--psi", "1,2", "--window", "0,0:2,2"])

        assert code == 0
        assert capsys.readouterr().out.startswith("9 vertices, 8 arrows, 2 components")

    def test_koszul(self, capsys):
        """Test the algebra summary on an interval."""
        code = run(["koszul", "--type", "C", "--rank", "2", "--psi", "1,2", "--window", "0,0:2,2"])
        out = capsys.readouterr().out

        assert code == 0
        assert "7 vertices, 8 arrows, 3 relations" in out
        assert "global dimension 2" in out

    def test_verify(self, capsys):
        """Test a small verification grid passes."""
        code = run(["verify", "--type", "C", "--rank", "2", "--psi", "1,2", "--lmax", "1"])

        assert code == 0
        assert "0 failures" in capsys.readouterr().out

    def test_export(self, capsys, tmp_path):
        """Test export writes the requested files."""
        rel = tmp_path / "relations.json"
        code = run([
            "export", "--type", "C", "--rank", "2", "--psi", "1,2", "--window", "0,0:2,2",
            "--relations", str(rel),
        ])

        assert code == 0
        assert json.loads(rel.read_text())["spaces"]
        assert f"wrote {rel}" in capsys.readouterr().out

    def test_bad_psi(self, capsys):
        """Test malformed Psi text exits with code 2."""
        code = run(["relations", "--type", "A", "--rank", "3", "--psi", "a:1,x", "--lam", "0,0,0", "--eta", "1,1,1"])

        assert code == 2
        assert capsys.readouterr().err.startswith("liequiver: Invalid input: ")

    def test_not_extremal(self, capsys):
        """Test a non-extremal Psi exits with code 2."""
        code = run(["quiver", "--type", "A", "--rank", "2", "--psi", "a:1,1x2,2", "--window", "0,0:1,1"])

        assert code == 2
        assert "Root set is not extremal" in capsys.readouterr().err


class TestVerification:
    """Test cases for the verification grid."""

    @pytest.fixture
    def config(self):
        """Grid up to lam(h_i) <= 1 for Psi(1,2) in C2."""
        return JobConfig(lie_type=LieType("C", 2), psi_spec="1,2", lambda_max=1)

    def test_tasks(self, config):
        """Test one task per weight and element of Psi + Psi."""
        tasks = verification_tasks(psi_c(LieType("C", 2), [1, 2]), config)

        assert len(tasks) == 4 * 5
        assert tasks[0][1] == (0, 0)

    def test_sample(self, config):
        """Test sampling keeps the grid order."""
        tasks = verification_tasks(psi_c(LieType("C", 2), [1, 2]), config, sample=2)
        weights = sorted({t[1] for t in tasks})

        assert len(weights) == 2
        assert [t[1] for t in tasks] == sorted(t[1] for t in tasks)

    def test_run(self, config):
        """Test every instance reports a pass."""
        tasks = verification_tasks(psi_c(LieType("C", 2), [1, 2]), config)
        results = run_verification(tasks)

        assert len(results) == len(tasks)
        assert all(r["pass"] for r in results)

    def test_capped_instances_are_not_failures(self):
        """Test oracle modules over the cap are reported as capped and still pass."""
        config = JobConfig(lie_type=LieType("C", 2), psi_spec="1,2", lambda_max=2, module_cap=1)
        results = run_verification(verification_tasks(psi_c(LieType("C", 2), [1, 2]), config))
        capped = [r for r in results if r["case"] == "capped"]

        assert capped
        assert all(r["pass"] for r in capped)
        assert all(r["details"]["error"].startswith("CAP_EXCEEDED") for r in capped)
        assert not [r for r in results if not r["pass"]]

    def test_other_errors_fail(self, config, monkeypatch):
        """Test an error other than the cap still counts as a failure."""
        def broken(*args, **kwargs):
            raise LieQuiverError(LieQuiverErrorType.UNSUPPORTED_CASE, "no closed form")

        monkeypatch.setattr("cli.commands.relation_space", broken)
        results = run_verification(verification_tasks(psi_c(LieType("C", 2), [1, 2]), config)[:1])

        assert results[0]["case"] == "error"
        assert results[0]["pass"] is False

    def test_capped_exit_code(self, capsys):
        """Test a grid with only capped or passing instances exits with code 0."""
        code = run(["verify", "--type", "C", "--rank", "2", "--psi", "1,2", "--lmax", "2", "--module-cap", "1"])
        out = capsys.readouterr().out

        assert code == 0
        assert "0 failures" in out
        assert "capped: " in out

    @pytest.mark.slow
    @pytest.mark.parametrize("lie_type", [
        LieType("A", 2), LieType("A", 3), LieType("A", 4),
        LieType("C", 2), LieType("C", 3), LieType("C", 4),
    ])
    def test_extremal_grid(self, lie_type):
        """Test closed-form relations and genericity agree with the oracle for every extremal Psi."""
        config = JobConfig(lie_type=lie_type, lambda_max=1, module_cap=2000)
        checked = 0
        for psi in enumerate_extremal(lie_type):
            results = run_verification(verification_tasks(psi, config))
            failures = [(r["instance"], r["case"], r["details"]) for r in results if not r["pass"]]

            assert not failures, (str(psi), failures)
            checked += sum(1 for r in results if r["case"] != "capped")

        assert checked
