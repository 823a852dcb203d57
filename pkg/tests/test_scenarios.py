"""Tests for scenarios, reports and the command line."""

import json

import pytest

from src.errors import ScenarioError, VerificationError
from src.main import EXIT_INPUT, EXIT_OK, EXIT_VERIFICATION, cli
from src.scenarios import (
    BUNDLED_SCENARIOS,
    Scenario,
    build_context,
    list_examples,
    load_scenario,
    require_passed,
    run_reference,
    run_scenario,
    write_report,
)


@pytest.fixture
def scenario_dir(tmp_path):
    """A directory holding a small action file and scenarios that refer to it."""
    (tmp_path / "swap.json").write_text(json.dumps({
        "name": "swap",
        "order": 2,
        "generators": {"s": {"vertex_map": {"0": 1, "1": 0}}},
    }))
    (tmp_path / "broken-action.json").write_text('{"generators": ')
    (tmp_path / "swap-scenario.json").write_text(json.dumps({
        "name": "points",
        "kind": "finite-action",
        "complex": "two-points",
        "action": "swap.json",
        "operations": ["split_check", "phi_map", "finite_exact_sequence"],
    }))
    (tmp_path / "broken-scenario.json").write_text(json.dumps({
        "name": "broken",
        "kind": "finite-action",
        "complex": "two-points",
        "action": "broken-action.json",
        "operations": ["split_check"],
    }))
    (tmp_path / "wrong-ranks.json").write_text(json.dumps({
        "name": "wrong-ranks",
        "kind": "cover",
        "cover": "z-on-r",
        "operations": ["coinvariant_ranks"],
        "parameters": {"expected_ranks": [1, 1]},
    }))
    return tmp_path


class TestCatalog:
    """Bundled examples and scenario documents."""

    def test_every_kind_listed(self):
        kinds = {k for k, _, _ in list_examples()}
        assert kinds == {"complex", "action", "cover", "scenario"}
        assert len(list_examples()) >= 8

    def test_filter_by_kind(self):
        names = [name for _, name, _ in list_examples("cover")]
        assert names == sorted(["z-on-r", "z2-on-r2", "z3-on-r3", "strip"])

    def test_unknown_kind(self):
        with pytest.raises(ScenarioError):
            list_examples("manifold")

    def test_bundled_scenario_lookup(self):
        scenario, _ = load_scenario("octahedron-antipodal")
        assert scenario is BUNDLED_SCENARIOS["octahedron-antipodal"]

    def test_unknown_scenario(self):
        with pytest.raises(ScenarioError):
            load_scenario("klein-bottle")

    def test_operation_must_fit_kind(self):
        with pytest.raises(ValueError):
            Scenario(name="bad", kind="cover", cover="z-on-r", operations=["phi_map"])

    def test_cover_scenario_needs_cover(self):
        with pytest.raises(ValueError):
            Scenario(name="bad", kind="cover", operations=["coinvariant_ranks"])

    def test_precedence_of_parameters(self):
        scenario = BUNDLED_SCENARIOS["z3-on-r3"]
        assert build_context(scenario).radius == 1
        assert build_context(scenario, window_radius=2).radius == 2
        assert build_context(BUNDLED_SCENARIOS["z-on-r"]).radius == 2


class TestRunner:
    """Running scenarios into sealed reports."""

    def test_line_scenario(self):
        report = run_reference("z-on-r")
        assert report.passed
        assert [s.operation for s in report.sections] == BUNDLED_SCENARIOS["z-on-r"].operations
        assert report.parameters == {"window_radius": 2, "cutoff": "domain", "max_degree": None}

    def test_digest_is_deterministic(self):
        first = run_reference("hexagon-reflection")
        second = run_reference("hexagon-reflection")
        assert first.digest == second.digest
        assert len(first.digest) == 64

    def test_parameters_change_digest(self):
        assert run_reference("z-on-r").digest != run_reference("z-on-r", cutoff="split").digest

    def test_finite_scenario_drops_cover_parameters(self):
        report = run_reference("octahedron-antipodal")
        assert report.passed, [s.operation for s in report.sections if not s.passed]
        assert report.parameters == {"max_degree": None}

    def test_scenario_file_with_relative_action(self, scenario_dir):
        scenario, base = load_scenario(str(scenario_dir / "swap-scenario.json"))
        report = run_scenario(scenario, base)
        assert report.passed

    def test_failed_expectation(self, scenario_dir):
        report = run_reference(str(scenario_dir / "wrong-ranks.json"))
        assert not report.passed
        assert report.checks[0].invariant == "section.coinvariant_ranks"

    def test_require_passed_raises_with_every_failure(self, scenario_dir):
        report = run_reference(str(scenario_dir / "wrong-ranks.json"))
        with pytest.raises(VerificationError) as info:
            require_passed(report)
        assert info.value.invariant == "coinvariant_ranks: cover.expected_ranks"
        assert info.value.witness == "computed [0, 1]"
        assert ("coinvariant_ranks", "cover.expected_ranks", "computed [0, 1]") in info.value.failures

    def test_require_passed_accepts_passing_report(self):
        require_passed(run_reference("z-on-r"))

    def test_timings_logged_at_debug(self, mocker):
        debug = mocker.patch("src.scenarios.runner.logger.debug")
        run_reference("z-on-r")
        lines = [c.args[0] for c in debug.call_args_list]
        assert any("cover.coinvariant_ranks_report" in line for line in lines)

    @pytest.mark.parametrize("reference, warned", [("z-on-r", True), ("hexagon-reflection", False)])
    def test_max_degree_warning_for_covers(self, mocker, reference, warned):
        warning = mocker.patch("src.scenarios.runner.logger.warning")
        run_reference(reference, max_degree=1)
        messages = [c.args[0] for c in warning.call_args_list]
        assert any("does not apply to cover scenarios" in m for m in messages) is warned

    @pytest.mark.slow
    def test_three_space_scenario(self):
        report = run_reference("z3-on-r3")
        assert report.passed, [s.operation for s in report.sections if not s.passed]
        assert [s.operation for s in report.sections] == [
            "coinvariant_ranks", "cover_exact_sequence", "h0_check", "corollary_check",
        ]

    def test_write_both_formats(self, tmp_path):
        report = run_reference("z-on-r")
        record = write_report(report, "record", str(tmp_path))
        table = write_report(report, "table", str(tmp_path))
        assert json.loads(record.read_text())["digest"] == report.digest
        assert table.name == "z-on-r.txt"
        assert "== coinvariant_ranks [PASS]" in table.read_text()


class TestCommandLine:
    """The coinv command."""

    def test_run_bundled(self, runner, tmp_path):
        result = runner.invoke(cli, ["run", "octahedron-antipodal", "--out", str(tmp_path)])
        assert result.exit_code == EXIT_OK, result.output
        assert "octahedron-antipodal: PASS" in result.output
        record = json.loads((tmp_path / "octahedron-antipodal.json").read_text())
        assert record["passed"] is True
        assert record["kind"] == "finite-action"

    def test_run_table(self, runner, tmp_path):
        result = runner.invoke(cli, ["run", "z-on-r", "--format", "table", "--window-radius", "1",
                                     "--out", str(tmp_path)])
        assert result.exit_code == EXIT_OK, result.output
        assert "window_radius=1" in (tmp_path / "z-on-r.txt").read_text()

    def test_malformed_action_file(self, runner, scenario_dir, tmp_path):
        result = runner.invoke(cli, ["run", str(scenario_dir / "broken-scenario.json"), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_INPUT

    def test_unknown_scenario(self, runner):
        result = runner.invoke(cli, ["run", "no-such-scenario"])
        assert result.exit_code == EXIT_INPUT

    def test_verification_failure(self, runner, scenario_dir, tmp_path):
        result = runner.invoke(cli, ["run", str(scenario_dir / "wrong-ranks.json"), "--out", str(tmp_path)])
        assert result.exit_code == EXIT_VERIFICATION
        assert "wrong-ranks: FAIL" in result.output
        assert "coinvariant_ranks: cover.expected_ranks" in result.output

    def test_list_examples(self, runner):
        result = runner.invoke(cli, ["list-examples", "--kind", "action"])
        assert result.exit_code == EXIT_OK
        assert "octahedron-antipodal" in result.output
        assert "z-on-r" not in result.output

    def test_list_examples_unknown_kind(self, runner):
        result = runner.invoke(cli, ["list-examples", "--kind", "manifold"])
        assert result.exit_code == EXIT_INPUT
