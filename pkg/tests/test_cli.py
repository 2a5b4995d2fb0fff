"""Command-line interface: output shape, determinism, exit codes."""

import json

import pytest

from walllat.cli import main
from walllat.catalog import fixture_text


@pytest.fixture()
def fixture_dir(tmp_path):
    for name in ("s4.grp", "s3xs3.grp", "c4.grp", "c2x2.grp", "c3c2_trivial.kac",
                 "c2sq_c2_eta_m2.kac", "chartable_s3.json"):
        (tmp_path / name).write_text(fixture_text(name), encoding="utf-8")
    return tmp_path


def run(capsys, *argv) -> tuple[int, str]:
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestWallCommands:
    def test_wall_json(self, capsys, fixture_dir):
        code, out = run(capsys, "wall", str(fixture_dir / "s4.grp"), "--json")
        payload = json.loads(out)
        assert code == 0
        assert payload["maximal_count"] == 8
        assert payload["bound"] == 24
        assert payload["holds"] is True

    def test_relative_wall_json(self, capsys, fixture_dir):
        code, out = run(
            capsys, "relative-wall", str(fixture_dir / "s3xs3.grp"),
            "--subgroup", "diag", "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert (payload["maximal_count"], payload["bound"]) == (1, 3)

    def test_unknown_subgroup_is_usage_error(self, capsys, fixture_dir):
        code, _ = run(
            capsys, "relative-wall", str(fixture_dir / "s3xs3.grp"),
            "--subgroup", "nope",
        )
        assert code == 2

    def test_mod2_named_subgroups(self, capsys, fixture_dir):
        code, out = run(
            capsys, "mod2", str(fixture_dir / "s4.grp"),
            "--subgroups", "s3,d4", "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["holds"] is True
        assert len(payload["witnesses"]) == 2

    def test_tensor(self, capsys, fixture_dir):
        code, out = run(
            capsys, "tensor", str(fixture_dir / "c2x2.grp"),
            str(fixture_dir / "c2x2.grp"), "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert (payload["count"], payload["bound"], payload["equality"]) == (9, 9, True)


class TestKacCommands:
    def test_coideals_json(self, capsys, fixture_dir):
        code, out = run(
            capsys, "kac", "coideals", str(fixture_dir / "c3c2_trivial.kac"), "--json"
        )
        payload = json.loads(out)
        assert code == 0
        assert payload["node_count"] == 6
        assert sorted(payload["dims"]) == [1, 2, 2, 2, 3, 6]
        assert len(payload["maximal"]) == 4

    def test_validate_and_wall(self, capsys, fixture_dir):
        code, _ = run(capsys, "kac", "validate", str(fixture_dir / "c2sq_c2_eta_m2.kac"))
        assert code == 0
        code, out = run(
            capsys, "kac", "wall", "--input", str(fixture_dir / "c2sq_c2_eta_m2.kac"),
            "--json",
        )
        assert code == 0
        assert json.loads(out)["dim"] == 8

    def test_relative_with_triple_id(self, capsys, fixture_dir):
        code, out = run(
            capsys, "kac", "relative", str(fixture_dir / "c3c2_trivial.kac"),
            "--triple", "0", "--json",
        )
        assert code == 0
        assert json.loads(out)["bound"] >= 1

    def test_bad_triple_id(self, capsys, fixture_dir):
        code, _ = run(
            capsys, "kac", "relative", str(fixture_dir / "c3c2_trivial.kac"),
            "--triple", "99",
        )
        assert code == 2


class TestFusionCommands:
    def test_group_ring(self, capsys, fixture_dir):
        code, out = run(capsys, "fusion", "group", str(fixture_dir / "s4.grp"), "--json")
        payload = json.loads(out)
        assert code == 0
        assert (payload["n"], payload["count"]) == (24, 8)

    def test_chartable(self, capsys, fixture_dir):
        code, out = run(
            capsys, "fusion", "chartable", str(fixture_dir / "chartable_s3.json"),
            "--json",
        )
        payload = json.loads(out)
        assert code == 0
        assert (payload["n"], payload["count"], payload["holds"]) == (3, 1, True)


class TestErrorsAndDeterminism:
    def test_missing_file_is_usage_error(self, capsys):
        code, _ = run(capsys, "wall", "/definitely/not/here.grp")
        assert code == 2

    def test_malformed_spec_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "bad.grp"
        path.write_text("[group]\ndegree = x\n", encoding="utf-8")
        code, _ = run(capsys, "wall", str(path))
        assert code == 2

    def test_json_output_is_deterministic(self, capsys, fixture_dir):
        _, first = run(capsys, "wall", str(fixture_dir / "s4.grp"), "--json")
        _, second = run(capsys, "wall", str(fixture_dir / "s4.grp"), "--json")
        assert first == second

    def test_env_override_reaches_caps(self, monkeypatch):
        from walllat.config import default_caps

        monkeypatch.setenv("WALLLAT_INTERVAL_CAP", "7")
        assert default_caps().interval_cap == 7

    def test_cap_flag_reaches_checks(self, capsys, fixture_dir):
        code, _ = run(
            capsys, "--interval-cap", "2", "wall", str(fixture_dir / "s4.grp")
        )
        assert code == 2
