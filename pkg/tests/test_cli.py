import json
from pathlib import Path

import pytest

import verbs.selfcheck
import verbs.util.engines
from main import run
from multiseg.core import Multisegment, RankTriangle, parse_multisegment
from multiseg.duality_flow import flow_dual

LADDER: str = "{[1],[2],[3,5],[4,6],[6,7]}"
SMALL_SELFCHECK: list[str] = [
    "selfcheck",
    "--support",
    "1..3",
    "--max-content",
    "4",
    "--arthur-reach",
    "1",
    "--random-count",
    "5",
]


def lines(capsys: pytest.CaptureFixture[str]) -> list[str]:
    return capsys.readouterr().out.splitlines()


class TestDual:
    def test_both_engines(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["dual", "--alg", "both", LADDER]) == 0
        assert lines(capsys) == ["{[1,4],[4,6],[5,7]}"]

    @pytest.mark.parametrize("algorithm", ["mw", "flow"])
    def test_single_engine(self, algorithm: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["dual", "--alg", algorithm, "{[1,2]}"]) == 0
        assert lines(capsys) == ["{[1],[2]}"]

    def test_trace(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["dual", "--trace", "{[1],[2]}"]) == 0
        output: list[str] = lines(capsys)
        assert output[0] == "iteration 1: [2] drops 2 <- [1] drops 1 => [1,2]"
        assert output[-1] == "{[1,2]}"

    def test_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["dual", "--format", "json", "--trace", "{[1],[2]}"]) == 0
        payload: dict = json.loads(capsys.readouterr().out)
        assert payload["dual"] == {"segments": [{"b2": 2, "e2": 4}]}
        assert payload["algorithm"] == "both"
        assert len(payload["trace"]) == 1

    def test_input_from_file(self, tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
        source: Path = tmp_path / "alpha.txt"
        source.write_text(LADDER + "\n", encoding="utf-8")
        assert run(["dual", f"@{source}"]) == 0
        assert lines(capsys) == ["{[1,4],[4,6],[5,7]}"]

    def test_missing_file(self, tmp_path: Path) -> None:
        assert run(["dual", f"@{tmp_path / 'missing.txt'}"]) == 1

    def test_dot(self, tmp_path: Path) -> None:
        target: Path = tmp_path / "graph.dot"
        assert run(["dual", "--dot", str(target), "{[1],[2]}"]) == 0
        assert target.read_text(encoding="utf-8").startswith("digraph precedence {")

    def test_half_integers(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["dual", "{[-1/2],[1/2]}"]) == 0
        assert lines(capsys) == ["{[-1/2,1/2]}"]


class TestRanks:
    def test_empty(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["ranks", "{}"]) == 0
        assert lines(capsys) == ["(empty triangle)"]

    def test_triangle(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["ranks", "{[1],[1,2]}"]) == 0
        assert lines(capsys) == ["1   2", "2   1", "  1"]

    def test_dual_ranks(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["ranks", "--dual", "--format", "json", "{[1],[2]}"]) == 0
        payload: dict = json.loads(capsys.readouterr().out)
        assert {"i2": 2, "j2": 4, "r": 1} in payload["r"]


class TestInvariants:
    def test_ladder(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["invariants", LADDER]) == 0
        output: list[str] = lines(capsys)
        assert output[:6] == ["e = 7", "L = 3", "n = 5", "c = 1", "S = 7", "C = 1"]

    def test_empty_multisegment(self) -> None:
        assert run(["invariants", "{}"]) == 1

    def test_classify(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["classify", "{[-1,0],[0,1]}"]) == 0
        output: list[str] = lines(capsys)
        assert "arthur: true" in output
        assert "center: 0" in output
        assert "block: {[-1,0],[0,1]} x1" in output


class TestOrder:
    def test_above(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["above", "{[1],[2]}"]) == 0
        assert lines(capsys) == ["{[1],[2]}", "{[1,2]}"]

    def test_enumerate(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["enumerate", "{1:1, 2:1, 3:1}"]) == 0
        assert len(lines(capsys)) == 4

    def test_enumerate_over_cap(self) -> None:
        assert run(["enumerate", "{1:8, 2:8}"]) == 3

    def test_enumerate_over_flag_cap(self) -> None:
        assert run(["enumerate", "--max-content", "2", "{1:1, 2:1, 3:1}"]) == 3

    def test_rigid(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["rigid", "{[-1,0],[0,1]}"]) == 0
        assert "singleton: true" in lines(capsys)

    def test_sweep(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["rigid", "--family", "simple", "--support", "1..4", "--max-content", "6"]) == 0
        output: list[str] = lines(capsys)
        assert output[-1].startswith("simple: checked ")
        assert output[-1].endswith(", not rigid 0")

    def test_arthur_sweep_with_negative_support(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["rigid", "--family", "arthur", "--support=-2..2", "--max-content", "5"]) == 0
        assert lines(capsys)[-1].endswith(", not rigid 0")

    def test_sweep_summary_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        arguments: list[str] = ["rigid", "--family", "ladder", "--support", "1..3"]
        assert run([*arguments, "--max-content", "4", "--format", "json"]) == 0
        summary: dict = json.loads(lines(capsys)[-1])
        assert summary["summary"] is True
        assert summary["failures"] == 0
        assert "wall_time_s" not in summary

    def test_rigid_with_witness(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["rigid", "{[1,2],[2],[3]}"]) == 0
        output: list[str] = lines(capsys)
        assert "singleton: false" in output
        assert "class size: 5" in output
        assert "witness: {[1,2],[2,3]}" in output

    def test_rigid_uses_flow_engine(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        seen: list[Multisegment] = []

        def recording(alpha: Multisegment) -> Multisegment:
            seen.append(alpha)
            return flow_dual(alpha)

        monkeypatch.setattr(verbs.util.engines, "flow_dual", recording)
        assert run(["rigid", "--alg", "flow", "{[-1,0],[0,1]}"]) == 0
        assert "singleton: true" in lines(capsys)
        assert seen[0] == parse_multisegment("{[-1,0],[0,1]}")

    def test_rigid_mw_skips_flow_engine(self, monkeypatch: pytest.MonkeyPatch) -> None:
        def broken(alpha: Multisegment) -> Multisegment:
            raise AssertionError("flow engine called")

        monkeypatch.setattr(verbs.util.engines, "flow_dual", broken)
        assert run(["rigid", "--alg", "mw", "{[-1,0],[0,1]}"]) == 0

    @pytest.mark.parametrize(
        "arguments",
        [
            ["rigid", "--alg", "both", "{[-1,0],[0,1]}"],
            ["rigid", "--alg", "both", "--family", "simple", "--support", "1..3", "--max-content", "3"],
        ],
    )
    def test_rigid_engine_disagreement(
        self,
        arguments: list[str],
        monkeypatch: pytest.MonkeyPatch,
        capsys: pytest.CaptureFixture[str],
    ) -> None:
        monkeypatch.setattr(verbs.util.engines, "flow_dual", lambda alpha: Multisegment())
        assert run(arguments) == 2
        assert "reproducer: " in capsys.readouterr().err

    def test_all_family_sweep_tolerates_non_rigid(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["rigid", "--family", "all", "--support", "1..3", "--max-content", "4"]) == 0
        output: list[str] = lines(capsys)
        assert "witness: {[1,2],[2,3]}" in output
        assert not output[-1].endswith(", not rigid 0")

    def test_rigid_needs_a_subject(self) -> None:
        assert run(["rigid"]) == 1

    def test_family_needs_support(self) -> None:
        assert run(["rigid", "--family", "simple"]) == 1


class TestSelfCheck:
    def test_passes(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(SMALL_SELFCHECK) == 0
        output: list[str] = lines(capsys)
        assert output[0] == "seed: 0"
        assert output[-1] == "16 of 16 suites passed"

    def test_default_bounds_pass(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["selfcheck", "--random-count", "5"]) == 0
        output: list[str] = lines(capsys)
        assert any(line.startswith("pass  equal-invariants ") for line in output)
        assert output[-1] == "16 of 16 suites passed"

    def test_rank_fault(
        self, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        def bump(triangle: RankTriangle) -> RankTriangle:
            if triangle.is_empty():
                return triangle
            entries: dict[tuple[int, int], int] = dict(triangle.entries)
            entries[(triangle.lo2, triangle.lo2)] = entries.get((triangle.lo2, triangle.lo2), 0) + 1
            return RankTriangle.from_entries(entries, triangle.lo2, triangle.hi2)

        monkeypatch.setattr(verbs.selfcheck, "RANK_FAULT", bump)
        assert run(SMALL_SELFCHECK) == 2
        captured = capsys.readouterr()
        assert "FAIL  mw-equals-flow" in captured.out
        assert "reproducer: {[1]}" in captured.err


class TestErrors:
    def test_parse_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["dual", "{[1"]) == 1
        assert capsys.readouterr().err.startswith("error: ")

    def test_reversed_segment(self) -> None:
        assert run(["dual", "{[3,2]}"]) == 1

    def test_unknown_flag(self) -> None:
        assert run(["dual", "--bogus", "{}"]) == 1

    def test_unknown_verb(self) -> None:
        assert run(["transpose", "{}"]) == 1

    def test_bad_support(self) -> None:
        assert run(["rigid", "--family", "simple", "--support", "3..1"]) == 1

    def test_bad_log_level(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MULTISEG_LOG_LEVEL", "LOUD")
        assert run(["ranks", "{}"]) == 1

    def test_bad_setting(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("MULTISEG_MAX_CONTENT", "lots")
        assert run(["enumerate", "{1:1}"]) == 1
