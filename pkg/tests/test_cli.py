import csv
import io
import itertools
import json

import pytest

from trailcounts import reports
from trailcounts.cli import main
from trailcounts.nilpotent import PathVariant
from trailcounts.reports import (
    DMATRIX_SQUARED,
    PROP2_LITERAL_OVERCOUNT,
    canonical_json,
    run_count_query,
)

C4_TEXT = "1 2\n1 3\n2 4\n3 4\n"


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.txt"
    path.write_text(C4_TEXT)
    return str(path)


@pytest.fixture
def k8_file(tmp_path):
    edges = "\n".join(f"{u} {v}" for u, v in itertools.combinations(range(1, 9), 2))
    path = tmp_path / "k8.txt"
    path.write_text(edges + "\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    def test_trails_all_engines_agree(self, capsys, c4_file):
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "trails",
            "--length", "3", "--from", "1", "--to", "2", "--format", "json",
        )
        assert code == 0
        report = json.loads(out)
        assert {e: v["value"] for e, v in report["engines"].items()} == {
            "oracle": "1", "symbolic": "1", "fock": "1",
        }
        assert all(report["agreement"].values())

    def test_walks_known_value(self, capsys, c4_file):
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "walks",
            "--length", "3", "--from", "1", "--to", "2", "--format", "json",
        )
        assert code == 0
        values = {v["value"] for v in json.loads(out)["engines"].values()}
        assert values == {"4"}

    def test_path_variants_disagree_with_note(self, capsys, c4_file):
        code, lit_out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "paths", "--length", "3",
            "--from", "1", "--to", "2", "--variant", "literal", "--format", "json",
        )
        assert code == 0
        literal = json.loads(lit_out)
        code, grd_out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "paths", "--length", "3",
            "--from", "1", "--to", "2", "--variant", "guarded", "--format", "json",
        )
        assert code == 0
        guarded = json.loads(grd_out)
        assert {v["value"] for v in literal["engines"].values()} == {"2"}
        assert {v["value"] for v in guarded["engines"].values()} == {"1"}
        assert any(n["code"] == PROP2_LITERAL_OVERCOUNT for n in literal["notes"])

    def test_euler_and_hamiltonian_kinds(self, capsys, c4_file):
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "euler",
            "--from", "1", "--format", "json",
        )
        assert code == 0
        assert {v["value"] for v in json.loads(out)["engines"].values()} == {"2"}
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "hamiltonian",
            "--from", "1", "--format", "json",
        )
        assert code == 0
        assert {v["value"] for v in json.loads(out)["engines"].values()} == {"2"}

    def test_cycles_kind(self, capsys, c4_file):
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "cycles",
            "--length", "4", "--from", "1", "--format", "json",
        )
        assert code == 0
        assert {v["value"] for v in json.loads(out)["engines"].values()} == {"2"}

    def test_csv_format(self, capsys, c4_file):
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "trails",
            "--length", "3", "--from", "1", "--to", "2", "--format", "csv",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == reports.CSV_HEADER
        assert len(rows) == 4
        assert {r[6] for r in rows[1:]} == {"oracle", "symbolic", "fock"}
        assert {r[7] for r in rows[1:]} == {"1"}

    def test_text_format(self, capsys, c4_file):
        code, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "trails",
            "--length", "3", "--from", "1", "--to", "2",
        )
        assert code == 0
        assert "agree" in out

    def test_capacity_exit_code(self, capsys, k8_file):
        code, out, _ = run(
            capsys, "count", "--input", k8_file, "--kind", "trails",
            "--length", "3", "--from", "1", "--to", "2", "--engine", "fock",
        )
        assert code == 2
        assert "28" in out

    def test_usage_errors(self, capsys, c4_file):
        assert run(capsys, "count", "--input", c4_file, "--kind", "trails", "--from", "1")[0] == 1
        assert (
            run(
                capsys, "count", "--input", c4_file, "--kind", "trails",
                "--length", "2", "--from", "1", "--variant", "literal",
            )[0]
            == 1
        )
        assert (
            run(
                capsys, "count", "--input", c4_file, "--kind", "cycles",
                "--length", "3", "--from", "1", "--to", "2",
            )[0]
            == 1
        )

    def test_bad_input_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("1 1\n")
        code, _, err = run(
            capsys, "count", "--input", str(bad), "--kind", "walks",
            "--length", "1", "--from", "1",
        )
        assert code == 1
        assert "line 1" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(
            capsys, "count", "--input", "/nonexistent", "--kind", "walks",
            "--length", "1", "--from", "1",
        )
        assert code == 1


class TestReportContract:
    def test_json_round_trip_bytes(self, capsys, c4_file):
        _, out, _ = run(
            capsys, "count", "--input", c4_file, "--kind", "trails",
            "--length", "3", "--from", "1", "--to", "2", "--format", "json",
        )
        assert canonical_json(json.loads(out)) + "\n" == out

    def test_agreement_never_true_on_differing_values(self, c4):
        report = run_count_query(c4, "c4", "paths", 3, 1, 2, variant=PathVariant.LITERAL)
        ev = report.engines["fock"]
        ev.value = ev.value + 1  # simulate a divergent engine
        assert not all(report.agreement.values())

    def test_dmatrix_note_on_bowtie_euler(self):
        from trailcounts.families import bowtie_graph

        report = run_count_query(bowtie_graph(), "bowtie", "euler", 6, 1, 1)
        assert any(n["code"] == DMATRIX_SQUARED for n in report.notes)

    def test_engine_subset(self, c4):
        report = run_count_query(c4, "c4", "trails", 3, 1, 2, engines=("oracle",))
        assert set(report.engines) == {"oracle"}
        assert report.agreement == {}


class TestExample:
    def test_reference_values_reproduce(self, capsys):
        code, out, _ = run(capsys, "example")
        assert code == 0
        assert "8/8 reference values reproduced" in out

    def test_json_format(self, capsys):
        code, out, _ = run(capsys, "example", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["reproduced"] == payload["total"] == 8

    def test_corrupted_input_detected(self, capsys, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("1 2\n1 3\n2 4\n2 3\n")
        code, out, _ = run(capsys, "example", "--input", str(path))
        assert code == 3
        assert "FAIL" in out


class TestVerify:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--n-max", "3", "--l-max", "3")
        assert code == 0
        assert "PASS overall" in out

    def test_json_output(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n-max", "3", "--l-max", "3", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["graphs"] > 0

    def test_empty_corpus_vacuous_pass(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--source", "random", "--count", "0", "--skip-named",
            "--n-max", "4",
        )
        assert code == 0
        assert "WARNING" in out

    def test_engine_subset_runs(self, capsys):
        code, out, _ = run(
            capsys, "verify", "--n-max", "3", "--l-max", "2",
            "--engines", "oracle,symbolic",
        )
        assert code == 0

    def test_unknown_engine_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--engines", "quantum")
        assert code == 1
        assert "unknown engine" in err


class TestBench:
    def test_cycle_family_csv(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--family", "cycle", "--min-n", "3", "--max-n", "5",
            "--kind", "trails", "--length", "3", "--engines", "oracle,symbolic",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][0] == "family"
        assert len(rows) == 1 + 3 * 2

    def test_complete_family_fock_capacity_dnf(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--family", "complete", "--min-n", "7", "--max-n", "8",
            "--kind", "trails", "--length", "3", "--engines", "fock",
        )
        assert code == 0
        rows = {r[1]: r[5] for r in list(csv.reader(io.StringIO(out)))[1:]}
        assert rows["7"] != "DNF"  # 21 slots fit the default cap
        assert rows["8"] == "DNF"  # 28 slots refused

    def test_petersen_hamiltonian(self, capsys):
        code, out, _ = run(
            capsys, "bench", "--family", "petersen", "--kind", "hamiltonian",
            "--engines", "oracle,fock",
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))[1:]
        assert {r[5] for r in rows} == {"0"}
