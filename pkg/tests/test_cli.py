import json
import subprocess
import sys

import pytest

from cubefill import Chain, minimizer_cycle, read_chain, write_chain
from cubefill.cli import (
    CSV_HEADER,
    EXIT_INVALID,
    EXIT_IO,
    EXIT_OK,
    main,
)

HEXAGON = Chain.from_words("*00", "*11", "0*1", "1*0", "00*", "11*")


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


class TestGenMinimizer:
    def test_writes_hexagon(self, tmp_path, capsys):
        out = tmp_path / "hex.chain"
        code, report = run_json(capsys, ["gen-minimizer", "3", "1", "--out", str(out), "--json"])
        assert code == EXIT_OK
        assert report["status"] == "ok"
        assert report["results"]["norm"] == 6
        assert report["results"]["fill_value"] == 3
        assert out.read_text().startswith("cube 3 1\n")
        assert read_chain(out) == minimizer_cycle(3, 1)

    def test_square(self, tmp_path, capsys):
        out = tmp_path / "sq.chain"
        code, report = run_json(capsys, ["gen-minimizer", "2", "1", "--out", str(out), "--json"])
        assert code == EXIT_OK
        assert read_chain(out).norm == 4

    def test_large_family_member(self, tmp_path, capsys):
        out = tmp_path / "big.chain"
        code, report = run_json(capsys, ["gen-minimizer", "10", "3", "--out", str(out), "--json"])
        assert code == EXIT_OK
        assert report["results"]["norm"] == 240

    def test_rejects_bad_range(self, tmp_path, capsys):
        out = tmp_path / "x.chain"
        code, report = run_json(capsys, ["gen-minimizer", "3", "3", "--out", str(out), "--json"])
        assert code == EXIT_INVALID
        assert report["status"] == "invalid-input"


class TestFill:
    @pytest.fixture
    def hexagon_file(self, tmp_path):
        path = tmp_path / "hex.chain"
        write_chain(HEXAGON, path)
        return path

    def test_exact(self, hexagon_file, capsys):
        code, report = run_json(
            capsys, ["fill", str(hexagon_file), "--strategy", "exact", "--json"]
        )
        assert code == EXIT_OK
        results = report["results"]
        assert results["filling_norm"] == 3
        assert results["optimal"] is True
        filling = read_chain(results["filling_path"])
        assert filling.boundary() == HEXAGON

    def test_linear_certificate_is_exact(self, hexagon_file, capsys):
        code, report = run_json(capsys, ["fill", str(hexagon_file), "--json"])
        assert code == EXIT_OK
        results = report["results"]
        assert results["filling_norm"] == 3
        assert results["certificate"] == "3"
        assert "(n-k)/(2(k+1))" in results["certificate_formula"]

    def test_recursive(self, hexagon_file, capsys):
        code, report = run_json(
            capsys, ["fill", str(hexagon_file), "--strategy", "recursive", "--json"]
        )
        assert code == EXIT_OK
        assert report["results"]["certificate_float"] == pytest.approx(86.9116882, abs=1e-5)

    def test_empty_chain(self, tmp_path, capsys):
        path = tmp_path / "empty.chain"
        write_chain(Chain(4, 1), path)
        code, report = run_json(capsys, ["fill", str(path), "--json"])
        assert code == EXIT_OK
        assert report["results"]["filling_norm"] == 0
        assert read_chain(report["results"]["filling_path"]) == Chain(4, 2)

    def test_empty_top_degree_cycle_round_trips(self, tmp_path, capsys):
        path = tmp_path / "top.chain"
        write_chain(Chain(2, 2), path)
        code, report = run_json(capsys, ["fill", str(path), "--json"])
        assert code == EXIT_OK
        filling = read_chain(report["results"]["filling_path"])
        assert filling.norm == 0
        assert filling.boundary().norm == 0

    def test_non_cycle_lists_boundary(self, tmp_path, capsys):
        path = tmp_path / "edge.chain"
        write_chain(Chain.from_words("*00"), path)
        code, report = run_json(capsys, ["fill", str(path), "--json"])
        assert code == EXIT_INVALID
        assert report["status"] == "invalid-input"
        assert sorted(report["results"]["boundary_faces"]) == ["000", "100"]

    def test_budget_exhaustion_reports_ok_not_optimal(self, tmp_path, capsys):
        path = tmp_path / "z41.chain"
        write_chain(minimizer_cycle(4, 1), path)
        code, report = run_json(
            capsys, ["fill", str(path), "--strategy", "exact", "--budget", "2", "--json"]
        )
        assert code == EXIT_OK
        assert report["status"] == "ok"
        assert report["results"]["optimal"] is False
        filling = read_chain(report["results"]["filling_path"])
        assert filling.boundary() == minimizer_cycle(4, 1)

    def test_parse_error_has_line_number(self, tmp_path, capsys):
        path = tmp_path / "bad.chain"
        path.write_text("cube 2 1\n*0\nzz\n")
        code, report = run_json(capsys, ["fill", str(path), "--json"])
        assert code == EXIT_INVALID
        assert "line 3" in report["results"]["error"]


class TestVerify:
    def test_hexagon(self, tmp_path, capsys):
        path = tmp_path / "hex.chain"
        write_chain(HEXAGON, path)
        code, report = run_json(capsys, ["verify", str(path), "--json"])
        assert code == EXIT_OK
        results = report["results"]
        assert results["cycle"] is True
        assert results["norm"] == 6
        assert results["components"] == 1
        assert results["support_active_coordinates"] == 3

    def test_single_edge(self, tmp_path, capsys):
        path = tmp_path / "edge.chain"
        write_chain(Chain.from_words("*00"), path)
        code, report = run_json(capsys, ["verify", str(path), "--json"])
        assert code == EXIT_OK
        results = report["results"]
        assert results["cycle"] is False
        assert sorted(results["boundary_faces"]) == ["000", "100"]

    def test_minimizer_6_2(self, tmp_path, capsys):
        path = tmp_path / "z62.chain"
        write_chain(minimizer_cycle(6, 2), path)
        code, report = run_json(capsys, ["verify", str(path), "--json"])
        assert report["results"]["cycle"] is True
        assert report["results"]["norm"] == 30

    def test_parse_error_reports_line(self, tmp_path, capsys):
        path = tmp_path / "bad.chain"
        path.write_text("cube 2 1\n*0\n*0\n")
        code, report = run_json(capsys, ["verify", str(path), "--json"])
        assert code == EXIT_INVALID
        assert "line 3" in report["results"]["error"]

    def test_missing_file_is_io_error(self, tmp_path, capsys):
        code = main(["verify", str(tmp_path / "absent.chain")])
        assert code == EXIT_IO


class TestSharpness:
    def test_csv_header_and_rows(self, capsys):
        code = main(["sharpness", "1", "--n-max", "100", "--csv"])
        assert code == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == CSV_HEADER
        last = lines[-1].split(",")
        assert last[0] == "100"
        assert float(last[3]) == 0.12375
        assert float(last[4]) == 0.125

    def test_first_row_for_k2(self, capsys):
        code = main(["sharpness", "2", "--n-max", "4", "--csv"])
        lines = capsys.readouterr().out.strip().splitlines()
        assert code == EXIT_OK
        assert lines[1].startswith("3,")

    def test_monotone_quotient_column(self, capsys):
        main(["sharpness", "3", "--n-max", "50", "--csv"])
        lines = capsys.readouterr().out.strip().splitlines()[1:]
        quotients = [float(line.split(",")[5]) for line in lines]
        assert all(a < b for a, b in zip(quotients, quotients[1:]))

    def test_json_rows(self, capsys):
        code, report = run_json(capsys, ["sharpness", "1", "--n-max", "4", "--json"])
        assert code == EXIT_OK
        assert [row["n"] for row in report["results"]["rows"]] == [2, 3, 4]

    def test_text_table(self, capsys):
        code = main(["sharpness", "1", "--n-max", "3"])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert "quotient" in out.splitlines()[0]

    def test_bad_range(self, capsys):
        code, report = run_json(capsys, ["sharpness", "2", "--n-max", "2", "--json"])
        assert code == EXIT_INVALID


class TestRandom:
    def test_byte_identical_across_processes(self, tmp_path):
        paths = [tmp_path / "a.chain", tmp_path / "b.chain"]
        for path in paths:
            proc = subprocess.run(
                [
                    sys.executable,
                    "-m",
                    "cubefill",
                    "random",
                    "6",
                    "1",
                    "--density",
                    "0.1",
                    "--seed",
                    "7",
                    "--out",
                    str(path),
                ],
                capture_output=True,
                text=True,
            )
            assert proc.returncode == EXIT_OK, proc.stderr
        assert paths[0].read_bytes() == paths[1].read_bytes()

    def test_output_verifies_as_cycle(self, tmp_path, capsys):
        path = tmp_path / "r.chain"
        code, _ = run_json(
            capsys,
            ["random", "5", "2", "--density", "0.2", "--seed", "3", "--out", str(path), "--json"],
        )
        assert code == EXIT_OK
        code, report = run_json(capsys, ["verify", str(path), "--json"])
        assert report["results"]["cycle"] is True

    def test_zero_density_writes_header_only(self, tmp_path, capsys):
        path = tmp_path / "empty.chain"
        code, report = run_json(
            capsys,
            ["random", "5", "1", "--density", "0", "--seed", "1", "--out", str(path), "--json"],
        )
        assert code == EXIT_OK
        assert report["results"]["norm"] == 0
        assert path.read_text() == "cube 5 1\n"

    def test_invalid_density(self, tmp_path, capsys):
        code, report = run_json(
            capsys,
            ["random", "5", "1", "--density", "2", "--seed", "1",
             "--out", str(tmp_path / "x.chain"), "--json"],
        )
        assert code == EXIT_INVALID

    def test_unwritable_path_is_io_error(self, tmp_path):
        code = main(
            ["random", "4", "1", "--out", str(tmp_path / "no" / "dir" / "x.chain")]
        )
        assert code == EXIT_IO


class TestHumanOutput:
    def test_fill_text_mentions_certificate(self, tmp_path, capsys):
        path = tmp_path / "hex.chain"
        write_chain(HEXAGON, path)
        code = main(["fill", str(path)])
        out = capsys.readouterr().out
        assert code == EXIT_OK
        assert out.startswith("fill: ok")
        assert "certificate" in out

    def test_json_report_round_trips(self, tmp_path, capsys):
        path = tmp_path / "hex.chain"
        write_chain(HEXAGON, path)
        _, report = run_json(capsys, ["fill", str(path), "--json"])
        assert json.loads(json.dumps(report)) == report
        assert set(report) == {"command", "inputs", "results", "status"}
