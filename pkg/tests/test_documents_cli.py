import json
import subprocess

import pytest

import guesswork as gw
from guesswork.cli import main_guesswork, main_symmetries
from guesswork.documents import (
    DocumentError,
    format_document,
    parse_document,
)


class TestDocuments:
    @pytest.mark.parametrize("name", [i.name for i in gw.list_solids()])
    def test_round_trip_fixtures(self, name):
        e = gw.solid(name)
        again = parse_document(format_document(e))
        assert again == e

    def test_integer_document(self):
        e = parse_document('{"ring": "integers", "scale": 1, "vectors": [[1,0,0],[-1,0,0]]}')
        assert e.n == 2 and e.ring == gw.INTEGERS

    def test_ring_defaults_to_integers(self):
        e = parse_document('{"scale": 1, "vectors": [[1,0,0]]}')
        assert e.ring == gw.INTEGERS

    def test_quadratic_document(self):
        e = parse_document(
            '{"ring": {"k": 5}, "scale": [10, 2], "vectors": [[[0,0],[2,0],[1,1]], [[0,0],[-2,0],[1,1]]]}'
        )
        assert e.vectors[0][2] == gw.quadratic(5, 1, 1)

    def test_syntax_error_carries_position(self):
        with pytest.raises(DocumentError, match=r"line 2"):
            parse_document('{"scale": 1,\n "vectors": [[1,0,0],]}')

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ('[1, 2]', "top level"),
            ('{"ring": "gaussians", "scale": 1, "vectors": [[1]]}', "ring"),
            ('{"ring": {"k": 4}, "scale": 1, "vectors": [[1]]}', "perfect square"),
            ('{"vectors": [[1]]}', "scale"),
            ('{"scale": 1}', "vectors"),
            ('{"scale": 1, "vectors": []}', "vectors"),
            ('{"scale": 1, "vectors": [[1,0],[1,"x"]]}', r"vectors\[1\]\[1\]"),
            ('{"scale": 1, "vectors": [[[1,1],0]]}', "quadratic"),
            ('{"scale": 1, "vectors": [[1,0]], "extra": 1}', "unknown fields"),
        ],
    )
    def test_diagnostics(self, text, fragment):
        with pytest.raises(DocumentError, match=fragment):
            parse_document(text)


@pytest.fixture
def pair_file(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text('{"ring": "integers", "scale": 1, "vectors": [[1,0,0],[-1,0,0]]}')
    return str(path)


class TestGuessworkCli:
    def test_solid_table_row(self, capsys):
        assert main_guesswork(["--solid", "tetrahedron"]) == 0
        out = capsys.readouterr().out
        assert "g = 80/3" in out
        assert "1.8545" in out

    def test_digits_flag(self, capsys):
        assert main_guesswork(["--solid", "icosahedron", "--digits", "4"]) == 0
        assert "4.5081" in capsys.readouterr().out

    def test_file_input(self, capsys, pair_file):
        assert main_guesswork(["--file", pair_file]) == 0
        assert "1.0000" in capsys.readouterr().out

    def test_json_fields(self, capsys):
        assert main_guesswork(["--solid", "octahedron", "--json", "--witness"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["n"] == 6
        assert payload["ring"] == "integers"
        assert payload["scale"] == 1
        assert payload["g_raw"] == 140
        assert payload["g_scale"] == 1
        assert payload["gmin_decimal"] == "2.5140"
        assert payload["algorithm"] == "symmetric"
        assert isinstance(payload["elapsed_ms"], int)
        witness = payload["witness"]
        ws = gw.weighted_sum(gw.solid("octahedron"), witness)
        assert gw.norm_sq(ws) == gw.integer(140)

    def test_algorithms_agree(self, capsys):
        values = {}
        for algo in ["exhaustive", "symmetric"]:
            assert main_guesswork(["--solid", "octahedron", "--algorithm", algo, "--json"]) == 0
            values[algo] = json.loads(capsys.readouterr().out)["g_raw"]
        assert values["exhaustive"] == values["symmetric"]

    def test_symmetric_on_asymmetric_input_is_precondition_error(self, capsys):
        code = main_guesswork(["--solid", "tetrahedron", "--algorithm", "symmetric"])
        assert code == 2
        assert "centrally symmetric" in capsys.readouterr().err

    def test_parse_error_exit_code(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{nope")
        assert main_guesswork(["--file", str(bad)]) == 1
        assert "error" in capsys.readouterr().err

    def test_missing_input_is_usage_error(self, capsys):
        assert main_guesswork([]) == 1

    def test_unknown_solid(self, capsys):
        assert main_guesswork(["--solid", "teapot"]) == 1
        assert "valid names" in capsys.readouterr().err

    def test_export_round_trip(self, capsys):
        assert main_guesswork(["--solid", "icosahedron", "--export"]) == 0
        text = capsys.readouterr().out
        assert parse_document(text) == gw.solid("icosahedron")

    def test_list_solids(self, capsys):
        assert main_guesswork(["--list-solids"]) == 0
        out = capsys.readouterr().out
        assert "dodecahedron: N = 20" in out
        assert len(out.strip().splitlines()) == 10

    def test_bad_flag_value(self, capsys):
        assert main_guesswork(["--solid", "cube", "--digits", "0"]) == 1
        assert main_guesswork(["--solid", "cube", "--workers", "0"]) == 1


class TestSymmetriesCli:
    def test_octahedron(self, capsys):
        assert main_symmetries(["--solid", "octahedron"]) == 0
        out = capsys.readouterr().out
        assert "order 48, centrally symmetric, vertex transitive" in out

    def test_tetrahedron(self, capsys):
        assert main_symmetries(["--solid", "tetrahedron"]) == 0
        out = capsys.readouterr().out
        assert "order 24, not centrally symmetric" in out

    def test_single_point(self, capsys, tmp_path):
        path = tmp_path / "one.json"
        path.write_text('{"scale": 1, "vectors": [[1,0,0]]}')
        assert main_symmetries(["--file", str(path)]) == 0
        assert "order 1" in capsys.readouterr().out

    def test_fast_on_flat_set_suggests_exhaustive(self, capsys, tmp_path):
        path = tmp_path / "flat.json"
        path.write_text('{"scale": 4, "vectors": [[1,0,0],[2,0,0]]}')
        assert main_symmetries(["--file", str(path), "--algorithm", "fast"]) == 2
        assert "exhaustive" in capsys.readouterr().err

    def test_json_with_permutations(self, capsys):
        assert main_symmetries(["--solid", "cube", "--json", "--perms"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == 48
        assert payload["centrally_symmetric"] is True
        assert payload["vertex_transitive"] is True
        assert len(payload["permutations"]) == 48
        assert list(range(8)) in payload["permutations"]


def test_console_scripts_installed():
    out = subprocess.run(
        ["guesswork", "--solid", "octahedron", "--json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["gmin_decimal"] == "2.5140"
    out = subprocess.run(
        ["symmetries", "--solid", "square"], capture_output=True, text=True
    )
    assert out.returncode == 1  # unknown solid is a usage error
