"""CLI surface: spec parsing, subcommands, determinism, exit codes."""

import json

import pytest
from click.testing import CliRunner

from activita.cli import main
from activita.errors import ParseError, UnequalCardinality
from activita.specio import matroid_from_dict, parse_spec, spec_dict

M5_SPEC = {
    "type": "bases",
    "n": 5,
    "bases": ["345", "135", "245", "235", "125", "134", "234", "124"],
}


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def m5_path(tmp_path):
    path = tmp_path / "m5.json"
    path.write_text(json.dumps(M5_SPEC))
    return str(path)


class TestSpecParsing:
    def test_uniform(self):
        m = parse_spec(b'{"type": "uniform", "r": 2, "n": 4}')
        assert len(m.bases) == 6

    def test_m5(self, m5_matroid):
        assert parse_spec(json.dumps(M5_SPEC)).bases == m5_matroid.bases

    def test_unequal_cardinality_forwarded(self):
        with pytest.raises(UnequalCardinality):
            parse_spec('{"type": "bases", "n": 2, "bases": ["1", "12"]}')

    def test_bad_json_position(self):
        with pytest.raises(ParseError) as err:
            parse_spec("{nope}")
        assert "line" in str(err.value)

    def test_missing_field(self):
        with pytest.raises(ParseError):
            matroid_from_dict({"type": "uniform", "r": 2})

    def test_unknown_type(self):
        with pytest.raises(ParseError):
            matroid_from_dict({"type": "mystery"})

    def test_dual_and_graphic_and_linear(self, m5_matroid):
        dual = matroid_from_dict({"type": "dual", "of": M5_SPEC})
        assert dual.bases == m5_matroid.dual.bases
        tri = matroid_from_dict(
            {"type": "graphic", "vertices": 3, "edges": [[1, 2], [2, 3], [1, 3]]}
        )
        assert len(tri.bases) == 3
        lin = matroid_from_dict({"type": "linear", "p": 2, "matrix": [[1, 0], [0, 1]]})
        assert len(lin.bases) == 1

    def test_roundtrip(self, m5_matroid):
        assert matroid_from_dict(spec_dict(m5_matroid)).bases == m5_matroid.bases


class TestActivityCommand:
    def test_basis_row(self, runner, m5_path):
        result = runner.invoke(main, ["activity", m5_path, "124"])
        assert result.exit_code == 0
        assert json.loads(result.output) == {"EA": "35", "EP": "", "IA": "", "IP": "124"}

    def test_empty_subset(self, runner, m5_path):
        result = runner.invoke(main, ["activity", m5_path, ""])
        assert result.exit_code == 0
        data = json.loads(result.output)
        assert data["IA"] == "" and data["EP"] == "12345"

    def test_bad_subset(self, runner, m5_path):
        result = runner.invoke(main, ["activity", m5_path, "9"])
        assert result.exit_code == 2


class TestOrderCommand:
    def test_dot_export(self, runner, m5_path, tmp_path):
        out = tmp_path / "h.dot"
        result = runner.invoke(
            main, ["order", m5_path, "--kind", "extint-bases", "--dot", str(out)]
        )
        assert result.exit_code == 0
        text = out.read_text()
        assert text.count("->") == 10
        assert "rank=same" in text

    def test_json(self, runner, m5_path):
        result = runner.invoke(main, ["order", m5_path, "--kind", "extint-ind", "--json"])
        data = json.loads(result.output)
        assert len(data["elements"]) == 24
        assert len(data["covers"]) == 33


class TestComplexCommand:
    def test_ea_table(self, runner, m5_path):
        result = runner.invoke(main, ["complex", m5_path, "--kind", "ea", "--json"])
        data = json.loads(result.output)
        assert len(data["facets"]) == 8
        rows = {row["I"]: (row["x"], row["z"]) for row in data["facets"]}
        assert rows["124"] == ("124", "12345")
        assert all(row["y"] == "" for row in data["facets"])

    def test_augmented(self, runner, m5_path):
        result = runner.invoke(main, ["complex", m5_path, "--json"])
        data = json.loads(result.output)
        assert data["dimension"] == 7
        assert len(data["facets"]) == 24
        assert data["h"][:4] == [1, 5, 10, 8]


class TestShellCommand:
    def test_report_and_determinism(self, runner, m5_path, tmp_path):
        out1, out2 = tmp_path / "r1.json", tmp_path / "r2.json"
        for out in (out1, out2):
            result = runner.invoke(
                main,
                ["shell", m5_path, "--complex", "augmented-ea", "--order-seed", "7",
                 "--report", str(out)],
            )
            assert result.exit_code == 0, result.output
        assert out1.read_bytes() == out2.read_bytes()
        data = json.loads(out1.read_text())
        assert data["verdict"] is True
        assert data["property_h"] is True
        assert data["h_complex"] is True
        assert len(data["restrictions"]) == 24

    def test_flip_order(self, runner, m5_path):
        result = runner.invoke(
            main, ["shell", m5_path, "--order", "flip", "--order-seed", "3"]
        )
        assert result.exit_code == 0
        assert "ok" in result.output

    def test_other_kinds(self, runner, m5_path):
        for kind in ("ea", "nbc", "augmented-nbc"):
            result = runner.invoke(main, ["shell", m5_path, "--complex", kind])
            assert result.exit_code == 0, result.output


class TestTutteCommand:
    def test_text(self, runner, m5_path):
        result = runner.invoke(main, ["tutte", m5_path])
        assert result.output.strip() == "q^3 + 2*q^2 + 2*q*t + q + t^2 + t"

    def test_json(self, runner, m5_path):
        result = runner.invoke(main, ["tutte", m5_path, "--json"])
        terms = json.loads(result.output)["terms"]
        assert [3, 0, 1] in terms


class TestVerifyCommand:
    def test_single_matroid(self, runner, m5_path, tmp_path):
        report = tmp_path / "findings.json"
        result = runner.invoke(
            main,
            ["verify", m5_path, "--no-builtin", "--cap", "5", "--report", str(report)],
        )
        assert result.exit_code == 0, result.output
        data = json.loads(report.read_text())
        assert data["ok"] is True
        assert data["matroids"] == ["m5"]
        assert all(f["ok"] for f in data["findings"])
        assert "PASS m5: shelling-extint" in result.output

    def test_env_corpus_dir(self, runner, tmp_path, monkeypatch):
        extra = tmp_path / "extra"
        extra.mkdir()
        (extra / "u12.json").write_text('{"type": "uniform", "r": 1, "n": 2}')
        monkeypatch.setenv("ACTIVITA_CORPUS_DIR", str(extra))
        result = runner.invoke(main, ["verify", "--no-builtin", "--cap", "3"])
        assert result.exit_code == 0, result.output
        assert "u12" in result.output

    def test_no_matroids_is_usage_error(self, runner):
        result = runner.invoke(main, ["verify", "--no-builtin"])
        assert result.exit_code == 2

    def test_bad_spec_is_usage_error(self, runner, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"type": "bases", "n": 2, "bases": ["1", "12"]}')
        result = runner.invoke(main, ["verify", str(bad), "--no-builtin"])
        assert result.exit_code == 2

    def test_full_corpus_default_settings_under_budget(self, runner):
        import time

        started = time.monotonic()
        result = runner.invoke(main, ["verify"])
        elapsed = time.monotonic() - started
        assert result.exit_code == 0, result.output
        assert elapsed < 60.0
        assert "FAIL" not in result.output


class TestCorpusCommand:
    def test_list_and_dump(self, runner, tmp_path):
        out = tmp_path / "corpus"
        result = runner.invoke(main, ["corpus", "--dir", str(out)])
        assert result.exit_code == 0
        assert "m5: n=5 rank=3 bases=8" in result.output
        files = sorted(p.name for p in out.glob("*.json"))
        assert "k4.json" in files and len(files) == 7
        # dumped specs parse back to the same matroids
        for path in out.glob("*.json"):
            parse_spec(path.read_text())
