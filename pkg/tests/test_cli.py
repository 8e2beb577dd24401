"""Command-line behavior: output shapes, determinism, exit codes."""

import json

import pytest

from qhecke.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestCatalog:
    def test_default_lists_sixteen(self, capsys):
        code, out, _ = run(capsys, "catalog", "--json")
        assert code == 0
        rows = json.loads(out)["rows"]
        assert len(rows) == 16
        assert all(r["in_scope"] for r in rows)

    def test_all_lists_twenty_nine(self, capsys):
        code, out, _ = run(capsys, "catalog", "--all", "--json")
        rows = json.loads(out)["rows"]
        assert len(rows) == 29
        flagged = [r for r in rows if not r["in_scope"]]
        assert len(flagged) == 13
        assert all(r["k"] == 2 or r["cm"] for r in flagged)

    def test_single_pair(self, capsys):
        code, out, _ = run(capsys, "catalog", "--pair", "12,1", "--json")
        rows = json.loads(out)["rows"]
        assert len(rows) == 1
        assert rows[0]["recipes"]["g"]["expr"] == "Delta"
        assert rows[0]["recipes"]["phi2"]["prefix"] == [1, 24, -196560]

    def test_82_row_carries_warning(self, capsys):
        _, out, _ = run(capsys, "catalog", "--pair", "8,2", "--json")
        row = json.loads(out)["rows"][0]
        assert "warnings" in row


class TestExpand:
    def test_catalog_form(self, capsys):
        code, out, _ = run(capsys, "expand", "g", "8,2", "--prec", "5", "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["series"]["coeffs"][:2] == [[1, "1"], [2, "-8"]]

    def test_j(self, capsys):
        code, out, _ = run(capsys, "expand", "j", "--prec", "3", "--json")
        obj = json.loads(out)
        assert obj["series"]["coeffs"] == [[-1, "1"], [0, "744"], [1, "196884"]]

    def test_eta_selector(self, capsys):
        code, out, _ = run(capsys, "expand", "eta", "2:1^24,2^-24", "--prec", "3", "--json")
        obj = json.loads(out)
        assert obj["series"] == {"lo": -1, "hi": 2,
                                 "coeffs": [[-1, "1"], [0, "-24"], [1, "276"]]}

    def test_published_inconsistent_entry_warns(self, capsys):
        code, out, _ = run(capsys, "expand", "eta", "2:1^80,2^-64", "--prec", "3", "--json")
        assert code == 0
        obj = json.loads(out)
        assert obj["warnings"]
        assert obj["series"]["coeffs"][0] == [-2, "1"]

    def test_phi2_82_warns(self, capsys):
        _, out, _ = run(capsys, "expand", "phi2", "8,2", "--prec", "4", "--json")
        assert json.loads(out)["warnings"]

    def test_non_integral_eta_rejected(self, capsys):
        code, out, err = run(capsys, "expand", "eta", "1:1^1", "--prec", "3")
        assert code == 2

    def test_unknown_pair(self, capsys):
        code, _, err = run(capsys, "expand", "g", "2,32", "--prec", "3")
        assert code == 2
        assert "not a catalogued" in err


class TestBasisCommand:
    def test_f_element(self, capsys, tmp_path):
        code, out, _ = run(capsys, "basis", "F", "8,2", "1", "--prec", "5",
                           "--json", "--cache-dir", str(tmp_path))
        assert code == 0
        obj = json.loads(out)
        assert obj["family"] == "F" and obj["integral"]
        assert obj["elimination"] == [[0, "24"], [-1, "-500"]]
        assert (tmp_path / "N2_k8" / "F1.json").exists()

    def test_no_cache_writes_nothing(self, capsys, tmp_path):
        cache_dir = tmp_path / "c"
        code, _, _ = run(capsys, "basis", "phi", "12,1", "3", "--prec", "4",
                         "--no-cache", "--cache-dir", str(cache_dir))
        assert code == 0
        assert not cache_dir.exists()


class TestVerifyCommands:
    def test_duality(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "duality", "8,2", "--nmax", "6",
                           "--mmax", "6", "--json", "--cache-dir", str(tmp_path))
        assert code == 0
        obj = json.loads(out)
        assert obj["ok"] and obj["duality_nonzero"] == []

    def test_dual_table_command(self, capsys, tmp_path):
        code, out, _ = run(capsys, "dual", "12,1", "--nmax", "4", "--mmax", "4",
                           "--json", "--cache-dir", str(tmp_path))
        assert code == 0 and json.loads(out)["ok"]

    def test_decomposition(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "decomposition", "12,1", "--p", "11",
                           "--n", "1", "--prec", "40", "--json",
                           "--cache-dir", str(tmp_path))
        assert code == 0 and json.loads(out)["ok"]

    def test_expansion_negative_control_fails(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "expansion", "8,2", "--p", "3",
                           "--m", "1", "--prec", "20", "--perturb-a", "999",
                           "--json", "--cache-dir", str(tmp_path))
        assert code == 1
        assert not json.loads(out)["ok"]

    def test_valuations_qualified(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "valuations", "8,2", "--p", "7",
                           "--mmax", "2", "--json", "--cache-dir", str(tmp_path))
        assert code == 0
        obj = json.loads(out)
        assert obj["passes"] and obj["vpC"] == [0, 0]

    def test_valuations_disqualified_is_informational(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "valuations", "12,1", "--p", "3",
                           "--mmax", "1", "--json", "--cache-dir", str(tmp_path))
        assert code == 0
        obj = json.loads(out)
        assert not obj["qualified"]

    def test_scan(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "scan", "12,1", "--pmax", "11",
                           "--json", "--cache-dir", str(tmp_path))
        assert code == 0
        rows = json.loads(out)["rows"]
        assert [r["p"] for r in rows] == [2, 3, 5, 7, 11]
        assert rows[-1]["qualifies"]

    def test_coeff_formula(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "coeff-formula", "8,2", "--p", "3",
                           "--m", "2", "--json", "--cache-dir", str(tmp_path))
        assert code == 0 and json.loads(out)["ok"]


class TestDeterminism:
    def test_byte_identical_output(self, capsys, tmp_path):
        argv = ["verify", "duality", "4,5", "--nmax", "5", "--mmax", "5",
                "--json", "--cache-dir", str(tmp_path)]
        _, first, _ = run(capsys, *argv)
        _, second, _ = run(capsys, *argv)  # second run hits the cache
        assert first == second

    def test_catalog_stable(self, capsys):
        _, first, _ = run(capsys, "catalog", "--all", "--json")
        _, second, _ = run(capsys, "catalog", "--all", "--json")
        assert first == second


class TestUsageErrors:
    def test_bad_pair_syntax(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["catalog", "--pair", "12"])
        assert exc.value.code == 2

    def test_composite_p(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "decomposition", "8,2", "--p", "4",
                           "--n", "1", "--cache-dir", str(tmp_path))
        assert code == 2
