import io
import json

from oqa.cli import main
from oqa.serialize import dumps, oqa_to_json
from oqa.catalog import catalog_get


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCatalogCommands:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "catalog", "list")
        assert code == 0
        names = out.splitlines()
        assert "mn_oqa(2)" in names
        assert "ex45_weak_r" in names
        assert names == sorted(names)

    def test_export_round_trips_through_check(self, capsys, tmp_path):
        path = tmp_path / "bundle.json"
        code, _, _ = run(capsys, "catalog", "export", "mn_oqa(2)", "--output", str(path))
        assert code == 0
        code, out, _ = run(capsys, "check", "oqa", str(path))
        assert code == 0
        assert "=> PASS" in out

    def test_export_deterministic(self, capsys):
        code, first, _ = run(capsys, "catalog", "export", "ex34_nonuple_case1")
        assert code == 0
        code, second, _ = run(capsys, "catalog", "export", "ex34_nonuple_case1")
        assert first == second

    def test_export_stored_matrix_fixture(self, capsys):
        code, out, _ = run(capsys, "catalog", "export", "expected_ex43_alpha")
        assert code == 0
        payload = json.loads(out)
        assert payload["dim"] == 16
        assert payload["known_discrepancies"]

    def test_export_weak_coupling_fixture(self, capsys):
        code, out, _ = run(capsys, "catalog", "export", "ex45_weak_r")
        assert code == 0
        payload = json.loads(out)
        assert payload["legs"] == ["SW4", "KZ2"]


class TestCheckCommand:
    def test_oqa_pass(self, capsys):
        code, out, _ = run(capsys, "check", "oqa", "catalog:mn_oqa(2)")
        assert code == 0
        assert "yang-baxter" in out
        assert "=> PASS" in out

    def test_json_report(self, capsys):
        code, out, _ = run(capsys, "check", "oqa", "catalog:mn_oqa(2)", "--json")
        assert code == 0
        report = json.loads(out)
        assert report["pass"] is True
        assert [v["axiom"] for v in report["axioms"]][:2] == [
            "invertible", "commuting-automorphisms",
        ]

    def test_sign_flip_fails_with_witness(self, capsys, tmp_path):
        payload = oqa_to_json(catalog_get("mn_oqa(2)").object)
        payload.pop("r_inv")
        for term in payload["r"]["terms"]:
            if term["idx"] == ["E12", "E21"]:
                term["c"] = "-(a - a^-1)"
        path = tmp_path / "flipped.json"
        path.write_text(dumps(payload))
        code, out, _ = run(capsys, "check", "oqa", str(path), "--json")
        assert code == 1
        report = json.loads(out)
        verdicts = {v["axiom"]: v for v in report["axioms"]}
        assert verdicts["yang-baxter"]["pass"] is False
        assert "witness" in verdicts["yang-baxter"]

    def test_other_kinds(self, capsys):
        for kind, ref in (
            ("nonuple", "catalog:ex34_nonuple_case1"),
            ("hopf", "catalog:sweedler4_hopf"),
            ("qt", "catalog:kz2_hopf"),
            ("weakr", "catalog:ex45_weak_r"),
        ):
            code, out, _ = run(capsys, "check", kind, ref)
            assert code == 0, (kind, out)

    def test_qt_and_weakr_from_files(self, capsys, tmp_path):
        from oqa.serialize import hopf_to_json, tensor_to_json

        sw4 = catalog_get("sweedler4_hopf")
        kz2 = catalog_get("kz2_hopf")
        qt_path = tmp_path / "qt.json"
        qt_path.write_text(dumps({
            "hopf": hopf_to_json(sw4.object),
            "p": tensor_to_json(sw4.aux["coupling"]),
        }))
        code, _, _ = run(capsys, "check", "qt", str(qt_path))
        assert code == 0

        weak = catalog_get("ex45_weak_r")
        weak_path = tmp_path / "weak.json"
        weak_path.write_text(dumps({
            "left": hopf_to_json(sw4.object),
            "right": hopf_to_json(kz2.object),
            "r": tensor_to_json(weak.object),
        }))
        code, _, _ = run(capsys, "check", "weakr", str(weak_path))
        assert code == 0

    def test_unknown_catalog_name_is_input_error(self, capsys):
        code, _, err = run(capsys, "check", "oqa", "catalog:nope")
        assert code == 2
        assert json.loads(err)["error"]["type"] == "input-error"

    def test_malformed_file_is_input_error(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text("{not json")
        code, _, err = run(capsys, "check", "oqa", str(path))
        assert code == 2
        assert "error" in json.loads(err)


class TestBuildAndExport:
    def test_build_thm37_and_export_csv(self, capsys, tmp_path, monkeypatch):
        bundle_path = tmp_path / "double.json"
        code, _, _ = run(
            capsys, "build", "thm37", "catalog:mn_oqa(2)", "--output", str(bundle_path)
        )
        assert code == 0
        payload = json.loads(bundle_path.read_text())
        assert payload["r"]["legs"] == ["M2⊗M2", "M2⊗M2"]
        assert "r_inv" in payload

        # piping the bundle into check must pass (build outputs re-validate)
        monkeypatch.setattr("sys.stdin", io.StringIO(bundle_path.read_text()))
        code, out, _ = run(capsys, "check", "oqa", "-")
        assert code == 0

        code, out, _ = run(capsys, "export", "matrix", str(bundle_path), "--format", "csv")
        assert code == 0
        rows = out.strip().splitlines()
        assert len(rows) == 16
        first = rows[0].split(",")
        assert len(first) == 16
        assert first[0] == "a^2"
        assert first[3] == "1"
        assert first[6] == "-a^3 + 2*a - a^-1"  # -x^2*a expanded

    def test_build_thm36_and_compare(self, capsys, tmp_path):
        out_path = tmp_path / "paired.json"
        code, _, _ = run(
            capsys, "build", "thm36", "catalog:ex34_nonuple_case1",
            "--output", str(out_path),
        )
        assert code == 0
        payload = json.loads(out_path.read_text())
        assert payload["r"]["legs"] == ["M2⊗M3", "M2⊗M3"]

    def test_build_bicrossed_revalidates_through_check(self, capsys, tmp_path, monkeypatch):
        path = tmp_path / "twisted.json"
        code, out, _ = run(
            capsys, "build", "bicrossed",
            "catalog:sweedler4_hopf", "catalog:kz2_hopf", "catalog:ex45_weak_r",
            "--output", str(path),
        )
        assert code == 0
        payload = json.loads(path.read_text())
        assert "delta" in payload
        assert len(payload["basis"]) == 8
        monkeypatch.setattr("sys.stdin", io.StringIO(path.read_text()))
        code, _, _ = run(capsys, "check", "hopf", "-")
        assert code == 0

    def test_build_cor39_three_refs(self, capsys):
        code, out, _ = run(
            capsys, "build", "cor39",
            "catalog:sweedler4_hopf", "catalog:kz2_hopf", "catalog:ex45_weak_r",
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["r"]["legs"] == ["SW4⊗KZ2", "SW4⊗KZ2"]

    def test_rectangular_export(self, capsys):
        code, out, _ = run(
            capsys, "export", "matrix", "catalog:ex34_nonuple_case2",
        )
        assert code == 0
        rows = out.strip().splitlines()
        assert len(rows) == 4
        assert all(len(row.split(",")) == 9 for row in rows)

    def test_wrong_arity_is_input_error(self, capsys):
        code, _, err = run(capsys, "build", "thm36", "catalog:ex34_nonuple_case1", "x")
        assert code == 2
        assert "reference" in json.loads(err)["error"]["message"]


class TestEvalCommand:
    def test_eval_then_check(self, capsys, tmp_path):
        path = tmp_path / "numeric.json"
        code, _, _ = run(
            capsys, "eval", "catalog:mn_oqa(2)", "--set", "a=3", "--output", str(path)
        )
        assert code == 0
        payload = json.loads(path.read_text())
        assert payload["algebra"]["params"] == []
        code, _, _ = run(capsys, "check", "oqa", str(path))
        assert code == 0

    def test_eval_csv_has_plain_rationals(self, capsys, tmp_path):
        bundle_path = tmp_path / "double.json"
        run(capsys, "build", "thm37", "catalog:mn_oqa(2)", "--output", str(bundle_path))
        code, out, _ = run(
            capsys, "export", "matrix", str(bundle_path),
            "--format", "csv", "--set", "a=2",
        )
        assert code == 0
        first = out.splitlines()[0].split(",")
        assert first[0] == "4"

    def test_bad_assignment(self, capsys):
        code, _, err = run(capsys, "eval", "catalog:mn_oqa(2)", "--set", "a")
        assert code == 2
