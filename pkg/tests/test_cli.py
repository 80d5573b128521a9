"""Tests for the command line front end."""

import json
import subprocess
import sys

import pytest

from tpg import cli
from tpg.classify import EXCLUDED_TYPE_NAMES
from tpg.permgrp import Perm, generate


def run_cli(capsys, *args):
    code = cli.run(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestUsage:
    def test_unknown_group_rejected(self, capsys):
        code, _, err = run_cli(capsys, "normals", "G12")
        assert code == 2
        assert "unknown group" in err

    def test_unknown_catalog_filter_rejected(self, capsys):
        code, _, err = run_cli(capsys, "catalog", "--only", "H1")
        assert code == 2
        assert "unknown group" in err

    def test_unknown_obstruction_type_rejected(self, capsys):
        code, _, err = run_cli(capsys, "obstruct", "S4")
        assert code == 2
        assert "unknown excluded type" in err

    def test_missing_subcommand(self, capsys):
        assert run_cli(capsys, )[0] == 2

    def test_bad_jobs(self, capsys):
        code, _, err = run_cli(capsys, "--jobs", "0", "catalog", "--only", "G1")
        assert code == 2
        assert "--jobs" in err

    def test_missing_certificate_file(self, capsys, tmp_path):
        code, _, err = run_cli(capsys, "verify", str(tmp_path / "nope.json"))
        assert code == 2
        assert "no such file" in err


class TestCatalog:
    def test_only_g3(self, capsys):
        code, out, _ = run_cli(capsys, "catalog", "--only", "G3")
        assert code == 0
        assert "160" in out
        row = next(line for line in out.splitlines() if "G3" in line)
        assert row.rstrip().endswith("| 0 |")  # zero index>12 normals

    def test_json_lists_all_eleven(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "catalog")
        assert code == 0
        rows = json.loads(out)
        assert [r["name"] for r in rows] == [f"G{i}" for i in range(1, 12)]
        assert rows[10]["order"] == 17496


class TestNormals:
    def test_g4_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "normals", "G4")
        assert code == 0
        body = [l for l in out.splitlines() if l.startswith("|")][2:]
        assert len(body) == 1
        assert "| 2 |" in body[0]
        assert "S5" in body[0]

    def test_g3_empty(self, capsys):
        code, out, _ = run_cli(capsys, "normals", "G3")
        assert code == 0
        assert "no normal subgroups of index > 12" in out

    def test_g1_json(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "normals", "G1")
        assert code == 0
        rows = json.loads(out)
        assert sorted(r["subgroup_order"] for r in rows) == [2, 4, 4, 4]
        assert all(r["triangle_point"] for r in rows)


class TestDihedral:
    def test_verify_all_types(self, capsys):
        code, out, _ = run_cli(capsys, "dihedral", "verify")
        assert code == 0
        lines = [l for l in out.splitlines() if l.strip()]
        assert len(lines) == 9
        assert all("ok" in l and "gram psd" in l for l in lines)

    def test_verify_json(self, capsys):
        code, out, _ = run_cli(capsys, "--format", "json", "dihedral", "verify")
        assert code == 0
        results = json.loads(out)
        assert [r["type"] for r in results] == [
            "1A", "2A", "2B", "3A", "3C", "4A", "4B", "5A", "6A"]
        assert all(r["gram_psd"] and not r["failures"] for r in results)


class TestEnumerate:
    def test_g11_presentation(self, capsys, tmp_path):
        src = tmp_path / "g11.pres"
        src.write_text(
            "# largest maximal group over its 2^3 subgroup\n"
            "mnp: 6 6 6\n"
            "r: 6 6 6 - 3\n"
            "subgroup: a\n"
            "subgroup: b\n"
            "subgroup: bacacacbacacacbacacac\n")
        code, out, _ = run_cli(capsys, "enumerate", str(src))
        assert code == 0
        assert "cosets: 2187" in out

    def test_extra_relator(self, capsys, tmp_path):
        src = tmp_path / "collapse.pres"
        src.write_text("mnp: 6 6 6\nr: 6 6 6 1 -\n")
        code, out, _ = run_cli(capsys, "enumerate", str(src))
        assert code == 0
        assert "cosets: 12" in out

    def test_capacity_exhaustion(self, capsys, tmp_path):
        src = tmp_path / "g11.pres"
        src.write_text("mnp: 6 6 6\nr: 6 6 6 - 3\n")
        code, _, err = run_cli(
            capsys, "--coset-capacity", "100", "enumerate", str(src))
        assert code == 1
        assert "aborted" in err

    def test_malformed_file(self, capsys, tmp_path):
        src = tmp_path / "bad.pres"
        src.write_text("mnp: 6 6\n")
        code, _, err = run_cli(capsys, "enumerate", str(src))
        assert code == 2
        assert "three integers" in err


class TestObstructAndVerify:
    def test_s6_round_trip_in_fresh_processes(self, tmp_path):
        env_cmd = [sys.executable, "-m", "tpg.cli", "--out", str(tmp_path)]
        emit = subprocess.run(
            env_cmd + ["obstruct", "S6"], capture_output=True, text=True)
        assert emit.returncode == 0, emit.stderr
        cert_path = tmp_path / "S6.cert.json"
        assert cert_path.is_file()
        check = subprocess.run(
            [sys.executable, "-m", "tpg.cli", "verify", str(cert_path)],
            capture_output=True, text=True)
        assert check.returncode == 0, check.stderr
        assert "verified" in check.stdout
        # the located witness is the Klein subgroup on three disjoint 2-cycles
        payload = json.loads(cert_path.read_text())
        gens = [Perm.parse(s, 6) for s in payload["certificate"]["generators"]]
        wanted = generate(6, [Perm.parse(s, 6) for s in ("(1,2)", "(3,4)", "(5,6)")])
        assert generate(6, gens).element_key_set() == wanted.element_key_set()

    def test_verify_flag_rechecks_before_writing(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "--out", str(tmp_path), "--verify", "obstruct", "S3xS3xS3")
        assert code == 0
        assert "klein witness" in out
        assert (tmp_path / "S3xS3xS3.cert.json").is_file()

    def test_tampered_certificate_rejected(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "--out", str(tmp_path), "obstruct", "S6")
        assert code == 0
        path = tmp_path / "S6.cert.json"
        payload = json.loads(path.read_text())
        payload["certificate"]["generators"] = ["(1,2)", "(3,4)", "(1,2)(3,4)"]
        path.write_text(json.dumps(payload))
        code, out, _ = run_cli(capsys, "verify", str(path))
        assert code == 1
        assert "REJECTED" in out

    def test_wrong_schema_rejected(self, capsys, tmp_path):
        path = tmp_path / "odd.json"
        path.write_text(json.dumps({"schema": "something/9"}))
        code, _, err = run_cli(capsys, "verify", str(path))
        assert code == 2
        assert "schema" in err

    def test_m1_audit_summary(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "--out", str(tmp_path), "obstruct", "2^4:S5")
        assert code == 0
        assert "m1-audit witness triple" in out
        assert "-3/256" in out
        payload = json.loads((tmp_path / "2_4_S5.cert.json").read_text())
        assert payload["certificate"]["kind"] == "m1-audit"


class TestClassify:
    def test_exit_code_flags_verified_discrepancies(self, cli_classify):
        assert cli_classify.code1 == 1
        assert cli_classify.code2 == 1

    def test_artifacts_written(self, cli_classify):
        data = json.loads((cli_classify.out1 / "classification.json").read_text())
        assert data["schema"] == "tpg.classification/1"
        assert len(data["types"]) == 36
        assert {e["name"] for e in data["excluded"]} == set(EXCLUDED_TYPE_NAMES)
        tables = (cli_classify.out1 / "tables.md").read_text()
        assert "## Reconciliation" in tables

    def test_byte_identical_reruns(self, cli_classify):
        for name in ("classification.json", "tables.md"):
            first = (cli_classify.out1 / name).read_bytes()
            second = (cli_classify.out2 / name).read_bytes()
            assert first == second, name
