"""
Tests for the command-line front end.
"""

import json

import pytest

from catalog import ENTRIES
from config import OUTPUT_CONFIG
from hilbert import Rule
from main import build_parser, main
from surfaces import RealComponent, SurfaceProfile
from tools import ProfileReader


def records(capsys):
    return [json.loads(line) for line in capsys.readouterr().out.splitlines() if line.strip()]


@pytest.fixture
def k3_file(tmp_path):
    profile = next(e.profile for e in ENTRIES if e.name == "k3-sigma10-s2")
    return ProfileReader.write(profile, tmp_path / "k3.profile")


def test_hilb2_records(k3_file, capsys):
    assert main(["--format", "records", "hilb2", str(k3_file)]) == 0
    (record,) = records(capsys)
    assert record["record"] == "hilb2"
    assert record["decision"] == "NotMaximal"
    assert record["rule"] == "hodge-positive-disconnected"
    assert record["rule_citation"] == Rule.HODGE_POSITIVE_DISCONNECTED.citation
    assert record["beta_hilb2_R"] == [2, 41, 234, 41, 2]
    assert record["defect"] == 4


def test_hilb2_projective_plane(tmp_path, capsys):
    profile = next(e.profile for e in ENTRIES if e.name == "p2-rp2")
    path = ProfileReader.write(profile, tmp_path / "p2.profile")
    assert main(["--format", "records", "hilb2", str(path)]) == 0
    (record,) = records(capsys)
    assert record["decision"] == "Maximal"
    assert record["beta_hilb2_R"] == [1, 2, 3, 2, 1]
    assert record["defect"] == 0


def test_records_round_trip_the_profile(k3_file, capsys):
    main(["--format", "records", "analyze", str(k3_file)])
    (record,) = records(capsys)
    assert ProfileReader.loads(record["profile_text"]) == ProfileReader.read(k3_file)
    assert record["defect"] == 0


def test_records_have_sorted_keys(k3_file, capsys):
    main(["--format", "records", "hilb2", str(k3_file)])
    line = capsys.readouterr().out.strip()
    keys = list(json.loads(line))
    assert keys == sorted(keys)


def test_text_output(k3_file, capsys):
    assert main(["hilb2", str(k3_file)]) == 0
    out = capsys.readouterr().out
    assert "HILBERT SQUARE REPORT: k3-sigma10-s2" in out
    assert "NotMaximal" in out


def test_output_is_deterministic(k3_file, capsys):
    main(["hilb2", str(k3_file)])
    first = capsys.readouterr().out
    main(["hilb2", str(k3_file)])
    assert capsys.readouterr().out == first


def test_goettsche_records(capsys):
    assert main(["--format", "records", "goettsche", "--betti", "1,0,22,0,1", "--nmax", "2"]) == 0
    rows = records(capsys)
    assert len(rows) == 15
    assert {"record": "betti", "n": 2, "i": 4, "value": 276} in rows


def test_goettsche_default_n_max(capsys):
    assert main(["goettsche", "--betti", "1,0,1,0,1"]) == 0
    assert "total" in capsys.readouterr().out


def test_catalog(capsys):
    assert main(["--format", "records", "catalog", "--filter", "ruled-g"]) == 0
    rows = records(capsys)
    assert [r["entry"] for r in rows] == ["ruled-g1", "ruled-g2", "ruled-g3"]
    assert all(r["agrees"] for r in rows)


def test_export_catalog(tmp_path, capsys):
    assert main(["export-catalog", str(tmp_path / "out")]) == 0
    suffix = OUTPUT_CONFIG["profile_suffix"]
    assert len(list((tmp_path / "out").glob(f"*{suffix}"))) == len(ENTRIES)


def test_verify_smith(capsys):
    assert main(["verify", "--suite", "smith"]) == 0
    assert "7/7 checks passed" in capsys.readouterr().out


def test_homology_command(tmp_path, capsys):
    path = tmp_path / "octahedron.complex"
    facets = "\n".join(f"{a} {b} {c}" for a in (0, 1) for b in (2, 3) for c in (4, 5))
    path.write_text(facets + "\ninvolution: 0 1 2 3 5 4\n")
    assert main(["--format", "records", "homology", str(path)]) == 0
    (record,) = records(capsys)
    assert record["betti"] == [1, 0, 1]
    assert record["betti_F"] == [1, 1, 0]
    assert record["exact"] is True


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["goettsche", "--betti", "1,0,1"],
    ["verify", "--suite", "everything"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_help_exits_cleanly(capsys):
    assert main(["--help"]) == 0
    assert "hilb2" in capsys.readouterr().out


def test_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "absent.profile")]) == 2
    assert "error:" in capsys.readouterr().err


def test_unrealizable_profile(tmp_path, capsys):
    profile = SurfaceProfile(name="bad", betti_f2=(1, 0, 1, 0, 1),
                             real_components=(RealComponent.sphere(),) * 2)
    path = ProfileReader.write(profile, tmp_path / "bad.profile")
    assert main(["hilb2", str(path)]) == 2


def test_invalid_profile(tmp_path, capsys):
    path = tmp_path / "invalid.profile"
    path.write_text('name = "x"\nbetti_f2 = [1, 1, 1, 0, 1]\n')
    assert main(["analyze", str(path)]) == 2
    assert "beta1 = beta3" in capsys.readouterr().err


def test_bad_config_file(tmp_path, k3_file, capsys):
    settings = tmp_path / "settings.env"
    settings.write_text("NOT_A_SETTING=1\n")
    assert main(["--config", str(settings), "analyze", str(k3_file)]) == 2


def test_config_file_is_applied(tmp_path, monkeypatch, capsys):
    monkeypatch.setitem(OUTPUT_CONFIG, "table_format", OUTPUT_CONFIG["table_format"])
    settings = tmp_path / "settings.env"
    settings.write_text("OUTPUT_TABLE_FORMAT=plain\n")
    assert main(["--config", str(settings), "goettsche", "--betti", "1,0,1,0,1", "--nmax", "1"]) == 0
    assert OUTPUT_CONFIG["table_format"] == "plain"
    assert "+---" not in capsys.readouterr().out


def test_parser_lists_every_command():
    parser = build_parser()
    commands = parser._subparsers._group_actions[0].choices
    assert set(commands) == {"analyze", "hilb2", "goettsche", "verify", "catalog",
                             "export-catalog", "homology"}
