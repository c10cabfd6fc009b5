import json

import pytest

from gf2split.cli import main

OBSTRUCTION_A = "field gf(2^1)\nn 4\n0 0 0 1\n1 0 0 0\n0 1 0 0\n0 0 1 1\n"
GF8_3 = "field gf(2^3)\nn 3\n1 2 3\n4 5 6\n7 0 1\n"


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return write


def test_split_then_verify(files, tmp_path, capsys):
    src = files("a.txt", GF8_3)
    out = str(tmp_path / "cert.json")
    assert main(["split", src, "--out", out]) == 0
    assert main(["verify", out]) == 0
    assert "result            pass" in capsys.readouterr().out
    assert main(["verify", out, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


def test_split_quartic_f2(files, capsys):
    assert main(["split", files("a.txt", OBSTRUCTION_A), "--mode", "potent4-f2"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["N"].splitlines()[2:] == ["1 1 0 0", "1 1 0 0", "0 0 0 1", "0 0 0 0"]
    assert doc["D"].splitlines()[2:] == ["1 1 0 1", "0 1 0 0", "0 1 0 1", "0 0 1 1"]


def test_gf2_diag_split_is_a_usage_error(files, capsys):
    assert main(["split", files("a.txt", OBSTRUCTION_A)]) == 2
    assert "field too small" in capsys.readouterr().err


def test_parse_error_position(files, capsys):
    assert main(["split", files("bad.txt", "field gf(2^2)\nn 2\n0 1\n1 9\n")]) == 2
    assert "line 4, column 3" in capsys.readouterr().err


def test_field_flag_must_match(files, capsys):
    assert main(["split", files("a.txt", GF8_3), "--field", "gf(2^4)"]) == 2


def test_tampered_certificate_fails(files, tmp_path, capsys):
    out = str(tmp_path / "cert.json")
    assert main(["split", files("a.txt", GF8_3), "--out", out]) == 0
    doc = json.loads(open(out).read())
    rows = doc["N"].splitlines()
    rows[2] = "7 7 7"
    doc["N"] = "\n".join(rows) + "\n"
    bad = files("bad.json", json.dumps(doc))
    assert main(["verify", bad]) == 1
    assert "FAIL" in capsys.readouterr().out


def test_a_override_flag(files, capsys):
    src = files("c.txt", "field gf(2^3)\nn 3\n0 0 1\n1 0 2\n0 1 3\n")
    assert main(["split", src, "--a", "5"]) == 0
    assert json.loads(capsys.readouterr().out)["blocks"][0]["a"] == "0x5"
    assert main(["split", src, "--a", "2"]) == 2


def test_subfield_flag(files, capsys):
    src = files("s.txt", "field gf(2^4)\nn 2\n0 9\n1 0\n")
    assert main(["split", src, "--mode", "potent-subfield", "--subfield-degree", "2"]) == 0
    assert json.loads(capsys.readouterr().out)["potency_s"] == 3


def test_rcf_and_oracle(files, capsys):
    src = files("a.txt", OBSTRUCTION_A)
    assert main(["rcf", src]) == 0
    assert capsys.readouterr().out.startswith("factor 1,0,0,1,1\n")
    assert main(["oracle", src, "--potency", "2", "--nil-index", "3"]) == 0
    assert capsys.readouterr().out.startswith("exists false")
    assert main(["oracle", src, "--json"]) == 0
    assert json.loads(capsys.readouterr().out)["exists"] is True


def test_selftest_is_deterministic(capsys):
    assert main(["selftest", "--only", "4,6", "--quick", "--seed", "3"]) in (0, 1)
    first = capsys.readouterr().out
    main(["selftest", "--only", "4,6", "--quick", "--seed", "3"])
    assert capsys.readouterr().out == first
    assert first.startswith("criterion 4: PASS")


def test_split_output_is_deterministic(files, capsys):
    src = files("a.txt", GF8_3)
    main(["split", src])
    first = capsys.readouterr().out
    main(["split", src])
    assert capsys.readouterr().out == first
