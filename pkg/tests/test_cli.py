"""The command-line surface: flags, exit codes, report formats."""

import json

import pytest

from binomseries.cli import main


def test_verify_single_id(capsys):
    assert main(["verify", "--id", "t-16-k1", "--digits", "40"]) == 0
    out = capsys.readouterr().out
    assert "t-16-k1" in out and "pass" in out and "17" in out


def test_verify_rejects_low_digits():
    with pytest.raises(SystemExit):
        main(["verify", "--digits", "5"])


def test_verify_theorem_filter_json(capsys):
    code = main(["verify", "--filter", "status=theorem", "--digits", "30",
                 "--format", "json"])
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema"] == "binomseries-report/1"
    assert doc["summary"]["total"] == 9
    assert doc["summary"]["failed"] == 0
    ids = [r["id"] for r in doc["results"]]
    assert ids == sorted(ids)


def test_verify_report_determinism(capsys):
    main(["verify", "--id", "t-98", "--digits", "30", "--format", "json"])
    first = json.loads(capsys.readouterr().out)
    main(["verify", "--id", "t-98", "--digits", "30", "--format", "json"])
    second = json.loads(capsys.readouterr().out)
    for doc in (first, second):
        for r in doc["results"]:
            r.pop("seconds")
    assert first == second


def test_telescope_all(capsys):
    assert main(["telescope", "--all", "--n", "20"]) == 0
    out = capsys.readouterr().out
    assert out.count("pass") >= 17  # 8 steps + 8 instance sets + shift


def test_telescope_specific_family(capsys):
    assert main(["telescope", "--family", "L21_3K2", "--m", "8/9",
                 "--n", "100"]) == 0


def test_telescope_unknown_family():
    with pytest.raises(SystemExit):
        main(["telescope", "--family", "NOPE"])


def test_congruence_scan(capsys):
    code = main(["congruence", "--primes", "5..13", "--id", "cg-1681*"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.count("pass") == 4


def test_congruence_section_filter(capsys):
    code = main(["congruence", "--primes", "5..7", "--filter", "section=4"])
    assert code == 0


def test_certificates(capsys):
    assert main(["certificates", "--all", "--order", "40"]) == 0
    out = capsys.readouterr().out
    assert "cert-int-g" in out and "functional equation" in out


def test_discover(capsys):
    assert main(["discover", "--id", "t-8", "--digits", "80"]) == 0
    out = capsys.readouterr().out
    assert "EVIDENCE-ONLY" in out and "matches" in out


def test_corpus_subcommands(capsys):
    assert main(["corpus", "validate"]) == 0
    assert "corpus ok" in capsys.readouterr().out
    assert main(["corpus", "manifest"]) == 0
    assert "series" in capsys.readouterr().out
    assert main(["corpus", "list"]) == 0
    assert "t-8" in capsys.readouterr().out


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert main(["verify", "--id", "t-8", "--digits", "30",
                 "--output", str(target)]) == 0
    capsys.readouterr()
    doc = json.loads(target.read_text())
    assert doc["summary"]["pass"] is True


def test_bad_filter_key():
    with pytest.raises(SystemExit):
        main(["verify", "--filter", "nope=1", "--digits", "30"])


def test_checkpoint_flag(tmp_path, capsys):
    ckpt = tmp_path / "scan.txt"
    assert main(["congruence", "--primes", "5..7", "--id", "cg-1681-php",
                 "--checkpoint", str(ckpt)]) == 0
    assert len(ckpt.read_text().splitlines()) == 2
