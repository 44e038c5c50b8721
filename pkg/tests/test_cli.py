"""End-to-end CLI behaviour: formats, exit codes, cache, env overrides."""
import json
import os
import subprocess
import sys

import pytest

from cycperm.tables import CountTable


def run_cli(*args, env_extra=None, cwd=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "cycperm", *args],
        capture_output=True,
        text=True,
        env=env,
        cwd=cwd,
    )


def test_count_single_cell():
    proc = run_cli("count", "--n", "8", "--avoid", "123")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout == "n\t123\n8\t188\n"


def test_count_all_avoiders_flag():
    proc = run_cli("count", "--n", "6", "--avoid", "123", "--avoid", "231", "--all")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "6\t16"


def test_count_above_cap_is_usage_error():
    proc = run_cli("count", "--n", "99", "--avoid", "123")
    assert proc.returncode == 64
    assert "cap" in proc.stderr


def test_count_range_json_round_trips():
    proc = run_cli("count", "--n", "3", "--n-max", "6", "--avoid", "321", "--format", "json")
    assert proc.returncode == 0
    table = CountTable.from_json(proc.stdout)
    assert [table.get(n, "321").count for n in (3, 4, 5, 6)] == [2, 4, 10, 24]
    assert table.get(5, "321").provenance == "oracle"


def test_formula_command():
    proc = run_cli("formula", "--pair", "123,231", "--n", "26")
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "26\t18"
    proc = run_cli("formula", "--pair", "123,132", "--n", "9")
    assert proc.stdout.splitlines()[1] == "9\t16"


def test_formula_unsupported_pair():
    proc = run_cli("formula", "--pair", "132,213", "--n", "9")
    assert proc.returncode == 64
    assert "132,213" in proc.stderr


def test_bad_pattern_is_usage_error():
    proc = run_cli("count", "--n", "4", "--avoid", "1x3")
    assert proc.returncode == 64


def test_missing_subcommand_is_usage_error():
    proc = run_cli()
    assert proc.returncode == 64


def test_verify_table1():
    proc = run_cli("verify", "--claim", "table1", "--n-max", "10")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.startswith("TableOne: pass")


def test_verify_json_format():
    proc = run_cli("verify", "--claim", "growth", "--avoid", "321", "--n-max", "7",
                   "--format", "json")
    assert proc.returncode == 0
    payload = json.loads(proc.stdout)
    assert payload[0]["claim"] == "GrowthBounds"
    assert payload[0]["passed"] is True


def test_verify_formula_vs_oracle_single_pair():
    # the claim's default range reaches n = 11 even without --extended;
    # pair-restricted search trees stay tiny
    proc = run_cli("verify", "--claim", "formula-vs-oracle", "--pair", "123,231",
                   "--n-max", "11")
    assert proc.returncode == 0, proc.stderr
    assert "FormulaVsOracle: pass" in proc.stdout


def test_verify_explicit_cap_is_binding():
    proc = run_cli("verify", "--claim", "formula-vs-oracle", "--pair", "123,231",
                   "--n-max", "11", "--cap", "8")
    assert proc.returncode == 64


def test_verify_triple_formula():
    proc = run_cli("verify", "--claim", "triple-formula", "--n-max", "30")
    assert proc.returncode == 0


def test_triples_listing():
    proc = run_cli("triples", "--n", "14")
    assert proc.returncode == 0
    rows = proc.stdout.splitlines()
    assert "14\t7\t3\t4" in rows
    proc17 = run_cli("triples", "--n", "17")
    assert "17\t7\t3\t7" not in proc17.stdout.splitlines()


def test_triples_too_small():
    proc = run_cli("triples", "--n", "2")
    assert proc.returncode == 64


def test_triples_with_perms_json():
    proc = run_cli("triples", "--n", "9", "--with-perms", "--format", "json")
    items = json.loads(proc.stdout)
    assert {"n": 9, "a": 4, "b": 2, "c": 3, "permutation": "9 8 7 6 2 1 5 4 3"} in items


def test_export_bfile_byte_stable(tmp_path):
    out = tmp_path / "b309563.txt"
    first = run_cli("export", "--seq", "A309563", "--n-max", "100", "--offset", "1",
                    "--out", str(out))
    assert first.returncode == 0, first.stderr
    blob1 = out.read_bytes()
    second = run_cli("export", "--seq", "A309563", "--n-max", "100", "--offset", "1",
                     "--out", str(out))
    assert second.returncode == 0
    assert out.read_bytes() == blob1
    lines = blob1.decode("ascii").splitlines()
    assert len(lines) == 100
    assert lines[0] == "1 1"
    assert lines[25] == "26 18"
    assert blob1.endswith(b"\n") and not blob1.endswith(b"\n\n")


def test_export_oracle_backed(tmp_path):
    out = tmp_path / "b309504.txt"
    proc = run_cli("export", "--seq", "A309504", "--n-max", "8", "--offset", "3",
                   "--out", str(out))
    assert proc.returncode == 0, proc.stderr
    assert out.read_text() == "3 2\n4 4\n5 10\n6 24\n7 68\n8 188\n"


def test_export_unknown_sequence(tmp_path):
    proc = run_cli("export", "--seq", "A000001", "--n-max", "5", "--offset", "1",
                   "--out", str(tmp_path / "x.txt"))
    assert proc.returncode == 64


def test_export_oracle_backed_respects_cap(tmp_path):
    proc = run_cli("export", "--seq", "A309504", "--n-max", "12", "--offset", "3",
                   "--out", str(tmp_path / "x.txt"))
    assert proc.returncode == 64


def test_cache_hits_and_torn_lines(tmp_path):
    cache = tmp_path / "oracle.jsonl"
    args = ("count", "--n", "7", "--avoid", "321", "--cache", str(cache))
    first = run_cli(*args)
    assert first.returncode == 0
    records = [json.loads(line) for line in cache.read_text().splitlines()]
    assert records and records[0]["count"] == 66
    # poison the cache with a torn line; the valid record must still be found
    with cache.open("a") as fh:
        fh.write('{"key": "truncated...\n')
    second = run_cli(*args)
    assert second.returncode == 0
    assert second.stdout == first.stdout
    # the torn line is ignored, not an error, and no recompute row is added
    # for the cached request
    assert cache.read_text().count('"n": 7') == 1


def test_cache_distinguishes_cyclic_flag(tmp_path):
    cache = tmp_path / "oracle.jsonl"
    run_cli("count", "--n", "6", "--avoid", "321", "--cache", str(cache))
    run_cli("count", "--n", "6", "--avoid", "321", "--all", "--cache", str(cache))
    records = [json.loads(line) for line in cache.read_text().splitlines()]
    assert len(records) == 2
    assert {r["cyclic"] for r in records} == {True, False}


def test_env_cap_override_and_flag_precedence():
    low = run_cli("count", "--n", "6", "--avoid", "123",
                  env_extra={"CYCPERM_ORACLE_CAP": "5"})
    assert low.returncode == 64
    flag_wins = run_cli("count", "--n", "6", "--avoid", "123", "--cap", "6",
                        env_extra={"CYCPERM_ORACLE_CAP": "5"})
    assert flag_wins.returncode == 0
    assert flag_wins.stdout.splitlines()[-1] == "6\t24"


def test_workers_flag_gives_identical_counts():
    one = run_cli("count", "--n", "8", "--avoid", "132", "--workers", "1")
    four = run_cli("count", "--n", "8", "--avoid", "132", "--workers", "4")
    assert one.stdout == four.stdout == "n\t132\n8\t182\n"


def test_extended_flag_unlocks_and_warns():
    proc = run_cli("count", "--n", "11", "--avoid", "231", "--extended")
    assert proc.returncode == 0, proc.stderr
    assert proc.stdout.splitlines()[-1] == "11\t2274"
    assert "n = 10" in proc.stderr  # runtime warning present
    quiet = run_cli("count", "--n", "11", "--avoid", "231", "--extended", "--quiet")
    assert quiet.stderr == ""


def test_conjectures_alias():
    proc = run_cli("conjectures", "--n-max", "6")
    assert proc.returncode == 0, proc.stderr
    assert "ChainConjecture" in proc.stdout
    assert "InsertionTheorem" in proc.stdout
    assert "KMinusOneQuestion" in proc.stdout
