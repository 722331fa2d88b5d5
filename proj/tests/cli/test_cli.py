#!/usr/bin/env python3
"""Exercises the command line tool end to end via subprocess."""

import gzip
import json
import os
import subprocess
import sys
import tempfile

CLI = None
DATA = None


def run(*args, env_extra=None, expect=0):
    env = os.environ.copy()
    env.pop("FQDIGRAPH_ARC_CAP", None)
    env.pop("FQDIGRAPH_COSET_CAP", None)
    if env_extra:
        env.update(env_extra)
    proc = subprocess.run([CLI, *args], capture_output=True, env=env)
    if proc.returncode != expect:
        raise AssertionError(
            f"{args}: expected exit {expect}, got {proc.returncode}\n"
            f"stdout: {proc.stdout!r}\nstderr: {proc.stderr!r}"
        )
    return proc


def example_path():
    return os.path.join(DATA, "example_f25.json")


def test_monomial_pinned():
    out = run("monomial", "--p", "2", "--e", "2", "--m", "3", "--n", "3").stdout
    doc = json.loads(out)
    assert doc["strong"] is False
    assert doc["count"] == 2
    assert doc["orders"] == [8, 8]
    assert doc["d"] == 3
    assert doc["q_s"] == 3
    assert doc["e_s"] == 1
    assert doc["divisors"] == [[1, 3], [2, 1]]
    assert out.endswith(b"\n")


def test_verify_pinned():
    out = run("verify", "--input", example_path()).stdout
    assert out == b"partitions agree, 3 components\n", out


def test_analyze_formats():
    csv = run("analyze", "--input", example_path(), "--format", "csv").stdout
    assert csv == b"3,125;250;250\n", csv

    doc = json.loads(run("analyze", "--input", example_path()).stdout)
    assert doc["parity"] == "odd"
    assert doc["d"] == 1
    assert doc["count"] == 3
    assert doc["orders"] == [125, 250, 250]
    assert doc["strong"] is False

    text = run("analyze", "--input", example_path(), "--format", "text").stdout
    assert text.startswith(b"strong: no\n"), text


def test_byte_determinism():
    for args in (
        ("analyze", "--input", example_path()),
        ("monomial", "--p", "3", "--e", "2", "--m", "2", "--n", "4"),
        ("oracle", "--input", example_path(), "--format", "csv"),
        ("verify", "--q", "4", "--sweep", "3", "--seed", "9"),
    ):
        a = run(*args).stdout
        b = run(*args).stdout
        assert a == b, args


def test_output_file_matches_stdout():
    stdout = run("analyze", "--input", example_path()).stdout
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "report.json")
        side = run("analyze", "--input", example_path(), "--output", path)
        assert side.stdout == b""
        with open(path, "rb") as fh:
            assert fh.read() == stdout


def test_oracle_matches_analyze():
    a = run("analyze", "--input", example_path(), "--format", "csv").stdout
    b = run("oracle", "--input", example_path(), "--format", "csv").stdout
    assert a == b


def test_schema_errors_exit_2():
    with tempfile.TemporaryDirectory() as tmp:
        bad = os.path.join(tmp, "bad.json")
        with open(bad, "w") as fh:
            fh.write('{"field":')
        run("analyze", "--input", bad, expect=2)

    run("analyze", expect=2)
    run("monomial", "--p", "2", "--e", "2", "--m", "3", "--n", "3",
        "--input", example_path(), expect=2)
    run("monomial", "--p", "6", "--e", "1", "--m", "1", "--n", "1", expect=2)
    run("monomial", "--p", "2", "--e", "2", "--m", "9", "--n", "1", expect=2)
    run("analyze", "--input", example_path(), "--format", "yaml", expect=2)
    run("verify", "--case-seed", "7", expect=2)
    run(expect=2)
    run("frobnicate", expect=2)


def test_caps_exit_4():
    run("oracle", "--input", example_path(), "--arc-cap", "100", expect=4)
    run("oracle", "--input", example_path(),
        env_extra={"FQDIGRAPH_ARC_CAP": "100"}, expect=4)
    run("oracle", "--input", example_path(), "--format", "csv",
        "--arc-cap", "20000", env_extra={"FQDIGRAPH_ARC_CAP": "100"})
    run("oracle", "--input", example_path(),
        env_extra={"FQDIGRAPH_ARC_CAP": "junk"}, expect=2)
    run("oracle", "--input", example_path(),
        env_extra={"FQDIGRAPH_ARC_CAP": "0"}, expect=2)
    run("verify", "--input", example_path(), "--coset-cap", "3", expect=4)
    run("verify", "--input", example_path(),
        env_extra={"FQDIGRAPH_COSET_CAP": "3"}, expect=4)


def test_verify_sweep_and_replay():
    out = run("verify", "--q", "9", "--l", "1", "--sweep", "4",
              "--seed", "3").stdout.decode()
    lines = out.strip().split("\n")
    assert lines[-1] == "4/4 cases agree"
    assert len(lines) == 5
    first = lines[0].split()
    assert first[0] == "q=9" and first[1] == "l=1"
    seed = first[2].split("=")[1]

    replay = run("verify", "--q", "9", "--l", "1", "--case-seed", seed)
    rlines = replay.stdout.decode().strip().split("\n")
    assert rlines[0] == lines[0]
    assert rlines[-1] == "1/1 cases agree"


def test_verify_json_format():
    doc = json.loads(run("verify", "--q", "4", "--sweep", "2", "--seed", "1",
                         "--format", "json").stdout)
    assert doc["ok"] is True
    assert len(doc["cases"]) == 4
    for case in doc["cases"]:
        assert case["ok"] is True
        assert case["q"] == 4
        assert case["random"] is True


def test_lemmas():
    out = run("lemmas", "--p", "2", "--e", "4", "--m", "5", "--n", "3",
              "--format", "text").stdout.decode()
    assert out.splitlines()[-1] == "all_pass: yes"
    doc = json.loads(run("lemmas", "--p", "3", "--e", "2", "--m", "4",
                         "--n", "4").stdout)
    assert doc["all_pass"] is True
    assert len(doc["checks"]) == 3


def test_diameter():
    out = run("diameter", "--p", "3", "--e", "1", "--m", "1", "--n", "1",
              "--format", "text").stdout
    assert out == b"diameter: 3\n", out
    run("diameter", "--input", example_path(), expect=2)


def test_export_dot():
    out = run("export-dot", "--p", "2", "--e", "1", "--m", "1",
              "--n", "1").stdout.decode()
    assert out.startswith("digraph {\n")
    assert out.rstrip().endswith("}")
    assert out.count("->") == 8

    with tempfile.TemporaryDirectory() as tmp:
        plain = os.path.join(tmp, "g.dot")
        run("export-dot", "--p", "2", "--e", "1", "--m", "1", "--n", "1",
            "--output", plain)
        with open(plain) as fh:
            assert fh.read() == out

        zipped = os.path.join(tmp, "g.dot.gz")
        proc = run("export-dot", "--p", "2", "--e", "1", "--m", "1",
                   "--n", "1", "--output", zipped)
        with open(zipped, "rb") as fh:
            magic = fh.read(2)
        if magic == b"\x1f\x8b":
            with gzip.open(zipped, "rt") as fh:
                assert fh.read() == out
        else:
            assert proc.stderr == b""


def test_oracle_dot_side_file():
    with tempfile.TemporaryDirectory() as tmp:
        side = os.path.join(tmp, "side.dot")
        csv = run("oracle", "--p", "2", "--e", "1", "--m", "1", "--n", "1",
                  "--dot", side, "--format", "csv").stdout
        assert csv == b"1,4\n", csv
        with open(side) as fh:
            assert fh.readline() == "digraph {\n"


def test_inline_modulus():
    doc = json.loads(run("analyze", "--p", "5", "--e", "2",
                         "--modulus", "2,4,1", "--m", "2", "--n", "2").stdout)
    assert doc["strong"] is True
    assert doc["orders"] == [625]
    run("analyze", "--p", "5", "--e", "2", "--modulus", "4,4,1",
        "--m", "2", "--n", "2", expect=2)


def main():
    global CLI, DATA
    CLI, DATA = sys.argv[1], sys.argv[2]
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__}: ok")
    print(f"{len(tests)} cli checks passed")


if __name__ == "__main__":
    main()
