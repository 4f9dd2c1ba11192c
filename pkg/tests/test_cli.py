import io
import contextlib

import pytest

from polyadic.cli import main


def run(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(argv)
    return code, out.getvalue()


def test_ring_command():
    code, out = run(["ring", "--ring", "Z/2^2"])
    assert code == 0
    assert "size" in out and "4" in out


def test_classes_command_matches_spec_example():
    code, out = run(["classes", "--ring", "Z/2^2", "--orders", "7"])
    assert code == 0
    assert "{0}(1)" in out
    assert "{1,2,4}(3)" in out
    assert "{3,5,6}(3)" in out


def test_classes_serial():
    code, out = run(["classes", "--ring", "Z/2^2", "--moduli=-1,0,0,1"])
    assert code == 0
    assert "class0" in out and "class1" in out


def test_idempotents_command():
    code, out = run(["idempotents", "--ring", "Z/2^2", "--moduli=-1,0,0,1",
                     "--format", "structured"])
    assert code == 0
    assert "e0=0:3;1:3;2:3" in out
    assert "e1=0:2;1:1;2:1" in out


def test_count_command():
    code, out = run(["count", "--m", "2", "--classes", "3",
                     "--flavor", "abelian-II", "--with-census"])
    assert code == 0
    assert "count" in out and "6" in out and "census" in out


def test_splittings_command():
    code, out = run(["splittings", "--ring", "Z/2^2", "--orders", "7", "--m", "2"])
    assert code == 0
    assert "u=(3);Sinf={0};S0={1};S1={2}" in out


def test_verify_command_exit_zero():
    code, out = run(["verify", "--ring", "Z/2^2", "--moduli=-1,0,0,1",
                     "--orders", "7", "--m", "2", "--suite", "forproof",
                     "--cap", "65536"])
    assert code == 0
    assert "PASS" in out and "FAIL" not in out


def test_verify_command_exit_on_surfaced_fail():
    code, out = run(["verify", "--ring", "Z/2^2", "--moduli=-1,0,0,1",
                     "--orders", "7", "--m", "2", "--suite", "prop-dec-spl",
                     "--cap", "4096"])
    assert code == 1  # printed union clause fails by design and is surfaced
    assert "4a-Lhat-pair-union-as-printed" in out


def test_verify_hypothesis_exit_three():
    code, out = run(["verify", "--ring", "Z/2^2", "--moduli=-1,0,0,1",
                     "--orders", "7", "--m", "2", "--suite", "lcd"])
    assert code == 3
    assert "HYPOTHESIS-NOT-MET" in out


def test_family_command():
    code, out = run(["family", "--ring", "Z/2^2", "--orders", "7", "--m", "2"])
    assert code == 0
    assert "K0" in out and "zero-classes={0,2}" in out


def test_family_consta_typeI():
    code, out = run(["family", "--ring", "Z/3^2", "--orders", "4",
                     "--lambda=-1", "--m", "2", "--type", "I"])
    assert code == 0
    assert "flavor" in out and "consta-I" in out


def test_distance_command():
    code, out = run(["distance", "--ring", "Z/2^2", "--orders", "7",
                     "--code", "1:2,2:2"])
    assert code == 0
    assert "min-distance" in out and "7" in out
    code, out = run(["distance", "--ring", "Z/2^2", "--orders", "7",
                     "--code", "0:2,1:2,2:2"])
    assert code == 0
    assert "infinite" in out


def test_distance_cap_exit_four():
    code, out = run(["distance", "--ring", "Z/2^2", "--orders", "7",
                     "--code", "0:0", "--cap", "100"])
    assert code == 4


def test_parse_error_exit_two():
    code, out = run(["ring", "--ring", "Z/6^1"])
    assert code == 2
    code, out = run(["verify", "--ring", "Z/2^2", "--orders", "7", "--m", "2"])
    assert code == 2  # missing --suite


def test_determinism_byte_identical():
    argv = ["verify", "--ring", "Z/2^2", "--moduli=-1,0,0,1", "--orders", "7",
            "--m", "2", "--suite", "theta,forproof", "--cap", "4096",
            "--format", "structured"]
    c1, o1 = run(argv)
    c2, o2 = run(argv)
    assert (c1, o1) == (c2, o2)
    assert o1.startswith("config-hash=")


def test_seed_splitting_flag():
    code, out = run(["family", "--ring", "Z/2^2", "--orders", "7",
                     "--seed-splitting", "2;u=(5);Sinf={0};S0={1};S1={2}"])
    assert code == 0
    code, out = run(["family", "--ring", "Z/2^2", "--orders", "7",
                     "--seed-splitting", "2;u=(2);Sinf={0};S0={1};S1={2}"])
    assert code == 2  # u=2 fixes the classes, not a valid splitting


def test_config_file_equivalent(tmp_path):
    cfg = tmp_path / "duadic.cfg"
    cfg.write_text("ring=Z/2^2\nmoduli=-1,0,0,1\norders=7\nm=2\n"
                   "suite=forproof\ncap=4096\nformat=structured\n")
    c1, o1 = run(["verify", "--config", str(cfg)])
    assert c1 == 0
    c2, o2 = run(["verify", "--ring", "Z/2^2", "--moduli=-1,0,0,1",
                  "--orders", "7", "--m", "2", "--suite", "forproof",
                  "--cap", "4096", "--format", "structured"])
    assert o1.splitlines()[1:] == o2.splitlines()[1:]  # same report lines


def test_structured_format_machine_readable():
    code, out = run(["count", "--m", "3", "--classes", "2",
                     "--flavor", "abelian-II", "--format", "structured"])
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.strip().splitlines())
    assert kv["count"] == "4"
