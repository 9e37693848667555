"""The built-in catalog fed through its canonical checkers, at CLI level."""

import json
import os
import tempfile

from lieforge.cli import run


def invoke(*argv):
    return run(list(argv))


def test_canonical_checkers_pass():
    for argv in (
        ("check", "sasakian", "--builtin", "h3"),
        ("check", "kahler", "--builtin", "d4half"),
        ("check", "frobenius", "--builtin", "d4half"),
        ("check", "sasakian", "--builtin", "g0"),
        ("check", "sasakian", "--builtin", "g5"),
    ):
        out, code = invoke(*argv)
        assert code == 0, (argv, out)
        assert "overall pass" in out


def test_builtin_centers():
    out, _ = invoke("builtin", "g0")
    assert "note center = {0}" in out
    out5, _ = invoke("builtin", "g5")
    assert "note center = span{e5}" in out5


def test_builtin_g0_brackets():
    out, code = invoke("builtin", "g0")
    assert code == 0
    assert "bracket 1 5 = 2:1" in out  # [e1,e5] = e2, that is [e5,e1] = -e2
    assert "bracket 2 5 = 1:-1" in out


def test_check_cocycle_command():
    out, code = invoke("check", "cocycle", "--builtin", "h3", "--two-form", "e1^e2")
    assert code == 0
    out2, code2 = invoke("check", "cocycle", "--builtin", "d4half", "--two-form", "e1^e2")
    assert code2 == 1
    assert "item fail cocycle(e1,e2,e4)" in out2


def test_check_derivation_command():
    out, code = invoke("check", "derivation", "--builtin", "h3", "--map", "diag:1/2,1/2,1")
    assert code == 0
    out2, code2 = invoke("check", "derivation", "--builtin", "h3", "--map", "id")
    assert code2 == 1


def test_check_sasakian_from_files():
    algebra = "lieforge/1 algebra\ndim 3\nbracket 1 2 = 3:1\n"
    structure = (
        "lieforge/1 structure\nkind sasakian\nxi = 0 0 1\nalpha = 0 0 1\n"
        "phi row 1 = 0 -1 0\nphi row 2 = 1 0 0\nphi row 3 = 0 0 0\n"
    )
    with tempfile.TemporaryDirectory() as tmp:
        apath = os.path.join(tmp, "h3.lf")
        spath = os.path.join(tmp, "sas.lf")
        with open(apath, "w") as f:
            f.write(algebra)
        with open(spath, "w") as f:
            f.write(structure)
        out, code = invoke("check", "sasakian", "--algebra", apath, "--structure", spath)
        assert code == 0
        assert "overall pass" in out


def test_check_kahler_from_inline_components():
    out, code = invoke(
        "check",
        "kahler",
        "--builtin",
        "d4half",
        "--map",
        "@/dev/null" if False else "diag:1,1,1,1",
        "--two-form",
        "e1^e2-e3^e4",
    )
    # diag(1,1,1,1) is not a complex structure, the check must fail cleanly
    assert code == 1
    assert "item fail complex_square_identity" in out


def test_check_sasakian_failing_components_exit_one():
    out, code = invoke(
        "check", "sasakian", "--builtin", "h3", "--xi", "e3", "--form", "e3", "--map", "zero"
    )
    assert code == 1


def test_construct_kahler_to_sasakian_cli():
    out, code = invoke("construct", "kahler-to-sasakian", "--builtin", "d4half")
    assert code == 0
    assert "overall pass" in out
    assert "note central_element = e5" in out


def test_extend_double_full_map():
    out, code = invoke(
        "extend", "double", "--builtin", "h3", "--two-form", "0", "--map", "diag:1/2,1/2,1,1"
    )
    assert code == 0
    assert "note central_element = e4" in out
    assert "note derivation_slot = e5" in out


def test_construct_sasakian_double_with_scale():
    out, code = invoke(
        "construct",
        "sasakian-double",
        "--builtin",
        "h3",
        "--two-form",
        "0",
        "--map",
        "diag:0,0,0,-1",
        "--w-scale",
        "-1",
    )
    assert code == 0
    assert "note params = a=1 b=0 c=-1 d=1" in out
    # the wrong scale sign leaves the five conditions true but the metric fails
    out2, code2 = invoke(
        "construct",
        "sasakian-double",
        "--builtin",
        "h3",
        "--two-form",
        "0",
        "--map",
        "diag:0,0,0,-1",
        "--w-scale",
        "1",
    )
    assert code2 == 1
    assert "item fail metric_positive_definite" in out2


def test_construct_with_file_based_structure_and_map():
    algebra = "lieforge/1 algebra\ndim 3\nbracket 1 2 = 3:1\n"
    structure = (
        "lieforge/1 structure\nkind sasakian\nxi = 0 0 1\nalpha = 0 0 1\n"
        "phi row 1 = 0 -1 0\nphi row 2 = 1 0 0\nphi row 3 = 0 0 0\n"
    )
    with tempfile.TemporaryDirectory() as tmp:
        apath = os.path.join(tmp, "h3.lf")
        spath = os.path.join(tmp, "sas.lf")
        with open(apath, "w") as f:
            f.write(algebra)
        with open(spath, "w") as f:
            f.write(structure)
        out, code = invoke(
            "construct",
            "sasakian-to-fk",
            "--algebra",
            apath,
            "--structure",
            spath,
            "--map",
            "diag:1/2,1/2,1",
        )
        assert code == 0
        assert "note principal_element = e4" in out


def test_json_structure_sections():
    blob, code = invoke("--output", "json", "builtin", "h3")
    assert code == 0
    doc = json.loads(blob)
    sections = {s["name"] for s in doc["sections"]}
    assert "sasakian" in sections
    assert doc["algebra"]["basis"] == ["e1", "e2", "e3"]
