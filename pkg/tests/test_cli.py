from __future__ import annotations

import json

import pytest

from qzeta.cli import main


def run(capsys, argv):
    rc = main(argv)
    out, err = capsys.readouterr()
    return rc, out, err


def test_monomial_gor(capsys):
    rc, out, err = run(capsys, ["monomial", "--group", "(2;1,1)", "--N", "0,0", "--nu", "1,1"])
    assert rc == 0
    assert out == "L^-2 * (1 + L)\n"
    assert err == ""


def test_monomial_views(capsys):
    rc, out, _ = run(
        capsys,
        ["monomial", "--group", "(1;0,0)", "--N", "1,1", "--nu", "1,1", "--poles", "--euler"],
    )
    assert rc == 0
    assert out == (
        "(L^-4 * T^2 * (1 - 2 * L + L^2)) / ((1 - L^-1 * T)^2)\n"
        "euler: (1) / ((s + 1)^2)\n"
        "candidate poles: s = -1\n"
    )


def test_series_at_L(capsys):
    rc, out, _ = run(
        capsys,
        ["monomial", "--group", "(1;0)", "--N", "1", "--nu", "1", "--series", "2", "--eval-L", "3"],
    )
    assert rc == 0
    assert out == (
        "(L^-2 * T * (-1 + L)) / ((1 - L^-1 * T))\n"
        "series (T-order <= 2): -L^-2 * T + L^-1 * T - L^-3 * T^2 + L^-2 * T^2\n"
        "series at L = 3:\n"
        "  T^1: 2/9\n"
        "  T^2: 2/27\n"
    )


def test_monomial_latex(capsys):
    rc, out, _ = run(
        capsys, ["monomial", "--group", "(2;1,1)", "--N", "0,0", "--nu", "1,1", "--latex"]
    )
    assert rc == 0
    assert out == "\\left(\\mathbb{L}^{-2}+\\mathbb{L}^{-1}\\right)\n"


def test_eval_L_requires_series(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["monomial", "--group", "(1;0)", "--N", "1", "--nu", "1", "--eval-L", "3"])
    assert ei.value.code == 2
    assert "--eval-L needs --series" in capsys.readouterr().err


def test_unknown_command(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["frobnicate"])
    assert ei.value.code == 2
    capsys.readouterr()


def test_nonsmall_is_domain_error(capsys):
    rc, out, err = run(capsys, ["monomial", "--group", "(4;1,2)", "--N", "1,1", "--nu", "1,1"])
    assert rc == 1
    assert out == ""
    assert err.startswith("error: ")
    assert "quasi-reflexions" in err


def test_allow_nonsmall_notice(capsys):
    rc, out, err = run(
        capsys,
        ["monomial", "--group", "(4;1,2)", "--N", "1,1", "--nu", "1,1", "--allow-nonsmall"],
    )
    assert rc == 0
    assert out.endswith("/ ((1 - L^-1 * T)^2)\n")
    assert err == "notice: group is not small; quasi-reflexions contribute extra jets\n"


def test_hj_check_equal(capsys):
    rc, out, _ = run(capsys, ["hj", "--d", "7", "--a", "1", "--b", "3", "--check"])
    assert rc == 0
    assert out.splitlines()[-1] == "cross-check vs direct quotient formula: EQUAL"


def test_hj_arity_error(capsys):
    rc, _, err = run(capsys, ["hj", "--d", "7", "--a", "1", "--b", "3", "--N", "1,1,1"])
    assert rc == 1
    assert err == "error: hj needs two-entry --N and --nu vectors\n"


def test_tetra_stringy(capsys):
    rc, out, _ = run(capsys, ["tetra", "--d", "3", "--q", "2", "--stringy"])
    assert rc == 0
    assert out == "11\nconjugacy classes: 11 (match)\n"


def test_tetra_stringy_json(capsys):
    rc, out, _ = run(capsys, ["tetra", "--d", "3", "--q", "2", "--stringy", "--json"])
    assert rc == 0
    assert json.loads(out) == {"conjugacy": 11, "match": True, "stringy": 11}


def test_tetra_reduction_notice(capsys):
    rc, out, err = run(capsys, ["tetra", "--d", "5", "--q", "2", "--check"])
    assert rc == 0
    assert err == "notice: G(5, 2) has quasi-reflexions; using G(1, 0)\n"
    assert out.splitlines()[-1] == "cross-check vs closed-form assembly: EQUAL"


def test_yomdin_full(capsys):
    rc, out, err = run(
        capsys,
        [
            "yomdin", "--m", "3", "--k", "1", "--p", "2", "--q", "3", "--a", "3",
            "--check", "--charpoly", "--euler",
        ],
    )
    assert rc == 0
    assert err == ""
    lines = out.splitlines()
    assert lines[0].startswith("(L^-47 * T^3 * (")
    assert lines[0].endswith(
        "/ ((1 - L^-3) * (1 - L^-1 * T) * (1 - L^-5 * T^3) * (1 - L^-35 * T^24))"
    )
    assert lines[1] == "euler: (46*s^2 + 319/3*s + 175/3) / ((s + 1) * (3*s + 5) * (24*s + 35))"
    assert lines[2] == "cross-check vs closed-form assembly: EQUAL"
    assert lines[3] == (
        "monodromy charpoly: (t^3 - 1) * (t^4 - 1) * (t^24 - 1)"
        " / ((t - 1) * (t^8 - 1) * (t^12 - 1))"
    )
    assert lines[4] == "degree: 10"


def test_yomdin_unrealizable_notice(capsys):
    rc, _, err = run(
        capsys, ["yomdin", "--m", "2", "--k", "1", "--p", "2", "--q", "5", "--a", "1"]
    )
    assert rc == 0
    assert err.startswith("notice: no surface with these invariants exists")


def test_monomial_json(capsys):
    rc, out, _ = run(
        capsys,
        ["monomial", "--group", "(2;1,1)", "--N", "1,1", "--nu", "1,1",
         "--json", "--poles", "--euler"],
    )
    assert rc == 0
    obj = json.loads(out)
    assert sorted(obj) == ["euler", "poles", "zeta"]
    assert obj["poles"] == [{"den": 1, "num": -1}]
    assert obj["zeta"]["kind"] == "zeta"
    assert obj["euler"]["numer"] == [{"den": 1, "num": 2}]


def test_group_text(capsys):
    rc, out, _ = run(capsys, ["group", "(4;1,2)"])
    assert rc == 0
    assert out == (
        "order: 4\n"
        "exponent: 4\n"
        "small: no\n"
        "reduced: (2; 1,1)  [m = (2, 1)]\n"
        "gor measure at origin: L^-2 * (1 + L)\n"
        "orb measure at origin: L^-2 + L^(-3/2) + L^(-5/4) + L^(-3/4)\n"
    )


def test_group_json(capsys):
    rc, out, _ = run(capsys, ["group", "(4;1,2)", "--json"])
    assert rc == 0
    obj = json.loads(out)
    assert obj["order"] == 4
    assert obj["exponent"] == 4
    assert obj["small"] is False
    assert obj["reduced"] == "(2; 1,1)"
    assert obj["m"] == [2, 1]


def test_emit_strata_roundtrip(capsys, tmp_path):
    f1 = tmp_path / "chain.strata"
    f2 = tmp_path / "chain2.strata"
    rc, out_hj, _ = run(
        capsys,
        ["hj", "--d", "7", "--a", "1", "--b", "3", "--emit-strata", str(f1)],
    )
    assert rc == 0
    rc, out_st, _ = run(capsys, ["strata", str(f1)])
    assert rc == 0
    assert out_st == out_hj
    rc, _, _ = run(capsys, ["strata", str(f1), "--emit-strata", str(f2)])
    assert rc == 0
    assert f1.read_bytes() == f2.read_bytes()


def test_strata_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.strata"
    f.write_text("dimension = 2\nwat\n")
    rc, out, err = run(capsys, ["strata", str(f)])
    assert rc == 1
    assert out == ""
    assert err.startswith("error: line 2, column 1")


def test_strata_missing_file(capsys, tmp_path):
    rc, _, err = run(capsys, ["strata", str(tmp_path / "nope.strata")])
    assert rc == 1
    assert err.startswith("error: ")
