import pytest
from click.testing import CliRunner

from conftest import DATA
from ulogic import cli


def run(*args, env=None):
    return CliRunner().invoke(cli.main, [str(a) for a in args], env=env)


def test_routing():
    assert [a[:2] for a in cli.route("duds", "po2dfa")] == [("duds", "uitlpm"), ("uitlpm", "tlxy"), ("tlxy", "po2dfa")]
    assert [a[:2] for a in cli.route("tlrec", "tlxy")] == [("tlrec", "tlfp"), ("tlfp", "tlxy")]
    assert cli.route("tlxy", "tlxy") == []
    with pytest.raises(cli.UnsupportedArrow):
        cli.route("po2dfa", "tlrec")


def test_translate_tlfp_to_tlrec(tmp_path):
    src = tmp_path / "f.sexp"
    src.write_text("(alphabet a)\n(tlfp (f (atom a)))\n")
    res = run("translate", "tlfp", "tlrec", src)
    assert res.exit_code == 0
    assert res.output.splitlines()[-1] == "(tlrec (ref (xr (atom a) (top))))"
    assert res.output.startswith("; tlfp→tlrec:")


def test_multi_hop_report():
    res = run("translate", "duds", "po2dfa", DATA / "example5.sexp")
    hops = [l for l in res.output.splitlines() if l.startswith(";")]
    assert res.exit_code == 0 and len(hops) == 3 and "states" in hops[-1]


def test_member_and_trace():
    res = run("member", "--trace", "po2dfa", "acdb", DATA / "fig2.sexp")
    assert res.exit_code == 0 and res.output.splitlines()[-1] == "ACCEPT acdb" and "; s @ 1" in res.output
    assert run("member", "tlxy", "acdb", DATA / "fig2.sexp").exit_code == 2


def test_verdicts():
    assert run("sat", DATA / "example2.sexp").output == "SAT witness=ad\n"
    assert run("sat", "--bound", "2", DATA / "contradiction.sexp").output == "UNSAT≤2\n"
    assert run("empty", DATA / "contradiction.sexp").output == "EMPTY up to bound 3\n"
    res = run("equiv", "--bound", "6", DATA / "fig2.sexp", DATA / "example2.sexp")
    assert (res.exit_code, res.output) == (0, "EQUIVALENT (5461 words)\n")
    res = run("equiv", "--bound", "4", DATA / "example6.sexp", DATA / "example5.sexp")
    assert res.exit_code == 0
    res = run("sat", "--strategy", "bounded-model", DATA / "tlrec_example.sexp")
    assert res.exit_code == 0 and res.output.startswith("SAT witness=")


def test_counterexample(tmp_path):
    other = tmp_path / "o.sexp"
    other.write_text("(alphabet a b c d)\n(tlxy (atom a))\n")
    res = run("equiv", DATA / "fig2.sexp", other)
    assert res.exit_code == 1 and res.output.startswith("COUNTEREXAMPLE word=a ")


def test_budget_exit_code():
    res = run("equiv", "--bound", "6", DATA / "fig2.sexp", DATA / "example2.sexp", env={"UL_ENUM_BUDGET": "100"})
    assert res.exit_code == 3


def test_parse_errors_exit_2(tmp_path):
    bad = tmp_path / "bad.sexp"
    bad.write_text("(alphabet a)\n(tlxy (x a (top))")
    res = run("parse", bad)
    assert res.exit_code == 2 and "UnbalancedParens" in res.output


def test_dot_and_fuzz():
    assert run("dot", DATA / "example2.sexp").output.startswith("digraph")
    res = run("fuzz", "tlfp", "tlrec", "--count", "10", "--seed", "4")
    assert res.exit_code == 0 and res.output.startswith("EQUIVALENT")
