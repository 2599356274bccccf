import pytest
from hypothesis import given, settings, strategies as st

from conftest import DATA
from ulogic import po2dfa as pd
from ulogic.difftest import example1_member, gen_formula, gen_po2dfa
from ulogic.sexpr import Alphabet, BudgetExceeded, enumerate_words

AB = Alphabet("ab")
WORDS = list(enumerate_words(AB, 6))
FIG2 = pd.load_po2dfa((DATA / "fig2.sexp").read_text())


def test_fig2_is_valid_and_matches_oracle():
    assert pd.validate(FIG2) == []
    ws = list(enumerate_words(FIG2.alphabet, 5))
    assert pd.member_many(FIG2, ws) == [example1_member(w) for w in ws]


def test_trace_and_step_bound():
    tr = pd.run(FIG2, "acd")
    assert tr.verdict == "Accept" and tr.steps[0] == ("s", 1) and tr.steps[-1][0] == "t"
    assert len(tr.steps) - 1 <= len(FIG2) * (3 + 2)


def test_validation_reports_violations():
    m = pd.Po2Dfa(AB, {"s": pd.L, "t": pd.ACC, "r": pd.REJ}, "s", {("s", "a"): "s", ("s", ">"): "r"})
    errs = pd.validate(m)
    assert any("self-loop" in e for e in errs) and any("totality" in e for e in errs)
    cyc = pd.Po2Dfa(AB, {"p": pd.L, "q": pd.L, "t": pd.ACC, "r": pd.REJ}, "p",
                    {("p", "a"): "q", ("q", "a"): "p", ("p", ">"): "r", ("p", "<"): "r", ("q", ">"): "r", ("q", "<"): "r"})
    assert any("cycle" in e for e in pd.validate(cyc))
    with pytest.raises(pd.UlError):
        pd.check_valid(cyc)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 7))
def test_kernel_run_matches_reference(seed, k):
    m = gen_po2dfa(k, AB, seed)
    assert pd.validate(m) == []
    assert pd.member_many(m, WORDS) == [pd.run(m, w).verdict == "Accept" for w in WORDS]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_ete_compilation(seed, size):
    e = gen_formula("ete", size, AB, seed)
    m = pd.compile_ete(e, AB)
    assert pd.validate(m) == [] and len(m) <= pd.ete_size(e) + pd.ETE_OVERHEAD
    for w in enumerate_words(AB, 4):
        for p in range(len(w) + 2):
            tr = pd.run(m, w, p)
            assert (tr.verdict, tr.final_position) == pd.eval_ete(e, w, p)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_boolean_closure(seed):
    m1, m2 = gen_po2dfa(5, AB, seed), gen_po2dfa(4, AB, seed + 1)
    r1, r2 = pd.member_many(m1, WORDS), pd.member_many(m2, WORDS)
    assert pd.member_many(pd.negate(m1), WORDS) == [not a for a in r1]
    assert pd.member_many(pd.conjoin(m1, m2), WORDS) == [a and b for a, b in zip(r1, r2)]
    assert pd.member_many(pd.disjoin(m1, m2), WORDS) == [a or b for a, b in zip(r1, r2)]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 6))
def test_emptiness_methods_agree(seed, k):
    m = gen_po2dfa(k, AB, seed)
    for bound in (len(m), 2 * len(m)):
        assert pd.emptiness(m, bound) == pd.emptiness(m, bound, method="exact")
    w = pd.shortest_witness(m)
    first = next((x for x in WORDS if pd.member(m, x)), None)
    if first is not None:
        assert w == first


def test_emptiness_budget():
    with pytest.raises(BudgetExceeded):
        pd.emptiness(pd.load_po2dfa((DATA / "contradiction.sexp").read_text()), 12, budget=1000)


def test_file_round_trip_and_dot():
    text = pd.dump_po2dfa(FIG2)
    assert pd.load_po2dfa(text) == FIG2
    dot = pd.to_dot(FIG2)
    assert dot.startswith("digraph") and all(q in dot for q in FIG2.states)
    al, e = pd.load_ete((DATA / "ete_example.sexp").read_text())
    assert pd.load_ete(pd.dump_ete(e, al)) == (al, e)
