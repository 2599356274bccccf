import operator

import pytest
from hypothesis import given, settings, strategies as st

from conftest import DATA
from ulogic import po2dfa as pd
from ulogic import tlxy as T
from ulogic.difftest import example1_member, gen_formula, gen_ranker
from ulogic.sexpr import Alphabet, enumerate_words

ABC = Alphabet("abc")
WORDS = [w for w in enumerate_words(ABC, 4) if w]


def test_example2():
    al, f = T.load((DATA / "example2.sexp").read_text())
    for w in enumerate_words(al, 5):
        assert T.member(f, w) == example1_member(w)
    assert T.sat(f, al) == pd.NonEmpty("ad")
    assert T.load(T.dump(f, al)) == (al, f)


def test_pointwise_semantics():
    f = T.X("a", T.TOP)  # some later a
    assert [T.evaluate(f, "bab", i) for i in (1, 2, 3)] == [True, False, False]
    assert T.lpos(T.SP(T.X("b", T.TOP)), "abab") == 2
    assert T.lpos(T.EP(T.Y("a", T.TOP)), "abab") == 3
    assert T.lpos(T.SP(T.X("c", T.TOP)), "abab") is None
    assert not T.member(T.TOP, "")


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_compilation_matches_evaluation(seed, size):
    f = gen_formula("tlxy", size, ABC, seed)
    m = T.to_po2dfa(f, ABC)
    assert pd.validate(m) == []
    assert pd.member_many(m, WORDS) == [T.member(f, w) for w in WORDS]


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_normal_forms_preserve_language(seed, size):
    f = gen_formula("tlxy", size, ABC, seed)
    for g in (T.pull_booleans(f, ABC), T.eliminate_weak_unit(f, ABC)):
        assert [T.member(g, w) for w in WORDS] == [T.member(f, w) for w in WORDS]


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(["<", "<=", ">", ">="]))
def test_directionality(seed, rel):
    r = gen_ranker(5, ABC, seed)
    f = T.directionality(r, rel, ABC)
    cmp = {"<": operator.lt, "<=": operator.le, ">": operator.gt, ">=": operator.ge}[rel]
    for w in WORDS:
        p = T.lpos(r, w)
        if p is not None:
            assert [T.evaluate(f, w, i) for i in range(1, len(w) + 1)] == [cmp(i, p) for i in range(1, len(w) + 1)]


def test_unanchored_ranker_rejected():
    with pytest.raises(T.UnanchoredRanker):
        T.directionality(T.X("a", T.TOP), "<", ABC)


def test_sat_unsat():
    assert T.sat(T.SP(T.X("a", T.X("a", T.TOP))), Alphabet("ab")) == pd.NonEmpty("aaa")
    contradiction = T.And(T.Atom("a"), T.Not(T.Atom("a")))
    assert isinstance(T.sat(contradiction, ABC), pd.EmptyUpTo)
