from hypothesis import given, settings, strategies as st

from conftest import DATA
from ulogic import duds as D
from ulogic import po2dfa as pd
from ulogic import uitlpm as U
from ulogic.difftest import example1_member, gen_formula, gen_po2dfa
from ulogic.sexpr import Alphabet, enumerate_words

AB = Alphabet("ab")
WORDS = [w for w in enumerate_words(AB, 5) if w]


def test_example5():
    al, f = D.load((DATA / "example5.sexp").read_text())
    assert f.anchor == "postend"
    assert all(D.member(f, w) == example1_member(w) for w in enumerate_words(al, 5))
    assert D.load(D.dump(f, al)) == (al, f)


def test_until_since_are_strict_and_deterministic():
    f = D.Until(frozenset("a"), "b", D.TOP)  # next b, with only a's strictly between
    assert D.evaluate(f, "aab", 1) and D.evaluate(f, "bab", 1)
    assert not D.evaluate(f, "bab", 3)  # strict: the b at i itself does not count
    assert not D.evaluate(D.Until(frozenset("a"), "b", D.TOP), "bcab", 1)
    g = D.Since(frozenset("ab"), "a", D.Atom("b"))  # previous a carries a b?
    assert not D.evaluate(g, "ab", 3) and not D.evaluate(g, "ba", 3)
    h = D.Since(frozenset("b"), "a", D.Atom("a"))
    assert D.evaluate(h, "abb", 4) and not D.evaluate(h, "acb", 4)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 6))
def test_from_po2dfa(seed, k):
    m = gen_po2dfa(k, AB, seed)
    f = D.from_po2dfa(m)
    assert [D.member(f, w) for w in WORDS] == pd.member_many(m, WORDS)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 7))
def test_to_uitlpm(seed, size):
    f = gen_formula("duds", size, AB, seed)
    d = D.to_uitlpm(f, AB)
    assert [U.member(d, w) for w in WORDS] == [D.member(f, w) for w in WORDS]
