from hypothesis import given, settings, strategies as st

from conftest import DATA
from ulogic import tlxy as T
from ulogic import uitlpm as U
from ulogic.difftest import example1_member, gen_formula
from ulogic.sexpr import Alphabet, enumerate_words

AB = Alphabet("ab")
WORDS = [w for w in enumerate_words(AB, 5) if w]


def test_example6():
    al, d = U.load((DATA / "example6.sexp").read_text())
    assert all(U.member(d, w) == example1_member(w) for w in enumerate_words(al, 5))
    assert U.load(U.dump(d, al)) == (al, d)


def test_chops():
    # first b splits "aabab" into [1,3] and [3,5]
    d = U.First("b", U.Atom("a"), U.TOP)
    assert U.member(d, "aabab")
    assert not U.member(U.First("b", U.Atom("b"), U.TOP), "aabab")
    assert not U.member(U.First("b", U.TOP, U.TOP), "aaa")  # no b to chop at
    assert U.member(U.Unit(), "ab") and not U.member(U.Unit(), "aab") and U.member(U.Pt(), "a")


def test_ceilings():
    A = frozenset("a")
    for kind, inside in (("oo", lambda w: w[1:-1]), ("oc", lambda w: w[1:]), ("co", lambda w: w[:-1]), ("cc", lambda w: w)):
        d = U.ceiling(A, kind, AB)
        for w in WORDS:
            assert U.member(d, w) == (set(inside(w)) <= A), (kind, w)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 9))
def test_translation_to_tlxy(seed, size):
    d = gen_formula("uitlpm", size, AB, seed)
    f = U.to_tlxy(d, AB)
    assert [T.member(f, w) for w in WORDS] == [U.member(d, w) for w in WORDS]
