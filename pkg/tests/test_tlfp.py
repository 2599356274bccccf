import pytest
from hypothesis import given, settings, strategies as st

from conftest import DATA
from ulogic import tlfp as L
from ulogic import tlxy as T
from ulogic.difftest import gen_formula
from ulogic.sexpr import Alphabet, LimitExceeded, enumerate_words

AB = Alphabet("ab")
WORDS = [w for w in enumerate_words(AB, 5) if w]
a, b = L.Atom("a"), L.Atom("b")


def test_strict_modalities_and_dpos():
    assert [L.evaluate(L.F(a), "aba", i) for i in (1, 2, 3)] == [True, True, False]
    assert L.dpos(L.F(a), "abab") == 2  # last position with an a strictly ahead
    assert L.dpos(L.P(b), "abab") == 3  # first position with a b strictly behind
    assert L.dpos(L.F(b), "abbb") == 3
    assert L.dpos(L.P(b), "aaaa") is None


def test_parameters_round_trip():
    phi = L.And(L.F(L.And(a, L.P(b))), L.Not(b))
    for w in WORDS:
        p = L.extract_params(phi, w)
        assert L.conforms(phi, w, p)


def test_limits():
    deep = L.F(L.F(L.F(L.F(a))))
    with pytest.raises(LimitExceeded):
        L.trans_full(deep, AB)
    with pytest.raises(LimitExceeded):
        L.trans_full(L.F(a), Alphabet("abcd"))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 8))
def test_translation(seed, size):
    phi = gen_formula("tlfp", size, AB, seed, max_modals=2)
    f = L.trans_full(phi, AB)
    assert [T.member(f, w) for w in WORDS] == [L.member(phi, w) for w in WORDS]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 8))
def test_sat_strategies_agree(seed, size):
    phi = gen_formula("tlfp", size, AB, seed, max_modals=2)
    exact = L.sat(phi, AB)
    bounded = L.sat(phi, AB, strategy="bounded-model", word_bound=6)
    assert isinstance(exact, L.Witness) == isinstance(bounded, L.Witness)
    if isinstance(exact, L.Witness):
        assert L.member(phi, exact.word)


def test_example_file():
    al, phi = L.load((DATA / "tlfp_example.sexp").read_text())
    assert L.load(L.dump(phi, al)) == (al, phi)
    assert L.sat(phi, al) == L.Witness("aab", "enumerate")
