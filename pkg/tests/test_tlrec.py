import pytest
from hypothesis import given, settings, strategies as st

from conftest import DATA
from ulogic import tlfp as L
from ulogic import tlrec as R
from ulogic.difftest import gen_formula
from ulogic.sexpr import Alphabet, UlError, enumerate_words

ABC = Alphabet("abc")
WORDS = [w for w in enumerate_words(ABC, 4) if w]


def test_worked_example():
    al, phi = R.load((DATA / "tlrec_example.sexp").read_text())
    w = "ccaccbccabbcacc"
    assert R.member(phi, w) and L.member(R.to_tlfp(phi, al), w)
    assert R.rlevel(phi) == 2
    assert R.load(R.dump(phi, al)) == (al, phi)


def test_from_tlfp_shape_and_size():
    f = L.F(L.Atom("a"))
    g = R.from_tlfp(f)
    assert g == R.Ref(R.XR(R.Atom("a"), R.TOP))
    assert R.size(g) == L.size(f) == 2


def test_layers():
    R.check_layers(R.Ref(R.XR(R.Atom("a"), R.TOP)))
    with pytest.raises(UlError):
        R.check_layers(R.Not(R.TOP))
    with pytest.raises(UlError):
        R.check_layers(R.Ref(R.Atom("a")))


def test_convexity_helper():
    assert R.is_convex(0b0111000) and R.is_convex(0) and not R.is_convex(0b101)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 10))
def test_to_tlfp_pointwise(seed, size):
    f = gen_formula("tlrec", size, ABC, seed)
    g = R.to_tlfp(f, ABC)
    assert all(R.sat_mask(f, w) == L.sat_mask(g, w) for w in WORDS)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 12))
def test_from_tlfp_pointwise(seed, size):
    f = gen_formula("tlfp", size, ABC, seed, max_modals=6)
    g = R.from_tlfp(f)
    assert R.size(g) <= L.size(f)
    assert all(R.sat_mask(g, w) == L.sat_mask(f, w) for w in WORDS)
