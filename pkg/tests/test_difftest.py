import pytest

from ulogic import difftest as dt
from ulogic import tlxy as T
from ulogic.sexpr import Alphabet, BudgetExceeded

AB = Alphabet("ab")


@pytest.mark.parametrize("logic", dt.LOGICS)
def test_generators_are_seeded(logic):
    assert dt.gen_formula(logic, 9, AB, 7) == dt.gen_formula(logic, 9, AB, 7)
    leaf = dt.gen_formula(logic, 1, AB, 3)
    if logic == "tlxy":
        assert T.size(leaf) == 1


def test_equiv_bounded():
    rep = dt.equiv_bounded(lambda w: "a" in w, lambda w: "a" in w, AB, 4)
    assert rep.equivalent and rep.checked == 31
    rep = dt.equiv_bounded(lambda w: "a" in w, lambda w: w.startswith("a"), AB, 4)
    assert rep.counterexample.word == "ba"
    with pytest.raises(BudgetExceeded):
        dt.equiv_bounded(bool, bool, AB, 10, budget=100)


def test_shrinking():
    assert dt.shrink_word("babba", lambda w: w.count("b") >= 2) == "bb"
    f = T.And(T.Or(T.Atom("a"), T.X("b", T.TOP)), T.Not(T.Atom("b")))
    small = dt.shrink_formula(f, T.children, lambda g: isinstance(g, T.X) or any(isinstance(c, T.X) for c in T.children(g)))
    assert small == T.X("b", T.TOP)
    found = dt.smallest_failure("tlxy", AB, lambda g: isinstance(g, T.Not))
    assert isinstance(found, T.Not)
