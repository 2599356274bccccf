import pytest
from hypothesis import given, strategies as st

from ulogic.sexpr import (
    Alphabet,
    Atom,
    EmptyInput,
    IllegalToken,
    LetterNotInAlphabet,
    UlError,
    UnbalancedParens,
    Word,
    enumerate_words,
    parse_all,
    parse_sexpr,
    parse_word,
    print_sexpr,
    read_file_forms,
    word_count,
)

atoms = st.text(alphabet="abcxyz019-_", min_size=1, max_size=4).map(Atom)
sexprs = st.recursive(atoms, lambda kids: st.lists(kids, max_size=4).map(tuple), max_leaves=20)


@given(sexprs)
def test_print_parse_round_trip(e):
    assert parse_sexpr(print_sexpr(e)) == e


def test_comments_and_whitespace():
    assert parse_all("; hi\n(a (b c)) ; tail\n d") == [(Atom("a"), (Atom("b"), Atom("c"))), Atom("d")]


@pytest.mark.parametrize(
    "text, exc, where",
    [("(a (b)", UnbalancedParens, (1, 1)), ("(a\n (b", UnbalancedParens, (2, 2)), ("a)", UnbalancedParens, (1, 2)), ("", EmptyInput, (1, 1)), ('\n  "x"', IllegalToken, (2, 3))],
)
def test_errors_carry_locations(text, exc, where):
    with pytest.raises(exc) as info:
        parse_sexpr(text)
    assert (info.value.line, info.value.col) == where


def test_alphabet_rules():
    al = Alphabet("abc")
    assert len(al) == 3 and al.index("c") == 2 and al.extended[-2:] == (">", "<")
    for bad in (["a", "a"], ["ab"], [">"], []):
        with pytest.raises(UlError):
            Alphabet(bad)


def test_words():
    al = Alphabet("ab")
    ws = list(enumerate_words(al, 3))
    assert len(ws) == word_count(al, 3) == 15 and ws[0] == "" and ws[1:3] == ["a", "b"]
    w = Word("ab")
    assert (w.at(0), w.at(1), w.at(3)) == (">", "a", "<")
    with pytest.raises(LetterNotInAlphabet) as info:
        parse_word("aä", al)
    assert info.value.position == 2


def test_file_header():
    al, body = read_file_forms("(alphabet a b)\n(tlxy (top))")
    assert al == Alphabet("ab") and body == (Atom("tlxy"), (Atom("top"),))
    with pytest.raises(UlError):
        read_file_forms("(alphabet a)")
