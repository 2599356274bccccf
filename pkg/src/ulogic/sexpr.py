"""Shared alphabet/word model and the s-expression reader used by every file format."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence, Union

LEFT_END = ">"
RIGHT_END = "<"
ENDMARKERS = (LEFT_END, RIGHT_END)
_FORBIDDEN = set("()<> \t\n\r;")


class UlError(Exception):
    """Base class for all library errors."""


class ParseError(UlError):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        self.line = line
        self.col = col
        where = f" at {line}:{col}" if line else ""
        super().__init__(f"{message}{where}")


class UnbalancedParens(ParseError):
    pass


class EmptyInput(ParseError):
    pass


class IllegalToken(ParseError):
    pass


class LetterNotInAlphabet(UlError):
    def __init__(self, char: str, position: int):
        self.char = char
        self.position = position
        super().__init__(f"LetterNotInAlphabet({char!r},{position})")


class BudgetExceeded(UlError):
    pass


class LimitExceeded(UlError):
    pass


@dataclass(frozen=True)
class Atom:
    text: str

    def __str__(self) -> str:
        return self.text


SExpr = Union[Atom, tuple]


def _tokens(text: str):
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == ";":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield ch, line, col
            i += 1
            col += 1
            continue
        start, scol = i, col
        while i < n and text[i] not in " \t\r\n();":
            i += 1
            col += 1
        tok = text[start:i]
        if tok.startswith('"'):
            raise IllegalToken(f"illegal token {tok!r}", line, scol)
        yield tok, line, scol


def parse_all(text: str) -> list:
    """Parse every top-level s-expression in ``text``."""
    stack: list[list] = []
    out: list = []
    opened: list[tuple[int, int]] = []
    for tok, line, col in _tokens(text):
        if tok == "(":
            stack.append([])
            opened.append((line, col))
        elif tok == ")":
            if not stack:
                raise UnbalancedParens("unexpected ')'", line, col)
            done = tuple(stack.pop())
            opened.pop()
            (stack[-1] if stack else out).append(done)
        else:
            (stack[-1] if stack else out).append(Atom(tok))
    if stack:
        line, col = opened[-1]
        raise UnbalancedParens("unclosed '('", line, col)
    return out


def parse_sexpr(text: str) -> SExpr:
    items = parse_all(text)
    if not items:
        raise EmptyInput("empty input", 1, 1)
    return items[0]


def print_sexpr(e: SExpr) -> str:
    if isinstance(e, Atom):
        return e.text
    return "(" + " ".join(print_sexpr(x) for x in e) + ")"


def atom_text(e: SExpr, what: str = "atom") -> str:
    if not isinstance(e, Atom):
        raise ParseError(f"expected {what}, got list {print_sexpr(e)}")
    return e.text


class Alphabet:
    """Ordered, duplicate-free set of single-character letters."""

    __slots__ = ("letters", "_index")

    def __init__(self, letters: Sequence[str]):
        letters = tuple(letters)
        if not letters:
            raise UlError("alphabet must be non-empty")
        for a in letters:
            if len(a) != 1 or a in _FORBIDDEN or not a.isprintable():
                raise IllegalToken(f"illegal letter {a!r}")
        if len(set(letters)) != len(letters):
            raise UlError("duplicate letter in alphabet")
        self.letters = letters
        self._index = {a: i for i, a in enumerate(letters)}

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __contains__(self, a):
        return a in self._index

    def index(self, a: str) -> int:
        return self._index[a]

    def __eq__(self, other):
        return isinstance(other, Alphabet) and other.letters == self.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({''.join(self.letters)!r})"

    @property
    def extended(self) -> tuple:
        return self.letters + ENDMARKERS

    def to_sexpr(self) -> tuple:
        return (Atom("alphabet"),) + tuple(Atom(a) for a in self.letters)


class Word(str):
    """A word is a plain string whose letters come from an alphabet; positions are 1-based."""

    def at(self, i: int) -> str:
        """Letter of the extended word: position 0 is the left marker, #w+1 the right marker."""
        if i == 0:
            return LEFT_END
        if i == len(self) + 1:
            return RIGHT_END
        return self[i - 1]


def parse_word(text: str, alphabet: Alphabet) -> Word:
    for k, ch in enumerate(text, start=1):
        if ch not in alphabet:
            raise LetterNotInAlphabet(ch, k)
    return Word(text)


def enumerate_words(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    for k in range(max_len + 1):
        for tup in itertools.product(alphabet.letters, repeat=k):
            yield Word("".join(tup))


def word_count(alphabet: Alphabet, max_len: int) -> int:
    return sum(len(alphabet) ** k for k in range(max_len + 1))


def parse_alphabet(e: SExpr) -> Alphabet:
    if isinstance(e, Atom) or not e or atom_text(e[0]) != "alphabet":
        raise ParseError("expected (alphabet ...) header")
    return Alphabet([atom_text(x, "letter") for x in e[1:]])


def read_file_forms(text: str) -> tuple[Alphabet, SExpr]:
    """Split a file into its alphabet header and its single body form."""
    forms = parse_all(text)
    if not forms:
        raise EmptyInput("empty input", 1, 1)
    if len(forms) != 2:
        raise ParseError(f"expected header and one body form, found {len(forms)} forms")
    return parse_alphabet(forms[0]), forms[1]


def letter_set(e: SExpr, alphabet: Alphabet, allow_markers: bool = False) -> frozenset:
    if isinstance(e, Atom):
        raise ParseError("expected a parenthesized letter list")
    out = set()
    for x in e:
        a = atom_text(x, "letter")
        if a in alphabet or (allow_markers and a in ENDMARKERS):
            out.add(a)
        else:
            raise LetterNotInAlphabet(a, 0)
    return frozenset(out)


def letters_sexpr(letters, alphabet: Alphabet) -> tuple:
    order = alphabet.extended
    return tuple(Atom(a) for a in order if a in letters)


def check_letter(a: str, alphabet: Alphabet) -> str:
    if a not in alphabet:
        raise LetterNotInAlphabet(a, 0)
    return a
