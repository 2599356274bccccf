"""Deterministic until/since logic over words, with sentences pinned to the start, end or just past the end."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import po2dfa as pd
from . import uitlpm as U
from .nodes import cached_hash, dag_size, tree_size
from .sexpr import Alphabet, Atom as SAtom, ParseError, UlError, atom_text, check_letter, letter_set, letters_sexpr, print_sexpr, read_file_forms

ANCHORS = ("start", "end", "postend")


def _node(cls):
    return cached_hash(dataclass(frozen=True, eq=False)(cls))


@_node
class Top:
    pass


@_node
class Atom:
    a: str


@_node
class Until:
    """Next b to the right, with every letter strictly between in the set."""

    A: frozenset
    b: str
    f: object


@_node
class Since:
    A: frozenset
    b: str
    f: object


@_node
class Or:
    l: object
    r: object


@_node
class And:
    l: object
    r: object


@_node
class Not:
    f: object


@_node
class Anchored:
    """Sentence: the body evaluated at a fixed position, independent of where it is asked."""

    anchor: str
    f: object


TOP = Top()
BOT = Not(TOP)


def children(n) -> tuple:
    if isinstance(n, (Or, And)):
        return (n.l, n.r)
    if isinstance(n, (Until, Since, Not, Anchored)):
        return (n.f,)
    return ()


def replace_children(n, kids):
    t = type(n)
    if t in (Or, And):
        return t(*kids)
    if t in (Until, Since):
        return t(n.A, n.b, kids[0])
    if t is Not:
        return Not(kids[0])
    if t is Anchored:
        return Anchored(n.anchor, kids[0])
    return n


def size(f) -> int:
    return tree_size(f, children)


def node_count(f) -> int:
    return dag_size(f, children)


def mk_not(f):
    return f.f if isinstance(f, Not) else Not(f)


def mk_or(*fs):
    out = None
    for f in fs:
        if isinstance(f, Top):
            return TOP
        if f == BOT:
            continue
        out = f if out is None else Or(out, f)
    return BOT if out is None else out


def mk_and(*fs):
    out = None
    for f in fs:
        if f == BOT:
            return BOT
        if isinstance(f, Top):
            continue
        out = f if out is None else And(out, f)
    return TOP if out is None else out


def anchor_position(anchor: str, n: int) -> int:
    if anchor not in ANCHORS:
        raise UlError(f"unknown anchor {anchor}")
    return {"start": 1, "end": n, "postend": n + 1}[anchor]


# ---------------------------------------------------------------- semantics


def evaluate(f, w: str, i: int, memo: Optional[dict] = None) -> bool:
    """Truth at position i, 1 <= i <= #w+1 (the last one being just past the end)."""
    if not 1 <= i <= len(w) + 1:
        raise UlError(f"position {i} out of range")
    return _ev(f, w, i, {} if memo is None else memo)


def member(f, w: str, anchor: str = "start") -> bool:
    """Membership of a non-empty word; a bare body is read at ``anchor``."""
    if not w:
        return False
    if isinstance(f, Anchored):
        anchor, f = f.anchor, f.f
    return _ev(f, w, anchor_position(anchor, len(w)), {})


def _ev(f, w, i, memo):
    key = (f, i)
    got = memo.get(key)
    if got is not None:
        return got
    t = type(f)
    n = len(w)
    if t is Top:
        r = True
    elif t is Atom:
        r = i <= n and w[i - 1] == f.a
    elif t is Or:
        r = _ev(f.l, w, i, memo) or _ev(f.r, w, i, memo)
    elif t is And:
        r = _ev(f.l, w, i, memo) and _ev(f.r, w, i, memo)
    elif t is Not:
        r = not _ev(f.f, w, i, memo)
    elif t is Anchored:
        r = _ev(f.f, w, anchor_position(f.anchor, n), memo)
    elif t is Until:
        j = w.find(f.b, i)
        r = j >= 0 and all(c in f.A for c in w[i:j]) and _ev(f.f, w, j + 1, memo)
    else:
        j = w.rfind(f.b, 0, i - 1)
        r = j >= 0 and all(c in f.A for c in w[j + 1:i - 1]) and _ev(f.f, w, j + 1, memo)
    memo[key] = r
    return r


# ---------------------------------------------------------------- from automata


def from_po2dfa(m: pd.Po2Dfa):
    """Equivalent sentence anchored at the start; one shared subformula per state."""
    pd.check_valid(m)
    letters = m.alphabet.letters
    sigma = frozenset(letters)
    kinds = m.kinds
    forms: dict = {}

    def moves(q):
        return [(b, m.delta[(q, b)]) for b in letters if (q, b) in m.delta]

    def loop_set(q):
        return frozenset(b for b in letters if (q, b) not in m.delta)

    def exit_via(q, marker):
        # what the run does after reaching the marker while in q
        tgt = m.delta.get((q, marker), q)
        k = kinds[tgt]
        if k == pd.ACC:
            return TOP
        if k == pd.REJ:
            return BOT
        if marker == pd.RIGHT_END:
            return Anchored("postend", form(tgt))
        return Anchored("start", weak(tgt))

    def form(q):
        """Holds at the position whose letter sent the run into q."""
        got = forms.get(q)
        if got is not None:
            return got
        k = kinds[q]
        if k == pd.ACC:
            r = TOP
        elif k == pd.REJ:
            r = BOT
        else:
            op = Until if k == pd.L else Since
            A = loop_set(q)
            mv = moves(q)
            hit = mk_or(*(op(sigma, b, TOP) for b, _ in mv))
            r = mk_or(*(op(A, b, form(q2)) for b, q2 in mv),
                      mk_and(mk_not(hit), exit_via(q, pd.RIGHT_END if k == pd.L else pd.LEFT_END)))
        forms[q] = r
        return r

    def weak(q):
        """Holds at position 1 when the run is in q with the head still on position 1."""
        key = ("weak", q)
        got = forms.get(key)
        if got is not None:
            return got
        k = kinds[q]
        if k in (pd.ACC, pd.REJ):
            r = form(q)
        else:
            mv = moves(q)
            A = loop_set(q)
            stay = form(q) if k == pd.L else exit_via(q, pd.LEFT_END)
            r = mk_or(*(mk_and(Atom(b), form(q2)) for b, q2 in mv),
                      mk_and(mk_or(*(Atom(a) for a in letters if a in A)), stay))
        forms[key] = r
        return r

    return Anchored("start", weak(m.init))


# ---------------------------------------------------------------- to interval logic


def _btrans(f, al, memo):
    """Interval formula true on [i,i] iff f holds at i."""
    return _trans(f, al, memo, "b")


def _trans(f, al, memo, side):
    key = (f, side)
    got = memo.get(key)
    if got is not None:
        return got
    t = type(f)
    here = U.BP if side == "b" else U.EPt
    if t is Top:
        r = U.TOP
    elif t is Atom:
        r = U.BP(U.First(f.a, U.Pt(), U.TOP)) if side == "b" else U.EPt(U.Last(f.a, U.TOP, U.Pt()))
    elif t is Or:
        r = U.mk_or(_trans(f.l, al, memo, side), _trans(f.r, al, memo, side))
    elif t is And:
        r = U.mk_and(_trans(f.l, al, memo, side), _trans(f.r, al, memo, side))
    elif t is Not:
        r = U.mk_not(_trans(f.f, al, memo, side))
    elif t is Until:
        inner = U.FirstP(f.b, U.ceiling(f.A, "co", al), _trans(f.f, al, memo, "e"))
        r = here(U.ExtendR(U.ShrinkL(inner)))
    elif t is Since:
        inner = U.LastM(f.b, U.ceiling(f.A, "oc", al), _trans(f.f, al, memo, "b"))
        r = here(U.ExtendL(U.ShrinkR(inner)))
    else:
        raise UlError("anchored sentences must be pulled out before translation")
    memo[key] = r
    return r


def _at_postend(f):
    """Formula at the last position equivalent to f one position further right."""
    t = type(f)
    if t is Top:
        return TOP
    if t in (Atom, Until):
        return BOT
    if t is Or:
        return mk_or(_at_postend(f.l), _at_postend(f.r))
    if t is And:
        return mk_and(_at_postend(f.l), _at_postend(f.r))
    if t is Not:
        return mk_not(_at_postend(f.f))
    if t is Since:
        rest = f.A - {f.b}
        step = mk_and(mk_or(*(Atom(a) for a in sorted(rest))), f) if rest else BOT
        return mk_or(mk_and(Atom(f.b), f.f), step)
    raise UlError("anchored sentences must be pulled out first")


def _substitute(f, g, val, memo):
    if f == g:
        return val
    got = memo.get(f)
    if got is not None:
        return got
    kids = children(f)
    if not kids:
        r = f
    else:
        new = [_substitute(c, g, val, memo) for c in kids]
        t = type(f)
        if t is Or:
            r = mk_or(*new)
        elif t is And:
            r = mk_and(*new)
        elif t is Not:
            r = mk_not(new[0])
        else:
            r = replace_children(f, new)
    memo[f] = r
    return r


def _nested_sentence(f):
    """Some anchored sentence occurring below f, innermost first; None if there is none."""
    seen = set()
    found = None

    def go(n):
        nonlocal found
        if found is not None or n in seen:
            return
        seen.add(n)
        for c in children(n):
            go(c)
        if found is None and isinstance(n, Anchored):
            found = n

    for c in children(f):
        go(c)
    return found


def to_uitlpm(f, alphabet: Alphabet, anchor: str = "start"):
    """Interval formula on the whole word.  Nested sentences are split out case by case."""
    body = f
    if not isinstance(f, Anchored):
        body = Anchored(anchor, f)
    return _sentence(body, alphabet, {}, {})


def _sentence(s, al, smemo, tmemo):
    got = smemo.get(s)
    if got is not None:
        return got
    g = _nested_sentence(s)
    if g is not None:
        gt = _sentence(g, al, smemo, tmemo)
        pos = _sentence(_substitute(s, g, TOP, {}), al, smemo, tmemo)
        neg = _sentence(_substitute(s, g, BOT, {}), al, smemo, tmemo)
        r = U.mk_or(U.mk_and(gt, pos), U.mk_and(U.mk_not(gt), neg))
    elif isinstance(s, Anchored):
        if s.anchor == "start":
            r = _trans(s.f, al, tmemo, "b")
        elif s.anchor == "end":
            r = _trans(s.f, al, tmemo, "e")
        else:
            r = _trans(_at_postend(s.f), al, tmemo, "e")
    else:
        r = U.TOP if isinstance(s, Top) else U.BOT
    smemo[s] = r
    return r


# ---------------------------------------------------------------- concrete syntax


def _body(e, alphabet):
    if isinstance(e, SAtom) or not e:
        raise ParseError("expected a duds form")
    head = atom_text(e[0])
    args = e[1:]
    if head == "top" and not args:
        return TOP
    if head == "atom" and len(args) == 1:
        return Atom(check_letter(atom_text(args[0]), alphabet))
    if head in ("u", "s") and len(args) == 3:
        A = letter_set(args[0], alphabet)
        b = check_letter(atom_text(args[1]), alphabet)
        return (Until if head == "u" else Since)(A, b, _body(args[2], alphabet))
    if head == "not" and len(args) == 1:
        return Not(_body(args[0], alphabet))
    if head in ("or", "and") and len(args) >= 2:
        parts = [_body(x, alphabet) for x in args]
        out = parts[0]
        for p in parts[1:]:
            out = (Or if head == "or" else And)(out, p)
        return out
    if head == "at" and len(args) == 2:
        anchor = atom_text(args[0])
        if anchor not in ANCHORS:
            raise ParseError(f"unknown anchor {anchor}")
        return Anchored(anchor, _body(args[1], alphabet))
    raise ParseError(f"malformed duds form ({head} ...)")


def from_sexpr(e, alphabet: Alphabet):
    """Parse ``(duds (anchor X) body)`` into an anchored sentence."""
    if isinstance(e, SAtom) or len(e) != 3 or atom_text(e[0]) != "duds":
        raise ParseError("expected (duds (anchor ...) <body>)")
    spec = e[1]
    if isinstance(spec, SAtom) or len(spec) != 2 or atom_text(spec[0]) != "anchor":
        raise ParseError("expected (anchor start|end|postend)")
    anchor = atom_text(spec[1])
    if anchor not in ANCHORS:
        raise ParseError(f"unknown anchor {anchor}")
    return Anchored(anchor, _body(e[2], alphabet))


def body_to_sexpr(f, alphabet: Alphabet):
    memo: dict = {}

    def go(n):
        got = memo.get(n)
        if got is not None:
            return got
        t = type(n)
        if t is Top:
            r = (SAtom("top"),)
        elif t is Atom:
            r = (SAtom("atom"), SAtom(n.a))
        elif t in (Until, Since):
            r = (SAtom("u" if t is Until else "s"), letters_sexpr(n.A, alphabet), SAtom(n.b), go(n.f))
        elif t is Not:
            r = (SAtom("not"), go(n.f))
        elif t is Anchored:
            r = (SAtom("at"), SAtom(n.anchor), go(n.f))
        else:
            r = (SAtom(t.__name__.lower()), go(n.l), go(n.r))
        memo[n] = r
        return r

    return go(f)


def to_sexpr(f, alphabet: Alphabet):
    if not isinstance(f, Anchored):
        f = Anchored("start", f)
    return (SAtom("duds"), (SAtom("anchor"), SAtom(f.anchor)), body_to_sexpr(f.f, alphabet))


def load(text: str):
    alphabet, body = read_file_forms(text)
    return alphabet, from_sexpr(body, alphabet)


def dump(f, alphabet: Alphabet) -> str:
    return print_sexpr(alphabet.to_sexpr()) + "\n" + print_sexpr(to_sexpr(f, alphabet)) + "\n"
