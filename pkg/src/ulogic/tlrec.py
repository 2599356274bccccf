"""Recursive rankers: next/previous-position modalities parametrised by formulas."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import tlfp as L
from .nodes import cached_hash, dag_size
from .sexpr import Alphabet, Atom as SAtom, ParseError, UlError, atom_text, check_letter, print_sexpr, read_file_forms


def _node(cls):
    return cached_hash(dataclass(frozen=True, eq=False)(cls))


# outer layer: boolean combinations of letters and rankers


@_node
class Atom:
    a: str


@_node
class Ref:
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


# ranker layer


@_node
class Top:
    pass


@_node
class SP:
    f: object


@_node
class EP:
    f: object


@_node
class XR:
    """Jump to the next position where ``g`` holds, then continue with ``f``."""

    g: object
    f: object


@_node
class YR:
    g: object
    f: object


TOP = Top()
OUTER = (Atom, Ref, Or, And, Not)
RANKER = (Top, SP, EP, XR, YR)


def children(n) -> tuple:
    if isinstance(n, (Or, And)):
        return (n.l, n.r)
    if isinstance(n, (XR, YR)):
        return (n.g, n.f)
    if isinstance(n, (Ref, Not, SP, EP)):
        return (n.f,)
    return ()


def check_layers(n) -> None:
    """Raise unless outer and ranker layers nest as the grammar requires."""
    t = type(n)
    if t in (Or, And):
        if not isinstance(n.l, OUTER) or not isinstance(n.r, OUTER):
            raise UlError("boolean connectives combine outer-layer formulas")
    elif t is Not:
        if not isinstance(n.f, OUTER):
            raise UlError("negation applies to outer-layer formulas")
    elif t is Ref:
        if not isinstance(n.f, RANKER):
            raise UlError("ref wraps a ranker")
    elif t in (SP, EP):
        if not isinstance(n.f, RANKER):
            raise UlError("SP/EP continue with a ranker")
    elif t in (XR, YR):
        if not isinstance(n.g, OUTER) or not isinstance(n.f, RANKER):
            raise UlError("X/Y take an outer-layer parameter and a ranker continuation")
    for c in children(n):
        check_layers(c)


def size(n) -> int:
    """Symbol count: the layer injection and a ranker's closing top are not written symbols."""
    memo: dict = {}

    def go(x, closing):
        key = (x, closing)
        if key in memo:
            return memo[key]
        t = type(x)
        if t is Top:
            r = 0 if closing else 1
        elif t is Ref:
            r = go(x.f, False)
        elif t in (XR, YR):
            r = 1 + go(x.g, False) + go(x.f, True)
        elif t in (SP, EP):
            r = 1 + go(x.f, True)
        else:
            r = 1 + sum(go(c, False) for c in children(x))
        memo[key] = r
        return r

    return go(n, False)


def node_count(n) -> int:
    return dag_size(n, children)


def rlevel(n) -> int:
    """Largest recursion level of a subformula (parameters sit one level deeper)."""
    memo: dict = {}

    def go(x):
        if x in memo:
            return memo[x]
        if isinstance(x, (XR, YR)):
            r = max(1 + go(x.g), go(x.f))
        else:
            r = max((go(c) for c in children(x)), default=0)
        memo[x] = r
        return r

    return go(n)


# ---------------------------------------------------------------- semantics


def sat_mask(n, w: str, memo: Optional[dict] = None) -> int:
    if not w:
        raise UlError("formulas are evaluated on non-empty words")
    return _sat(n, w, len(w), {} if memo is None else memo)


def _sat(x, w, n, memo):
    got = memo.get(x)
    if got is not None:
        return got
    full = (1 << n) - 1
    t = type(x)
    if t is Top:
        r = full
    elif t is Atom:
        r = 0
        for i, c in enumerate(w):
            if c == x.a:
                r |= 1 << i
    elif t is Ref:
        r = _sat(x.f, w, n, memo)
    elif t is Or:
        r = _sat(x.l, w, n, memo) | _sat(x.r, w, n, memo)
    elif t is And:
        r = _sat(x.l, w, n, memo) & _sat(x.r, w, n, memo)
    elif t is Not:
        r = full & ~_sat(x.f, w, n, memo)
    elif t is SP:
        r = full if _sat(x.f, w, n, memo) & 1 else 0
    elif t is EP:
        r = full if _sat(x.f, w, n, memo) >> (n - 1) & 1 else 0
    else:
        g = _sat(x.g, w, n, memo)
        f = _sat(x.f, w, n, memo)
        r = 0
        if t is XR:
            nxt = -1
            for i in range(n - 1, -1, -1):
                if nxt >= 0 and f >> nxt & 1:
                    r |= 1 << i
                if g >> i & 1:
                    nxt = i
        else:
            prv = -1
            for i in range(n):
                if prv >= 0 and f >> prv & 1:
                    r |= 1 << i
                if g >> i & 1:
                    prv = i
    memo[x] = r
    return r


def evaluate(n, w: str, i: int) -> bool:
    if not w or not 1 <= i <= len(w):
        raise UlError(f"position {i} outside the word")
    return bool(sat_mask(n, w) >> (i - 1) & 1)


def member(n, w: str) -> bool:
    return bool(w) and bool(sat_mask(n, w) & 1)


def is_convex(mask: int) -> bool:
    if not mask:
        return True
    low = mask & -mask
    return (mask + low) & mask == 0


# ---------------------------------------------------------------- translations


def from_tlfp(f):
    """F and P become next/previous jumps closed by top."""
    memo: dict = {}

    def go(x):
        if x in memo:
            return memo[x]
        t = type(x)
        if t is L.Atom:
            r = Atom(x.a)
        elif t is L.F:
            r = Ref(XR(go(x.f), TOP))
        elif t is L.P:
            r = Ref(YR(go(x.f), TOP))
        elif t is L.Not:
            r = Not(go(x.f))
        elif t is L.Or:
            r = Or(go(x.l), go(x.r))
        else:
            r = And(go(x.l), go(x.r))
        memo[x] = r
        return r

    return go(f)


_T, _B = "top", "bot"  # constant markers while building


def _not(x):
    return _B if x == _T else _T if x == _B else x.f if isinstance(x, L.Not) else L.Not(x)


def _and(*xs):
    out = _T
    for x in xs:
        if x == _B:
            return _B
        if x == _T:
            continue
        out = x if out == _T else L.And(out, x)
    return out


def _or(*xs):
    out = _B
    for x in xs:
        if x == _T:
            return _T
        if x == _B:
            continue
        out = x if out == _B else L.Or(out, x)
    return out


def to_tlfp(n, alphabet: Alphabet):
    """Pointwise-equivalent future/past formula."""
    letter = L.Atom(alphabet.letters[0])
    top = L.Or(letter, L.Not(letter))

    def fut(x):
        return _B if x == _B else L.F(top if x == _T else x)

    def past(x):
        return _B if x == _B else L.P(top if x == _T else x)

    memo: dict = {}

    def go(x):
        if x in memo:
            return memo[x]
        t = type(x)
        if t is Top:
            r = _T
        elif t is Atom:
            r = L.Atom(x.a)
        elif t is Ref:
            r = go(x.f)
        elif t is Not:
            r = _not(go(x.f))
        elif t is Or:
            r = _or(go(x.l), go(x.r))
        elif t is And:
            r = _and(go(x.l), go(x.r))
        elif t in (XR, YR):
            g, f = go(x.g), go(x.f)
            step = fut if t is XR else past
            r = _and(step(_and(g, f)), _not(step(_and(g, _not(f), step(f)))))
        else:
            # truth of the continuation at the first (last) position, seen from anywhere
            edge = _not(past(_T)) if t is SP else _not(fut(_T))
            here = _and(edge, go(x.f))
            r = _or(here, past(here), fut(here))
        memo[x] = r
        return r

    out = go(n)
    return top if out == _T else L.Not(top) if out == _B else out


# ---------------------------------------------------------------- concrete syntax


def _outer(e, alphabet):
    if isinstance(e, SAtom) or not e:
        raise ParseError("expected a tlrec formula")
    head = atom_text(e[0])
    args = e[1:]
    if head == "atom" and len(args) == 1:
        return Atom(check_letter(atom_text(args[0]), alphabet))
    if head == "ref" and len(args) == 1:
        return Ref(_ranker(args[0], alphabet))
    if head == "not" and len(args) == 1:
        return Not(_outer(args[0], alphabet))
    if head in ("or", "and") and len(args) >= 2:
        parts = [_outer(x, alphabet) for x in args]
        out = parts[0]
        for q in parts[1:]:
            out = (Or if head == "or" else And)(out, q)
        return out
    raise ParseError(f"malformed tlrec formula ({head} ...)")


def _ranker(e, alphabet):
    if isinstance(e, SAtom) or not e:
        raise ParseError("expected a tlrec ranker")
    head = atom_text(e[0])
    args = e[1:]
    if head == "top" and not args:
        return TOP
    if head in ("sp", "ep") and len(args) == 1:
        return (SP if head == "sp" else EP)(_ranker(args[0], alphabet))
    if head in ("xr", "yr") and len(args) == 2:
        return (XR if head == "xr" else YR)(_outer(args[0], alphabet), _ranker(args[1], alphabet))
    raise ParseError(f"malformed tlrec ranker ({head} ...)")


def from_sexpr(e, alphabet: Alphabet):
    return _outer(e, alphabet)


def to_sexpr(n):
    t = type(n)
    if t is Top:
        return (SAtom("top"),)
    if t is Atom:
        return (SAtom("atom"), SAtom(n.a))
    if t in (XR, YR):
        return (SAtom(t.__name__.lower()), to_sexpr(n.g), to_sexpr(n.f))
    if t in (Or, And):
        return (SAtom(t.__name__.lower()), to_sexpr(n.l), to_sexpr(n.r))
    return (SAtom(t.__name__.lower()), to_sexpr(n.f))


def load(text: str):
    alphabet, body = read_file_forms(text)
    if isinstance(body, SAtom) or atom_text(body[0]) != "tlrec" or len(body) != 2:
        raise ParseError("expected (tlrec <formula>)")
    return alphabet, from_sexpr(body[1], alphabet)


def dump(n, alphabet: Alphabet) -> str:
    return print_sexpr(alphabet.to_sexpr()) + "\n" + print_sexpr((SAtom("tlrec"), to_sexpr(n))) + "\n"


def show(n) -> str:
    t = type(n)
    if t is Top:
        return "T"
    if t is Atom:
        return n.a
    if t is Ref:
        return show(n.f)
    if t is Not:
        return f"!{show(n.f)}"
    if t in (Or, And):
        return f"({show(n.l)}{' | ' if t is Or else ' & '}{show(n.r)})"
    if t in (SP, EP):
        return f"{t.__name__} {show(n.f)}"
    return f"{'X' if t is XR else 'Y'}[{show(n.g)}] {show(n.f)}"
