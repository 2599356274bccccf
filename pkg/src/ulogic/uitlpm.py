"""Interval logic with unambiguous chops, including chops that reach past the interval."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import tlxy as T
from .nodes import cached_hash, dag_size, tree_size
from .sexpr import Alphabet, Atom as SAtom, ParseError, UlError, atom_text, check_letter, letter_set, print_sexpr, read_file_forms


def _node(cls):
    return cached_hash(dataclass(frozen=True, eq=False)(cls))


@_node
class Top:
    pass


@_node
class Atom:
    a: str


@_node
class Pt:
    pass


@_node
class Unit:
    pass


@_node
class BP:
    d: object


@_node
class EPt:
    d: object


@_node
class First:
    a: str
    l: object
    r: object


@_node
class Last:
    a: str
    l: object
    r: object


@_node
class FirstP:
    a: str
    l: object
    r: object


@_node
class LastM:
    a: str
    l: object
    r: object


@_node
class ShrinkL:
    d: object


@_node
class ShrinkR:
    d: object


@_node
class ExtendR:
    d: object


@_node
class ExtendL:
    d: object


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
    d: object


TOP = Top()
BOT = Not(TOP)
CHOPS = (First, Last, FirstP, LastM)
UNARY = (BP, EPt, ShrinkL, ShrinkR, ExtendR, ExtendL, Not)


def children(n) -> tuple:
    if isinstance(n, CHOPS) or isinstance(n, (Or, And)):
        return (n.l, n.r)
    if isinstance(n, UNARY):
        return (n.d,)
    return ()


def size(d) -> int:
    return tree_size(d, children)


def node_count(d) -> int:
    return dag_size(d, children)


def mk_not(d):
    return d.d if isinstance(d, Not) else Not(d)


def mk_or(*ds):
    out = None
    for d in ds:
        if isinstance(d, Top):
            return TOP
        if d == BOT:
            continue
        out = d if out is None else Or(out, d)
    return BOT if out is None else out


def mk_and(*ds):
    out = None
    for d in ds:
        if d == BOT:
            return BOT
        if isinstance(d, Top):
            continue
        out = d if out is None else And(out, d)
    return TOP if out is None else out


CEILINGS = ("oo", "oc", "co", "cc")


def ceiling(A, kind: str, alphabet: Alphabet):
    """Invariance of the letters strictly/non-strictly inside the interval (o = open end, c = closed end)."""
    if kind not in CEILINGS:
        raise UlError(f"unknown ceiling kind {kind}")
    hit = [First(b, TOP, TOP) for b in alphabet.letters if b not in A]
    if kind == "oo":
        bad = mk_or(*(ShrinkL(ShrinkR(h)) for h in hit))
        return mk_or(Pt(), Unit(), mk_not(bad))
    if kind == "oc":
        return mk_or(Pt(), mk_not(mk_or(*(ShrinkL(h) for h in hit))))
    if kind == "co":
        return mk_or(Pt(), mk_not(mk_or(*(ShrinkR(h) for h in hit))))
    return mk_not(mk_or(*hit))


# ---------------------------------------------------------------- semantics


def holds(d, w: str, i: int, j: int, memo: Optional[dict] = None) -> bool:
    if not w or not 1 <= i <= j <= len(w):
        raise UlError(f"interval [{i},{j}] is not an interval of the word")
    return _holds(d, w, i, j, {} if memo is None else memo)


def member(d, w: str) -> bool:
    return bool(w) and _holds(d, w, 1, len(w), {})


def _holds(d, w, i, j, memo):
    key = (d, i, j)
    got = memo.get(key)
    if got is not None:
        return got
    n = len(w)
    t = type(d)
    if t is Top:
        r = True
    elif t is Atom:
        r = w[i - 1] == d.a
    elif t is Pt:
        r = i == j
    elif t is Unit:
        r = j == i + 1
    elif t is BP:
        r = _holds(d.d, w, i, i, memo)
    elif t is EPt:
        r = _holds(d.d, w, j, j, memo)
    elif t is Or:
        r = _holds(d.l, w, i, j, memo) or _holds(d.r, w, i, j, memo)
    elif t is And:
        r = _holds(d.l, w, i, j, memo) and _holds(d.r, w, i, j, memo)
    elif t is Not:
        r = not _holds(d.d, w, i, j, memo)
    elif t is ShrinkL:
        r = i < j and _holds(d.d, w, i + 1, j, memo)
    elif t is ShrinkR:
        r = i < j and _holds(d.d, w, i, j - 1, memo)
    elif t is ExtendR:
        r = j < n and _holds(d.d, w, i, j + 1, memo)
    elif t is ExtendL:
        r = i > 1 and _holds(d.d, w, i - 1, j, memo)
    else:
        k = chop(d, w, i, j)
        if k is None:
            r = False
        else:
            (l1, r1), (l2, r2) = chop_intervals(d, i, j, k)
            r = _holds(d.l, w, l1, r1, memo) and _holds(d.r, w, l2, r2, memo)
    memo[key] = r
    return r


def chop(d, w: str, i: int, j: int) -> Optional[int]:
    """Chop position of a chop node on [i,j], or None."""
    t = type(d)
    if t is First:
        k = w.find(d.a, i - 1, j)
    elif t is Last:
        k = w.rfind(d.a, i - 1, j)
    elif t is FirstP:
        k = w.find(d.a, i - 1)
        if k >= 0 and k + 1 < j:
            k = -1
    else:
        k = w.rfind(d.a, 0, j)
        if k >= 0 and k + 1 > i:
            k = -1
    return k + 1 if k >= 0 else None


def chop_intervals(d, i, j, k):
    t = type(d)
    if t in (First, Last):
        return (i, k), (k, j)
    if t is FirstP:
        return (i, k), (j, k)
    return (k, i), (k, j)


def interval_of(root, path: tuple, w: str):
    """Evaluation interval of the node at ``path`` by a top-down walk (None when undefined)."""
    n = len(w)
    iv = (1, n) if w else None
    d = root
    for c in path:
        if iv is None:
            return None
        i, j = iv
        t = type(d)
        if t in CHOPS:
            k = chop(d, w, i, j)
            iv = None if k is None else chop_intervals(d, i, j, k)[c]
        elif t is BP:
            iv = (i, i)
        elif t is EPt:
            iv = (j, j)
        elif t is ShrinkL:
            iv = (i + 1, j) if i < j else None
        elif t is ShrinkR:
            iv = (i, j - 1) if i < j else None
        elif t is ExtendR:
            iv = (i, j + 1) if j < n else None
        elif t is ExtendL:
            iv = (i - 1, j) if i > 1 else None
        d = children(d)[c]
    return iv


# ---------------------------------------------------------------- translation to tlxy


def _graft(r, mod):
    return T.seq_compose(r, mod)


def child_rankers(d, L, R):
    """Left/right endpoint rankers of each child, given those of d."""
    t = type(d)
    if t is BP:
        return [(L, L)]
    if t is EPt:
        return [(R, R)]
    if t is First:
        m = _graft(L, T.WX(d.a, T.TOP))
        return [(L, m), (m, R)]
    if t is FirstP:
        m = _graft(R, T.WX(d.a, T.TOP))
        return [(L, m), (R, m)]
    if t is Last:
        m = _graft(R, T.WY(d.a, T.TOP))
        return [(L, m), (m, R)]
    if t is LastM:
        m = _graft(L, T.WY(d.a, T.TOP))
        return [(m, L), (m, R)]
    if t is ShrinkL:
        return [(_graft(L, T.X1(T.TOP)), R)]
    if t is ShrinkR:
        return [(L, _graft(R, T.Y1(T.TOP)))]
    if t is ExtendR:
        return [(L, _graft(R, T.X1(T.TOP)))]
    if t is ExtendL:
        return [(_graft(L, T.Y1(T.TOP)), R)]
    return [(L, R) for _ in children(d)]


ROOT_RANKERS = (T.SP(T.TOP), T.EP(T.TOP))


def intv_rankers(root, path: tuple):
    """(left, right) endpoint rankers of the node at ``path``."""
    L, R = ROOT_RANKERS
    d = root
    for c in path:
        L, R = child_rankers(d, L, R)[c]
        d = children(d)[c]
    return L, R


def lintv(root, path: tuple):
    return intv_rankers(root, path)[0]


def rintv(root, path: tuple):
    return intv_rankers(root, path)[1]


def to_tlxy(d, alphabet: Alphabet):
    memo: dict = {}
    return _trans(d, *ROOT_RANKERS, alphabet, memo)


def _trans(d, L, R, alphabet, memo):
    key = (d, L, R)
    got = memo.get(key)
    if got is not None:
        return got
    t = type(d)
    P = lambda r, rel: T.directionality(r, rel, alphabet)  # noqa: E731
    seq = T.seq_compose
    kids = [_trans(c, l, r, alphabet, memo) for c, (l, r) in zip(children(d), child_rankers(d, L, R))]
    if t is Top:
        out = T.TOP
    elif t is Atom:
        out = seq(L, T.Atom(d.a))
    elif t is Pt:
        out = seq(L, P(R, ">="))
    elif t is Unit:
        nxt = seq(L, T.X1(T.TOP))
        out = T.mk_and(seq(nxt, P(R, ">=")), seq(nxt, P(R, "<=")))
    elif t in (BP, EPt):
        out = kids[0]
    elif t is Or:
        out = T.mk_or(*kids)
    elif t is And:
        out = T.mk_and(*kids)
    elif t is Not:
        out = T.mk_not(kids[0])
    else:
        if t is First:
            guard = seq(seq(L, T.WX(d.a, T.TOP)), P(R, "<="))
        elif t is Last:
            guard = seq(seq(R, T.WY(d.a, T.TOP)), P(L, ">="))
        elif t is FirstP:
            guard = seq(seq(L, T.WX(d.a, T.TOP)), P(R, ">="))
        elif t is LastM:
            guard = seq(seq(R, T.WY(d.a, T.TOP)), P(L, "<="))
        elif t is ShrinkL:
            guard = seq(seq(L, T.X1(T.TOP)), P(R, "<="))
        elif t is ShrinkR:
            guard = seq(seq(R, T.Y1(T.TOP)), P(L, ">="))
        elif t is ExtendR:
            guard = seq(R, T.X1(T.TOP))
        else:
            guard = seq(L, T.Y1(T.TOP))
        out = T.mk_and(guard, *kids)
    memo[key] = out
    return out


# ---------------------------------------------------------------- concrete syntax


_UN = {"bp": BP, "ep": EPt, "shrinkl": ShrinkL, "shrinkr": ShrinkR, "extendr": ExtendR, "extendl": ExtendL, "not": Not}
_CH = {"first": First, "last": Last, "firstp": FirstP, "lastm": LastM}
_NAME = {v: k for k, v in {**_UN, **_CH}.items()}


def from_sexpr(e, alphabet: Alphabet):
    if isinstance(e, SAtom) or not e:
        raise ParseError("expected a uitlpm form")
    head = atom_text(e[0])
    args = e[1:]

    def need(k):
        if len(args) != k:
            raise ParseError(f"({head} ...) expects {k} arguments")

    if head in ("top", "pt", "unit"):
        need(0)
        return {"top": TOP, "pt": Pt(), "unit": Unit()}[head]
    if head == "atom":
        need(1)
        return Atom(check_letter(atom_text(args[0]), alphabet))
    if head in _UN:
        need(1)
        return _UN[head](from_sexpr(args[0], alphabet))
    if head in _CH:
        need(3)
        a = check_letter(atom_text(args[0]), alphabet)
        return _CH[head](a, from_sexpr(args[1], alphabet), from_sexpr(args[2], alphabet))
    if head.startswith("ceil-"):
        need(1)
        return ceiling(letter_set(args[0], alphabet), head[5:], alphabet)
    if head in ("or", "and"):
        if len(args) < 2:
            raise ParseError(f"({head} ...) expects at least 2 arguments")
        parts = [from_sexpr(x, alphabet) for x in args]
        out = parts[0]
        for p in parts[1:]:
            out = (Or if head == "or" else And)(out, p)
        return out
    raise ParseError(f"unknown uitlpm form {head}")


def to_sexpr(d):
    memo: dict = {}

    def go(n):
        got = memo.get(n)
        if got is not None:
            return got
        t = type(n)
        if t in (Top, Pt, Unit):
            r = (SAtom(t.__name__.lower()),)
        elif t is Atom:
            r = (SAtom("atom"), SAtom(n.a))
        elif t in (Or, And):
            r = (SAtom(t.__name__.lower()), go(n.l), go(n.r))
        elif t in CHOPS:
            r = (SAtom(_NAME[t]), SAtom(n.a), go(n.l), go(n.r))
        else:
            r = (SAtom(_NAME[t]), go(n.d))
        memo[n] = r
        return r

    return go(d)


def load(text: str):
    alphabet, body = read_file_forms(text)
    if isinstance(body, SAtom) or atom_text(body[0]) != "uitlpm" or len(body) != 2:
        raise ParseError("expected (uitlpm <body>)")
    return alphabet, from_sexpr(body[1], alphabet)


def dump(d, alphabet: Alphabet) -> str:
    return print_sexpr(alphabet.to_sexpr()) + "\n" + print_sexpr((SAtom("uitlpm"), to_sexpr(d))) + "\n"
