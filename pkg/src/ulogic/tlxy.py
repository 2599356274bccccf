"""Deterministic next/previous-letter logic: semantics, rankers and compilation to po2dfa."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Union

from . import po2dfa as pd
from .nodes import cached_hash, dag_size, tree_size
from .po2dfa import Acc, BScan, BUnit, Cond, FScan, FUnit, Rej, seq
from .sexpr import (
    LEFT_END,
    RIGHT_END,
    Alphabet,
    Atom as SAtom,
    ParseError,
    UlError,
    atom_text,
    check_letter,
    print_sexpr,
    read_file_forms,
)


class UnanchoredRanker(UlError):
    pass


def _node(cls):
    return cached_hash(dataclass(frozen=True, eq=False)(cls))


@_node
class Top:
    pass


@_node
class Atom:
    a: str


@_node
class SP:
    f: "Formula"


@_node
class EP:
    f: "Formula"


@_node
class X:
    a: str
    f: "Formula"


@_node
class Y:
    a: str
    f: "Formula"


@_node
class WX:
    a: str
    f: "Formula"


@_node
class WY:
    a: str
    f: "Formula"


@_node
class X1:
    f: "Formula"


@_node
class Y1:
    f: "Formula"


@_node
class Or:
    l: "Formula"
    r: "Formula"


@_node
class And:
    l: "Formula"
    r: "Formula"


@_node
class Not:
    f: "Formula"


Formula = Union[Top, Atom, SP, EP, X, Y, WX, WY, X1, Y1, Or, And, Not]
TOP = Top()
BOT = Not(TOP)
UNARY = (SP, EP, X1, Y1, Not)
LETTERED = (X, Y, WX, WY)
MODAL = (SP, EP, X, Y, WX, WY, X1, Y1)


def children(n) -> tuple:
    if isinstance(n, (Top, Atom)):
        return ()
    if isinstance(n, (Or, And)):
        return (n.l, n.r)
    return (n.f,)


def replace_children(n, kids):
    if isinstance(n, (Or, And)):
        return type(n)(*kids)
    if isinstance(n, LETTERED):
        return type(n)(n.a, kids[0])
    if isinstance(n, UNARY):
        return type(n)(kids[0])
    return n


def size(f) -> int:
    return tree_size(f, children)


def node_count(f) -> int:
    return dag_size(f, children)


# ---------------------------------------------------------------- smart constructors


def is_bot(f) -> bool:
    return isinstance(f, Not) and isinstance(f.f, Top)


def mk_not(f):
    return f.f if isinstance(f, Not) else Not(f)


def mk_or(*fs):
    out = None
    for f in fs:
        if isinstance(f, Top):
            return TOP
        if is_bot(f):
            continue
        out = f if out is None else Or(out, f)
    return BOT if out is None else out


def mk_and(*fs):
    out = None
    for f in fs:
        if is_bot(f):
            return BOT
        if isinstance(f, Top):
            continue
        out = f if out is None else And(out, f)
    return TOP if out is None else out


def gbar(a):
    return Not(X(a, TOP))


def hbar(a):
    return Not(Y(a, TOP))


@lru_cache(maxsize=None)
def at_first(letters: tuple):
    return mk_not(mk_or(*(Y(a, TOP) for a in letters)))


@lru_cache(maxsize=None)
def at_last(letters: tuple):
    return mk_not(mk_or(*(X(a, TOP) for a in letters)))


# ---------------------------------------------------------------- semantics


def _letter_mask(w: str, a: str) -> int:
    m = 0
    for i, x in enumerate(w):
        if x == a:
            m |= 1 << i
    return m


def sat_mask(f, w: str, memo: Optional[dict] = None) -> int:
    """Bitmask of positions (bit i-1 for position i) of the non-empty word w where f holds."""
    memo = {} if memo is None else memo
    return _sat(f, w, len(w), memo)


def _sat(f, w, n, memo):
    got = memo.get(f)
    if got is not None:
        return got
    full = (1 << n) - 1
    t = type(f)
    if t is Top:
        r = full
    elif t is Atom:
        r = _letter_mask(w, f.a)
    elif t is Or:
        r = _sat(f.l, w, n, memo) | _sat(f.r, w, n, memo)
    elif t is And:
        r = _sat(f.l, w, n, memo) & _sat(f.r, w, n, memo)
    elif t is Not:
        r = full & ~_sat(f.f, w, n, memo)
    else:
        s = _sat(f.f, w, n, memo)
        if t is SP:
            r = full if s & 1 else 0
        elif t is EP:
            r = full if (s >> (n - 1)) & 1 else 0
        elif t is X1:
            r = s >> 1
        elif t is Y1:
            r = (s << 1) & full
        else:
            r = _scan(t, f.a, w, n, s)
    memo[f] = r
    return r


def _scan(t, a, w, n, s):
    r = 0
    if t is X or t is WX:
        nxt = -1  # nearest a strictly to the right of the cursor
        for i in range(n - 1, -1, -1):
            if t is WX and w[i] == a:
                nxt = i
            if nxt >= 0 and (s >> nxt) & 1:
                r |= 1 << i
            if t is X and w[i] == a:
                nxt = i
    else:
        prv = -1
        for i in range(n):
            if t is WY and w[i] == a:
                prv = i
            if prv >= 0 and (s >> prv) & 1:
                r |= 1 << i
            if t is Y and w[i] == a:
                prv = i
    return r


def evaluate(f, w: str, i: int) -> bool:
    if not w:
        raise UlError("formulas are evaluated on non-empty words")
    if not 1 <= i <= len(w):
        raise UlError(f"position {i} outside 1..{len(w)}")
    return bool((sat_mask(f, w) >> (i - 1)) & 1)


def member(f, w: str, memo: Optional[dict] = None) -> bool:
    return bool(w) and holds_at(f, w, 1, {} if memo is None else memo)


def holds_at(f, w: str, i: int, memo: dict) -> bool:
    """Truth at one position; boolean structure short-circuits, modal nodes use (memoized) masks."""
    t = type(f)
    if t is Or:
        return holds_at(f.l, w, i, memo) or holds_at(f.r, w, i, memo)
    if t is And:
        return holds_at(f.l, w, i, memo) and holds_at(f.r, w, i, memo)
    if t is Not:
        return not holds_at(f.f, w, i, memo)
    if t is Top:
        return True
    if t is Atom:
        return w[i - 1] == f.a
    return bool((_sat(f, w, len(w), memo) >> (i - 1)) & 1)


# ---------------------------------------------------------------- unique parsing


def subformula(root, path: tuple):
    n = root
    for k in path:
        kids = children(n)
        if not 0 <= k < len(kids):
            raise UlError(f"invalid subformula path {path}")
        n = kids[k]
    return n


def _step(n, i: Optional[int], w: str) -> Optional[int]:
    """Position handed to the (first) child of n when n sits at i."""
    if i is None:
        return None
    L = len(w)
    t = type(n)
    if t is SP:
        return 1
    if t is EP:
        return L
    if t is X:
        j = w.find(n.a, i)  # w[i] is position i+1
        return j + 1 if j >= 0 else None
    if t is WX:
        j = w.find(n.a, i - 1)
        return j + 1 if j >= 0 else None
    if t is Y:
        j = w.rfind(n.a, 0, i - 1)
        return j + 1 if j >= 0 else None
    if t is WY:
        j = w.rfind(n.a, 0, i)
        return j + 1 if j >= 0 else None
    if t is X1:
        return i + 1 if i < L else None
    if t is Y1:
        return i - 1 if i > 1 else None
    return i


def pos(root, path: tuple, w: str) -> Optional[int]:
    """Evaluation position of the node at ``path`` (None for undefined)."""
    if not w:
        return None
    i: Optional[int] = 1
    n = root
    for k in path:
        i = _step(n, i, w)
        n = children(n)[k]
    return i


def is_ranker(f) -> bool:
    while isinstance(f, MODAL):
        f = f.f
    return isinstance(f, Top)


def ranker_path(f) -> list:
    """Modalities of a ranker from the root down, as nodes."""
    out = []
    while isinstance(f, MODAL):
        out.append(f)
        f = f.f
    if not isinstance(f, Top):
        raise UlError("not a ranker formula")
    return out


def lpos(r, w: str) -> Optional[int]:
    if not w:
        return None
    i: Optional[int] = 1
    for n in ranker_path(r):
        i = _step(n, i, w)
    return i


def seq_compose(r, f):
    """Graft f in place of the leaf of ranker r."""
    mods = ranker_path(r)
    out = f
    for n in reversed(mods):
        out = replace_children(n, (out,))
    return out


def _split_last(r):
    mods = ranker_path(r)
    if not mods:
        raise UnanchoredRanker("the empty ranker has no anchor")
    return seq_compose_mods(mods[:-1]), mods[-1]


def seq_compose_mods(mods) -> object:
    out = TOP
    for n in reversed(mods):
        out = replace_children(n, (out,))
    return out


def is_anchored(r) -> bool:
    return isinstance(r, (SP, EP))


# ---------------------------------------------------------------- directionality


RELS = ("<", "<=", ">", ">=")


def directionality(r, rel: str, alphabet: Alphabet):
    """Formula that holds at i exactly when i rel lpos(r) (whenever lpos(r) is defined)."""
    if rel not in RELS:
        raise UlError(f"unknown relation {rel}")
    if not is_anchored(r):
        raise UnanchoredRanker("ranker must start with SP or EP")
    return _direction(r, rel, alphabet.letters)


@lru_cache(maxsize=200000)
def _direction(r, rel, letters):
    prefix, last = _split_last(r)
    first, lastpos = at_first(letters), at_last(letters)
    t = type(last)
    if t is SP:
        return {"<": BOT, "<=": first, ">": mk_not(first), ">=": TOP}[rel]
    if t is EP:
        return {"<": mk_not(lastpos), "<=": TOP, ">": BOT, ">=": lastpos}[rel]

    def P(rr, rl):
        return _direction(rr, rl, letters)

    if t in LETTERED:
        a = last.a
        if t is WX:
            table = {
                "<": lambda: X(a, P(r, "<=")),
                "<=": lambda: Or(hbar(a), Y(a, P(prefix, "<"))),
                ">": lambda: Y(a, P(prefix, ">=")),
                ">=": lambda: Or(gbar(a), X(a, P(r, ">"))),
            }
        elif t is X:
            table = {
                "<": lambda: X(a, P(r, "<=")),
                "<=": lambda: Or(hbar(a), Y(a, P(prefix, "<="))),
                ">": lambda: Y(a, P(prefix, ">")),
                ">=": lambda: Or(gbar(a), X(a, P(r, ">"))),
            }
        elif t is WY:
            table = {
                "<": lambda: X(a, P(prefix, "<=")),
                "<=": lambda: Or(hbar(a), Y(a, P(r, "<"))),
                ">": lambda: Y(a, P(r, ">=")),
                ">=": lambda: Or(gbar(a), X(a, P(prefix, ">"))),
            }
        else:
            table = {
                "<": lambda: X(a, P(prefix, "<")),
                "<=": lambda: Or(hbar(a), Y(a, P(r, "<"))),
                ">": lambda: Y(a, P(r, ">=")),
                ">=": lambda: Or(gbar(a), X(a, P(prefix, ">="))),
            }
        return table[rel]()
    if t is X1:
        table = {
            "<": lambda: P(prefix, "<="),
            "<=": lambda: mk_or(first, Y1(P(prefix, "<="))),
            ">": lambda: Y1(P(prefix, ">")),
            ">=": lambda: P(prefix, ">"),
        }
    else:
        table = {
            "<": lambda: X1(P(prefix, "<")),
            "<=": lambda: P(prefix, "<"),
            ">": lambda: P(prefix, ">="),
            ">=": lambda: mk_or(lastpos, X1(P(prefix, ">="))),
        }
    return table[rel]()


def next_of(r, alphabet: Alphabet):
    """Holds exactly at lpos(r)+1."""
    after = directionality(r, ">", alphabet)
    return mk_and(after, mk_not(mk_or(*(Y(b, after) for b in alphabet.letters))))


def prev_of(r, alphabet: Alphabet):
    """Holds exactly at lpos(r)-1."""
    before = directionality(r, "<", alphabet)
    return mk_and(before, mk_not(mk_or(*(X(b, before) for b in alphabet.letters))))


# ---------------------------------------------------------------- normal forms


ROOT = SP(TOP)


def _extend(rho, mod):
    """Append one modality to an anchored context ranker."""
    if isinstance(mod, (SP, EP)) and rho == ROOT:
        # the root context is always defined, so a jump makes it redundant
        return replace_children(mod, (TOP,))
    return seq_compose(rho, replace_children(mod, (TOP,)))


def pull_booleans(f, alphabet: Alphabet):
    """Boolean combination of anchored rankers (and root atoms) equivalent to f at position 1."""
    return _pull(ROOT, f, alphabet.letters)


@lru_cache(maxsize=200000)
def _pull(rho, f, letters):
    t = type(f)
    if t is Top:
        return rho
    if t is Or:
        return mk_or(_pull(rho, f.l, letters), _pull(rho, f.r, letters))
    if t is And:
        return mk_and(_pull(rho, f.l, letters), _pull(rho, f.r, letters))
    if t is Not:
        inner = mk_not(_pull(rho, f.f, letters))
        return inner if rho == ROOT else mk_and(inner, rho)
    if t is Atom:
        return _atom_at(rho, f.a, letters)
    return _pull(_extend(rho, f), f.f, letters)


def _atom_at(rho, a, letters):
    if rho == ROOT:
        return Atom(a)
    prefix, last = _split_last(rho)
    t = type(last)
    if t in LETTERED:
        return rho if last.a == a else BOT
    alphabet = Alphabet(letters)
    if t is SP:
        return _pull(_extend(rho, WX(a, TOP)), at_first(letters), letters)
    if t is EP:
        return _pull(_extend(rho, WY(a, TOP)), at_last(letters), letters)
    if t is X1:
        return _pull(_extend(prefix, X(a, TOP)), next_of(prefix, alphabet), letters)
    return _pull(_extend(prefix, Y(a, TOP)), prev_of(prefix, alphabet), letters)


def eliminate_weak_unit(f, alphabet: Alphabet):
    """Equivalent formula (at position 1) using only X, Y, SP, EP, atoms and booleans."""
    return _elim(ROOT, f, alphabet.letters)


@lru_cache(maxsize=200000)
def _elim(rho, f, letters):
    t = type(f)
    if t in (Top, Atom):
        return f
    if t in (Or, And):
        return t(_elim(rho, f.l, letters), _elim(rho, f.r, letters))
    if t is Not:
        return Not(_elim(rho, f.f, letters))
    if t in (SP, EP):
        return t(_elim(_extend(rho, f), f.f, letters))
    if t in (X, Y):
        return t(f.a, _elim(_extend(rho, f), f.f, letters))
    if t in (WX, WY):
        strict = X if t is WX else Y
        here = _elim(rho, f.f, letters)
        there = strict(f.a, _elim(_extend(rho, strict(f.a, TOP)), f.f, letters))
        return Or(And(Atom(f.a), here), And(Not(Atom(f.a)), there))
    alphabet = Alphabet(letters)
    strict = X if t is X1 else Y
    guard = next_of(rho, alphabet) if t is X1 else prev_of(rho, alphabet)
    return mk_or(*(strict(b, And(guard, _elim(_extend(rho, strict(b, TOP)), f.f, letters))) for b in letters))


# ---------------------------------------------------------------- compilation to po2dfa


def _seek_start(alphabet: Alphabet):
    ext = frozenset(alphabet.extended)
    sigma = frozenset(alphabet.letters)
    left = frozenset({LEFT_END})
    # the head may sit anywhere, on the left marker included; then insist on a letter at 1
    seek = Cond(FUnit(left), Acc(), seq(BScan(ext, left), FUnit(left)))
    return seq(seek, FUnit(sigma), BUnit(ext))


def _move(n, alphabet: Alphabet):
    ext = frozenset(alphabet.extended)
    sigma = frozenset(alphabet.letters)
    t = type(n)
    if t is SP:
        return _seek_start(alphabet)
    if t is EP:
        return seq(_seek_start(alphabet), FScan(ext, frozenset({RIGHT_END})), BUnit(frozenset({RIGHT_END})))
    if t is X:
        return FScan(ext, frozenset({n.a}))
    if t is WX:
        return seq(BUnit(ext), FScan(ext, frozenset({n.a})))
    if t is Y:
        return BScan(ext, frozenset({n.a}))
    if t is WY:
        return seq(FUnit(ext), BScan(ext, frozenset({n.a})))
    if t is X1:
        return seq(FUnit(sigma), FUnit(sigma), BUnit(ext))
    if t is Y1:
        return seq(BUnit(sigma), BUnit(sigma), FUnit(ext))
    return None


def pos_ete(root, path: tuple, alphabet: Alphabet):
    """Turtle expression accepting at the node's evaluation position from any start."""
    steps = [_seek_start(alphabet)]
    n = root
    for k in path:
        mv = _move(n, alphabet)
        if isinstance(n, (SP, EP)) and len(steps) == 1:
            steps = [mv]
        elif mv is not None:
            steps.append(mv)
        n = children(n)[k]
    return seq(*steps) if len(steps) > 1 else steps[0]


def eval_ete_formula(root, alphabet: Alphabet, path: tuple = ()):
    """Turtle expression accepting iff the node's position is defined and the node holds there."""
    n = subformula(root, path)
    t = type(n)
    if t is Top:
        return pos_ete(root, path, alphabet)
    if t is Atom:
        return seq(pos_ete(root, path, alphabet), FUnit(frozenset({n.a})))
    if t is Or:
        return Cond(eval_ete_formula(root, alphabet, path + (0,)), Acc(), eval_ete_formula(root, alphabet, path + (1,)))
    if t is And:
        return Cond(eval_ete_formula(root, alphabet, path + (0,)), eval_ete_formula(root, alphabet, path + (1,)), Rej())
    if t is Not:
        inner = Cond(eval_ete_formula(root, alphabet, path + (0,)), Rej(), Acc())
        return Cond(pos_ete(root, path, alphabet), inner, Rej())
    return eval_ete_formula(root, alphabet, path + (0,))


def to_po2dfa(f, alphabet: Alphabet) -> pd.Po2Dfa:
    return pd.compile_ete(eval_ete_formula(f, alphabet), alphabet)


def sat(f, alphabet: Alphabet, bound: Optional[int] = None, method: str = "exact"):
    m = to_po2dfa(f, alphabet)
    return pd.emptiness(m, bound, method=method)


# ---------------------------------------------------------------- concrete syntax


_UNARY_NAMES = {"sp": SP, "ep": EP, "x1": X1, "y1": Y1, "not": Not}
_LETTER_NAMES = {"x": X, "y": Y, "wx": WX, "wy": WY}
_NAME_OF = {v: k for k, v in {**_UNARY_NAMES, **_LETTER_NAMES}.items()}


def from_sexpr(e, alphabet: Alphabet):
    if isinstance(e, SAtom) or not e:
        raise ParseError("expected a tlxy form")
    head = atom_text(e[0])
    args = e[1:]

    def need(k):
        if len(args) != k:
            raise ParseError(f"({head} ...) expects {k} arguments")

    if head == "top":
        need(0)
        return TOP
    if head == "bot":
        need(0)
        return BOT
    if head == "atom":
        need(1)
        return Atom(check_letter(atom_text(args[0]), alphabet))
    if head in ("gbar", "hbar"):
        need(1)
        a = check_letter(atom_text(args[0]), alphabet)
        return gbar(a) if head == "gbar" else hbar(a)
    if head in _UNARY_NAMES:
        need(1)
        return _UNARY_NAMES[head](from_sexpr(args[0], alphabet))
    if head in _LETTER_NAMES:
        need(2)
        a = check_letter(atom_text(args[0]), alphabet)
        return _LETTER_NAMES[head](a, from_sexpr(args[1], alphabet))
    if head in ("or", "and"):
        if len(args) < 2:
            raise ParseError(f"({head} ...) expects at least 2 arguments")
        parts = [from_sexpr(x, alphabet) for x in args]
        out = parts[0]
        for p in parts[1:]:
            out = (Or if head == "or" else And)(out, p)
        return out
    raise ParseError(f"unknown tlxy form {head}")


def to_sexpr(f):
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
        elif t in (Or, And):
            r = (SAtom(t.__name__.lower()), go(n.l), go(n.r))
        elif t in LETTERED:
            r = (SAtom(_NAME_OF[t]), SAtom(n.a), go(n.f))
        else:
            r = (SAtom(_NAME_OF[t]), go(n.f))
        memo[n] = r
        return r

    return go(f)


def load(text: str):
    alphabet, body = read_file_forms(text)
    if isinstance(body, SAtom) or atom_text(body[0]) != "tlxy" or len(body) != 2:
        raise ParseError("expected (tlxy <body>)")
    return alphabet, from_sexpr(body[1], alphabet)


def dump(f, alphabet: Alphabet) -> str:
    return print_sexpr(alphabet.to_sexpr()) + "\n" + print_sexpr((SAtom("tlxy"), to_sexpr(f))) + "\n"


def show(f) -> str:
    """Compact infix rendering for logs."""
    t = type(f)
    if t is Top:
        return "T"
    if t is Atom:
        return f.a
    if is_bot(f):
        return "F"
    if t is Or:
        return f"({show(f.l)} | {show(f.r)})"
    if t is And:
        return f"({show(f.l)} & {show(f.r)})"
    if t is Not:
        return f"!{show(f.f)}"
    if t in LETTERED:
        return f"{_NAME_OF[t].upper()}_{f.a} {show(f.f)}"
    return f"{_NAME_OF[t].upper()} {show(f.f)}"
