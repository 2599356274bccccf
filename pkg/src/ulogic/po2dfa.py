"""Partially-ordered two-way DFAs, turtle expressions and their compilation."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

import numpy as np

from . import kernels
from .sexpr import (
    ENDMARKERS,
    LEFT_END,
    RIGHT_END,
    Alphabet,
    Atom,
    BudgetExceeded,
    ParseError,
    UlError,
    Word,
    atom_text,
    letter_set,
    letters_sexpr,
    print_sexpr,
    read_file_forms,
)

L, R, ACC, REJ = "L", "R", "acc", "rej"
_KIND_CODE = {L: 0, R: 1, ACC: 2, REJ: 3}
DEFAULT_BUDGET = 10**7
# extra states added by conjoin/disjoin (the reset pair)
BOOLEAN_OVERHEAD = 2
# compile_ete adds an init state plus the two terminals
ETE_OVERHEAD = 3


class NonTermination(UlError):
    pass


def enum_budget() -> int:
    env = os.environ.get("UL_ENUM_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class Po2Dfa:
    """Immutable automaton: ``kinds`` maps state names to L/R/acc/rej, ``delta`` holds progress moves."""

    def __init__(self, alphabet: Alphabet, kinds: dict, init, delta: dict):
        self.alphabet = alphabet
        self.kinds = dict(kinds)
        self.init = init
        self.delta = dict(delta)
        self._tab = None

    @property
    def states(self) -> list:
        return list(self.kinds)

    def __len__(self):
        return len(self.kinds)

    @property
    def accept_state(self):
        return next(q for q, k in self.kinds.items() if k == ACC)

    @property
    def reject_state(self):
        return next(q for q, k in self.kinds.items() if k == REJ)

    def def_letters(self, q) -> list:
        """Letters (markers included) on which q takes its else loop."""
        return [x for x in self.alphabet.extended if (q, x) not in self.delta]

    def _tables(self):
        if self._tab is None:
            names = list(self.kinds)
            idx = {q: i for i, q in enumerate(names)}
            ext = self.alphabet.extended
            rows = []
            for q in names:
                rows.append([idx[self.delta[(q, x)]] if (q, x) in self.delta else -1 for x in ext])
            kinds = [_KIND_CODE[self.kinds[q]] for q in names]
            np_table = np.array(rows, dtype=np.int32).reshape(len(names), len(ext))
            np_kinds = np.array(kinds, dtype=np.int8)
            self._tab = (names, idx, rows, kinds, np_table, np_kinds)
        return self._tab

    def encode(self, w: str) -> list:
        ai = self.alphabet.index
        k = len(self.alphabet)
        return [k] + [ai(a) for a in w] + [k + 1]

    def __eq__(self, other):
        return (
            isinstance(other, Po2Dfa)
            and self.alphabet == other.alphabet
            and self.kinds == other.kinds
            and self.init == other.init
            and self.delta == other.delta
        )

    def __repr__(self):
        return f"Po2Dfa({len(self.kinds)} states)"


@dataclass
class RunTrace:
    steps: list
    verdict: str
    final_position: int


# ---------------------------------------------------------------- validation


def validate(m: Po2Dfa) -> list:
    """Return every invariant violation as a human-readable string (empty list means ok)."""
    errs = []
    accs = [q for q, k in m.kinds.items() if k == ACC]
    rejs = [q for q, k in m.kinds.items() if k == REJ]
    if len(accs) != 1:
        errs.append(f"expected exactly one accept state, found {len(accs)}")
    if len(rejs) != 1:
        errs.append(f"expected exactly one reject state, found {len(rejs)}")
    for q, k in m.kinds.items():
        if k not in _KIND_CODE:
            errs.append(f"state {q}: unknown polarity {k}")
    if m.init not in m.kinds:
        errs.append(f"init state {m.init} undeclared")
    ext = set(m.alphabet.extended)
    succ: dict = {q: set() for q in m.kinds}
    for (q, x), q2 in m.delta.items():
        if q not in m.kinds or q2 not in m.kinds:
            errs.append(f"transition ({q},{x})->{q2} mentions an undeclared state")
            continue
        if x not in ext:
            errs.append(f"transition ({q},{x}) uses a letter outside the alphabet")
        if m.kinds[q] in (ACC, REJ):
            errs.append(f"terminal state {q} has an outgoing transition")
        if q == q2:
            errs.append(f"progress self-loop on {q} reading {x}")
        succ[q].add(q2)
    for q, k in m.kinds.items():
        if k not in (L, R):
            continue
        right = m.delta.get((q, RIGHT_END))
        left = m.delta.get((q, LEFT_END))
        if right is None:
            errs.append(f"end-marker totality: no transition from {q} on {RIGHT_END}")
        elif m.kinds.get(right) == L:
            errs.append(f"end-marker polarity: {q} on {RIGHT_END} enters L-state {right}")
        if left is None:
            errs.append(f"end-marker totality: no transition from {q} on {LEFT_END}")
        elif m.kinds.get(left) == R:
            errs.append(f"end-marker polarity: {q} on {LEFT_END} enters R-state {left}")
    # acyclicity via iterative DFS
    color = {q: 0 for q in m.kinds}
    for root in m.kinds:
        if color[root]:
            continue
        stack = [(root, iter(sorted(succ[root], key=str)))]
        color[root] = 1
        while stack:
            q, it = stack[-1]
            nxt = next(it, None)
            if nxt is None:
                color[q] = 2
                stack.pop()
            elif color[nxt] == 1 and nxt != q:
                errs.append(f"progress transitions form a cycle through {nxt}")
                color[nxt] = 2
            elif color[nxt] == 0:
                color[nxt] = 1
                stack.append((nxt, iter(sorted(succ[nxt], key=str))))
    return errs


def check_valid(m: Po2Dfa) -> Po2Dfa:
    errs = validate(m)
    if errs:
        raise UlError("invalid po2dfa: " + "; ".join(errs))
    return m


# ---------------------------------------------------------------- running


def run(m: Po2Dfa, w: str, p0: int = 1) -> RunTrace:
    n = len(w)
    if not 0 <= p0 <= n + 1:
        raise UlError(f"start position {p0} outside 0..{n + 1}")
    ext = Word(w)
    budget = len(m.kinds) * (n + 2) + 1
    q, p = m.init, p0
    steps = [(q, p)]
    while m.kinds[q] in (L, R):
        if len(steps) > budget:
            raise NonTermination(budget)
        x = ext.at(p)
        nq = m.delta.get((q, x), q)
        k = m.kinds[nq]
        if k == L:
            p += 1
        elif k == R:
            p -= 1
        q = nq
        steps.append((q, p))
    return RunTrace(steps, "Accept" if m.kinds[q] == ACC else "Reject", p)


def run_fast(m: Po2Dfa, w: str, p0: int = 1) -> tuple:
    """(accepted, final position, step count) through the selected kernel."""
    names, idx, rows, kinds, np_table, np_kinds = m._tables()
    codes = m.encode(w)
    budget = len(names) * (len(w) + 2) + 1
    if kernels.BACKEND == "cython":
        verdict, pos, steps = kernels.run_table(np_table, np_kinds, idx[m.init], np.array(codes, dtype=np.int32), p0, budget)
    else:
        verdict, pos, steps = kernels.run_table(rows, kinds, idx[m.init], codes, p0, budget)
    if verdict < 0:
        raise NonTermination(budget)
    return bool(verdict), pos, steps


def member(m: Po2Dfa, w: str) -> bool:
    return run_fast(m, w, 1)[0]


def member_many(m: Po2Dfa, words: Iterable[str]) -> list:
    words = list(words)
    if not words:
        return []
    names, idx, rows, kinds, np_table, np_kinds = m._tables()
    flat: list = []
    offsets = [0]
    for w in words:
        flat.extend(m.encode(w))
        offsets.append(len(flat))
    if kernels.BACKEND == "cython":
        out = kernels.batch_member(np_table, np_kinds, idx[m.init], np.array(flat, dtype=np.int32), np.array(offsets, dtype=np.int64))
    else:
        out = kernels.batch_member(rows, kinds, idx[m.init], flat, offsets)
    return [bool(x) for x in out]


# ---------------------------------------------------------------- turtle expressions


@dataclass(frozen=True)
class Acc:
    pass


@dataclass(frozen=True)
class Rej:
    pass


@dataclass(frozen=True)
class FUnit:
    A: frozenset


@dataclass(frozen=True)
class BUnit:
    A: frozenset


@dataclass(frozen=True)
class FScan:
    A: frozenset
    B: frozenset

    def __post_init__(self):
        if not self.B:
            raise UlError("scan target set must be non-empty")


@dataclass(frozen=True)
class BScan:
    A: frozenset
    B: frozenset

    def __post_init__(self):
        if not self.B:
            raise UlError("scan target set must be non-empty")


@dataclass(frozen=True)
class Cond:
    test: "Ete"
    then: "Ete"
    other: "Ete"


Ete = Union[Acc, Rej, FUnit, BUnit, FScan, BScan, Cond]


def seq(*parts: Ete) -> Ete:
    """Sequential composition: run each part from where the previous one accepted."""
    out = parts[-1]
    for e in reversed(parts[:-1]):
        out = Cond(e, out, Rej())
    return out


def ete_size(e: Ete) -> int:
    if isinstance(e, Cond):
        return 1 + ete_size(e.test) + ete_size(e.then) + ete_size(e.other)
    return 1


def eval_ete(e: Ete, w: str, p0: int) -> tuple:
    """Reference semantics: returns ("Accept"|"Reject", final position)."""
    ext = Word(w)
    last = len(w) + 1
    return _eval(e, ext, last, p0)


def _eval(e, ext, last, p):
    if isinstance(e, Acc):
        return "Accept", p
    if isinstance(e, Rej):
        return "Reject", p
    if isinstance(e, FUnit):
        if p < last and ext.at(p) in e.A:
            return "Accept", p + 1
        return "Reject", p
    if isinstance(e, BUnit):
        if p > 0 and ext.at(p) in e.A:
            return "Accept", p - 1
        return "Reject", p
    if isinstance(e, FScan):
        if p >= last:
            return "Reject", p
        k = p + 1
        while True:
            x = ext.at(k)
            if x in e.B:
                return "Accept", k
            if x not in e.A or k == last:
                return "Reject", k
            k += 1
    if isinstance(e, BScan):
        if p <= 0:
            return "Reject", p
        k = p - 1
        while True:
            x = ext.at(k)
            if x in e.B:
                return "Accept", k
            if x not in e.A or k == 0:
                return "Reject", k
            k -= 1
    if isinstance(e, Cond):
        v, q = _eval(e.test, ext, last, p)
        return _eval(e.then if v == "Accept" else e.other, ext, last, q)
    raise TypeError(e)


class _Builder:
    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self.ext = alphabet.extended
        self.kinds = {"t": ACC, "r": REJ}
        self.delta: dict = {}
        self.counter = 0

    def new(self, kind: str) -> str:
        self.counter += 1
        name = f"q{self.counter}"
        self.kinds[name] = kind
        return name

    def compile(self, e: Ete, acc_k: dict, rej_k: dict) -> dict:
        """Continuation-passing compilation; returns the entry map letter -> target state."""
        if isinstance(e, Acc):
            return acc_k
        if isinstance(e, Rej):
            return rej_k
        if isinstance(e, Cond):
            then_k = self.compile(e.then, acc_k, rej_k)
            else_k = self.compile(e.other, acc_k, rej_k)
            return self.compile(e.test, then_k, else_k)
        forward = isinstance(e, (FUnit, FScan))
        inner = LEFT_END if forward else RIGHT_END  # cannot be read after moving
        outer = RIGHT_END if forward else LEFT_END  # the marker we cannot move past
        q = self.new(L if forward else R)
        if isinstance(e, (FUnit, BUnit)):
            for x in self.ext:
                self.delta[(q, x)] = "r" if x == inner else acc_k[x]
            return {x: (q if (x in e.A and x != outer) else rej_k[x]) for x in self.ext}
        A, B = e.A, e.B
        for x in self.ext:
            if x == inner:
                self.delta[(q, x)] = "r"
            elif x in B:
                self.delta[(q, x)] = acc_k[x]
            elif x == outer or x not in A:
                self.delta[(q, x)] = rej_k[x]
        return {x: (rej_k[x] if x == outer else q) for x in self.ext}


def compile_ete(e: Ete, alphabet: Alphabet) -> Po2Dfa:
    b = _Builder(alphabet)
    acc_k = {x: "t" for x in b.ext}
    rej_k = {x: "r" for x in b.ext}
    entry = b.compile(e, acc_k, rej_k)
    s0 = b.new(L)
    for x in b.ext:
        b.delta[(s0, x)] = entry[x]
    return _trim(Po2Dfa(alphabet, b.kinds, s0, b.delta))


def _trim(m: Po2Dfa) -> Po2Dfa:
    """Drop states unreachable from init (terminals are always kept)."""
    seen = {m.init}
    todo = [m.init]
    by_src: dict = {}
    for (q, x), q2 in m.delta.items():
        by_src.setdefault(q, []).append(q2)
    while todo:
        q = todo.pop()
        for q2 in by_src.get(q, ()):
            if q2 not in seen:
                seen.add(q2)
                todo.append(q2)
    kinds = {q: k for q, k in m.kinds.items() if q in seen or k in (ACC, REJ)}
    delta = {(q, x): q2 for (q, x), q2 in m.delta.items() if q in kinds}
    return Po2Dfa(m.alphabet, kinds, m.init, delta)


# ---------------------------------------------------------------- boolean operations


def negate(m: Po2Dfa) -> Po2Dfa:
    kinds = {q: (REJ if k == ACC else ACC if k == REJ else k) for q, k in m.kinds.items()}
    return Po2Dfa(m.alphabet, kinds, m.init, m.delta)


def _combine(m1: Po2Dfa, m2: Po2Dfa, through: str) -> Po2Dfa:
    """Run m1; when it ends in the ``through`` verdict, reset to position 1 and run m2."""
    if m1.alphabet != m2.alphabet:
        raise UlError("alphabets differ")
    ext = m1.alphabet.extended
    kinds: dict = {"t": ACC, "r": REJ}
    delta: dict = {}
    ren2 = {}
    for q, k in m2.kinds.items():
        ren2[q] = "t" if k == ACC else "r" if k == REJ else f"b{q}"
        if k in (L, R):
            kinds[ren2[q]] = k
    for (q, x), q2 in m2.delta.items():
        delta[(ren2[q], x)] = ren2[q2]
    s2 = ren2[m2.init]
    # u re-enters m2's start state at position 1; back seeks the left marker
    u, back = "reset_step", "reset_seek"
    kinds[u] = L
    kinds[back] = R
    for x in ext:
        if x == LEFT_END:
            delta[(u, x)] = "r"
        elif m2.kinds[m2.init] in (ACC, REJ):
            delta[(u, x)] = s2
        else:
            delta[(u, x)] = delta.get((s2, x), s2)
    delta[(back, LEFT_END)] = u
    delta[(back, RIGHT_END)] = "r"
    ren1 = {}
    for q, k in m1.kinds.items():
        if k == ACC:
            ren1[q] = "t" if through == REJ else None
        elif k == REJ:
            ren1[q] = "r" if through == ACC else None
        else:
            ren1[q] = f"a{q}"
            kinds[ren1[q]] = k

    def target(q2, x):
        t = ren1[q2]
        if t is not None:
            return t
        return u if x == LEFT_END else back

    for (q, x), q2 in m1.delta.items():
        delta[(ren1[q], x)] = target(q2, x)
    init = ren1[m1.init]
    if init is None:
        # m1 decides at once, before moving: m2 starts right there at position 1
        init = s2
    return _trim(Po2Dfa(m1.alphabet, kinds, init, delta))


def conjoin(m1: Po2Dfa, m2: Po2Dfa) -> Po2Dfa:
    return _combine(m1, m2, ACC)


def disjoin(m1: Po2Dfa, m2: Po2Dfa) -> Po2Dfa:
    return _combine(m1, m2, REJ)


# ---------------------------------------------------------------- emptiness


@dataclass(frozen=True)
class NonEmpty:
    witness: str


@dataclass(frozen=True)
class EmptyUpTo:
    bound: int


def _settle(m: Po2Dfa, q, x: str, back: dict):
    """Run inside the newest cell (letter x), entered in state q.

    ``back`` gives, for each R-state arriving one cell to the left, what the older
    prefix returns: a terminal tag or the state that re-arrives here. The result is
    a terminal tag ("t",)/("r",) or the state arriving one cell to the right.
    """
    for _ in range(2 * len(m.kinds) + 2):
        nq = m.delta.get((q, x), q)
        k = m.kinds[nq]
        if k == ACC:
            return ("t",)
        if k == REJ:
            return ("r",)
        if k == L:
            return nq
        res = back[nq]
        if isinstance(res, tuple):
            return res
        q = res
    raise NonTermination(q)


def _crossing_search(m: Po2Dfa, max_len: Optional[int], state_budget: int = 500000):
    """Exact search over prefix behaviours, shortest then least prefix first."""
    r_states = [q for q, k in m.kinds.items() if k == R]
    back0 = []
    for q in r_states:
        nq = m.delta.get((q, LEFT_END), q)
        k = m.kinds[nq]
        back0.append(("t",) if k == ACC else ("r",) if k in (REJ, R) else nq)
    k0 = m.kinds[m.init]
    out0 = ("t",) if k0 == ACC else ("r",) if k0 == REJ else m.init
    start = (out0, tuple(back0))
    seen = {start}
    frontier = [(start, "")]
    length = 0
    while frontier:
        for (out, bk), w in frontier:
            if not isinstance(out, tuple):
                out = _settle(m, out, RIGHT_END, dict(zip(r_states, bk)))
                if not isinstance(out, tuple):
                    out = ("r",)
            if out == ("t",):
                return w
        if max_len is not None and length >= max_len:
            return None
        nxt = []
        for (out, bk), w in frontier:
            back = dict(zip(r_states, bk))
            for a in m.alphabet.letters:
                nout = out if isinstance(out, tuple) else _settle(m, out, a, back)
                key = (nout, tuple(_settle(m, q, a, back) for q in r_states))
                if key not in seen:
                    seen.add(key)
                    if len(seen) > state_budget:
                        raise BudgetExceeded(f"crossing search exceeded {state_budget} behaviours")
                    nxt.append((key, w + a))
        frontier = nxt
        length += 1
    return None


def emptiness(m: Po2Dfa, bound: Optional[int] = None, method: str = "enumerate", budget: Optional[int] = None):
    """Canonical (shortest, then least) witness of length <= bound, or EmptyUpTo(bound).

    ``enumerate`` tests every word in length-lex order; ``exact`` runs the crossing
    search, which gives the same answer without a word budget.
    """
    if bound is None:
        bound = len(m.kinds)
    if method == "exact":
        w = _crossing_search(m, bound)
        return NonEmpty(w) if w is not None else EmptyUpTo(bound)
    if method != "enumerate":
        raise UlError(f"unknown emptiness method {method}")
    budget = enum_budget() if budget is None else budget
    count = 0
    k = len(m.alphabet)
    for n in range(bound + 1):
        words = _words_of_length(m.alphabet, n)
        count += k**n
        if count > budget:
            raise BudgetExceeded(f"|Σ|^{n} words exceed the enumeration budget {budget}")
        hits = member_many(m, words)
        for w, ok in zip(words, hits):
            if ok:
                return NonEmpty(w)
    return EmptyUpTo(bound)


def _words_of_length(alphabet: Alphabet, n: int) -> list:
    import itertools

    return ["".join(t) for t in itertools.product(alphabet.letters, repeat=n)]


def shortest_witness(m: Po2Dfa) -> Optional[str]:
    """Unbounded exact search (terminates: the behaviour space is finite)."""
    return _crossing_search(m, None)


# ---------------------------------------------------------------- rendering and files


def to_dot(m: Po2Dfa) -> str:
    lines = ["digraph po2dfa {", "  rankdir=LR;", '  __start [shape=point];']
    for q, k in m.kinds.items():
        label = {L: f"→ {q}", R: f"← {q}", ACC: "t", REJ: "r"}[k]
        shape = "doublecircle" if k == ACC else "circle"
        lines.append(f'  "{q}" [label="{label}", shape={shape}];')
    lines.append(f'  __start -> "{m.init}";')
    edges: dict = {}
    for (q, x), q2 in m.delta.items():
        edges.setdefault((q, q2), []).append(x)
    for (q, q2), xs in edges.items():
        lab = ",".join(_dot_letter(x) for x in xs)
        lines.append(f'  "{q}" -> "{q2}" [label="{lab}"];')
    for q, k in m.kinds.items():
        if k in (L, R):
            rest = [x for x in m.alphabet.letters if (q, x) not in m.delta]
            if rest:
                lines.append(f'  "{q}" -> "{q}" [label="{",".join(rest)}", style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_letter(x: str) -> str:
    return {LEFT_END: "▷", RIGHT_END: "◁"}.get(x, x)


def po2dfa_to_sexpr(m: Po2Dfa) -> tuple:
    states = tuple((Atom(str(q)), Atom(k)) for q, k in m.kinds.items())
    ext = m.alphabet.extended
    trans = []
    for q in m.kinds:
        for x in ext:
            if (q, x) in m.delta:
                trans.append((Atom(str(q)), Atom(x), Atom(str(m.delta[(q, x)]))))
    return (
        Atom("po2dfa"),
        (Atom("states"),) + states,
        (Atom("init"), Atom(str(m.init))),
        (Atom("delta"),) + tuple(trans),
    )


def po2dfa_from_sexpr(body, alphabet: Alphabet) -> Po2Dfa:
    if isinstance(body, Atom) or not body or atom_text(body[0]) != "po2dfa":
        raise ParseError("expected (po2dfa ...)")
    kinds: dict = {}
    init = None
    delta: dict = {}
    for sec in body[1:]:
        head = atom_text(sec[0])
        if head == "states":
            for st in sec[1:]:
                name, kind = atom_text(st[0]), atom_text(st[1])
                if kind not in _KIND_CODE:
                    raise ParseError(f"unknown polarity {kind}")
                kinds[name] = kind
        elif head == "init":
            init = atom_text(sec[1])
        elif head == "delta":
            for tr in sec[1:]:
                q, x, q2 = (atom_text(t) for t in tr)
                if x not in alphabet and x not in ENDMARKERS:
                    raise ParseError(f"letter {x} not in alphabet")
                delta[(q, x)] = q2
        else:
            raise ParseError(f"unknown po2dfa section {head}")
    if init is None:
        raise ParseError("missing (init ...)")
    return Po2Dfa(alphabet, kinds, init, delta)


def ete_to_sexpr(e: Ete, alphabet: Alphabet):
    if isinstance(e, Acc):
        return (Atom("acc"),)
    if isinstance(e, Rej):
        return (Atom("rej"),)
    if isinstance(e, FUnit):
        return (Atom("funit"), letters_sexpr(e.A, alphabet))
    if isinstance(e, BUnit):
        return (Atom("bunit"), letters_sexpr(e.A, alphabet))
    if isinstance(e, FScan):
        return (Atom("fscan"), letters_sexpr(e.A, alphabet), letters_sexpr(e.B, alphabet))
    if isinstance(e, BScan):
        return (Atom("bscan"), letters_sexpr(e.A, alphabet), letters_sexpr(e.B, alphabet))
    return (Atom("cond"), ete_to_sexpr(e.test, alphabet), ete_to_sexpr(e.then, alphabet), ete_to_sexpr(e.other, alphabet))


def ete_from_sexpr(e, alphabet: Alphabet) -> Ete:
    if isinstance(e, Atom) or not e:
        raise ParseError("expected an ete form")
    head = atom_text(e[0])
    arity = {"acc": 0, "rej": 0, "funit": 1, "bunit": 1, "fscan": 2, "bscan": 2, "cond": 3}
    if head not in arity:
        raise ParseError(f"unknown ete form {head}")
    if len(e) - 1 != arity[head]:
        raise ParseError(f"{head} expects {arity[head]} arguments")
    if head == "acc":
        return Acc()
    if head == "rej":
        return Rej()
    if head in ("funit", "bunit"):
        A = letter_set(e[1], alphabet, allow_markers=True)
        return FUnit(A) if head == "funit" else BUnit(A)
    if head in ("fscan", "bscan"):
        A = letter_set(e[1], alphabet, allow_markers=True)
        B = letter_set(e[2], alphabet, allow_markers=True)
        if not B:
            raise ParseError("scan target set must be non-empty")
        return FScan(A, B) if head == "fscan" else BScan(A, B)
    return Cond(*(ete_from_sexpr(x, alphabet) for x in e[1:]))


def load_po2dfa(text: str) -> Po2Dfa:
    alphabet, body = read_file_forms(text)
    return po2dfa_from_sexpr(body, alphabet)


def dump_po2dfa(m: Po2Dfa) -> str:
    return print_sexpr(m.alphabet.to_sexpr()) + "\n" + _pretty_po2dfa(m)


def _pretty_po2dfa(m: Po2Dfa) -> str:
    s = po2dfa_to_sexpr(m)
    parts = ["(po2dfa"]
    for sec in s[1:]:
        parts.append("  " + print_sexpr(sec))
    return "\n".join(parts) + ")\n"


def load_ete(text: str) -> tuple:
    alphabet, body = read_file_forms(text)
    if isinstance(body, Atom) or atom_text(body[0]) != "ete" or len(body) != 2:
        raise ParseError("expected (ete <body>)")
    return alphabet, ete_from_sexpr(body[1], alphabet)


def dump_ete(e: Ete, alphabet: Alphabet) -> str:
    return print_sexpr(alphabet.to_sexpr()) + "\n" + print_sexpr((Atom("ete"), ete_to_sexpr(e, alphabet))) + "\n"
