"""Oracles, seeded generators and bounded language-equivalence checking."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .sexpr import LEFT_END, RIGHT_END, Alphabet, BudgetExceeded, UlError, enumerate_words, word_count
from . import duds as D
from . import po2dfa as pd
from . import tlfp as L
from . import tlrec as R
from . import tlxy as T
from . import uitlpm as U


@dataclass(frozen=True)
class LanguagePredicate:
    fn: Callable[[str], bool]
    label: str = "?"

    def __call__(self, w: str) -> bool:
        return bool(self.fn(w))


@dataclass(frozen=True)
class Counterexample:
    word: str
    lhs: bool
    rhs: bool


@dataclass(frozen=True)
class EquivReport:
    checked: int
    bound: int
    counterexample: Optional[Counterexample] = None

    @property
    def equivalent(self) -> bool:
        return self.counterexample is None


def example1_member(w: str) -> bool:
    """Last a, then only c's until a d (the Sigma* a c* d {b,c,d}* language)."""
    i = w.rfind("a")
    if i < 0:
        return False
    for x in w[i + 1 :]:
        if x == "d":
            return True
        if x != "c":
            return False
    return False


def regex_oracle_example1() -> LanguagePredicate:
    return LanguagePredicate(example1_member, "example1-scan")


def equiv_bounded(p: Callable, q: Callable, alphabet: Alphabet, max_len: int, budget: Optional[int] = None) -> EquivReport:
    budget = pd.enum_budget() if budget is None else budget
    total = word_count(alphabet, max_len)
    if total > budget:
        raise BudgetExceeded(f"{total} words exceed the enumeration budget {budget}")
    n = 0
    for w in enumerate_words(alphabet, max_len):
        n += 1
        a, b = bool(p(w)), bool(q(w))
        if a != b:
            # re-verify before reporting
            if bool(p(w)) != a or bool(q(w)) != b:
                raise UlError("non-deterministic predicate")
            return EquivReport(n, max_len, Counterexample(str(w), a, b))
    return EquivReport(n, max_len)


def gen_po2dfa(budget: int, alphabet: Alphabet, seed, p_edge: float = 0.5) -> pd.Po2Dfa:
    """Random valid automaton with ``budget`` states, init being the topmost one."""
    if budget < 3:
        raise UlError("need at least t, r and an init state")
    rng = random.Random(seed)
    names = ["t", "r"] + [f"q{i}" for i in range(budget - 2)]
    kinds = {"t": pd.ACC, "r": pd.REJ}
    for q in names[2:]:
        kinds[q] = rng.choice((pd.L, pd.R))
    delta = {}
    for i in range(2, budget):
        q = names[i]
        lower = names[:i]
        for x in alphabet.letters:
            if rng.random() < p_edge:
                delta[(q, x)] = rng.choice(lower)
        delta[(q, RIGHT_END)] = rng.choice([s for s in lower if kinds[s] != pd.L])
        delta[(q, LEFT_END)] = rng.choice([s for s in lower if kinds[s] != pd.R])
    return pd.Po2Dfa(alphabet, kinds, names[-1], delta)


# ---------------------------------------------------------------- formula generators


def _split(rng, n):
    """Sizes of two children sharing n nodes (each at least 1)."""
    k = rng.randint(1, n - 1)
    return k, n - k


def _gen_tlxy(rng, al, n):
    if n <= 1:
        return rng.choice([T.TOP, T.Atom(rng.choice(al.letters))])
    k = rng.randrange(10)
    if k < 2 and n >= 3:
        a, b = _split(rng, n - 1)
        return (T.Or if k == 0 else T.And)(_gen_tlxy(rng, al, a), _gen_tlxy(rng, al, b))
    if k == 2:
        return T.Not(_gen_tlxy(rng, al, n - 1))
    c = rng.choice([T.SP, T.EP, T.X1, T.Y1, T.X, T.Y, T.WX, T.WY, T.X, T.Y])
    if c in T.LETTERED:
        return c(rng.choice(al.letters), _gen_tlxy(rng, al, n - 1))
    return c(_gen_tlxy(rng, al, n - 1))


def gen_ranker(length: int, alphabet: Alphabet, seed):
    """Anchored ranker: SP or EP, then up to ``length``-1 navigation steps, closed by top."""
    rng = random.Random(seed)
    steps = [rng.choice([T.SP, T.EP])]
    for _ in range(rng.randint(0, max(0, length - 1))):
        c = rng.choice([T.X, T.Y, T.WX, T.WY, T.X1, T.Y1])
        steps.append((lambda g, c=c, a=rng.choice(alphabet.letters): c(a, g)) if c in T.LETTERED else c)
    out = T.TOP
    for s in reversed(steps):
        out = s(out)
    return out


def _gen_tlfp(rng, al, n, modals):
    if n <= 1:
        return L.Atom(rng.choice(al.letters))
    k = rng.randrange(6)
    if k < 2 and modals[0] > 0:
        modals[0] -= 1
        return (L.F if k == 0 else L.P)(_gen_tlfp(rng, al, n - 1, modals))
    if k == 2:
        return L.Not(_gen_tlfp(rng, al, n - 1, modals))
    if n >= 3:
        a, b = _split(rng, n - 1)
        return (L.Or if k % 2 else L.And)(_gen_tlfp(rng, al, a, modals), _gen_tlfp(rng, al, b, modals))
    return L.Atom(rng.choice(al.letters))


def _gen_duds(rng, al, n):
    if n <= 1:
        return rng.choice([D.TOP, D.Atom(rng.choice(al.letters))])
    k = rng.randrange(8)
    if k < 2 and n >= 3:
        a, b = _split(rng, n - 1)
        return (D.Or if k == 0 else D.And)(_gen_duds(rng, al, a), _gen_duds(rng, al, b))
    if k == 2:
        return D.Not(_gen_duds(rng, al, n - 1))
    A = frozenset(x for x in al.letters if rng.random() < 0.6)
    return (D.Until if k % 2 else D.Since)(A, rng.choice(al.letters), _gen_duds(rng, al, n - 1))


def _gen_uitl(rng, al, n):
    if n <= 1:
        return rng.choice([U.TOP, U.Pt(), U.Unit(), U.Atom(rng.choice(al.letters))])
    k = rng.randrange(9)
    if k < 2 and n >= 3:
        a, b = _split(rng, n - 1)
        return (U.Or if k == 0 else U.And)(_gen_uitl(rng, al, a), _gen_uitl(rng, al, b))
    if k == 2:
        return U.Not(_gen_uitl(rng, al, n - 1))
    if k < 5:
        op = rng.choice([U.BP, U.EPt, U.ShrinkL, U.ShrinkR, U.ExtendR, U.ExtendL])
        return op(_gen_uitl(rng, al, n - 1))
    if n >= 3:
        a, b = _split(rng, n - 1)
        op = rng.choice(U.CHOPS)
        return op(rng.choice(al.letters), _gen_uitl(rng, al, a), _gen_uitl(rng, al, b))
    return U.Atom(rng.choice(al.letters))


def _gen_outer(rng, al, n, level, max_level):
    if n <= 1:
        return R.Atom(rng.choice(al.letters))
    k = rng.randrange(5)
    if k == 0:
        return R.Not(_gen_outer(rng, al, n - 1, level, max_level))
    if k == 1 and n >= 3:
        a, b = _split(rng, n - 1)
        op = R.Or if rng.random() < 0.5 else R.And
        return op(_gen_outer(rng, al, a, level, max_level), _gen_outer(rng, al, b, level, max_level))
    return R.Ref(_gen_rrank(rng, al, n - 1, level, max_level))


def _gen_rrank(rng, al, n, level, max_level):
    if n <= 1:
        return R.TOP
    k = rng.randrange(4)
    if k == 0 or level >= max_level:
        return (R.SP if rng.random() < 0.5 else R.EP)(_gen_rrank(rng, al, n - 1, level, max_level))
    if n >= 3:
        a, b = _split(rng, n - 1)
    else:
        a, b = 1, 1
    op = R.XR if k % 2 else R.YR
    return op(_gen_outer(rng, al, a, level + 1, max_level), _gen_rrank(rng, al, b, level, max_level))


def _letters(rng, al, nonempty=False):
    while True:
        out = frozenset(x for x in al.extended if rng.random() < 0.5)
        if out or not nonempty:
            return out


def _gen_ete(rng, al, n):
    if n <= 1:
        c = rng.randrange(6)
        if c == 0:
            return pd.Acc()
        if c == 1:
            return pd.Rej()
        if c == 2:
            return pd.FUnit(_letters(rng, al))
        if c == 3:
            return pd.BUnit(_letters(rng, al))
        scan = pd.FScan if c == 4 else pd.BScan
        return scan(_letters(rng, al), _letters(rng, al, True))
    k = n - 1
    a = rng.randint(1, max(1, k - 2))
    b = rng.randint(1, max(1, k - a - 1))
    return pd.Cond(_gen_ete(rng, al, a), _gen_ete(rng, al, b), _gen_ete(rng, al, max(1, k - a - b)))


LOGICS = ("tlxy", "tlfp", "duds", "uitlpm", "tlrec", "ete")


def gen_formula(logic: str, budget: int, alphabet: Alphabet, seed, max_modals: int = 3, max_rlevel: int = 2):
    """Seeded random formula of (tree) size at most ``budget``."""
    if budget < 1:
        raise UlError("size budget must be at least 1")
    rng = random.Random(seed)
    n = rng.randint(1, budget)
    if logic == "tlxy":
        return _gen_tlxy(rng, alphabet, n)
    if logic == "tlfp":
        return _gen_tlfp(rng, alphabet, n, [max_modals])
    if logic == "duds":
        return D.Anchored(rng.choice(D.ANCHORS), _gen_duds(rng, alphabet, n))
    if logic == "uitlpm":
        return _gen_uitl(rng, alphabet, n)
    if logic == "tlrec":
        return _gen_outer(rng, alphabet, n, 0, max_rlevel)
    if logic == "ete":
        return _gen_ete(rng, alphabet, n)
    raise UlError(f"unknown logic {logic}")


def gen_recursive_ranker(budget: int, alphabet: Alphabet, seed, max_rlevel: int = 2):
    rng = random.Random(seed)
    return _gen_rrank(rng, alphabet, rng.randint(1, budget), 0, max_rlevel)


# ---------------------------------------------------------------- shrinking


def shrink_word(w: str, fails: Callable[[str], bool]) -> str:
    """Drop letters one at a time while the failure persists."""
    changed = True
    while changed:
        changed = False
        for i in range(len(w)):
            v = w[:i] + w[i + 1:]
            if fails(v):
                w, changed = v, True
                break
    return w


def shrink_formula(f, children: Callable, fails: Callable, same_layer: Callable = lambda g: True):
    """Replace the formula by a proper subterm while the failure persists."""
    changed = True
    while changed:
        changed = False
        todo = list(children(f))
        seen = set()
        while todo:
            g = todo.pop(0)
            if g in seen:
                continue
            seen.add(g)
            if same_layer(g) and fails(g):
                f, changed = g, True
                break
            todo.extend(children(g))
    return f


def smallest_failure(logic: str, alphabet: Alphabet, fails: Callable, budgets=range(1, 11), seeds=range(100)):
    """First failing generated formula, trying small budgets first, then shrunk."""
    if logic == "ete":
        raise UlError("turtle expressions are shrunk by hand")
    kids = {"tlxy": T.children, "tlfp": L.children, "duds": D.children, "uitlpm": U.children, "tlrec": R.children}[logic]
    layer = (lambda g: isinstance(g, R.OUTER)) if logic == "tlrec" else (lambda g: True)
    for b in budgets:
        for s in seeds:
            f = gen_formula(logic, b, alphabet, s)
            if fails(f):
                return shrink_formula(f, kids, fails, layer)
    return None
