"""Unary temporal logic with strict future/past, and its translation into the deterministic logic."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterator, Optional

from . import tlxy as T
from .nodes import cached_hash, dag_size, tree_size
from .sexpr import Alphabet, Atom as SAtom, BudgetExceeded, LimitExceeded, ParseError, UlError, atom_text, check_letter, print_sexpr, read_file_forms
from .po2dfa import enum_budget, NonEmpty


def _node(cls):
    return cached_hash(dataclass(frozen=True, eq=False)(cls))


@_node
class Atom:
    a: str


@_node
class F:
    f: object


@_node
class P:
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


MODAL = (F, P)


def children(n) -> tuple:
    if isinstance(n, (Or, And)):
        return (n.l, n.r)
    if isinstance(n, (F, P, Not)):
        return (n.f,)
    return ()


def size(f) -> int:
    return tree_size(f, children)


def node_count(f) -> int:
    return dag_size(f, children)


def modal_depth(f) -> int:
    memo: dict = {}

    def go(n):
        if n in memo:
            return memo[n]
        d = max((go(c) for c in children(n)), default=0) + (1 if isinstance(n, MODAL) else 0)
        memo[n] = d
        return d

    return go(f)


def modals(f) -> list:
    """Distinct modal subformulas (f included), children before parents."""
    out: list = []
    seen = set()

    def go(n):
        if n in seen:
            return
        seen.add(n)
        for c in children(n):
            go(c)
        if isinstance(n, MODAL):
            out.append(n)

    go(f)
    return out


def immediate(f) -> list:
    """Modal subformulas of f's body not nested under another modality."""
    out: list = []
    seen = set()

    def go(n):
        if n in seen:
            return
        seen.add(n)
        if isinstance(n, MODAL):
            out.append(n)
            return
        for c in children(n):
            go(c)

    for c in (children(f) if isinstance(f, MODAL) else (f,)):
        go(c)
    return out


# ---------------------------------------------------------------- semantics


def sat_mask(f, w: str, memo: Optional[dict] = None) -> int:
    """Positions of the non-empty word w where f holds, as a bitmask (bit i-1 for position i)."""
    return _sat(f, w, len(w), {} if memo is None else memo)


def _sat(f, w, n, memo):
    got = memo.get(f)
    if got is not None:
        return got
    full = (1 << n) - 1
    t = type(f)
    if t is Atom:
        r = 0
        for i, x in enumerate(w):
            if x == f.a:
                r |= 1 << i
    elif t is Or:
        r = _sat(f.l, w, n, memo) | _sat(f.r, w, n, memo)
    elif t is And:
        r = _sat(f.l, w, n, memo) & _sat(f.r, w, n, memo)
    elif t is Not:
        r = full & ~_sat(f.f, w, n, memo)
    elif t is F:
        s = _sat(f.f, w, n, memo)
        r = (1 << (s.bit_length() - 1)) - 1 if s else 0
    else:
        s = _sat(f.f, w, n, memo)
        r = full & ~((((s & -s) << 1)) - 1) if s else 0
    memo[f] = r
    return r


def evaluate(f, w: str, i: int) -> bool:
    if not w or not 1 <= i <= len(w):
        raise UlError(f"position {i} outside the word")
    return bool((sat_mask(f, w) >> (i - 1)) & 1)


def member(f, w: str) -> bool:
    return bool(w) and bool(sat_mask(f, w) & 1)


def dpos(psi, w: str, memo: Optional[dict] = None) -> Optional[int]:
    """Last (future type) or first (past type) position where psi holds."""
    if not isinstance(psi, MODAL):
        raise UlError("defining positions exist for modal subformulas only")
    if not w:
        return None
    s = sat_mask(psi, w, memo)
    if not s:
        return None
    return s.bit_length() if isinstance(psi, F) else (s & -s).bit_length()


# ---------------------------------------------------------------- region templates


@dataclass(frozen=True)
class Region:
    kind: str  # "I" or "F"
    tau: tuple  # modal subformulas pinned here (F-regions only)
    alpha: frozenset
    left: tuple  # letters by first appearance from the left
    right: tuple  # letters by first appearance from the right


@dataclass(frozen=True)
class Template:
    regions: tuple

    def reg(self, psi) -> int:
        for k, r in enumerate(self.regions):
            if psi in r.tau:
                return k
        raise UlError("subformula not placed in this template")

    def first_letter(self) -> str:
        return self.regions[0].left[0]


def region_orders(s: str):
    left = tuple(dict.fromkeys(s))
    right = tuple(dict.fromkeys(reversed(s)))
    return frozenset(s), left, right


def _segment(s: str, kind="I", tau=()):
    alpha, left, right = region_orders(s)
    return Region(kind, tau, alpha, left, right)


def template_from_positions(placed: dict, w: str, order: dict) -> Template:
    """Template of w for the modal subformulas in ``placed`` (subformula -> defining position)."""
    by_pos: dict = {}
    for z, p in placed.items():
        by_pos.setdefault(p, []).append(z)
    cuts = sorted(by_pos)
    regions = []
    prev = 0
    for k, p in enumerate(cuts):
        gap = w[prev:p - 1]
        if gap or k > 0:
            regions.append(_segment(gap))
        regions.append(_segment(w[p - 1], "F", tuple(sorted(by_pos[p], key=order.__getitem__))))
        prev = p
    if prev < len(w) or not cuts:
        regions.append(_segment(w[prev:]))
    return Template(tuple(regions))


def region_index(placed: dict, w: str) -> list:
    """Region number of each position 1..#w, laid out as in ``template_from_positions``."""
    cuts = sorted(set(placed.values()))
    out = []
    k = -1
    prev = 0
    for j, p in enumerate(cuts):
        if p - 1 > prev or j > 0:
            k += 1
            out.extend([k] * (p - 1 - prev))
        k += 1
        out.append(k)
        prev = p
    if prev < len(w) or not cuts:
        k += 1
        out.extend([k] * (len(w) - prev))
    return out


@dataclass(frozen=True)
class Params:
    """Defined subformulas plus one template per host (host -> Template or None when left open)."""

    delta: frozenset
    theta: tuple  # ((host, Template | None), ...)

    def template(self, host) -> Optional[Template]:
        for h, t in self.theta:
            if h == host:
                return t
        raise UlError("no template for this host")


def _structure(phi):
    """Modal list with indices, host list (modal hosts, then phi if it is not modal)."""
    ms = modals(phi)
    order = {m: k for k, m in enumerate(ms)}
    hosts = list(ms) + ([] if isinstance(phi, MODAL) else [phi])
    return ms, order, hosts


def extract_params(phi, w: str) -> Params:
    """The unique parameters the non-empty word w conforms to."""
    if not w:
        raise UlError("parameters are defined for non-empty words")
    ms, order, hosts = _structure(phi)
    memo: dict = {}
    dp = {m: dpos(m, w, memo) for m in ms}
    delta = frozenset(m for m in ms if dp[m] is not None)
    theta = []
    for h in hosts:
        placed = {z: dp[z] for z in immediate(h) if z in delta}
        theta.append((h, template_from_positions(placed, w, order)))
    return Params(delta, tuple(theta))


def conforms(phi, w: str, params: Params) -> bool:
    got = extract_params(phi, w)
    if got.delta != params.delta:
        return False
    return all(t is None or got.template(h) == t for h, t in params.theta)


# ---------------------------------------------------------------- Def sets and rankers


def _def(f, tpl: Template, delta, alphabet_letters) -> dict:
    """region index -> letter set where the boolean formula f holds."""
    regs = tpl.regions
    t = type(f)
    if t is Atom:
        return {k: frozenset((f.a,)) for k, r in enumerate(regs) if f.a in r.alpha}
    if t in MODAL:
        if f not in delta:
            return {}
        at = tpl.reg(f)
        keep = range(0, at + 1) if t is F else range(at, len(regs))
        return {k: regs[k].alpha for k in keep if regs[k].alpha}
    if t is Not:
        inner = _def(f.f, tpl, delta, alphabet_letters)
        out = {}
        for k, r in enumerate(regs):
            rest = r.alpha - inner.get(k, frozenset())
            if rest:
                out[k] = rest
        return out
    a = _def(f.l, tpl, delta, alphabet_letters)
    b = _def(f.r, tpl, delta, alphabet_letters)
    if t is And:
        out = {}
        for k in a.keys() & b.keys():
            both = a[k] & b[k]
            if both:
                out[k] = both
        return out
    out = dict(a)
    for k, s in b.items():
        out[k] = out.get(k, frozenset()) | s
    return out


def def_set(phi_sub, params: Params, host) -> frozenset:
    """Pairs (region index, letters) marking where the boolean subformula holds on conforming words."""
    tpl = params.template(host)
    d = _def(phi_sub, tpl, params.delta, None)
    return frozenset(d.items())


class NeverRanker:
    """Ranker that accepts nowhere."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "NEVER"

    def formula(self, alphabet: Alphabet):
        xa = T.X(alphabet.letters[0], T.TOP)
        return T.SP(T.And(xa, T.Not(xa)))


NEVER = NeverRanker()


def _then(r, *mods):
    """Extend ranker r by unit-style steps given as constructors (letter first where needed)."""
    if r is NEVER:
        return NEVER
    tail = T.TOP
    for m in reversed(mods):
        tail = m(tail)
    return T.seq_compose(r, tail)


def _ranker_for(psi, tpl: Template, delta, D: dict):
    d = _def(psi.f, tpl, delta, None)
    if not d:
        return NEVER
    regs = tpl.regions
    fwd = isinstance(psi, F)
    k = max(d) if fwd else min(d)
    r = regs[k]
    if r.kind == "F":
        return _then(D[r.tau[0]], T.Y1 if fwd else T.X1)
    if fwd:
        p = next(x for x in r.right if x in d[k])
        if k == len(regs) - 1:
            return T.EP(T.WY(p, T.Y1(T.TOP)))
        return _then(D[regs[k + 1].tau[0]], lambda g: T.Y(p, g), T.Y1)
    p = next(x for x in r.left if x in d[k])
    if k == 0:
        return T.SP(T.WX(p, T.X1(T.TOP)))
    return _then(D[regs[k - 1].tau[0]], lambda g: T.X(p, g), T.X1)


def rankers(phi, params: Params) -> dict:
    """Ranker (or NEVER) for every modal subformula, built bottom-up."""
    D: dict = {}
    for m in modals(phi):
        D[m] = _ranker_for(m, params.template(m), params.delta, D)
    return D


def build_ranker(psi, phi, params: Params):
    return rankers(phi, params)[psi]


# ---------------------------------------------------------------- validity formulas


def _at(r, f):
    return T.BOT if r is NEVER else T.seq_compose(r, f)


def _rel(r, op, alphabet):
    return T.BOT if r is NEVER else T.directionality(r, op, alphabet)


def _truth(r, alphabet):
    return r.formula(alphabet) if r is NEVER else r


def dvalid(phi, params: Params, alphabet: Alphabet, D: Optional[dict] = None):
    D = rankers(phi, params) if D is None else D
    parts = []
    for m in modals(phi):
        test = _truth(D[m], alphabet)
        parts.append(test if m in params.delta else T.mk_not(test))
    return T.mk_and(*parts)


def _template_check(tpl: Template, D: dict, alphabet: Alphabet):
    letters = alphabet.letters
    regs = tpl.regions
    n = len(regs)
    out = []
    anchor = [D[r.tau[0]] if r.kind == "F" else None for r in regs]
    fks = [k for k in range(n) if regs[k].kind == "F"]
    # placement of the pinned positions
    for k in fks:
        tau = regs[k].tau
        for z, x in zip(tau, tau[1:]):
            out.append(_at(D[z], _rel(D[x], "<=", alphabet)))
            out.append(_at(D[x], _rel(D[z], "<=", alphabet)))
    for k1, k2 in zip(fks, fks[1:]):
        out.append(_at(anchor[k1], _rel(anchor[k2], "<", alphabet)))
    if fks:
        first, last = anchor[fks[0]], anchor[fks[-1]]
        out.append(_at(first, T.Y1(T.TOP)) if fks[0] > 0 else _at(first, T.at_first(letters)))
        out.append(_at(last, T.X1(T.TOP)) if fks[-1] < n - 1 else _at(last, T.at_last(letters)))
    # letters and their orders
    for k, r in enumerate(regs):
        if r.kind == "F":
            (c,) = r.alpha
            out.append(_at(anchor[k], T.Atom(c)))
            continue
        lo = anchor[k - 1] if k > 0 else None
        hi = anchor[k + 1] if k < n - 1 else None

        def occurs(a):
            if lo is not None and hi is not None:
                return _at(lo, T.X(a, _rel(hi, "<", alphabet)))
            if hi is not None:
                return _at(hi, T.Y(a, T.TOP))
            if lo is not None:
                return _at(lo, T.X(a, T.TOP))
            return T.SP(T.WX(a, T.TOP))

        for a in letters:
            out.append(occurs(a) if a in r.alpha else T.mk_not(occurs(a)))

        def first_seen(b):
            return _then(lo, lambda g: T.X(b, g)) if lo is not None else T.SP(T.WX(b, T.TOP))

        def last_seen(b):
            return _then(hi, lambda g: T.Y(b, g)) if hi is not None else T.EP(T.WY(b, T.TOP))

        for b1, b2 in zip(r.left, r.left[1:]):
            out.append(_at(first_seen(b1), _rel(first_seen(b2), "<", alphabet)))
        for b1, b2 in zip(r.right, r.right[1:]):
            out.append(_at(last_seen(b1), _rel(last_seen(b2), ">", alphabet)))
    return T.mk_and(*out)


def tvalid(phi, params: Params, alphabet: Alphabet, D: Optional[dict] = None):
    D = rankers(phi, params) if D is None else D
    return T.mk_and(*(_template_check(t, D, alphabet) for _, t in params.theta if t is not None))


def _top_shape(phi, D, alphabet):
    memo: dict = {}

    def go(n):
        if n in memo:
            return memo[n]
        t = type(n)
        if t is Atom:
            r = T.Atom(n.a)
        elif t is F:
            r = _truth(D[n], alphabet)
        elif t is P:
            r = _at(D[n], T.at_first(alphabet.letters))
        elif t is Not:
            r = T.mk_not(go(n.f))
        elif t is Or:
            r = T.mk_or(go(n.l), go(n.r))
        else:
            r = T.mk_and(go(n.l), go(n.r))
        memo[n] = r
        return r

    return go(phi)


def trans_disjunct(phi, params: Params, alphabet: Alphabet):
    D = rankers(phi, params)
    return T.mk_and(dvalid(phi, params, alphabet, D), tvalid(phi, params, alphabet, D), _top_shape(phi, D, alphabet))


# ---------------------------------------------------------------- parameter enumeration


DEFAULT_MAX_MODALS = 3
DEFAULT_MAX_LETTERS = 3
DEFAULT_MAX_PARAMS = 10**6


def _filled_options(letters) -> list:
    out = []
    for k in range(1, len(letters) + 1):
        for alpha in itertools.combinations(letters, k):
            for left in itertools.permutations(alpha):
                for right in itertools.permutations(alpha):
                    out.append(Region("I", (), frozenset(alpha), left, right))
    return out


def _ordered_partitions(items: list) -> Iterator[list]:
    k = len(items)
    for labels in itertools.product(range(k), repeat=k):
        used = set(labels)
        if used != set(range(len(used))):
            continue
        blocks = [[] for _ in range(len(used))]
        for it, lab in zip(items, labels):
            blocks[lab].append(it)
        yield blocks


_EMPTY_I = Region("I", (), frozenset(), (), ())


def templates(placed: list, letters: tuple) -> Iterator[Template]:
    """Every template over the modal subformulas in ``placed`` (already in canonical order)."""
    filled = _filled_options(letters)
    if not placed:
        for r in filled:
            yield Template((r,))
        return
    for blocks in _ordered_partitions(placed):
        b = len(blocks)
        for fl in itertools.product(letters, repeat=b):
            fregs = [Region("F", tuple(bl), frozenset((c,)), (c,), (c,)) for bl, c in zip(blocks, fl)]
            for lead in [None] + filled:
                for mids in itertools.product([_EMPTY_I] + filled, repeat=b - 1):
                    for trail in [None] + filled:
                        regs = [] if lead is None else [lead]
                        for k, fr in enumerate(fregs):
                            if k:
                                regs.append(mids[k - 1])
                            regs.append(fr)
                        if trail is not None:
                            regs.append(trail)
                        yield Template(tuple(regs))


def _template_count(k: int, s: int) -> int:
    filled = sum(comb(s, j) * factorial(j) ** 2 for j in range(1, s + 1))
    if k == 0:
        return filled
    total = 0
    for b in range(1, k + 1):
        surj = sum((-1) ** j * comb(b, j) * (b - j) ** k for j in range(b + 1))
        total += surj * s**b * (filled + 1) ** (b + 1)
    return total


def _merge(parts: list) -> Region:
    alpha = frozenset().union(*(p.alpha for p in parts)) if parts else frozenset()
    left = tuple(dict.fromkeys(x for p in parts for x in p.left))
    right = tuple(dict.fromkeys(x for p in reversed(parts) for x in p.right))
    return Region("I", (), alpha, left, right)


def project(master: Template, keep: set) -> Template:
    """Coarsen a template to the subformulas in ``keep``."""
    out = []
    pending: list = []
    seen_f = False
    for r in master.regions:
        tau = tuple(z for z in r.tau if z in keep)
        if r.kind == "F" and tau:
            if pending or seen_f:
                out.append(_merge(pending))
            out.append(Region("F", tau, r.alpha, r.left, r.right))
            pending = []
            seen_f = True
        else:
            pending.append(r)
    if pending or not seen_f:
        out.append(_merge(pending))
    return Template(tuple(out))


def _pinned(phi) -> list:
    ms, order, hosts = _structure(phi)
    pins = set()
    for h in ms:
        pins.update(immediate(h))
    return sorted(pins, key=order.__getitem__)


def param_space_size(phi, alphabet: Alphabet) -> int:
    ms = modals(phi)
    pins = set(_pinned(phi))
    s = len(alphabet)
    total = 0
    for mask in range(1 << len(ms)):
        k = sum(1 for j, m in enumerate(ms) if mask >> j & 1 and m in pins)
        total += _template_count(k, s)
    return total


def _check_limits(phi, alphabet, max_modals, max_letters, max_params):
    n = len(modals(phi))
    if n > max_modals:
        raise LimitExceeded(f"{n} modal subformulas exceed the limit {max_modals}")
    if len(alphabet) > max_letters:
        raise LimitExceeded(f"alphabet of {len(alphabet)} letters exceeds the limit {max_letters}")
    space = param_space_size(phi, alphabet)
    if space > max_params:
        raise LimitExceeded(f"parameter space has {space} candidates, limit {max_params}")
    return space


def _forced(psi, tpl: Template, delta) -> Optional[bool]:
    """Whether psi must (True) or cannot (False) be defined, when the template decides it."""
    d = _def(psi.f, tpl, delta, None)
    if not d:
        return False
    regs = tpl.regions
    if isinstance(psi, F):
        k = max(d)
        if k > 0:
            return True
    else:
        k = min(d)
        if k < len(regs) - 1:
            return True
    return False if regs[k].kind == "F" else None


def _top_value(phi, delta, first: str) -> bool:
    t = type(phi)
    if t is Atom:
        return phi.a == first
    if t is F:
        return phi in delta
    if t is P:
        return False
    if t is Not:
        return not _top_value(phi.f, delta, first)
    if t is Or:
        return _top_value(phi.l, delta, first) or _top_value(phi.r, delta, first)
    return _top_value(phi.l, delta, first) and _top_value(phi.r, delta, first)


def iter_params(phi, alphabet: Alphabet, open_top: bool = True, require_top: bool = False) -> Iterator[Params]:
    """Candidate parameters, with the unrealizable ones that are cheap to spot left out.

    Host templates are all projections of one template over every pinned subformula, so
    they agree with each other. With ``open_top`` the top formula's own template is left
    open (None); ``require_top`` keeps only candidates under which the top formula holds.
    """
    ms, order, hosts = _structure(phi)
    pins = _pinned(phi)
    letters = alphabet.letters
    seen = set()
    for mask in range(1 << len(ms)):
        delta = frozenset(m for j, m in enumerate(ms) if mask >> j & 1)
        placed = [z for z in pins if z in delta]
        for master in templates(placed, letters):
            if require_top and not _top_value(phi, delta, master.first_letter()):
                continue
            theta = []
            ok = True
            for h in hosts:
                if h is phi and not isinstance(phi, MODAL) and open_top:
                    theta.append((h, None))
                    continue
                keep = {z for z in immediate(h) if z in delta}
                tpl = project(master, keep)
                if isinstance(h, MODAL):
                    f = _forced(h, tpl, delta)
                    if f is not None and f != (h in delta):
                        ok = False
                        break
                theta.append((h, tpl))
            if not ok:
                continue
            p = Params(delta, tuple(theta))
            if p in seen:
                continue
            seen.add(p)
            yield p


def trans_full(phi, alphabet: Alphabet, max_modals: int = DEFAULT_MAX_MODALS, max_letters: int = DEFAULT_MAX_LETTERS,
               max_params: int = DEFAULT_MAX_PARAMS):
    """Disjunction of the per-parameter formulas; language-equivalent to phi on non-empty words."""
    _check_limits(phi, alphabet, max_modals, max_letters, max_params)
    parts = [trans_disjunct(phi, p, alphabet) for p in iter_params(phi, alphabet, open_top=True, require_top=True)]
    return T.mk_or(*parts)


def to_tlxy(phi, alphabet: Alphabet, **limits):
    return trans_full(phi, alphabet, **limits)


# ---------------------------------------------------------------- satisfiability


@dataclass(frozen=True)
class Witness:
    word: str
    strategy: str


@dataclass(frozen=True)
class EmptyUpTo:
    bound: Optional[int]  # None: no word of any length
    strategy: str


STRATEGIES = ("enumerate", "bounded-model")


def sat(phi, alphabet: Alphabet, strategy: str = "enumerate", max_modals: int = DEFAULT_MAX_MODALS,
        word_bound: int = 8, budget: Optional[int] = None, max_params: int = DEFAULT_MAX_PARAMS):
    if strategy == "bounded-model":
        budget = enum_budget() if budget is None else budget
        count = 0
        for n in range(1, word_bound + 1):
            count += len(alphabet) ** n
            if count > budget:
                raise BudgetExceeded(f"words up to length {n} exceed the enumeration budget {budget}")
            for tup in itertools.product(alphabet.letters, repeat=n):
                w = "".join(tup)
                if member(phi, w):
                    return Witness(w, strategy)
        return EmptyUpTo(word_bound, strategy)
    if strategy != "enumerate":
        raise UlError(f"unknown strategy {strategy}")
    _check_limits(phi, alphabet, max_modals, DEFAULT_MAX_LETTERS, max_params)
    for p in iter_params(phi, alphabet, open_top=True, require_top=True):
        res = T.sat(trans_disjunct(phi, p, alphabet), alphabet, method="exact", bound=None)
        if isinstance(res, NonEmpty):
            if not member(phi, res.witness):
                raise UlError(f"internal: disjunct witness {res.witness!r} does not satisfy the formula")
            return Witness(res.witness, strategy)
    return EmptyUpTo(None, strategy)


# ---------------------------------------------------------------- concrete syntax


def from_sexpr(e, alphabet: Alphabet):
    if isinstance(e, SAtom) or not e:
        raise ParseError("expected a tlfp form")
    head = atom_text(e[0])
    args = e[1:]
    if head == "atom" and len(args) == 1:
        return Atom(check_letter(atom_text(args[0]), alphabet))
    if head in ("f", "p", "not") and len(args) == 1:
        return {"f": F, "p": P, "not": Not}[head](from_sexpr(args[0], alphabet))
    if head in ("or", "and") and len(args) >= 2:
        parts = [from_sexpr(x, alphabet) for x in args]
        out = parts[0]
        for q in parts[1:]:
            out = (Or if head == "or" else And)(out, q)
        return out
    raise ParseError(f"malformed tlfp form ({head} ...)")


def to_sexpr(f):
    t = type(f)
    if t is Atom:
        return (SAtom("atom"), SAtom(f.a))
    if t in (F, P, Not):
        return (SAtom(t.__name__.lower()), to_sexpr(f.f))
    return (SAtom(t.__name__.lower()), to_sexpr(f.l), to_sexpr(f.r))


def load(text: str):
    alphabet, body = read_file_forms(text)
    if isinstance(body, SAtom) or atom_text(body[0]) != "tlfp" or len(body) != 2:
        raise ParseError("expected (tlfp <body>)")
    return alphabet, from_sexpr(body[1], alphabet)


def dump(f, alphabet: Alphabet) -> str:
    return print_sexpr(alphabet.to_sexpr()) + "\n" + print_sexpr((SAtom("tlfp"), to_sexpr(f))) + "\n"


def show(f) -> str:
    t = type(f)
    if t is Atom:
        return f.a
    if t in (F, P):
        return f"{t.__name__}({show(f.f)})"
    if t is Not:
        return f"!{show(f.f)}"
    op = " | " if t is Or else " & "
    return f"({show(f.l)}{op}{show(f.r)})"
