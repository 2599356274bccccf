"""``ul``: command-line front end.

Exit codes: 0 accept/sat/equivalent/empty, 1 reject/unsat/counterexample/non-empty,
2 usage or input errors, 3 enumeration budget or translation limits exceeded.
"""

from __future__ import annotations

import sys
from collections import deque
from dataclasses import dataclass
from typing import Callable

import click

from . import duds as D
from . import po2dfa as pd
from . import tlfp as L
from . import tlrec as R
from . import tlxy as T
from . import uitlpm as U
from .difftest import equiv_bounded, gen_formula, gen_po2dfa
from .sexpr import (
    LEFT_END,
    RIGHT_END,
    Atom as SAtom,
    BudgetExceeded,
    LimitExceeded,
    UlError,
    atom_text,
    parse_word,
    read_file_forms,
    word_count,
)

LOGICS = ("po2dfa", "ete", "tlxy", "duds", "uitlpm", "tlfp", "tlrec")


class UnsupportedArrow(UlError):
    pass


@dataclass
class Loaded:
    logic: str
    alphabet: object
    obj: object


_LOADERS = {
    "po2dfa": lambda text: (None, pd.load_po2dfa(text)),
    "ete": pd.load_ete,
    "tlxy": T.load,
    "duds": D.load,
    "uitlpm": U.load,
    "tlfp": L.load,
    "tlrec": R.load,
}


def load_text(text: str) -> Loaded:
    _, body = read_file_forms(text)
    head = "" if isinstance(body, SAtom) or not body else atom_text(body[0])
    if head not in _LOADERS:
        raise UlError(f"unrecognised file body ({head} ...)")
    al, obj = _LOADERS[head](text)
    if head == "po2dfa":
        al = obj.alphabet
    return Loaded(head, al, obj)


def dump(x: Loaded) -> str:
    if x.logic == "po2dfa":
        return pd.dump_po2dfa(x.obj)
    if x.logic == "ete":
        return pd.dump_ete(x.obj, x.alphabet)
    mod = {"tlxy": T, "duds": D, "uitlpm": U, "tlfp": L, "tlrec": R}[x.logic]
    return mod.dump(x.obj, x.alphabet)


def size_of(x: Loaded) -> str:
    if x.logic == "po2dfa":
        return f"{len(x.obj)} states"
    if x.logic == "ete":
        return f"{pd.ete_size(x.obj)} nodes"
    mod = {"tlxy": T, "duds": D, "uitlpm": U, "tlfp": L, "tlrec": R}[x.logic]
    return f"{mod.node_count(x.obj)} nodes"


# ---------------------------------------------------------------- translation graph

ARROWS: list = [
    ("tlxy", "po2dfa", lambda f, al: T.to_po2dfa(f, al)),
    ("po2dfa", "duds", lambda m, al: D.from_po2dfa(m)),
    ("duds", "uitlpm", lambda f, al: D.to_uitlpm(f, al)),
    ("uitlpm", "tlxy", lambda d, al: U.to_tlxy(d, al)),
    ("tlfp", "tlxy", lambda f, al: L.to_tlxy(f, al)),
    ("tlfp", "tlrec", lambda f, al: R.from_tlfp(f)),
    ("tlrec", "tlfp", lambda n, al: R.to_tlfp(n, al)),
    ("ete", "po2dfa", lambda e, al: pd.compile_ete(e, al)),
]


def route(src: str, dst: str) -> list:
    """Fewest-hop path; among equal lengths the arrow listed first wins (BFS in list order)."""
    if src not in LOGICS or dst not in LOGICS:
        raise UnsupportedArrow(f"unknown logic in {src}→{dst}")
    prev = {src: None}
    todo = deque([src])
    while todo:
        u = todo.popleft()
        if u == dst:
            break
        for arrow in ARROWS:
            if arrow[0] == u and arrow[1] not in prev:
                prev[arrow[1]] = arrow
                todo.append(arrow[1])
    if dst not in prev:
        raise UnsupportedArrow(f"no translation path from {src} to {dst}")
    path = []
    node = dst
    while prev[node] is not None:
        path.append(prev[node])
        node = prev[node][0]
    return path[::-1]


def translate(x: Loaded, dst: str, report: Callable[[str], None] = lambda s: None) -> Loaded:
    for src, tgt, fn in route(x.logic, dst):
        y = Loaded(tgt, x.alphabet, fn(x.obj, x.alphabet))
        report(f"{src}→{tgt}: {size_of(x)} -> {size_of(y)}")
        x = y
    return x


# ---------------------------------------------------------------- membership


def member_fn(x: Loaded) -> Callable[[str], bool]:
    o = x.obj
    return {
        "po2dfa": lambda w: pd.member(o, w),
        "ete": lambda w: pd.eval_ete(o, w, 1)[0] == "Accept",
        "tlxy": lambda w: T.member(o, w),
        "duds": lambda w: D.member(o, w),
        "uitlpm": lambda w: U.member(o, w),
        "tlfp": lambda w: L.member(o, w),
        "tlrec": lambda w: R.member(o, w),
    }[x.logic]


def nonempty_words(alphabet) -> pd.Po2Dfa:
    """Accepts exactly the words with at least one letter."""
    kinds = {"s": pd.L, "t": pd.ACC, "r": pd.REJ}
    delta = {("s", a): "t" for a in alphabet.letters}
    delta[("s", RIGHT_END)] = "r"
    delta[("s", LEFT_END)] = "r"
    return pd.Po2Dfa(alphabet, kinds, "s", delta)


def as_automaton(x: Loaded) -> pd.Po2Dfa:
    """Automaton for the language of the file; formula languages never contain the empty word."""
    m = translate(x, "po2dfa").obj
    if x.logic not in ("po2dfa", "ete"):
        m = pd.conjoin(m, nonempty_words(x.alphabet))
    return m


# ---------------------------------------------------------------- commands


def _read(path: str) -> Loaded:
    with open(path, encoding="utf-8") as fh:
        return load_text(fh.read())


def _guard(fn):
    """Map library errors onto the exit-code table."""

    def wrapped(*a, **k):
        try:
            return fn(*a, **k)
        except (BudgetExceeded, LimitExceeded) as e:
            click.echo(f"LIMIT {type(e).__name__}: {e}", err=True)
            sys.exit(3)
        except BrokenPipeError:
            sys.exit(0)
        except (UlError, OSError) as e:
            click.echo(f"error: {type(e).__name__}: {e}", err=True)
            sys.exit(2)

    wrapped.__name__ = fn.__name__
    wrapped.__doc__ = fn.__doc__
    return wrapped


@click.group()
def main():
    """Translate, run and compare unambiguous-language logics and po2dfa automata."""


@main.command()
@click.argument("file")
@_guard
def parse(file):
    """Parse FILE and print its canonical form."""
    click.echo(dump(_read(file)), nl=False)


@main.command(name="translate")
@click.argument("src", type=click.Choice(LOGICS))
@click.argument("dst", type=click.Choice(LOGICS))
@click.argument("file")
@_guard
def translate_cmd(src, dst, file):
    """Translate FILE from SRC to DST, composing arrows when needed."""
    x = _read(file)
    if x.logic != src:
        raise UlError(f"{file} holds a {x.logic} body, not {src}")
    hops = []
    y = translate(x, dst, hops.append)
    for h in hops:
        click.echo(f"; {h}")
    click.echo(dump(y), nl=False)


@main.command()
@click.argument("logic", type=click.Choice(LOGICS))
@click.argument("word")
@click.argument("file")
@click.option("--trace", is_flag=True, help="print the run (po2dfa only)")
@_guard
def member(logic, word, file, trace):
    """Decide whether WORD belongs to the language of FILE."""
    x = _read(file)
    if x.logic != logic:
        raise UlError(f"{file} holds a {x.logic} body, not {logic}")
    w = parse_word(word, x.alphabet)
    if trace:
        if logic != "po2dfa":
            raise UlError("--trace is only available for po2dfa files")
        run = pd.run(x.obj, w)
        for q, p in run.steps:
            click.echo(f"; {q} @ {p}")
        ok = run.verdict == "Accept"
    else:
        ok = member_fn(x)(w)
    click.echo(f"{'ACCEPT' if ok else 'REJECT'} {w!s}".rstrip())
    sys.exit(0 if ok else 1)


@main.command()
@click.argument("file")
@click.option("--bound", type=int, default=None, help="longest word considered (default: exact, all lengths)")
@click.option("--strategy", type=click.Choice(L.STRATEGIES), default="enumerate", help="tlfp only")
@click.option("--max-modals", type=int, default=L.DEFAULT_MAX_MODALS, help="tlfp only")
@click.option("--word-bound", type=int, default=8, help="tlfp bounded-model only")
@_guard
def sat(file, bound, strategy, max_modals, word_bound):
    """Look for a word satisfying FILE."""
    x = _read(file)
    if x.logic in ("tlfp", "tlrec"):
        phi = x.obj if x.logic == "tlfp" else R.to_tlfp(x.obj, x.alphabet)
        res = L.sat(phi, x.alphabet, strategy=strategy, max_modals=max_modals, word_bound=word_bound)
        if isinstance(res, L.Witness):
            click.echo(f"SAT witness={res.word}")
            sys.exit(0)
        click.echo(f"UNSAT≤{'∞' if res.bound is None else res.bound}")
        sys.exit(1)
    m = as_automaton(x)
    if bound is None:
        w = pd.shortest_witness(m)
    else:
        res = pd.emptiness(m, bound, method="exact")
        w = res.witness if isinstance(res, pd.NonEmpty) else None
    if w is not None:
        if not member_fn(x)(w):
            raise UlError(f"internal: witness {w!r} rejected by the source")
        click.echo(f"SAT witness={w}")
        sys.exit(0)
    click.echo(f"UNSAT≤{'∞' if bound is None else bound}")
    sys.exit(1)


@main.command()
@click.argument("file")
@click.option("--bound", type=int, default=None, help="default: number of states")
@click.option("--method", type=click.Choice(["enumerate", "exact"]), default="enumerate")
@_guard
def empty(file, bound, method):
    """Emptiness up to a word-length bound."""
    m = as_automaton(_read(file))
    res = pd.emptiness(m, bound, method=method)
    if isinstance(res, pd.EmptyUpTo):
        click.echo(f"EMPTY up to bound {res.bound}")
        sys.exit(0)
    click.echo(f"NONEMPTY witness={res.witness}")
    sys.exit(1)


@main.command()
@click.argument("file_a")
@click.argument("file_b")
@click.option("--bound", type=int, default=6, show_default=True)
@_guard
def equiv(file_a, file_b, bound):
    """Compare two files on every word up to --bound letters."""
    a, b = _read(file_a), _read(file_b)
    if a.alphabet != b.alphabet:
        raise UlError(f"alphabets differ: {a.alphabet} vs {b.alphabet}")
    rep = equiv_bounded(member_fn(a), member_fn(b), a.alphabet, bound)
    if rep.equivalent:
        click.echo(f"EQUIVALENT ({rep.checked} words)")
        sys.exit(0)
    c = rep.counterexample
    click.echo(f"COUNTEREXAMPLE word={c.word} left={int(c.lhs)} right={int(c.rhs)}")
    sys.exit(1)


@main.command()
@click.argument("file")
@_guard
def dot(file):
    """Graphviz rendering of the automaton for FILE."""
    click.echo(pd.to_dot(translate(_read(file), "po2dfa").obj), nl=False)


@main.command()
@click.argument("src", type=click.Choice(LOGICS))
@click.argument("dst", type=click.Choice(LOGICS))
@click.option("--alphabet", "letters", default="ab", show_default=True)
@click.option("--count", type=int, default=50, show_default=True)
@click.option("--size", type=int, default=8, show_default=True)
@click.option("--bound", type=int, default=5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_guard
def fuzz(src, dst, letters, count, size, bound, seed):
    """Random differential test of the SRC→DST translation."""
    from .sexpr import Alphabet

    al = Alphabet(list(letters))
    route(src, dst)
    budget = word_count(al, bound)
    if budget > pd.enum_budget():
        raise BudgetExceeded(f"{budget} words exceed the enumeration budget")
    for k in range(count):
        if src == "po2dfa":
            obj = gen_po2dfa(max(3, size), al, seed * 100003 + k)
        else:
            obj = gen_formula(src, size, al, seed * 100003 + k)
        x = Loaded(src, al, obj)
        y = translate(x, dst)
        p, q = member_fn(x), member_fn(y)
        # formula logics reject the empty word, automata may not
        rep = equiv_bounded(lambda w: bool(w) and p(w), lambda w: bool(w) and q(w), al, bound)
        if not rep.equivalent:
            click.echo(f"COUNTEREXAMPLE case={k} word={rep.counterexample.word}")
            click.echo(dump(x), nl=False)
            sys.exit(1)
    click.echo(f"EQUIVALENT ({count} cases, {budget} words each)")
    sys.exit(0)


if __name__ == "__main__":
    main()
