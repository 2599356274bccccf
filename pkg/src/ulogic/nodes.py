"""Immutable AST node base with a cached structural hash."""

from __future__ import annotations

import sys
from dataclasses import fields

# translated formulas nest deeply; the default limit is too tight for them
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


def cached_hash(cls):
    """Replace the dataclass hash by one computed once per instance."""
    names = tuple(f.name for f in fields(cls))

    def __hash__(self):
        try:
            return self.__dict__["_h"]
        except KeyError:
            h = hash((cls.__name__,) + tuple(getattr(self, n) for n in names))
            object.__setattr__(self, "_h", h)
            return h

    def __eq__(self, other):
        if self is other:
            return True
        if other.__class__ is not self.__class__ or hash(self) != hash(other):
            return False
        return all(getattr(self, n) == getattr(other, n) for n in names)

    cls.__hash__ = __hash__
    cls.__eq__ = __eq__
    return cls


def tree_size(node, children, memo=None) -> int:
    """Number of nodes of the tree unfolding (shared subterms counted each time)."""
    memo = {} if memo is None else memo
    got = memo.get(node)
    if got is not None:
        return got
    n = 1 + sum(tree_size(c, children, memo) for c in children(node))
    memo[node] = n
    return n


def dag_size(root, children) -> int:
    seen = set()
    todo = [root]
    while todo:
        n = todo.pop()
        if n in seen:
            continue
        seen.add(n)
        todo.extend(children(n))
    return len(seen)
