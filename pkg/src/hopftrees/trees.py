"""Rooted and planar rooted trees: canonical forms, codecs, enumeration, statistics.

Conventions used throughout the package:

* |t| is the number of vertices of a tree; a tree of n+1 vertices has degree n.
* Planar trees with n non-root vertices are encoded by balanced bracket
  arrangements (BBAs) of weight n over ASCII '<' and '>'.
* Rooted trees are stored in a canonical form: the children of every vertex
  are sorted by (vertex count, then recursively by the sorted child keys),
  so structural equality coincides with tree isomorphism.
* Forests are graded by total vertex count.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache
from math import comb, factorial

DEFAULT_MAX_DEGREE = 10
CUT_VERTEX_CAP = 8


def degree_ceiling() -> int:
    """Hard enumeration ceiling; HOPFTREES_MAX_DEGREE overrides the default."""
    env = os.environ.get("HOPFTREES_MAX_DEGREE")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_MAX_DEGREE


class BBAParseError(ValueError):
    """Malformed balanced bracket arrangement; ``offset`` is the 0-based position."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"offset {offset}: {message}")
        self.offset = offset
        self.reason = message


class ResourceLimitError(RuntimeError):
    """Requested enumeration or cut expansion exceeds the configured bound."""


class PlanarTree:
    """Planar rooted tree: an ordered sequence of planar subtrees under a root.

    Equality and hashing are by the BBA string, which determines the tree.
    """

    __slots__ = ("children", "size", "bba", "_hash")

    def __init__(self, children=()):
        self.children = tuple(children)
        self.size = 1 + sum(c.size for c in self.children)
        self.bba = "".join("<" + c.bba + ">" for c in self.children)
        self._hash = hash(("P", self.bba))

    @property
    def sort_key(self):
        return (self.size, self.bba)

    def __eq__(self, other):
        return isinstance(other, PlanarTree) and self.bba == other.bba

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"PlanarTree({self.bba!r})"


class RootedTree:
    """Rooted tree in canonical form; children are sorted on construction."""

    __slots__ = ("children", "size", "key", "_hash")

    def __init__(self, children=()):
        kids = sorted(children, key=lambda c: c.key)
        self.children = tuple(kids)
        self.size = 1 + sum(c.size for c in kids)
        self.key = (self.size, tuple(c.key for c in kids))
        self._hash = hash(("R", self.key))

    @property
    def sort_key(self):
        return self.key

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.key == other.key

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"RootedTree({to_planar(self).bba!r})"


class Forest:
    """Commutative monomial of rooted trees, stored as a canonically sorted tuple."""

    __slots__ = ("trees", "weight", "_hash")

    def __init__(self, trees=()):
        ts = sorted(trees, key=lambda t: t.key)
        self.trees = tuple(ts)
        self.weight = sum(t.size for t in ts)
        self._hash = hash(("F", tuple(t.key for t in ts)))

    @property
    def sort_key(self):
        return (self.weight, tuple(t.key for t in self.trees))

    def mul(self, other: "Forest") -> "Forest":
        return Forest(self.trees + other.trees)

    def __eq__(self, other):
        return isinstance(other, Forest) and self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Forest({[to_planar(t).bba for t in self.trees]!r})"


class OrderedForest:
    """Ordered sequence of planar rooted trees; the H_F monomial basis."""

    __slots__ = ("trees", "weight", "_hash")

    def __init__(self, trees=()):
        self.trees = tuple(trees)
        self.weight = sum(t.size for t in self.trees)
        self._hash = hash(("OF", tuple(t.bba for t in self.trees)))

    @property
    def sort_key(self):
        return (self.weight, tuple(t.sort_key for t in self.trees))

    def mul(self, other: "OrderedForest") -> "OrderedForest":
        return OrderedForest(self.trees + other.trees)

    def reverse(self) -> "OrderedForest":
        return OrderedForest(self.trees[::-1])

    def __eq__(self, other):
        return isinstance(other, OrderedForest) and self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"OrderedForest({[t.bba for t in self.trees]!r})"


DOT = RootedTree()
PDOT = PlanarTree()
EMPTY_FOREST = Forest()
EMPTY_ORDERED = OrderedForest()


def bba_decode(s: str) -> PlanarTree:
    """Parse a balanced bracket arrangement into the planar tree it encodes.

    The empty string decodes to the single-vertex tree; each top-level
    bracket pair becomes one root branch.
    """
    stack = [[]]
    for i, ch in enumerate(s):
        if ch == "<":
            stack.append([])
        elif ch == ">":
            if len(stack) == 1:
                raise BBAParseError(i, "unmatched '>'")
            kids = stack.pop()
            stack[-1].append(PlanarTree(kids))
        else:
            raise BBAParseError(i, f"invalid character {ch!r}")
    if len(stack) > 1:
        raise BBAParseError(len(s), "unclosed '<'")
    return PlanarTree(stack[0])


def bba_encode(tree: PlanarTree) -> str:
    return tree.bba


def canonicalize(tree: PlanarTree) -> RootedTree:
    """Forget the child order of a planar tree."""
    return RootedTree(canonicalize(c) for c in tree.children)


def to_planar(t: RootedTree) -> PlanarTree:
    """The canonical planar realization: children laid out in canonical order."""
    return PlanarTree(to_planar(c) for c in t.children)


@lru_cache(maxsize=None)
def sym_order(t: RootedTree) -> int:
    """|Sym(t)|: the order of the automorphism group of the rooted tree.

    Equals the product over vertices of m_1! m_2! ... where the m_j are the
    multiplicities of isomorphic subtrees among the vertex's children.
    """
    order = 1
    run = 0
    prev = None
    for c in t.children:
        order *= sym_order(c)
        if c == prev:
            run += 1
        else:
            run = 1
            prev = c
        order *= run  # accumulates run! across the run of equal children
    return order


def child_factorial_product(t) -> int:
    """Product of c(v)! over all vertices; accepts rooted or planar trees."""
    return factorial(len(t.children)) * _prod(
        child_factorial_product(c) for c in t.children
    )


def _prod(it):
    out = 1
    for x in it:
        out *= x
    return out


@lru_cache(maxsize=None)
def embedding_count(t: RootedTree) -> int:
    """e(t): the number of planar trees whose underlying rooted tree is t."""
    total = child_factorial_product(t)
    order = sym_order(t)
    assert total % order == 0
    return total // order


@lru_cache(maxsize=None)
def planar_realizations(t: RootedTree) -> tuple:
    """All planar trees T with canonicalize(T) == t; length equals e(t)."""
    if not t.children:
        return (PDOT,)
    arrangements = sorted(
        set(itertools.permutations(t.children)),
        key=lambda arr: tuple(c.key for c in arr),
    )
    out = []
    for arr in arrangements:
        for combo in itertools.product(*(planar_realizations(c) for c in arr)):
            out.append(PlanarTree(combo))
    return tuple(out)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def enumerate_planar(n: int) -> tuple:
    """All planar trees with n non-root vertices, in lexicographic BBA order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > degree_ceiling():
        raise ResourceLimitError(
            f"planar enumeration at weight {n} exceeds ceiling {degree_ceiling()}"
        )
    strings = []

    def grow(prefix, opened, closed):
        if len(prefix) == 2 * n:
            strings.append(prefix)
            return
        if opened < n:
            grow(prefix + "<", opened + 1, closed)
        if closed < opened:
            grow(prefix + ">", opened, closed + 1)

    grow("", 0, 0)
    return tuple(bba_decode(s) for s in strings)


@lru_cache(maxsize=None)
def enumerate_rooted(n: int) -> tuple:
    """All canonical rooted trees with n+1 vertices, sorted canonically."""
    seen = {canonicalize(T) for T in enumerate_planar(n)}
    return tuple(sorted(seen, key=lambda t: t.key))


@lru_cache(maxsize=None)
def rooted_count_recurrence(vertices: int) -> int:
    """Number of rooted trees with the given vertex count, by the classical
    divisor-sum recurrence; an oracle independent of the enumeration."""
    if vertices < 1:
        return 0
    if vertices == 1:
        return 1
    n = vertices - 1
    total = 0
    for k in range(1, n + 1):
        s = sum(d * rooted_count_recurrence(d) for d in range(1, k + 1) if k % d == 0)
        total += s * rooted_count_recurrence(n - k + 1)
    assert total % n == 0
    return total // n


def ladder(i: int) -> RootedTree:
    """The unbranched rooted tree with i vertices."""
    if i < 1:
        raise ValueError("ladder needs at least one vertex")
    t = RootedTree()
    for _ in range(i - 1):
        t = RootedTree((t,))
    return t


def planar_ladder(i: int) -> PlanarTree:
    if i < 1:
        raise ValueError("ladder needs at least one vertex")
    t = PlanarTree()
    for _ in range(i - 1):
        t = PlanarTree((t,))
    return t


def t_lambda(parts) -> RootedTree:
    """Root over a forest of ladders with the given (partition) sizes."""
    return RootedTree(ladder(x) for x in parts)


def T_comp(parts) -> PlanarTree:
    """Root over ladders in the given (composition) order."""
    return PlanarTree(planar_ladder(x) for x in parts)
