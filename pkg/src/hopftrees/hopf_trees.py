"""The four tree Hopf algebras: kT, H_K (Connes-Kreimer), kP, H_F (Foissy).

kT has rooted trees as basis with the grafting product; H_K is the free
commutative algebra on rooted trees with the admissible-cut coproduct.  kP
and H_F are their planar analogues: kP multiplies by the asymmetric shuffle
of bracket arrangements, H_F is the tensor algebra on planar trees.
"""

from __future__ import annotations

import itertools
import os
from functools import lru_cache

from .freemodule import HopfOps, LinComb, TensorElem
from .scalar import QQ, Fraction
from .trees import (
    CUT_VERTEX_CAP,
    DOT,
    EMPTY_FOREST,
    EMPTY_ORDERED,
    Forest,
    OrderedForest,
    PlanarTree,
    PDOT,
    ResourceLimitError,
    RootedTree,
    bba_decode,
    canonicalize,
    enumerate_planar,
    enumerate_rooted,
    sym_order,
    to_planar,
)

# ---------------------------------------------------------------------------
# grafting operators


def bplus(f: Forest) -> RootedTree:
    """Attach a new root over all trees of the forest; the empty forest maps to the
    single vertex."""
    return RootedTree(f.trees)


def bminus(t: RootedTree) -> Forest:
    """Inverse of bplus: the forest of root branches."""
    if not isinstance(t, RootedTree):
        raise TypeError("bminus needs a rooted tree, not the algebra unit")
    return Forest(t.children)


def bplus_ordered(f: OrderedForest) -> PlanarTree:
    return PlanarTree(f.trees)


def bminus_ordered(t: PlanarTree) -> OrderedForest:
    if not isinstance(t, PlanarTree):
        raise TypeError("bminus needs a planar tree, not the algebra unit")
    return OrderedForest(t.children)


def forests_of_weight(n: int):
    """All commutative forests with n vertices total (degree-n basis of H_K)."""
    return tuple(bminus(t) for t in enumerate_rooted(n))


def ordered_forests_of_weight(n: int):
    """All ordered forests of planar trees with n vertices total."""
    return tuple(bminus_ordered(t) for t in enumerate_planar(n))


# ---------------------------------------------------------------------------
# cuts


def cut_ceiling() -> int:
    env = os.environ.get("HOPFTREES_MAX_DEGREE")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return CUT_VERTEX_CAP


class Cut:
    """A subset of the edges of a tree together with the pieces it produces.

    Edges are pairs (parent preorder id, child index) in the preorder
    numbering of the tree (for rooted trees: of its canonical planar
    realization).  ``fallen`` holds the components separated from the root
    (ordered by the preorder position of their roots for planar trees,
    canonically sorted for rooted trees) and ``root_part`` the component
    containing the root.
    """

    __slots__ = ("tree", "edges", "admissible", "fallen", "root_part")

    def __init__(self, tree, edges, admissible, fallen, root_part):
        self.tree = tree
        self.edges = edges
        self.admissible = admissible
        self.fallen = fallen
        self.root_part = root_part

    @property
    def weight(self) -> int:
        """|c|: the number of cut edges."""
        return len(self.edges)

    def __repr__(self):
        return f"Cut(edges={sorted(self.edges)}, admissible={self.admissible})"


def _index_planar(tree: PlanarTree):
    """Preorder parent array and child-id lists."""
    parents: list[int] = []
    kids: list[list[int]] = []

    def walk(node, parent):
        idx = len(parents)
        parents.append(parent)
        kids.append([])
        if parent >= 0:
            kids[parent].append(idx)
        for c in node.children:
            walk(c, idx)

    walk(tree, -1)
    return parents, kids


def _cut_is_admissible(parents, cutset) -> bool:
    # admissible <=> no cut edge lies above another, i.e. no cut vertex has a
    # cut proper ancestor
    for v in cutset:
        u = parents[v]
        while u > 0:
            if u in cutset:
                return False
            u = parents[u]
    return True


def _build_component(v, kids, cutset) -> PlanarTree:
    return PlanarTree(_build_component(w, kids, cutset) for w in kids[v] if w not in cutset)


def cuts_of(tree, admissible_only: bool = False):
    """All 2^(edge count) cuts of a tree (or just the admissible ones).

    Accepts a planar or a rooted tree; for rooted input the pieces are
    canonicalized and the fallen part is a commutative Forest.
    """
    rooted = isinstance(tree, RootedTree)
    planar = to_planar(tree) if rooted else tree
    if planar.size > cut_ceiling():
        raise ResourceLimitError(
            f"cut enumeration on {planar.size} vertices exceeds cap {cut_ceiling()}"
        )
    parents, kids = _index_planar(planar)
    n = len(parents)
    edge_vertices = list(range(1, n))  # each non-root vertex labels its parent edge
    edge_labels = {
        v: (parents[v], kids[parents[v]].index(v)) for v in edge_vertices
    }
    out = []
    for mask in range(1 << len(edge_vertices)):
        cutset = {v for i, v in enumerate(edge_vertices) if mask >> i & 1}
        admissible = _cut_is_admissible(parents, cutset)
        if admissible_only and not admissible:
            continue
        fallen_trees = [_build_component(v, kids, cutset) for v in sorted(cutset)]
        root_part = _build_component(0, kids, cutset)
        if rooted:
            fallen = Forest(canonicalize(T) for T in fallen_trees)
            root_piece = canonicalize(root_part)
        else:
            fallen = OrderedForest(fallen_trees)
            root_piece = root_part
        edges = frozenset(edge_labels[v] for v in cutset)
        out.append(Cut(tree, edges, admissible, fallen, root_piece))
    return out


# ---------------------------------------------------------------------------
# kT: the grafting algebra of rooted trees


def _vertex_paths(t: RootedTree):
    paths = [()]
    for i, c in enumerate(t.children):
        paths.extend((i,) + p for p in _vertex_paths(c))
    return paths


def _graft(node: RootedTree, path, extra) -> RootedTree:
    kids = tuple(_graft(c, path + (i,), extra) for i, c in enumerate(node.children))
    return RootedTree(kids + tuple(extra.get(path, ())))


def gl_product(t: RootedTree, u: RootedTree, ring=QQ) -> LinComb:
    """Grafting product: sum over all ways of attaching each root branch of t
    to a vertex of u.

    Attachment happens directly on canonical trees (no planar detour):
    every assignment of branches to vertices is grafted and the identical
    resulting trees accumulate integer coefficients.
    """
    branches = t.children
    if not branches:
        return LinComb.term(ring, u)
    paths = _vertex_paths(u)
    counts: dict[RootedTree, int] = {}
    for assign in itertools.product(range(len(paths)), repeat=len(branches)):
        extra: dict[tuple, list] = {}
        for branch, vi in zip(branches, assign):
            extra.setdefault(paths[vi], []).append(branch)
        res = _graft(u, (), extra)
        counts[res] = counts.get(res, 0) + 1
    return LinComb(ring, counts)


def gl_coproduct(t: RootedTree, ring=QQ) -> TensorElem:
    """Cocommutative coproduct of kT: split the root branches in all 2^k ways."""
    branches = t.children
    k = len(branches)
    terms: dict = {}
    for mask in range(1 << k):
        left = RootedTree(branches[i] for i in range(k) if mask >> i & 1)
        right = RootedTree(branches[i] for i in range(k) if not mask >> i & 1)
        key = (left, right)
        terms[key] = terms.get(key, 0) + 1
    return TensorElem(ring, terms)


@lru_cache(maxsize=None)
def gl_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="kT",
        ring=ring,
        unit=DOT,
        degree=lambda t: t.size - 1,
        basis=lambda n: enumerate_rooted(n),
        product=lambda a, b: gl_product(a, b, ring),
        coproduct=lambda t: gl_coproduct(t, ring),
    )


# ---------------------------------------------------------------------------
# H_K: the Connes-Kreimer algebra of forests


def ck_product(f: Forest, g: Forest) -> Forest:
    return f.mul(g)


def _ck_mul_lc(ring):
    return lambda a, b: LinComb.term(ring, a.mul(b))


def _ck_tree_coproduct(t: RootedTree, ring) -> TensorElem:
    terms: dict = {(Forest((t,)), EMPTY_FOREST): 1}
    for cut in cuts_of(t, admissible_only=True):
        key = (cut.fallen, Forest((cut.root_part,)))
        terms[key] = terms.get(key, 0) + 1
    return TensorElem(ring, terms)


def ck_coproduct(x: Forest, ring=QQ) -> TensorElem:
    """Admissible-cut coproduct, extended multiplicatively over the forest.

    On a tree: t x 1 plus the sum of fallen-part x root-part over admissible
    cuts; the empty cut contributes 1 x t.
    """
    acc = TensorElem.term(ring, EMPTY_FOREST, EMPTY_FOREST)
    mul = _ck_mul_lc(ring)
    for t in x.trees:
        acc = acc.mul(_ck_tree_coproduct(t, ring), mul, mul)
    return acc


def _ck_tree_coproduct_rec(t: RootedTree, ring) -> TensorElem:
    inner = ck_coproduct_recursive(bminus(t), ring)
    terms: dict = {(Forest((t,)), EMPTY_FOREST): ring.one}
    for (a, b), c in inner.terms.items():
        key = (a, Forest((bplus(b),)))
        terms[key] = terms.get(key, ring.zero) + c
    return TensorElem(ring, terms)


def ck_coproduct_recursive(x: Forest, ring=QQ) -> TensorElem:
    """The same coproduct by the root-extraction recursion
    D(t) = t x 1 + (id x bplus) D(bminus t); a cross-validation oracle for
    the cut formula."""
    acc = TensorElem.term(ring, EMPTY_FOREST, EMPTY_FOREST)
    mul = _ck_mul_lc(ring)
    for t in x.trees:
        acc = acc.mul(_ck_tree_coproduct_rec(t, ring), mul, mul)
    return acc


def _ck_tree_antipode(t: RootedTree, ring) -> LinComb:
    terms: dict = {}
    for cut in cuts_of(t, admissible_only=False):
        forest = cut.fallen.mul(Forest((cut.root_part,)))
        sign = -1 if cut.weight % 2 == 0 else 1  # contributes -(-1)^{|c|}
        terms[forest] = terms.get(forest, 0) + sign
    return LinComb(ring, terms)


def ck_antipode(x, ring=QQ) -> LinComb:
    """Closed antipode formula: -sum over all cuts of (-1)^{|c|} P^c R^c,
    extended multiplicatively to forests."""
    if isinstance(x, RootedTree):
        return _ck_tree_antipode(x, ring)
    acc = LinComb.term(ring, EMPTY_FOREST)
    for t in x.trees:
        acc = acc.bilinear(_ck_mul_lc(ring), _ck_tree_antipode(t, ring))
    return acc


@lru_cache(maxsize=None)
def ck_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="H_K",
        ring=ring,
        unit=EMPTY_FOREST,
        degree=lambda f: f.weight,
        basis=forests_of_weight,
        product=lambda a, b: LinComb.term(ring, a.mul(b)),
        coproduct=lambda f: ck_coproduct(f, ring),
        antipode=lambda f: ck_antipode(f, ring),
    )


# ---------------------------------------------------------------------------
# kP: planar grafting via asymmetric shuffles of bracket arrangements


def _interleavings(a, b):
    if not a:
        yield b
        return
    if not b:
        yield a
        return
    for rest in _interleavings(a[1:], b):
        yield (a[0],) + rest
    for rest in _interleavings(a, b[1:]):
        yield (b[0],) + rest


def kp_product(t: PlanarTree, u: PlanarTree, ring=QQ) -> LinComb:
    """Asymmetric shuffle: insert the components of t's bracket string, in
    order, into the symbol sequence of u's bracket string in all ways."""
    comps = tuple("<" + c.bba + ">" for c in t.children)
    symbols = tuple(u.bba)
    counts: dict[PlanarTree, int] = {}
    for merged in _interleavings(comps, symbols):
        tree = bba_decode("".join(merged))
        counts[tree] = counts.get(tree, 0) + 1
    return LinComb(ring, counts)


def kp_coproduct(t: PlanarTree, ring=QQ) -> TensorElem:
    """Deconcatenation of the component sequence of the bracket string."""
    comps = t.children
    terms: dict = {}
    for i in range(len(comps) + 1):
        key = (PlanarTree(comps[:i]), PlanarTree(comps[i:]))
        terms[key] = terms.get(key, 0) + 1
    return TensorElem(ring, terms)


@lru_cache(maxsize=None)
def kp_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="kP",
        ring=ring,
        unit=PDOT,
        degree=lambda t: t.size - 1,
        basis=lambda n: enumerate_planar(n),
        product=lambda a, b: kp_product(a, b, ring),
        coproduct=lambda t: kp_coproduct(t, ring),
    )


# ---------------------------------------------------------------------------
# H_F: the Foissy algebra of ordered forests


def hf_product(f: OrderedForest, g: OrderedForest) -> OrderedForest:
    return f.mul(g)


def _hf_mul_lc(ring):
    return lambda a, b: LinComb.term(ring, a.mul(b))


def _hf_tree_coproduct(t: PlanarTree, ring) -> TensorElem:
    terms: dict = {(OrderedForest((t,)), EMPTY_ORDERED): 1}
    for cut in cuts_of(t, admissible_only=True):
        key = (cut.fallen, OrderedForest((cut.root_part,)))
        terms[key] = terms.get(key, 0) + 1
    return TensorElem(ring, terms)


def hf_coproduct(x: OrderedForest, ring=QQ) -> TensorElem:
    """Ordered admissible-cut coproduct, extended multiplicatively; equal to
    the rooted-subforest sum."""
    acc = TensorElem.term(ring, EMPTY_ORDERED, EMPTY_ORDERED)
    mul = _hf_mul_lc(ring)
    for t in x.trees:
        acc = acc.mul(_hf_tree_coproduct(t, ring), mul, mul)
    return acc


def _hf_tree_antipode(t: PlanarTree, ring) -> LinComb:
    terms: dict = {}
    for cut in cuts_of(t, admissible_only=False):
        forest = cut.fallen.reverse().mul(OrderedForest((cut.root_part,)))
        sign = -1 if cut.weight % 2 == 0 else 1
        terms[forest] = terms.get(forest, 0) + sign
    return LinComb(ring, terms)


def hf_antipode(x, ring=QQ) -> LinComb:
    """Closed antipode: -sum over all cuts of (-1)^{|c|} reverse(P^c) R^c on
    trees, extended to ordered forests as an antiautomorphism."""
    if isinstance(x, PlanarTree):
        return _hf_tree_antipode(x, ring)
    acc = LinComb.term(ring, EMPTY_ORDERED)
    mul = _hf_mul_lc(ring)
    for t in reversed(x.trees):
        acc = acc.bilinear(mul, _hf_tree_antipode(t, ring))
    return acc


@lru_cache(maxsize=None)
def hf_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="H_F",
        ring=ring,
        unit=EMPTY_ORDERED,
        degree=lambda f: f.weight,
        basis=ordered_forests_of_weight,
        product=lambda a, b: LinComb.term(ring, a.mul(b)),
        coproduct=lambda f: hf_coproduct(f, ring),
        antipode=lambda f: hf_antipode(f, ring),
    )


# ---------------------------------------------------------------------------
# inner products


def pairing_kt_hk(t: RootedTree, u: RootedTree) -> Fraction:
    """|Sym(t)| on the diagonal, 0 off it."""
    return Fraction(sym_order(t)) if t == u else Fraction(0)


def pairing_hk(u: Forest, v: Forest) -> Fraction:
    """Forest extension of the kT inner product through bplus."""
    return pairing_kt_hk(bplus(u), bplus(v))


def pairing_kp_hf(t: PlanarTree, u: PlanarTree) -> Fraction:
    return Fraction(1) if t == u else Fraction(0)


def pairing_hf(f: OrderedForest, g: OrderedForest) -> Fraction:
    return pairing_kp_hf(bplus_ordered(f), bplus_ordered(g))
