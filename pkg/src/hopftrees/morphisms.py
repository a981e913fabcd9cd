"""The eight Hopf-algebra maps connecting the tree algebras with Sym/QSym/NSym,
and exhaustive commutation checks for the two squares they form.

Square one (d1): NSym -> H_F -> H_K agrees with NSym -> Sym -> H_K.
Square two (d2), the dual: kT -> kP -> QSym agrees with kT -> Sym -> QSym.
"""

from __future__ import annotations

from .freemodule import HopfOps, LinComb, Report
from .scalar import QQ
from .symfun import (
    Composition,
    Partition,
    compositions_of,
    distinct_arrangements,
    nsym_ops,
    qsym_ops,
    sym_ops,
    tau,
    to_e_products,
)
from .hopf_trees import ck_ops, gl_ops, hf_ops, kp_ops
from .trees import (
    Forest,
    OrderedForest,
    PlanarTree,
    RootedTree,
    canonicalize,
    enumerate_rooted,
    ladder,
    planar_ladder,
    planar_realizations,
    sym_order,
)

# ---------------------------------------------------------------------------
# the four downward/forward maps


def phi(x: LinComb) -> LinComb:
    """Algebra map Sym -> H_K determined by sending the elementary generator
    of degree i to the i-vertex ladder; arbitrary input is first written in
    products of elementary generators."""
    acc = LinComb.zero(x.ring)
    for coeff, word in to_e_products(x):
        forest = Forest(ladder(i) for i in word)
        acc = acc + LinComb.term(x.ring, forest, coeff)
    return acc


def Phi(x: LinComb) -> LinComb:
    """NSym -> H_F: the E-word (i_1, ..., i_k) maps to the ordered forest of
    ladders of those lengths."""
    return x.apply_linear(
        lambda word: OrderedForest(planar_ladder(i) for i in word.parts)
    )


def rho(x: LinComb) -> LinComb:
    """H_F -> H_K: forget planarity of each tree and the order of the forest."""
    return x.apply_linear(
        lambda f: Forest(canonicalize(t) for t in f.trees)
    )


# ---------------------------------------------------------------------------
# the four dual maps


def _is_ladder(t) -> bool:
    while t.children:
        if len(t.children) > 1:
            return False
        t = t.children[0]
    return True


def phi_star(x) -> LinComb:
    """kT -> Sym: a root over a forest of ladders with part sizes lambda maps
    to |Sym| times m_lambda, anything else to zero."""
    if isinstance(x, RootedTree):
        x = LinComb.term(QQ, x)

    def on_tree(t: RootedTree) -> LinComb:
        if all(_is_ladder(c) for c in t.children):
            lam = Partition(c.size for c in t.children)
            return LinComb.term(x.ring, lam, sym_order(t))
        return LinComb.zero(x.ring)

    return x.apply_linear(on_tree)


def Phi_star(x) -> LinComb:
    """kP -> QSym: a root over ladders of sizes (i_1, ..., i_k) in order maps
    to the monomial quasi-symmetric function of that composition."""
    if isinstance(x, PlanarTree):
        x = LinComb.term(QQ, x)

    def on_tree(t: PlanarTree) -> LinComb:
        if all(_is_ladder(c) for c in t.children):
            return LinComb.term(x.ring, Composition(c.size for c in t.children))
        return LinComb.zero(x.ring)

    return x.apply_linear(on_tree)


def rho_star(x) -> LinComb:
    """kT -> kP: |Sym(t)| times the sum of all planar realizations of t."""
    if isinstance(x, RootedTree):
        x = LinComb.term(QQ, x)

    def on_tree(t: RootedTree) -> LinComb:
        return LinComb(x.ring, {T: sym_order(t) for T in planar_realizations(t)})

    return x.apply_linear(on_tree)


def tau_star(x) -> LinComb:
    """Sym -> QSym: the inclusion, summing M over all arrangements."""
    if isinstance(x, Partition):
        x = LinComb.term(QQ, x)
    return x.apply_linear(
        lambda lam: LinComb(x.ring, {c: 1 for c in distinct_arrangements(lam)})
    )


# ---------------------------------------------------------------------------
# diagram checks


class DiagramReport(Report):
    def __init__(self, diagram: str, max_degree: int):
        super().__init__(f"diagram {diagram}", max_degree)
        self.diagram = diagram


def _as_lc(ops: HopfOps, b) -> LinComb:
    return LinComb.term(ops.ring, b)


def _check_hopf_morphism(
    rep: Report, name: str, dom: HopfOps, cod: HopfOps, f, max_degree: int
):
    """f must preserve unit, degree, products and coproducts on the range."""
    by_deg = {n: list(dom.basis(n)) for n in range(max_degree + 1)}
    elems = [b for n in range(max_degree + 1) for b in by_deg[n]]

    rep.add(f"{name}: unit", f(dom.one_lc()) == cod.one_lc())

    def degree_ok(b):
        img = f(_as_lc(dom, b))
        want = dom.degree(b)
        if any(cod.degree(x) != want for x in img.support()):
            return repr(b)
        return None

    rep.law(f"{name}: degree preserved", elems, degree_ok)

    def product_ok(pair):
        x, y = pair
        lhs = f(dom.product(x, y))
        rhs = cod.product_lc(f(_as_lc(dom, x)), f(_as_lc(dom, y)))
        if lhs != rhs:
            return f"({x!r}, {y!r})"
        return None

    pairs = [
        (x, y)
        for d1 in range(max_degree + 1)
        for d2 in range(max_degree - d1 + 1)
        for x in by_deg[d1]
        for y in by_deg[d2]
    ]
    rep.law(f"{name}: products", pairs, product_ok)

    def coproduct_ok(b):
        lhs = dom.coproduct(b).map_sides(
            lambda u: f(_as_lc(dom, u)), lambda u: f(_as_lc(dom, u)), out_ring=cod.ring
        )
        rhs = cod.coproduct_lc(f(_as_lc(dom, b)))
        if lhs != rhs:
            return repr(b)
        return None

    rep.law(f"{name}: coproducts", elems, coproduct_ok)


def diagram_check(diagram: str, max_degree: int) -> DiagramReport:
    """Verify commutation of the requested square and that every involved
    arrow is a morphism of Hopf algebras on the given range."""
    rep = DiagramReport(diagram, max_degree)
    if diagram == "d1":
        nsym, sym, hf, ck = nsym_ops(QQ), sym_ops(QQ), hf_ops(QQ), ck_ops(QQ)
        for word in (w for n in range(max_degree + 1) for w in compositions_of(n)):
            lhs = rho(Phi(_as_lc(nsym, word)))
            rhs = phi(tau(_as_lc(nsym, word)))
            rep.add(
                f"rho(Phi(E{word.parts})) = phi(tau(E{word.parts}))",
                lhs == rhs,
                degree=word.weight,
                witness=None if lhs == rhs else f"{lhs!r} != {rhs!r}",
            )
        _check_hopf_morphism(rep, "Phi", nsym, hf, Phi, max_degree)
        _check_hopf_morphism(rep, "tau", nsym, sym, tau, max_degree)
        _check_hopf_morphism(rep, "rho", hf, ck, rho, max_degree)
        _check_hopf_morphism(rep, "phi", sym, ck, phi, max_degree)
    elif diagram == "d2":
        gl, kp, sym, qsym = gl_ops(QQ), kp_ops(QQ), sym_ops(QQ), qsym_ops(QQ)
        for t in (t for n in range(max_degree + 1) for t in enumerate_rooted(n)):
            lhs = Phi_star(rho_star(t))
            rhs = tau_star(phi_star(t))
            ok = lhs == rhs
            rep.add(
                f"Phi*(rho*({t!r})) = tau*(phi*({t!r}))",
                ok,
                degree=t.size - 1,
                witness=None if ok else f"{lhs!r} != {rhs!r}",
            )
        _check_hopf_morphism(rep, "rho*", gl, kp, rho_star, max_degree)
        _check_hopf_morphism(rep, "phi*", gl, sym, phi_star, max_degree)
        _check_hopf_morphism(rep, "Phi*", kp, qsym, Phi_star, max_degree)
        _check_hopf_morphism(rep, "tau*", sym, qsym, tau_star, max_degree)
    else:
        raise ValueError(f"unknown diagram {diagram!r}")
    return rep
