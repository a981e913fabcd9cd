"""Explicit solutions of the combinatorial Dyson-Schwinger equation
X = 1 + B_+(X^p), with p a formal indeterminate.

The equation is solved both in the planar algebra H_F (where the recursion
lives naturally) and, by forgetting planarity, in H_K.  The homogeneous
parts carry polynomial coefficients in p; rational specializations are a
post-pass through polynomial evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .freemodule import LinComb, Report, TensorElem
from .hopf_trees import (
    bplus_ordered,
    ck_ops,
    hf_ops,
)
from .morphisms import rho
from .scalar import ONE_POLY, Poly, QQ, QP, binom_of, binom_poly, poly_eval
from .symfun import compositions_of_length, partitions_of
from .trees import (
    EMPTY_FOREST,
    EMPTY_ORDERED,
    Forest,
    OrderedForest,
    PlanarTree,
    RootedTree,
    embedding_count,
    enumerate_planar,
    enumerate_rooted,
    ladder,
    planar_ladder,
    sym_order,
)


@dataclass
class DSESolution:
    """Homogeneous parts of the solution: planar terms of each degree and
    their commutative projections, both with polynomial scalars."""

    max_degree: int
    hf_terms: dict = field(default_factory=dict)  # degree -> LinComb over OrderedForest
    hk_terms: dict = field(default_factory=dict)  # degree -> LinComb over Forest

    def hf(self, n: int) -> LinComb:
        return self.hf_terms[n]

    def hk(self, n: int) -> LinComb:
        return self.hk_terms[n]


def cp_coefficient(tree) -> Poly:
    """Product over internal vertices of binom(p, number of children);
    invariant under forgetting planarity."""
    acc = ONE_POLY
    stack = [tree]
    while stack:
        node = stack.pop()
        if node.children:
            acc = acc * binom_poly(len(node.children))
            stack.extend(node.children)
    return acc


def _singleton(tree: PlanarTree) -> LinComb:
    return LinComb.term(QP, OrderedForest((tree,)))


def _bplus_lc(x: LinComb) -> LinComb:
    return x.apply_linear(lambda f: OrderedForest((bplus_ordered(f),)))


def solve_recursive(max_degree: int) -> DSESolution:
    """Degree-by-degree fixed-point recursion.

    The first planar term is the single vertex; the part of degree n+1 is
    the sum over 1 <= k <= n of binom(p, k) applied to the root-grafting of
    all length-k products of lower parts with total degree n.
    """
    hf = hf_ops(QP)
    sol = DSESolution(max_degree)
    if max_degree >= 1:
        sol.hf_terms[1] = _singleton(planar_ladder(1))
    for n in range(1, max_degree):
        acc = LinComb.zero(QP)
        for k in range(1, n + 1):
            inner = LinComb.zero(QP)
            for comp in compositions_of_length(n, k):
                prod = LinComb.term(QP, EMPTY_ORDERED)
                for ni in comp:
                    prod = hf.product_lc(prod, sol.hf_terms[ni])
                inner = inner + prod
            acc = acc + _bplus_lc(inner).scale(binom_poly(k))
        sol.hf_terms[n + 1] = acc
    for n in range(1, max_degree + 1):
        sol.hk_terms[n] = rho(sol.hf_terms[n])
    return sol


def solve_closed(max_degree: int) -> DSESolution:
    """Closed form: the planar part of degree n sums every planar tree with n
    vertices weighted by its child-count binomial product; the commutative
    part weights each rooted tree additionally by its embedding count."""
    sol = DSESolution(max_degree)
    for n in range(1, max_degree + 1):
        sol.hf_terms[n] = LinComb(
            QP,
            {
                OrderedForest((T,)): cp_coefficient(T)
                for T in enumerate_planar(n - 1)
            },
        )
        sol.hk_terms[n] = LinComb(
            QP,
            {
                Forest((t,)): cp_coefficient(t) * embedding_count(t)
                for t in enumerate_rooted(n - 1)
            },
        )
    return sol


def expanded_coefficient(t: RootedTree) -> Poly:
    """The commutative coefficient in factored form: the product over internal
    vertices of p(p-1)...(p-c(v)+1), divided by |Sym(t)|."""
    acc = ONE_POLY
    stack = [t]
    while stack:
        node = stack.pop()
        c = len(node.children)
        if c:
            acc = acc * binom_poly(c) * factorial(c)
            stack.extend(node.children)
    return acc * Fraction(1, sym_order(t))


def _affine_argument(k: int) -> Poly:
    # k(p-1)+1 as a polynomial in p
    return Poly((1 - k, k))


def q_poly(n: int, k: int, sol: DSESolution) -> LinComb:
    """Coefficient polynomial of the commutative coproduct formula: for k = n
    the unit; otherwise the multinomial-weighted sum over monomials in the
    lower parts of total degree n-k."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    ck = ck_ops(QP)
    if k == n:
        return LinComb.term(QP, EMPTY_FOREST)
    acc = LinComb.zero(QP)
    arg = _affine_argument(k)
    for mu in partitions_of(n - k):
        mults = mu.multiplicities()
        q = mu.length
        scalar = binom_of(arg, q) * _multinomial(mults.values())
        prod = LinComb.term(QP, EMPTY_FOREST)
        for part in mu.parts:
            prod = ck.product_lc(prod, sol.hk(part))
        acc = acc + prod.scale(scalar)
    return acc


def Q_poly(n: int, k: int, sol: DSESolution) -> LinComb:
    """Planar analogue: ordered products over compositions of n-k, each length
    q weighted by binom(k(p-1)+1, q)."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    hf = hf_ops(QP)
    if k == n:
        return LinComb.term(QP, EMPTY_ORDERED)
    acc = LinComb.zero(QP)
    arg = _affine_argument(k)
    for q in range(1, n - k + 1):
        scalar = binom_of(arg, q)
        for comp in compositions_of_length(n - k, q):
            prod = LinComb.term(QP, EMPTY_ORDERED)
            for ni in comp:
                prod = hf.product_lc(prod, sol.hf(ni))
            acc = acc + prod.scale(scalar)
    return acc


def _multinomial(parts) -> int:
    parts = list(parts)
    out = factorial(sum(parts))
    for x in parts:
        out //= factorial(x)
    return out


def coproduct_theorem_check(
    max_degree_hk: int, max_degree_hf: int | None = None, sol: DSESolution | None = None
) -> Report:
    """Exact polynomial-coefficient comparison of the computed coproducts of
    the solution parts against the closed coproduct formulas, in both
    algebras, plus a rational cross-check after evaluating at p = 2."""
    if max_degree_hf is None:
        max_degree_hf = max_degree_hk
    if sol is None:
        sol = solve_closed(max(max_degree_hk, max_degree_hf))
    rep = Report("solution coproduct formulas", max_degree_hk)
    ck = ck_ops(QP)
    hf = hf_ops(QP)

    def hk_case(n):
        lhs = ck.coproduct_lc(sol.hk(n))
        rhs = TensorElem.tensor(sol.hk(n), LinComb.term(QP, EMPTY_FOREST))
        for k in range(1, n + 1):
            rhs = rhs + TensorElem.tensor(q_poly(n, k, sol), sol.hk(k))
        if lhs != rhs:
            return f"n={n}"
        return None

    rep.law("commutative coproduct formula", range(1, max_degree_hk + 1), hk_case)

    def hf_case(n):
        lhs = hf.coproduct_lc(sol.hf(n))
        rhs = TensorElem.tensor(sol.hf(n), LinComb.term(QP, EMPTY_ORDERED))
        for k in range(1, n + 1):
            rhs = rhs + TensorElem.tensor(Q_poly(n, k, sol), sol.hf(k))
        if lhs != rhs:
            return f"n={n}"
        return None

    rep.law("planar coproduct formula", range(1, max_degree_hf + 1), hf_case)

    def eval_case(n):
        lhs = ck.coproduct_lc(sol.hk(n))
        rhs = TensorElem.tensor(sol.hk(n), LinComb.term(QP, EMPTY_FOREST))
        for k in range(1, n + 1):
            rhs = rhs + TensorElem.tensor(q_poly(n, k, sol), sol.hk(k))
        at2 = lambda q: poly_eval(q, 2)
        lhs2 = TensorElem(QQ, {pair: at2(c) for pair, c in lhs.terms.items()})
        rhs2 = TensorElem(QQ, {pair: at2(c) for pair, c in rhs.terms.items()})
        if lhs2 != rhs2:
            return f"n={n}"
        return None

    rep.law("rational specialization at p=2", range(1, min(max_degree_hk, 5) + 1), eval_case)
    return rep


def specialize(x: LinComb, value) -> LinComb:
    """Evaluate every polynomial coefficient at a rational value of p."""
    return x.map_coeffs(lambda q: poly_eval(q, value), QQ)


def ladder_specialization_holds(sol: DSESolution, n: int) -> bool:
    """At p = 1 the only surviving commutative term of degree n is the
    n-vertex ladder with coefficient 1."""
    lhs = specialize(sol.hk(n), 1)
    return lhs == LinComb.term(QQ, Forest((ladder(n),)))
