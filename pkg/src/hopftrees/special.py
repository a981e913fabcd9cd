"""Special families in the grafting algebra: the symmetry-weighted full sums,
their alternating companions, natural growth, and the attachment/cut counts
with their numerical identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .freemodule import LinComb, Report, TensorElem, generic_antipode
from .hopf_trees import bplus, cuts_of, gl_ops, gl_product
from .morphisms import phi_star, rho_star
from .scalar import QQ
from .symfun import Partition, basis_expand, partitions_of, sym_product
from .trees import (
    DOT,
    Forest,
    RootedTree,
    enumerate_planar,
    enumerate_rooted,
    ladder,
    sym_order,
    t_lambda,
)


@lru_cache(maxsize=None)
def kappa(n: int) -> LinComb:
    """Sum of all rooted trees of degree n, each weighted by 1/|Sym|."""
    if n == 0:
        return LinComb.term(QQ, DOT)
    return LinComb(
        QQ, {t: Fraction(1, sym_order(t)) for t in enumerate_rooted(n)}
    )


@lru_cache(maxsize=None)
def epsilon(n: int) -> LinComb:
    """Alternating companions of kappa, defined by the grafting recursion
    eps_n = kappa_1 o eps_{n-1} - kappa_2 o eps_{n-2} + ... +- kappa_n."""
    if n == 0:
        return LinComb.term(QQ, DOT)
    gl = gl_ops(QQ)
    acc = LinComb.zero(QQ)
    for i in range(1, n + 1):
        term = gl.product_lc(kappa(i), epsilon(n - i))
        acc = acc + term.scale((-1) ** (i - 1))
    return acc


def natural_growth(x, k: int = 1) -> LinComb:
    """Apply t -> (2-vertex ladder) o t  k times: each step adds one new leaf
    at every vertex in all possible ways."""
    if isinstance(x, RootedTree):
        x = LinComb.term(QQ, x)
    gl = gl_ops(x.ring)
    grower = gl.term(ladder(2))
    for _ in range(k):
        x = gl.product_lc(grower, x)
    return x


def n_count(u: Forest, t: RootedTree, target: RootedTree) -> int:
    """Number of times the target appears in bplus(u) o t."""
    coeff = gl_product(bplus(u), t).coeff(target)
    assert coeff.denominator == 1
    return int(coeff)


def m_count(u: Forest, t: RootedTree, target: RootedTree) -> int:
    """Number of distinct admissible cuts of the target with fallen part u
    and root part t."""
    count = 0
    for cut in cuts_of(target, admissible_only=True):
        if cut.fallen == u and cut.root_part == t:
            count += 1
    return count


def lemma_identity_holds(u: Forest, t: RootedTree, target: RootedTree) -> bool:
    """n(u,t;t') |Sym(t')| = m(u,t;t') |Sym(B_+(u))| |Sym(t)|."""
    lhs = n_count(u, t, target) * sym_order(target)
    rhs = m_count(u, t, target) * sym_order(bplus(u)) * sym_order(t)
    return lhs == rhs


def lemma_check(max_vertices: int) -> Report:
    """Exhaustive sweep of the counting identity over every tree with at most
    max_vertices vertices and every admissible decomposition of it."""
    rep = Report("attachment/cut counting identity", max_vertices)

    def run(target):
        decomps = {
            (cut.fallen, cut.root_part)
            for cut in cuts_of(target, admissible_only=True)
        }
        for u, t in decomps:
            if not lemma_identity_holds(u, t, target):
                return f"t'={target!r}, u={u!r}, t={t!r}"
        return None

    targets = [
        t for n in range(max_vertices) for t in enumerate_rooted(n)
    ]
    rep.law("identity over all admissible decompositions", targets, run)
    return rep


def proposition_check(max_degree: int) -> Report:
    """The five structural facts tying kappa and epsilon to the elementary and
    complete symmetric functions."""
    rep = Report("kappa/epsilon family", max_degree)
    gl = gl_ops(QQ)

    def antipode_link(n):
        s_kappa = kappa(n).apply_linear(lambda t: generic_antipode(gl, t))
        if epsilon(n) != s_kappa.scale((-1) ** n):
            return f"n={n}"
        return None

    rep.law("eps_n = (-1)^n S(kappa_n)", range(max_degree + 1), antipode_link)

    def image_e(n):
        want = (
            LinComb.term(QQ, Partition())
            if n == 0
            else basis_expand("e", n)
        )
        if phi_star(epsilon(n)) != want:
            return f"n={n}"
        return None

    rep.law("phi*(eps_n) = e_n", range(max_degree + 1), image_e)

    def image_h(n):
        want = (
            LinComb.term(QQ, Partition())
            if n == 0
            else basis_expand("h", n)
        )
        if phi_star(kappa(n)) != want:
            return f"n={n}"
        return None

    rep.law("phi*(kappa_n) = h_n", range(max_degree + 1), image_h)

    def cleared(n):
        want = LinComb.term(QQ, t_lambda([1] * n))
        if epsilon(n).scale(factorial(n)) != want:
            return f"n={n}"
        return None

    rep.law("n! eps_n is the one-level bush", range(max_degree + 1), cleared)

    def divided(n):
        lhs = gl.coproduct_lc(kappa(n))
        rhs = TensorElem.zero(QQ)
        for i in range(n + 1):
            rhs = rhs + TensorElem.tensor(kappa(i), kappa(n - i))
        if lhs != rhs:
            return f"n={n}"
        return None

    rep.law("kappa divided powers", range(max_degree + 1), divided)

    def planar_sum(n):
        want = LinComb(QQ, {T: 1 for T in enumerate_planar(n)})
        if rho_star(kappa(n)) != want:
            return f"n={n}"
        return None

    rep.law("rho*(kappa_n) sums the planar trees", range(max_degree + 1), planar_sum)
    return rep


def multinomial(parts) -> int:
    total = sum(parts)
    out = factorial(total)
    for x in parts:
        out //= factorial(x)
    return out


def growth_formulas_check(max_weight: int) -> Report:
    """Natural-growth consequences: the image identity under phi*, the
    cut-count/monomial-coefficient match, and the multinomial closed form."""
    rep = Report("natural growth formulas", max_weight)
    e1 = basis_expand("e", 1)

    def image_growth(args):
        t, k = args
        lhs = phi_star(natural_growth(t, k))
        rhs = phi_star(t)
        for _ in range(k):
            rhs = sym_product(e1, rhs)
        if lhs != rhs:
            return f"t={t!r}, k={k}"
        return None

    cases = []
    for lam in (l for n in range(max_weight) for l in partitions_of(n)):
        t = t_lambda(lam.parts) if lam.parts else DOT
        for k in range(1, max_weight - lam.weight + 1):
            cases.append((t, k))
    rep.law("phi* intertwines growth with e_1 multiplication", cases, image_growth)

    def count_vs_coeff(pair):
        lam, mu = pair
        lhs = m_count(Forest((DOT,)), t_lambda(lam.parts), t_lambda(mu.parts))
        rhs = sym_product(e1, LinComb.term(QQ, lam)).coeff(mu)
        if lhs != rhs:
            return f"lambda={lam.parts}, mu={mu.parts}"
        return None

    pairs = [
        (lam, mu)
        for n in range(max_weight)
        for lam in partitions_of(n)
        for mu in partitions_of(n + 1)
        if n + 1 <= max_weight
    ]
    rep.law("m(., t_lambda; t_mu) matches e_1 m_lambda", pairs, count_vs_coeff)

    def closed_form(lam):
        t = t_lambda(lam.parts)
        coeff = natural_growth(DOT, lam.weight).coeff(t)
        want = Fraction(multinomial(lam.parts), sym_order(t))
        if coeff != want:
            return f"lambda={lam.parts}"
        return None

    lams = [l for n in range(1, max_weight + 1) for l in partitions_of(n)]
    rep.law("n(.; t_lambda) multinomial formula", lams, closed_form)
    return rep
