"""Sym, QSym and NSym in their monomial, M-, and E-word bases.

Sym elements are kept in the monomial basis indexed by partitions; QSym in
the monomial quasi-symmetric basis indexed by compositions; NSym words are
compositions read as products of the divided-power generators.  Products in
Sym go through the embedding into QSym and the quasi-shuffle.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .freemodule import HopfOps, LinComb, Report, TensorElem
from .scalar import QQ


class Partition:
    """Weakly decreasing sequence of positive integers (possibly empty)."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts=()):
        ps = tuple(sorted((int(x) for x in parts), reverse=True))
        if any(x < 1 for x in ps):
            raise ValueError("partition parts must be positive")
        self.parts = ps
        self._hash = hash(("Par", ps))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def sort_key(self):
        return (self.weight, self.parts)

    def multiplicities(self) -> dict:
        out: dict[int, int] = {}
        for x in self.parts:
            out[x] = out.get(x, 0) + 1
        return out

    def sym_order(self) -> int:
        """Product of the factorials of the part multiplicities."""
        out = 1
        for m in self.multiplicities().values():
            out *= factorial(m)
        return out

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [sum(1 for x in self.parts if x > i) for i in range(self.parts[0])]
        return Partition(cols)

    def union(self, other: "Partition") -> "Partition":
        return Partition(self.parts + other.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Partition{self.parts!r}"


class Composition:
    """Finite sequence of positive integers (possibly empty)."""

    __slots__ = ("parts", "_hash")

    def __init__(self, parts=()):
        ps = tuple(int(x) for x in parts)
        if any(x < 1 for x in ps):
            raise ValueError("composition parts must be positive")
        self.parts = ps
        self._hash = hash(("Cmp", ps))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def sort_key(self):
        return (self.weight, self.parts)

    def reverse(self) -> "Composition":
        return Composition(self.parts[::-1])

    def partition(self) -> Partition:
        """Forget the order of the parts."""
        return Partition(self.parts)

    def __eq__(self, other):
        return isinstance(other, Composition) and self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Composition{self.parts!r}"


EMPTY_PARTITION = Partition()
EMPTY_COMPOSITION = Composition()


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of n, in graded-lexicographic order."""

    def gen(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted((Partition(p) for p in gen(n, n)), key=lambda q: q.sort_key))


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    def gen(remaining):
        if remaining == 0:
            yield ()
            return
        for first in range(1, remaining + 1):
            for rest in gen(remaining - first):
                yield (first,) + rest

    return tuple(sorted((Composition(c) for c in gen(n)), key=lambda q: q.sort_key))


def compositions_of_length(n: int, k: int):
    """Length-k compositions of n (parts >= 1)."""
    if k == 0:
        return [()] if n == 0 else []
    out = []

    def gen(prefix, remaining, slots):
        if slots == 1:
            if remaining >= 1:
                out.append(prefix + (remaining,))
            return
        for first in range(1, remaining - slots + 2):
            gen(prefix + (first,), remaining - first, slots - 1)

    gen((), n, k)
    return out


def coarsenings(comp: Composition):
    """All compositions obtained by merging adjacent parts of comp."""
    parts = comp.parts
    if not parts:
        return [comp]
    gaps = len(parts) - 1
    out = []
    for mask in range(1 << gaps):
        merged = [parts[0]]
        for i in range(gaps):
            if mask >> i & 1:
                merged[-1] += parts[i + 1]
            else:
                merged.append(parts[i + 1])
        out.append(Composition(merged))
    return out


def distinct_arrangements(lam: Partition):
    """All distinct compositions whose underlying partition is lam."""
    seen = sorted(set(itertools.permutations(lam.parts)))
    return [Composition(p) for p in seen]


# ---------------------------------------------------------------------------
# QSym


@lru_cache(maxsize=None)
def _quasi_shuffle(a: tuple, b: tuple) -> tuple:
    """Quasi-shuffle of part tuples; returns ((composition tuple, coeff), ...)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    acc: dict[tuple, int] = {}
    for head, rest in (
        ((a[0],), _quasi_shuffle(a[1:], b)),
        ((b[0],), _quasi_shuffle(a, b[1:])),
        ((a[0] + b[0],), _quasi_shuffle(a[1:], b[1:])),
    ):
        for tail, c in rest:
            key = head + tail
            acc[key] = acc.get(key, 0) + c
    return tuple(acc.items())


def qsym_product_comp(i: Composition, j: Composition, ring=QQ) -> LinComb:
    """Product of two monomial quasi-symmetric functions by the quasi-shuffle
    recursion on first parts."""
    return LinComb(
        ring, {Composition(parts): c for parts, c in _quasi_shuffle(i.parts, j.parts)}
    )


def qsym_product(a: LinComb, b: LinComb) -> LinComb:
    return a.bilinear(lambda i, j: qsym_product_comp(i, j, a.ring), b)


def qsym_coproduct(i: Composition, ring=QQ) -> TensorElem:
    """Deconcatenation coproduct."""
    parts = i.parts
    terms: dict = {}
    for j in range(len(parts) + 1):
        key = (Composition(parts[:j]), Composition(parts[j:]))
        terms[key] = terms.get(key, 0) + 1
    return TensorElem(ring, terms)


def qsym_antipode(i: Composition, ring=QQ) -> LinComb:
    """(-1)^length times the sum of reversed coarsenings.

    The refinement relation is read so that the sum runs over compositions
    coarser than the input; the other reading fails the convolution law
    already on one-part compositions.
    """
    sign = -1 if i.length % 2 else 1
    terms: dict = {}
    for j in coarsenings(i):
        key = j.reverse()
        terms[key] = terms.get(key, 0) + sign
    return LinComb(ring, terms)


@lru_cache(maxsize=None)
def qsym_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="QSym",
        ring=ring,
        unit=EMPTY_COMPOSITION,
        degree=lambda i: i.weight,
        basis=compositions_of,
        product=lambda a, b: qsym_product_comp(a, b, ring),
        coproduct=lambda i: qsym_coproduct(i, ring),
        antipode=lambda i: qsym_antipode(i, ring),
    )


def series_oracle(x: LinComb, nvars: int, max_degree: int | None = None) -> dict:
    """Expand a combination of M-basis elements as a truncated polynomial.

    Returns {exponent vector of length nvars: coefficient}.  Raises if some
    composition is longer than nvars (its expansion would be cut off) or
    exceeds an explicit degree cap.  Only used as an independent test oracle.
    """
    out: dict[tuple, Fraction] = {}
    for comp, coeff in x.terms.items():
        if comp.length > nvars:
            raise ValueError(
                f"{comp!r} needs at least {comp.length} variables, got {nvars}"
            )
        if max_degree is not None and comp.weight > max_degree:
            raise ValueError(f"{comp!r} exceeds the degree cap {max_degree}")
        for positions in itertools.combinations(range(nvars), comp.length):
            exps = [0] * nvars
            for pos, part in zip(positions, comp.parts):
                exps[pos] = part
            key = tuple(exps)
            new = out.get(key, Fraction(0)) + coeff
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


def series_product(d1: dict, d2: dict) -> dict:
    out: dict[tuple, Fraction] = {}
    for e1, c1 in d1.items():
        for e2, c2 in d2.items():
            key = tuple(a + b for a, b in zip(e1, e2))
            new = out.get(key, Fraction(0)) + c1 * c2
            if new:
                out[key] = new
            else:
                out.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# Sym


def sym_embed(x: LinComb) -> LinComb:
    """The inclusion of Sym into QSym: m_lambda to the sum of M over all
    arrangements of lambda."""
    acc = LinComb.zero(x.ring)
    for lam, c in x.terms.items():
        for comp in distinct_arrangements(lam):
            acc = acc + LinComb.term(x.ring, comp, c)
    return acc


def sym_from_qsym(x: LinComb) -> LinComb:
    """Read a symmetric element off its QSym expansion: the m_lambda
    coefficient is the coefficient of the weakly decreasing arrangement."""
    terms = {}
    for comp, c in x.terms.items():
        if comp.parts == tuple(sorted(comp.parts, reverse=True)):
            terms[comp.partition()] = c
    return LinComb(x.ring, terms)


def sym_product_part(lam: Partition, mu: Partition, ring=QQ) -> LinComb:
    prod = qsym_product(
        sym_embed(LinComb.term(ring, lam)), sym_embed(LinComb.term(ring, mu))
    )
    return sym_from_qsym(prod)


def sym_product(a: LinComb, b: LinComb) -> LinComb:
    return a.bilinear(lambda x, y: sym_product_part(x, y, a.ring), b)


def _multiset_splits(lam: Partition):
    """All ordered pairs (mu, nu) of partitions with multiset union lam."""
    items = sorted(lam.multiplicities().items())
    choices = [range(m + 1) for _, m in items]
    for take in itertools.product(*choices):
        mu = []
        nu = []
        for (value, mult), k in zip(items, take):
            mu.extend([value] * k)
            nu.extend([value] * (mult - k))
        yield Partition(mu), Partition(nu)


def sym_coproduct(lam: Partition, ring=QQ) -> TensorElem:
    """Sum of m_mu x m_nu over all multiset splittings of lambda."""
    terms: dict = {}
    for mu, nu in _multiset_splits(lam):
        terms[(mu, nu)] = terms.get((mu, nu), 0) + 1
    return TensorElem(ring, terms)


@lru_cache(maxsize=None)
def sym_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="Sym",
        ring=ring,
        unit=EMPTY_PARTITION,
        degree=lambda l: l.weight,
        basis=partitions_of,
        product=lambda a, b: sym_product_part(a, b, ring),
        coproduct=lambda l: sym_coproduct(l, ring),
    )


def basis_expand(name: str, k: int, ring=QQ) -> LinComb:
    """The generators e_k, h_k, p_k expanded in the monomial basis."""
    if k < 1:
        raise ValueError("generator index must be positive")
    if name == "e":
        return LinComb.term(ring, Partition([1] * k))
    if name == "h":
        return LinComb(ring, {lam: 1 for lam in partitions_of(k)})
    if name == "p":
        return LinComb.term(ring, Partition([k]))
    raise ValueError(f"unknown generator family {name!r}")


@lru_cache(maxsize=None)
def e_product_expansion(parts: tuple, ring=QQ) -> LinComb:
    """m-basis expansion of the product e_{parts[0]} e_{parts[1]} ..."""
    acc = LinComb.term(ring, EMPTY_PARTITION)
    for x in parts:
        acc = sym_product(acc, basis_expand("e", x, ring))
    return acc


@lru_cache(maxsize=None)
def h_product_expansion(parts: tuple, ring=QQ) -> LinComb:
    acc = LinComb.term(ring, EMPTY_PARTITION)
    for x in parts:
        acc = sym_product(acc, basis_expand("h", x, ring))
    return acc


def to_e_products(x: LinComb):
    """Write a symmetric element as a combination of products of elementary
    generators: returns [(coeff, parts tuple)] with e_{parts} monomials.

    Uses the unitriangularity of e over the monomial basis: the expansion of
    e over the conjugate partition leads with that partition, so repeatedly
    stripping the lexicographically largest term terminates.
    """
    rest = x
    out = []
    guard = 0
    while not rest.is_zero():
        guard += 1
        if guard > 100000:
            raise RuntimeError("e-expansion failed to terminate")
        lam, coeff = max(rest.terms.items(), key=lambda kv: kv[0].sort_key)
        word = lam.conjugate().parts
        out.append((coeff, word))
        rest = rest - e_product_expansion(word, x.ring).scale(coeff)
    return out


def _gauss_solve(matrix, rhs):
    """Solve A x = rhs exactly over the rationals (A square, invertible)."""
    n = len(matrix)
    a = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(matrix, rhs)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


@lru_cache(maxsize=None)
def _h_matrix(n: int):
    """Rows: m-expansions of h_lambda over partitions of n."""
    lams = partitions_of(n)
    index = {lam: i for i, lam in enumerate(lams)}
    rows = []
    for lam in lams:
        exp = h_product_expansion(lam.parts)
        row = [Fraction(0)] * len(lams)
        for mu, c in exp.terms.items():
            row[index[mu]] = c
        rows.append(row)
    return lams, rows


def to_h_basis(x: LinComb) -> LinComb:
    """Coefficients of a symmetric element over the products h_lambda."""
    acc = LinComb.zero(x.ring)
    by_degree: dict[int, dict] = {}
    for lam, c in x.terms.items():
        by_degree.setdefault(lam.weight, {})[lam] = c
    for n, terms in by_degree.items():
        lams, rows = _h_matrix(n)
        rhs = [terms.get(lam, Fraction(0)) for lam in lams]
        # solve transpose(H) c = x
        transposed = [[rows[j][i] for j in range(len(lams))] for i in range(len(lams))]
        sol = _gauss_solve(transposed, rhs)
        acc = acc + LinComb(x.ring, dict(zip(lams, sol)))
    return acc


def sym_pairing(lam: Partition, mu: Partition) -> Fraction:
    """(h_lambda, m_mu): the Kronecker delta making h and m dual bases."""
    return Fraction(1) if lam == mu else Fraction(0)


def sym_pairing_elems(x: LinComb, y: LinComb) -> Fraction:
    """Inner product of two monomial-basis elements: expand the first over
    the h basis and pair against the monomial coefficients of the second."""
    acc = Fraction(0)
    h_side = to_h_basis(x)
    for lam, c in h_side.terms.items():
        acc += c * y.coeff(lam)
    return acc


def eh_identity_check(max_degree: int, ring=QQ) -> Report:
    """Degree-by-degree check of the alternating product identity between the
    elementary and complete generating series, plus S(e_i) = (-1)^i h_i."""
    rep = Report("elementary/complete duality", max_degree)
    ops = sym_ops(ring)

    def alternating(d):
        acc = LinComb.zero(ring)
        for i in range(d + 1):
            j = d - i
            e_part = (
                LinComb.term(ring, EMPTY_PARTITION) if i == 0 else basis_expand("e", i)
            )
            h_part = (
                LinComb.term(ring, EMPTY_PARTITION) if j == 0 else basis_expand("h", j)
            )
            acc = acc + sym_product(e_part, h_part).scale((-1) ** j)
        if not acc.is_zero():
            return f"degree {d}"
        return None

    rep.law("sum (-1)^j e_i h_j = 0", range(1, max_degree + 1), alternating)

    def antipode_eh(i):
        lhs = ops.antipode_lc(basis_expand("e", i, ring))
        rhs = basis_expand("h", i, ring).scale((-1) ** i)
        if lhs != rhs:
            return f"e_{i}"
        return None

    rep.law("S(e_i) = (-1)^i h_i", range(1, max_degree + 1), antipode_eh)
    return rep


# ---------------------------------------------------------------------------
# NSym


def nsym_product(w1: Composition, w2: Composition, ring=QQ) -> LinComb:
    """Concatenation of E-words (free product)."""
    return LinComb.term(ring, Composition(w1.parts + w2.parts))


def nsym_coproduct(w: Composition, ring=QQ) -> TensorElem:
    """Divided-power coproduct of each letter, extended multiplicatively."""
    acc = TensorElem.term(ring, EMPTY_COMPOSITION, EMPTY_COMPOSITION)
    for letter in w.parts:
        step: dict = {}
        for (left, right), c in acc.terms.items():
            for i in range(letter + 1):
                j = letter - i
                new_left = Composition(left.parts + ((i,) if i else ()))
                new_right = Composition(right.parts + ((j,) if j else ()))
                key = (new_left, new_right)
                step[key] = step.get(key, 0) + c
        acc = TensorElem(ring, step)
    return acc


@lru_cache(maxsize=None)
def nsym_ops(ring=QQ) -> HopfOps:
    return HopfOps(
        name="NSym",
        ring=ring,
        unit=EMPTY_COMPOSITION,
        degree=lambda w: w.weight,
        basis=compositions_of,
        product=lambda a, b: nsym_product(a, b, ring),
        coproduct=lambda w: nsym_coproduct(w, ring),
    )


def tau(x: LinComb) -> LinComb:
    """Abelianization: the E-word (i_1, ..., i_k) maps to the product of
    elementary symmetric functions e_{i_1} ... e_{i_k} in the m basis."""
    acc = LinComb.zero(x.ring)
    for word, c in x.terms.items():
        acc = acc + e_product_expansion(word.parts, x.ring).scale(c)
    return acc
