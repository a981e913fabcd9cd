"""Free modules over an arbitrary basis, tensor squares, and generic Hopf checks.

Basis elements must be hashable and expose a ``sort_key`` attribute giving a
total order, so every combination has a canonical rendering.  Scalars live in
a Ring from :mod:`hopftrees.scalar`; mixing rings raises immediately.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Optional, Sequence

from .scalar import Ring


class RingMismatchError(TypeError):
    pass


def _check_ring(a, b):
    if a.ring is not b.ring:
        raise RingMismatchError(f"mixed scalar rings {a.ring.name} and {b.ring.name}")


class LinComb:
    """Finite linear combination of basis elements with nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=None):
        data = {}
        if terms:
            for b, c in terms.items() if isinstance(terms, dict) else terms:
                c = ring.coerce(c)
                if not ring.is_zero(c):
                    if b in data:
                        c = data[b] + c
                        if ring.is_zero(c):
                            del data[b]
                            continue
                    data[b] = c
        self.ring = ring
        self.terms = data

    @classmethod
    def zero(cls, ring: Ring) -> "LinComb":
        return cls(ring)

    @classmethod
    def term(cls, ring: Ring, basis, coeff=None) -> "LinComb":
        return cls(ring, {basis: ring.one if coeff is None else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, basis):
        return self.terms.get(basis, self.ring.zero)

    def support(self):
        return self.terms.keys()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key)

    def __add__(self, other: "LinComb") -> "LinComb":
        _check_ring(self, other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            s = out.get(b, self.ring.zero) + c
            if self.ring.is_zero(s):
                out.pop(b, None)
            else:
                out[b] = s
        res = LinComb(self.ring)
        res.terms = out
        return res

    def __neg__(self) -> "LinComb":
        res = LinComb(self.ring)
        res.terms = {b: -c for b, c in self.terms.items()}
        return res

    def __sub__(self, other: "LinComb") -> "LinComb":
        return self + (-other)

    def scale(self, c) -> "LinComb":
        c = self.ring.coerce(c)
        if self.ring.is_zero(c):
            return LinComb(self.ring)
        return LinComb(self.ring, {b: v * c for b, v in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, LinComb)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.name, frozenset(self.terms.items())))

    def apply_linear(self, f, out_ring: Ring | None = None) -> "LinComb":
        """Extend the basis map f (basis -> basis or LinComb) linearly."""
        ring = out_ring or self.ring
        acc = LinComb.zero(ring)
        for b, c in self.terms.items():
            img = f(b)
            if not isinstance(img, LinComb):
                img = LinComb.term(ring, img)
            acc = acc + img.scale(c)
        return acc

    def map_coeffs(self, f, out_ring: Ring) -> "LinComb":
        return LinComb(out_ring, {b: f(c) for b, c in self.terms.items()})

    def bilinear(self, f, other: "LinComb") -> "LinComb":
        """Sum of c1*c2*f(b1, b2) over all pairs of terms; f returns a LinComb."""
        _check_ring(self, other)
        acc = LinComb.zero(self.ring)
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                acc = acc + f(b1, b2).scale(c1 * c2)
        return acc

    def render(self, basis_str=repr) -> str:
        if not self.terms:
            return "0"
        out = []
        for b, c in self.sorted_terms():
            out.append(f"{self.ring.render(c)}*{basis_str(b)}")
        return " + ".join(out)

    def __repr__(self):
        return f"LinComb<{self.ring.name}>({self.render()})"


class TensorElem:
    """Element of the tensor square: combination of ordered basis pairs."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms=None):
        data = {}
        if terms:
            for pair, c in terms.items() if isinstance(terms, dict) else terms:
                c = ring.coerce(c)
                if not ring.is_zero(c):
                    if pair in data:
                        c = data[pair] + c
                        if ring.is_zero(c):
                            del data[pair]
                            continue
                    data[pair] = c
        self.ring = ring
        self.terms = data

    @classmethod
    def zero(cls, ring: Ring) -> "TensorElem":
        return cls(ring)

    @classmethod
    def term(cls, ring: Ring, left, right, coeff=None) -> "TensorElem":
        return cls(ring, {(left, right): ring.one if coeff is None else coeff})

    @classmethod
    def tensor(cls, a: LinComb, b: LinComb) -> "TensorElem":
        _check_ring(a, b)
        out = {}
        for b1, c1 in a.terms.items():
            for b2, c2 in b.terms.items():
                out[(b1, b2)] = c1 * c2
        return cls(a.ring, out)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, left, right):
        return self.terms.get((left, right), self.ring.zero)

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda kv: (kv[0][0].sort_key, kv[0][1].sort_key)
        )

    def __add__(self, other: "TensorElem") -> "TensorElem":
        _check_ring(self, other)
        out = dict(self.terms)
        for pair, c in other.terms.items():
            s = out.get(pair, self.ring.zero) + c
            if self.ring.is_zero(s):
                out.pop(pair, None)
            else:
                out[pair] = s
        res = TensorElem(self.ring)
        res.terms = out
        return res

    def __neg__(self) -> "TensorElem":
        res = TensorElem(self.ring)
        res.terms = {pair: -c for pair, c in self.terms.items()}
        return res

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElem":
        c = self.ring.coerce(c)
        if self.ring.is_zero(c):
            return TensorElem(self.ring)
        return TensorElem(self.ring, {p: v * c for p, v in self.terms.items()})

    def swap(self) -> "TensorElem":
        return TensorElem(self.ring, {(b, a): c for (a, b), c in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, TensorElem)
            and self.ring is other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.ring.name, frozenset(self.terms.items())))

    def map_sides(self, f_left, f_right, out_ring: Ring | None = None) -> "TensorElem":
        """Apply linear maps to the two tensor factors."""
        ring = out_ring or self.ring
        acc = TensorElem.zero(ring)
        for (a, b), c in self.terms.items():
            la = f_left(a)
            if not isinstance(la, LinComb):
                la = LinComb.term(ring, la)
            lb = f_right(b)
            if not isinstance(lb, LinComb):
                lb = LinComb.term(ring, lb)
            acc = acc + TensorElem.tensor(la, lb).scale(c)
        return acc

    def mul(self, other: "TensorElem", prod_left, prod_right) -> "TensorElem":
        """Componentwise product: (a x b)(a' x b') = (aa') x (bb')."""
        _check_ring(self, other)
        acc = TensorElem.zero(self.ring)
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                acc = acc + TensorElem.tensor(prod_left(a, a2), prod_right(b, b2)).scale(
                    c * c2
                )
        return acc

    def render(self, basis_str=repr) -> str:
        if not self.terms:
            return "0"
        out = []
        for (a, b), c in self.sorted_terms():
            out.append(f"{self.ring.render(c)}*{basis_str(a)}(x){basis_str(b)}")
        return " + ".join(out)

    def __repr__(self):
        return f"TensorElem<{self.ring.name}>({self.render()})"


@dataclass(eq=False)
class HopfOps:
    """Bundle of the structure maps of one graded connected Hopf algebra.

    ``basis(n)`` must list every basis element of degree n; the counit is the
    canonical one for a connected grading (1 on the unit, 0 elsewhere).
    The optional ``antipode`` is an explicit closed formula; when absent the
    generic recursion is used.
    """

    name: str
    ring: Ring
    unit: Any
    degree: Callable[[Any], int]
    basis: Callable[[int], Sequence]
    product: Callable[[Any, Any], LinComb]
    coproduct: Callable[[Any], TensorElem]
    antipode: Optional[Callable[[Any], LinComb]] = None
    _antipode_cache: dict = field(default_factory=dict, init=False, repr=False)

    def counit(self, b):
        return self.ring.one if self.degree(b) == 0 else self.ring.zero

    def term(self, b, coeff=None) -> LinComb:
        return LinComb.term(self.ring, b, coeff)

    def one_lc(self) -> LinComb:
        return self.term(self.unit)

    def product_lc(self, a: LinComb, b: LinComb) -> LinComb:
        return a.bilinear(self.product, b)

    def coproduct_lc(self, a: LinComb) -> TensorElem:
        acc = TensorElem.zero(self.ring)
        for b, c in a.terms.items():
            acc = acc + self.coproduct(b).scale(c)
        return acc

    def antipode_basis(self, b) -> LinComb:
        if self.antipode is not None:
            return self.antipode(b)
        return generic_antipode(self, b)

    def antipode_lc(self, a: LinComb) -> LinComb:
        return a.apply_linear(self.antipode_basis)

    def counit_lc(self, a: LinComb):
        acc = self.ring.zero
        for b, c in a.terms.items():
            acc = acc + self.counit(b) * c
        return acc


def generic_antipode(h: HopfOps, b) -> LinComb:
    """Antipode by the graded-connected recursion.

    S fixes the unit; on positive degree S(u) = -sum S(u')u'' over all
    coproduct terms except u x 1, which terminates because the coproduct
    respects the grading.
    """
    if h.degree(b) == 0:
        return h.one_lc()
    cached = h._antipode_cache.get(b)
    if cached is not None:
        return cached
    acc = LinComb.zero(h.ring)
    for (x, y), c in h.coproduct(b).terms.items():
        if y == h.unit:
            continue  # the u x 1 term moves to the left-hand side
        acc = acc + h.product_lc(generic_antipode(h, x), h.term(y)).scale(c)
    result = -acc
    h._antipode_cache[b] = result
    return result


# ---------------------------------------------------------------------------
# reports


@dataclass
class ReportEntry:
    law: str
    ok: bool
    checked: int = 0
    degree: Optional[int] = None
    witness: Optional[str] = None

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" [{self.checked} cases]" if self.checked else ""
        wit = f" witness: {self.witness}" if self.witness else ""
        deg = f" (degree {self.degree})" if self.degree is not None else ""
        return f"{status} {self.law}{deg}{extra}{wit}"

    def as_json(self) -> dict:
        out = {"law": self.law, "status": "pass" if self.ok else "fail"}
        if self.degree is not None:
            out["degree"] = self.degree
        if self.witness is not None:
            out["witness"] = self.witness
        return out


class Report:
    """Line-oriented verification report with a JSON variant."""

    def __init__(self, name: str, max_degree: Optional[int] = None):
        self.name = name
        self.max_degree = max_degree
        self.entries: list[ReportEntry] = []

    def add(self, law, ok, checked=0, degree=None, witness=None):
        self.entries.append(ReportEntry(law, ok, checked, degree, witness))

    def law(self, name, cases, test, degree=None):
        """Run ``test`` over ``cases``; the test returns a witness string on failure."""
        count = 0
        witness = None
        for case in cases:
            count += 1
            witness = test(case)
            if witness is not None:
                break
        self.add(name, witness is None, checked=count, degree=degree, witness=witness)

    @property
    def passed(self) -> bool:
        return all(e.ok for e in self.entries)

    def lines(self) -> list[str]:
        head = self.name
        if self.max_degree is not None:
            head += f" (max degree {self.max_degree})"
        return [head] + ["  " + e.line() for e in self.entries]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "max_degree": self.max_degree,
            "passed": self.passed,
            "laws": [e.as_json() for e in self.entries],
        }

    def __str__(self):
        return "\n".join(self.lines())


def _pairs_upto(by_deg, total):
    for d1 in range(total + 1):
        for d2 in range(total - d1 + 1):
            for x in by_deg[d1]:
                for y in by_deg[d2]:
                    yield x, y


def _triples_upto(by_deg, total):
    for d1 in range(total + 1):
        for d2 in range(total - d1 + 1):
            for d3 in range(total - d1 - d2 + 1):
                for x in by_deg[d1]:
                    for y in by_deg[d2]:
                        for z in by_deg[d3]:
                            yield x, y, z


def check_axioms(h: HopfOps, max_degree: int) -> Report:
    """Exhaustively verify the graded Hopf-algebra laws on basis elements.

    Covers: unit laws, associativity, degree additivity of the product,
    the connected coproduct form u x 1 + ... + 1 x u, both counit laws,
    grading and coassociativity of the coproduct, multiplicativity of the
    coproduct on basis pairs, and both antipode convolution laws.
    """
    rep = Report(f"{h.name} axioms", max_degree)
    by_deg = {n: list(h.basis(n)) for n in range(max_degree + 1)}
    elems = [b for n in range(max_degree + 1) for b in by_deg[n]]

    rep.law(
        "basis grading",
        ((n, b) for n in range(max_degree + 1) for b in by_deg[n]),
        lambda nb: None if h.degree(nb[1]) == nb[0] else f"{nb[1]!r} in degree {nb[0]}",
    )
    rep.add("unit in degree 0", h.degree(h.unit) == 0)
    rep.add("counit normalization", h.counit(h.unit) == h.ring.one)

    def unit_law(b):
        lhs = h.product(h.unit, b)
        rhs = h.product(b, h.unit)
        if lhs != h.term(b) or rhs != h.term(b):
            return repr(b)
        return None

    rep.law("product unit laws", elems, unit_law)

    def assoc(triple):
        x, y, z = triple
        left = h.product_lc(h.product(x, y), h.term(z))
        right = h.product_lc(h.term(x), h.product(y, z))
        if left != right:
            return f"({x!r}, {y!r}, {z!r})"
        return None

    rep.law("product associativity", _triples_upto(by_deg, max_degree), assoc)

    def grading(pair):
        x, y = pair
        want = h.degree(x) + h.degree(y)
        for b in h.product(x, y).support():
            if h.degree(b) != want:
                return f"{x!r}*{y!r} -> {b!r}"
        return None

    rep.law("product degree additivity", _pairs_upto(by_deg, max_degree), grading)

    def coproduct_form(b):
        cop = h.coproduct(b)
        if h.degree(b) == 0:
            if cop != TensorElem.term(h.ring, h.unit, h.unit):
                return repr(b)
            return None
        if cop.coeff(b, h.unit) != h.ring.one or cop.coeff(h.unit, b) != h.ring.one:
            return repr(b)
        for (x, y), _ in cop.terms.items():
            if (h.degree(x) == 0 and x != h.unit) or (h.degree(y) == 0 and y != h.unit):
                return repr(b)
            if h.degree(x) == 0 and y != b:
                return repr(b)
            if h.degree(y) == 0 and x != b:
                return repr(b)
        return None

    rep.law("coproduct connected form", elems, coproduct_form)

    def coproduct_grading(b):
        want = h.degree(b)
        for (x, y), _ in h.coproduct(b).terms.items():
            if h.degree(x) + h.degree(y) != want:
                return f"{b!r} -> ({x!r}, {y!r})"
        return None

    rep.law("coproduct grading", elems, coproduct_grading)

    def counit_laws(b):
        cop = h.coproduct(b)
        left = LinComb.zero(h.ring)
        right = LinComb.zero(h.ring)
        for (x, y), c in cop.terms.items():
            left = left + LinComb.term(h.ring, y, c * h.counit(x))
            right = right + LinComb.term(h.ring, x, c * h.counit(y))
        if left != h.term(b) or right != h.term(b):
            return repr(b)
        return None

    rep.law("counit laws", elems, counit_laws)

    def coassoc(b):
        left = {}
        right = {}
        for (x, y), c in h.coproduct(b).terms.items():
            for (u, v), d in h.coproduct(x).terms.items():
                key = (u, v, y)
                left[key] = left.get(key, h.ring.zero) + c * d
            for (u, v), d in h.coproduct(y).terms.items():
                key = (x, u, v)
                right[key] = right.get(key, h.ring.zero) + c * d
        left = {k: v for k, v in left.items() if not h.ring.is_zero(v)}
        right = {k: v for k, v in right.items() if not h.ring.is_zero(v)}
        if left != right:
            return repr(b)
        return None

    rep.law("coproduct coassociativity", elems, coassoc)

    def multiplicative(pair):
        x, y = pair
        lhs = h.coproduct_lc(h.product(x, y))
        rhs = h.coproduct(x).mul(h.coproduct(y), h.product, h.product)
        if lhs != rhs:
            return f"({x!r}, {y!r})"
        return None

    rep.law("coproduct multiplicativity", _pairs_upto(by_deg, max_degree), multiplicative)

    def antipode_law(b):
        cop = h.coproduct(b)
        left = LinComb.zero(h.ring)
        right = LinComb.zero(h.ring)
        for (x, y), c in cop.terms.items():
            left = left + h.product_lc(h.antipode_basis(x), h.term(y)).scale(c)
            right = right + h.product_lc(h.term(x), h.antipode_basis(y)).scale(c)
        want = h.one_lc().scale(h.counit(b))
        if left != want or right != want:
            return repr(b)
        return None

    rep.law("antipode convolution laws", elems, antipode_law)
    return rep


def check_cocommutativity(h: HopfOps, max_degree: int) -> Report:
    rep = Report(f"{h.name} cocommutativity", max_degree)
    elems = [b for n in range(max_degree + 1) for b in h.basis(n)]

    def swap_invariant(b):
        cop = h.coproduct(b)
        if cop != cop.swap():
            return repr(b)
        return None

    rep.law("coproduct swap invariance", elems, swap_invariant)
    return rep


# ---------------------------------------------------------------------------
# pairings and duality


def pairing_extend(base, a: LinComb, b: LinComb):
    """Bilinear extension of a basis-pair pairing to combinations."""
    _check_ring(a, b)
    acc = a.ring.zero
    for b1, c1 in a.terms.items():
        for b2, c2 in b.terms.items():
            acc = acc + c1 * c2 * base(b1, b2)
    return acc


def tensor_pairing(base, ta: TensorElem, tb: TensorElem):
    """(a x b, c x d) = (a, c)(b, d), extended bilinearly."""
    _check_ring(ta, tb)
    acc = ta.ring.zero
    for (a, b), c1 in ta.terms.items():
        for (x, y), c2 in tb.terms.items():
            acc = acc + c1 * c2 * base(a, x) * base(b, y)
    return acc


def duality_check(
    hA: HopfOps,
    hB: HopfOps,
    phi: Callable[[Any], Any],
    pairing_a: Callable[[Any, Any], Any],
    pairing_b: Callable[[Any, Any], Any],
    max_degree: int,
) -> Report:
    """Verify the three inner-product conditions making phi exhibit hB as dual to hA.

    (a) pairings agree through phi; (b) products in A pair with coproducts in
    B; (c) coproducts in A pair with products in B.  All basis pairs/triples
    of total degree at most max_degree are checked.
    """
    rep = Report(f"duality {hA.name} ~ {hB.name}", max_degree)
    by_deg = {n: list(hA.basis(n)) for n in range(max_degree + 1)}

    def phi_term(b) -> LinComb:
        img = phi(b)
        if not isinstance(img, LinComb):
            img = LinComb.term(hB.ring, img)
        return img

    rep.law(
        "degree preservation of phi",
        (b for n in range(max_degree + 1) for b in by_deg[n]),
        lambda b: None
        if all(hB.degree(x) == hA.degree(b) for x in phi_term(b).support())
        else repr(b),
    )

    def cond_a(pair):
        a1, a2 = pair
        lhs = pairing_a(a1, a2)
        rhs = pairing_extend(pairing_b, phi_term(a1), phi_term(a2))
        if lhs != rhs:
            return f"({a1!r}, {a2!r})"
        return None

    rep.law("(a) pairing preserved", _pairs_upto(by_deg, max_degree), cond_a)

    def cond_b(triple):
        a1, a2, a3 = triple
        lhs = pairing_extend(pairing_a, hA.product(a1, a2), hA.term(a3))
        tens = TensorElem.tensor(phi_term(a1), phi_term(a2))
        rhs = tensor_pairing(pairing_b, tens, hB.coproduct_lc(phi_term(a3)))
        if lhs != rhs:
            return f"({a1!r}, {a2!r}, {a3!r})"
        return None

    rep.law("(b) product vs dual coproduct", _triples_upto(by_deg, max_degree), cond_b)

    def cond_c(triple):
        a1, a2, a3 = triple
        tens = TensorElem.tensor(hA.term(a1), hA.term(a2))
        lhs = tensor_pairing(pairing_a, tens, hA.coproduct(a3))
        rhs = pairing_extend(
            pairing_b, hB.product_lc(phi_term(a1), phi_term(a2)), phi_term(a3)
        )
        if lhs != rhs:
            return f"({a1!r}, {a2!r}, {a3!r})"
        return None

    rep.law("(c) coproduct vs dual product", _triples_upto(by_deg, max_degree), cond_c)
    return rep


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2)
