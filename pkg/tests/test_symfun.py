import pytest

from hopftrees.freemodule import LinComb, TensorElem, generic_antipode
from hopftrees.scalar import QQ
from hopftrees.symfun import (
    Composition,
    Partition,
    basis_expand,
    coarsenings,
    compositions_of,
    distinct_arrangements,
    e_product_expansion,
    eh_identity_check,
    h_product_expansion,
    nsym_coproduct,
    nsym_ops,
    nsym_product,
    partitions_of,
    qsym_antipode,
    qsym_coproduct,
    qsym_ops,
    qsym_product,
    qsym_product_comp,
    series_oracle,
    series_product,
    sym_coproduct,
    sym_embed,
    sym_from_qsym,
    sym_pairing,
    sym_pairing_elems,
    sym_product,
    tau,
    to_e_products,
    to_h_basis,
)

C = Composition
P = Partition


def M(*parts):
    return LinComb.term(QQ, C(parts))


def m(*parts):
    return LinComb.term(QQ, P(parts))


def test_index_types():
    assert P([1, 2, 1]).parts == (2, 1, 1)
    assert P([2, 1, 1]).multiplicities() == {2: 1, 1: 2}
    assert P([2, 1, 1]).sym_order() == 2
    assert P([3, 1]).conjugate() == P([2, 1, 1])
    assert C([2, 1]).reverse() == C([1, 2])
    assert C([2, 1]).partition() == P([2, 1])
    with pytest.raises(ValueError):
        P([0])
    with pytest.raises(ValueError):
        C([1, -1])


def test_partition_composition_enumeration():
    assert [p.parts for p in partitions_of(4)] == [
        (1, 1, 1, 1),
        (2, 1, 1),
        (2, 2),
        (3, 1),
        (4,),
    ]
    assert len(compositions_of(5)) == 16
    assert coarsenings(C([1, 1, 1])) == [
        C([1, 1, 1]),
        C([2, 1]),
        C([1, 2]),
        C([3]),
    ]
    assert sorted(c.parts for c in distinct_arrangements(P([2, 1, 1]))) == [
        (1, 1, 2),
        (1, 2, 1),
        (2, 1, 1),
    ]


def test_quasi_shuffle_examples():
    assert qsym_product_comp(C([1]), C([1])) == M(1, 1).scale(2) + M(2)
    assert qsym_product(M(2, 1), LinComb.term(QQ, C())) == M(2, 1)
    # coefficient of m_{2,1,1} in m_1 * m_{2,1} is 2
    prod = sym_product(m(1), m(2, 1))
    assert prod.coeff(P([2, 1, 1])) == 2


def test_series_oracle_definition():
    assert series_oracle(M(2), 2) == {(2, 0): 1, (0, 2): 1}
    assert series_oracle(M(1, 1), 2) == {(1, 1): 1}
    e2 = sym_embed(basis_expand("e", 2))
    assert series_oracle(e2, 3) == {(1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1}
    with pytest.raises(ValueError):
        series_oracle(M(1, 1, 1), 2)


@pytest.mark.parametrize("total", range(1, 7))
def test_quasi_shuffle_against_series_oracle(total):
    for a in range(total + 1):
        b = total - a
        for i in compositions_of(a):
            for j in compositions_of(b):
                nvars = max(1, i.length + j.length)
                lhs = series_oracle(
                    qsym_product(LinComb.term(QQ, i), LinComb.term(QQ, j)), nvars
                )
                rhs = series_product(
                    series_oracle(LinComb.term(QQ, i), nvars),
                    series_oracle(LinComb.term(QQ, j), nvars),
                )
                assert lhs == rhs


def test_qsym_coproduct_examples():
    cop = qsym_coproduct(C([2, 1, 1]))
    assert cop == TensorElem(
        QQ,
        {
            (C(), C([2, 1, 1])): 1,
            (C([2]), C([1, 1])): 1,
            (C([2, 1]), C([1])): 1,
            (C([2, 1, 1]), C()): 1,
        },
    )
    assert qsym_coproduct(C()) == TensorElem.term(QQ, C(), C())
    assert qsym_coproduct(C([3])) == TensorElem(
        QQ, {(C([3]), C()): 1, (C(), C([3])): 1}
    )


def test_qsym_antipode_examples():
    assert qsym_antipode(C([2])) == LinComb.term(QQ, C([2]), -1)
    assert qsym_antipode(C([1, 1])) == M(1, 1) + M(2)
    assert qsym_antipode(C([2, 1])) == M(1, 2) + M(3)


@pytest.mark.parametrize("n", range(7))
def test_qsym_antipode_matches_generic(n):
    ops = qsym_ops(QQ)
    for comp in compositions_of(n):
        assert qsym_antipode(comp) == generic_antipode(ops, comp)


def test_qsym_antipode_wrong_refinement_reading_fails():
    # summing over refinements instead of coarsenings breaks the convolution
    # law already at the one-part composition (2)
    def wrong_antipode(i):
        refinements = [j for j in compositions_of(i.weight) if i in coarsenings(j)]
        sign = -1 if i.length % 2 else 1
        return LinComb(QQ, {j.reverse(): sign for j in refinements})

    ops = qsym_ops(QQ)
    target = C([2])
    acc = LinComb.zero(QQ)
    for (x, y), c in qsym_coproduct(target).terms.items():
        acc = acc + ops.product_lc(wrong_antipode(x), ops.term(y)).scale(c)
    assert not acc.is_zero()  # convolution should have produced zero


def test_sym_coproduct_display():
    cop = sym_coproduct(P([2, 1, 1]))
    expected = TensorElem(
        QQ,
        {
            (P(), P([2, 1, 1])): 1,
            (P([1]), P([2, 1])): 1,
            (P([2]), P([1, 1])): 1,
            (P([1, 1]), P([2])): 1,
            (P([2, 1]), P([1])): 1,
            (P([2, 1, 1]), P()): 1,
        },
    )
    assert cop == expected
    assert sym_coproduct(P()) == TensorElem.term(QQ, P(), P())
    assert sym_coproduct(P([4])) == TensorElem(
        QQ, {(P([4]), P()): 1, (P(), P([4])): 1}
    )


def test_basis_expand():
    assert basis_expand("e", 2) == m(1, 1)
    assert basis_expand("h", 2) == m(2) + m(1, 1)
    assert basis_expand("p", 3) == m(3)
    with pytest.raises(ValueError):
        basis_expand("q", 1)


def test_h_equals_sum_of_M():
    for k in range(1, 7):
        embedded = sym_embed(basis_expand("h", k))
        expected = LinComb(QQ, {c: 1 for c in compositions_of(k)})
        assert embedded == expected


def test_embedding_intertwines_coproducts():
    for n in range(7):
        for lam in partitions_of(n):
            lhs = TensorElem.zero(QQ)
            for (a, b), c in sym_coproduct(lam).terms.items():
                lhs = lhs + TensorElem.tensor(
                    sym_embed(LinComb.term(QQ, a)), sym_embed(LinComb.term(QQ, b))
                ).scale(c)
            rhs = TensorElem.zero(QQ)
            for comp, c in sym_embed(LinComb.term(QQ, lam)).terms.items():
                rhs = rhs + qsym_coproduct(comp).scale(c)
            assert lhs == rhs


def test_eh_identity():
    rep = eh_identity_check(6)
    assert rep.passed
    # degree 2 spelled out: e_2 - e_1 h_1 + h_2 = 0
    acc = (
        basis_expand("e", 2)
        - sym_product(basis_expand("e", 1), basis_expand("h", 1))
        + basis_expand("h", 2)
    )
    assert acc.is_zero()


def test_nsym_ops():
    w21 = nsym_product(C([2]), C([1]))
    assert w21 == LinComb.term(QQ, C([2, 1]))
    assert w21 != LinComb.term(QQ, C([1, 2]))
    assert nsym_coproduct(C([2])) == TensorElem(
        QQ, {(C([2]), C()): 1, (C([1]), C([1])): 1, (C(), C([2])): 1}
    )
    ops = nsym_ops(QQ)
    assert generic_antipode(ops, C([1])) == LinComb.term(QQ, C([1]), -1)


def test_tau_examples():
    assert tau(LinComb.term(QQ, C([1]))) == m(1)
    assert tau(LinComb.term(QQ, C([1, 1]))) == m(1, 1).scale(2) + m(2)
    assert tau(LinComb.term(QQ, C([2]))) == m(1, 1)


def test_sym_pairing_examples():
    assert sym_pairing(P([2, 1]), P([2, 1])) == 1
    assert sym_pairing(P([2, 1]), P([1, 1, 1])) == 0


@pytest.mark.parametrize("total", range(1, 6))
def test_pairing_h_products_vs_monomials(total):
    # (h_mu h_nu, m_lambda) = delta_{mu cup nu, lambda}
    for a in range(total + 1):
        for mu in partitions_of(a):
            for nu in partitions_of(total - a):
                prod = sym_product(
                    h_product_expansion(mu.parts), h_product_expansion(nu.parts)
                )
                for lam in partitions_of(total):
                    want = 1 if mu.union(nu) == lam else 0
                    assert sym_pairing_elems(prod, m(*lam.parts)) == want


def test_to_e_products_round_trip():
    for n in range(6):
        for lam in partitions_of(n):
            x = LinComb.term(QQ, lam)
            rebuilt = LinComb.zero(QQ)
            for coeff, word in to_e_products(x):
                rebuilt = rebuilt + e_product_expansion(word).scale(coeff)
            assert rebuilt == x


def test_to_h_basis_round_trip():
    for n in range(6):
        for lam in partitions_of(n):
            x = LinComb.term(QQ, lam)
            back = LinComb.zero(QQ)
            for mu, coeff in to_h_basis(x).terms.items():
                back = back + h_product_expansion(mu.parts).scale(coeff)
            assert back == x


def test_sym_from_qsym_consistency():
    x = m(2, 1)
    assert sym_from_qsym(sym_embed(x)) == x


def test_qsym_not_cocommutative_witness():
    cop = qsym_coproduct(C([2, 1, 1]))
    assert cop.swap() != cop


def test_sym_cocommutative_through_degree_six():
    from hopftrees.freemodule import check_cocommutativity
    from hopftrees.symfun import sym_ops

    assert check_cocommutativity(sym_ops(QQ), 6).passed
