import pytest

from hopftrees.trees import (
    BBAParseError,
    DOT,
    Forest,
    OrderedForest,
    PDOT,
    PlanarTree,
    ResourceLimitError,
    RootedTree,
    T_comp,
    bba_decode,
    bba_encode,
    canonicalize,
    catalan,
    child_factorial_product,
    degree_ceiling,
    embedding_count,
    enumerate_planar,
    enumerate_rooted,
    ladder,
    planar_ladder,
    planar_realizations,
    rooted_count_recurrence,
    sym_order,
    t_lambda,
    to_planar,
)

CHERRY = RootedTree([DOT, DOT])


def test_decode_examples():
    assert bba_decode("") == PDOT
    t = bba_decode("<><<>>")
    assert [c.bba for c in t.children] == ["", "<>"]


def test_decode_errors_carry_offsets():
    with pytest.raises(BBAParseError) as err:
        bba_decode("<>>")
    assert err.value.offset == 2
    with pytest.raises(BBAParseError) as err:
        bba_decode("<<")
    assert err.value.offset == 2
    with pytest.raises(BBAParseError) as err:
        bba_decode("<a>")
    assert err.value.offset == 1


def test_encode_examples():
    assert bba_encode(PDOT) == ""
    assert bba_encode(planar_ladder(3)) == "<<>>"
    three_leaves = PlanarTree([PDOT, PDOT, PDOT])
    assert bba_decode(bba_encode(three_leaves)) == three_leaves
    assert bba_encode(three_leaves) == "<><><>"


@pytest.mark.parametrize("n", range(9))
def test_round_trip_exhaustive(n):
    for t in enumerate_planar(n):
        assert bba_decode(bba_encode(t)) == t
        assert len(t.bba) == 2 * (t.size - 1)


def test_canonicalize():
    assert canonicalize(bba_decode("<><<>>")) == canonicalize(bba_decode("<<>><>"))
    assert canonicalize(PDOT) == DOT
    assert canonicalize(bba_decode("<><>")) == CHERRY


def test_canonicalize_idempotent_through_realizations():
    for n in range(6):
        for t in enumerate_rooted(n):
            assert canonicalize(to_planar(t)) == t
            for T in planar_realizations(t):
                assert canonicalize(T) == t


def test_sym_order_examples():
    assert sym_order(DOT) == 1
    assert sym_order(CHERRY) == 2
    assert sym_order(t_lambda((1, 1, 2))) == 2
    assert sym_order(t_lambda((1, 1, 1))) == 6
    assert sym_order(ladder(5)) == 1


def test_enumerate_planar_counts_and_order():
    for n in range(9):
        trees = enumerate_planar(n)
        assert len(trees) == catalan(n)
        strings = [t.bba for t in trees]
        assert strings == sorted(strings)
    assert len(enumerate_planar(3)) == 5
    assert len(enumerate_planar(6)) == 132


def test_enumerate_rooted_counts_against_recurrence():
    expected = [1, 1, 2, 4, 9, 20, 48, 115]
    for n, want in enumerate(expected):
        assert len(enumerate_rooted(n)) == want
        assert rooted_count_recurrence(n + 1) == want


def test_enumerate_rooted_degree_two():
    assert list(enumerate_rooted(2)) == sorted(
        [ladder(3), CHERRY], key=lambda t: t.key
    )


def test_embedding_count_examples():
    assert embedding_count(DOT) == 1
    assert embedding_count(CHERRY) == 1
    assert embedding_count(RootedTree([DOT, ladder(2)])) == 2
    assert {T.bba for T in planar_realizations(RootedTree([DOT, ladder(2)]))} == {
        "<><<>>",
        "<<>><>",
    }


@pytest.mark.parametrize("n", range(8))
def test_embedding_count_vs_preimages_and_symmetry(n):
    for t in enumerate_rooted(n):
        realizations = planar_realizations(t)
        assert len(realizations) == embedding_count(t)
        assert len(set(realizations)) == len(realizations)
        assert embedding_count(t) * sym_order(t) == child_factorial_product(t)


def test_planar_preimage_partition():
    # realizations of distinct rooted trees partition the planar trees
    for n in range(7):
        seen = []
        for t in enumerate_rooted(n):
            seen.extend(planar_realizations(t))
        assert sorted(T.bba for T in seen) == sorted(T.bba for T in enumerate_planar(n))


def test_ladder_families():
    assert ladder(1) == DOT
    assert t_lambda((1, 1)) == CHERRY
    assert T_comp((2, 1)) == bba_decode("<<>><>")
    assert t_lambda(()) == DOT
    assert to_planar(ladder(4)).bba == "<<<>>>"


def test_forest_ordering_and_units():
    f = Forest([CHERRY, DOT, ladder(2)])
    assert f.weight == 6
    assert Forest([DOT, CHERRY, ladder(2)]) == f
    assert Forest().weight == 0
    of1 = OrderedForest([PDOT, planar_ladder(2)])
    of2 = OrderedForest([planar_ladder(2), PDOT])
    assert of1 != of2
    assert of1.reverse() == of2


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        enumerate_planar(degree_ceiling() + 1)


def test_ceiling_env_override(monkeypatch):
    monkeypatch.setenv("HOPFTREES_MAX_DEGREE", "3")
    assert degree_ceiling() == 3
    monkeypatch.setenv("HOPFTREES_MAX_DEGREE", "junk")
    assert degree_ceiling() == 10
