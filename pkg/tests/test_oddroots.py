import pytest
from hypothesis import given, strategies as st

from ospkostka.oddroots import (
    biweight,
    dominance_ge,
    dominance_ge_cone,
    odd_positive_roots,
    osp_root_data,
    shuffle,
    simple_odd_roots,
    simple_root_coordinates,
)
from ospkostka.roots import dominant_weights


def labels_in_box(data, bound):
    return [
        (lam0, lam1)
        for lam0 in dominant_weights(data.type0, bound)
        for lam1 in dominant_weights(data.type1, bound)
    ]


def test_rank_bookkeeping():
    d5 = osp_root_data(5)
    assert (d5.parity, d5.n, d5.eps_rank, d5.delta_rank) == ("odd", 2, 2, 2)
    assert (d5.dim_v0, d5.dim_v1) == (4, 4)
    d4 = osp_root_data(4)
    assert (d4.parity, d4.n, d4.eps_rank, d4.delta_rank) == ("even", 2, 2, 1)
    assert (d4.dim_v0, d4.dim_v1) == (4, 2)
    with pytest.raises(ValueError):
        osp_root_data(2)


def test_shuffle_examples():
    assert shuffle(osp_root_data(5)) == (3, 1, 4, 2)
    assert shuffle(osp_root_data(4)) == (1, 3, 2)
    assert shuffle(osp_root_data(3)) == (2, 1)
    assert shuffle(osp_root_data(7)) == (4, 1, 5, 2, 6, 3)
    assert shuffle(osp_root_data(6)) == (1, 4, 2, 5, 3)


def test_odd_positive_roots_n3():
    d = osp_root_data(3)
    assert odd_positive_roots(d) == (biweight((1,), (1,)), biweight((-1,), (1,)))


def test_odd_positive_roots_sizes():
    assert len(odd_positive_roots(osp_root_data(5))) == 8
    assert len(odd_positive_roots(osp_root_data(4))) == 4


def test_simple_odd_roots_examples():
    d3 = osp_root_data(3)
    assert simple_odd_roots(d3) == (biweight((-1,), (1,)), biweight((1,), (1,)))
    d4 = osp_root_data(4)
    assert simple_odd_roots(d4) == (
        biweight((1, 0), (-1,)),
        biweight((0, -1), (1,)),
        biweight((0, 1), (1,)),
    )
    assert len(simple_odd_roots(osp_root_data(5))) == 4


@pytest.mark.parametrize("N", range(3, 11))
def test_lagrangian_count_and_root_sum(N):
    data = osp_root_data(N)
    roots = odd_positive_roots(data)
    assert len(roots) == data.dim_v0 * data.dim_v1 // 2
    total = data.zero()
    for beta in roots:
        total = total + beta
    expected = biweight(
        tuple(2 * x for x in data.rho0), tuple(2 * x for x in data.rho1)
    )
    assert total == expected


@pytest.mark.parametrize("N", range(3, 11))
def test_simple_roots_form_positive_basis(N):
    data = osp_root_data(N)
    simples = simple_odd_roots(data)
    assert len(simples) == data.eps_rank + data.delta_rank
    for k, s in enumerate(simples):
        coords = simple_root_coordinates(data, s)
        basis_vector = tuple(1 if i == k else 0 for i in range(len(simples)))
        assert coords == basis_vector
    for beta in odd_positive_roots(data):
        coords = simple_root_coordinates(data, beta)
        assert coords is not None
        assert all(c >= 0 for c in coords)


@given(
    st.sampled_from([3, 4, 5]),
    st.lists(st.integers(min_value=0, max_value=6), min_size=4, max_size=4),
)
def test_coordinates_invert_nonnegative_combinations(N, coeffs):
    data = osp_root_data(N)
    simples = simple_odd_roots(data)
    coeffs = tuple(coeffs[: len(simples)])
    total = data.zero()
    for c, s in zip(coeffs, simples):
        for _ in range(c):
            total = total + s
    assert simple_root_coordinates(data, total) == coeffs


def test_simple_root_coordinates_examples():
    d3 = osp_root_data(3)
    assert simple_root_coordinates(d3, d3.zero()) == (0, 0)
    assert simple_root_coordinates(d3, biweight((1,), (1,))) == (0, 1)
    assert simple_root_coordinates(d3, biweight((1,), (0,))) is None


def test_dominance_examples():
    d3 = osp_root_data(3)
    lam = ((1,), (1,))
    assert dominance_ge(d3, lam, lam)
    assert dominance_ge(d3, lam, ((0,), (0,)))
    assert not dominance_ge(d3, ((1,), (0,)), ((0,), (0,)))


def test_dominance_rejects_non_dominant_input():
    d4 = osp_root_data(4)
    with pytest.raises(ValueError, match="eps"):
        dominance_ge(d4, ((0, 1), (0,)), ((0, 0), (0,)))
    with pytest.raises(ValueError, match="delta"):
        dominance_ge(d4, ((0, 0), (-1,)), ((0, 0), (0,)))


@pytest.mark.parametrize("N", [3, 4, 5])
def test_order_characterizations_agree(N):
    data = osp_root_data(N)
    labels = labels_in_box(data, 3)
    for lam in labels:
        for mu in labels:
            assert dominance_ge(data, lam, mu) == dominance_ge_cone(data, lam, mu)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_dominance_is_partial_order(N):
    data = osp_root_data(N)
    labels = labels_in_box(data, 3)
    index = {lab: i for i, lab in enumerate(labels)}
    down = [0] * len(labels)
    for i, lam in enumerate(labels):
        for j, mu in enumerate(labels):
            if dominance_ge(data, lam, mu):
                down[i] |= 1 << j
    for i in range(len(labels)):
        assert down[i] >> i & 1  # reflexive
        for j in range(len(labels)):
            if i != j and down[i] >> j & 1:
                assert not down[j] >> i & 1  # antisymmetric
                assert down[i] | down[j] == down[i]  # transitive
