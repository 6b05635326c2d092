from itertools import product as iproduct

import pytest

from conftest import brute_force_l_coeffs, brute_force_partition_table
from ospkostka.kostka import (
    QPoly,
    RootSet,
    kostka,
    kostka_custom,
    l_poly,
    weighted_partition_table,
)
from ospkostka.oddroots import (
    BiWeight,
    biweight,
    dominance_ge,
    odd_positive_roots,
    osp_root_data,
    simple_odd_roots,
)
from ospkostka.roots import EnumerationTooLargeError, GroupType, dominant_weights


def test_qpoly_normalization_and_arithmetic():
    assert QPoly((0, 1, 0)).coeffs == (0, 1)
    assert not QPoly((0, 0))
    assert QPoly((1, 2)) + QPoly((0, -2, 3)) == QPoly((1, 0, 3))
    assert QPoly((1, 1)) - QPoly((1, 1)) == QPoly.zero()
    assert QPoly((1,)).shifted(2) == QPoly((0, 0, 1))
    assert QPoly((2, 1)).degree == 1 and QPoly.zero().degree is None
    assert str(QPoly((0, 1))) == "q"
    assert str(QPoly((1, 0, 3))) == "1 + 3*q^2"


def test_l_poly_examples_n3():
    d3 = osp_root_data(3)
    assert l_poly(d3, d3.zero()) == QPoly.one()
    assert l_poly(d3, biweight((1,), (1,))) == QPoly((0, 1))
    assert l_poly(d3, biweight((0,), (2,))) == QPoly((0, 0, 1))
    assert l_poly(d3, biweight((1,), (0,))) == QPoly.zero()


@pytest.mark.parametrize("N,box,dmax", [(3, 2, 4), (4, 2, 4)])
def test_l_poly_against_literal_enumeration(N, box, dmax):
    data = osp_root_data(N)
    r = data.eps_rank + data.delta_rank
    for flat in iproduct(range(-box, box + 1), repeat=r):
        alpha = BiWeight(flat[: data.eps_rank], flat[data.eps_rank :])
        poly = l_poly(data, alpha)
        assert tuple(poly[d] for d in range(dmax + 1)) == brute_force_l_coeffs(
            data, alpha, dmax
        )


def test_weighted_partition_table_examples():
    d3 = osp_root_data(3)
    table = weighted_partition_table(d3, box=2, dmax=3)
    assert table[(d3.zero(), 0)] == 1
    for beta in odd_positive_roots(d3):
        assert table.get((beta, 1), 0) == 1
    assert table.get((biweight((1,), (0,)), 1), 0) == 0
    assert table[(biweight((0,), (2,)), 2)] == 1


@pytest.mark.parametrize("N", [3, 4])
def test_weighted_partition_table_matches_l_poly(N):
    data = osp_root_data(N)
    table = weighted_partition_table(data, box=2, dmax=4)
    r = data.eps_rank + data.delta_rank
    for flat in iproduct(range(-2, 3), repeat=r):
        alpha = BiWeight(flat[: data.eps_rank], flat[data.eps_rank :])
        poly = l_poly(data, alpha)
        for d in range(5):
            assert table.get((alpha, d), 0) == poly[d]


def test_kostka_examples_n3():
    d3 = osp_root_data(3)
    assert kostka(d3, ((1,), (1,)), ((0,), (0,))) == QPoly((0, 1))
    assert kostka(d3, ((0,), (2,)), ((0,), (0,))) == QPoly((0, 0, 1))


@pytest.mark.parametrize("N", [3, 4, 5])
def test_kostka_diagonal_is_one(N):
    data = osp_root_data(N)
    for lam0 in dominant_weights(data.type0, 2):
        for lam1 in dominant_weights(data.type1, 2):
            lam = (lam0, lam1)
            assert kostka(data, lam, lam) == QPoly.one()


def test_kostka_diagonal_only_identity_term_contributes():
    # every non-identity Weyl pair pushes the L argument out of the cone
    from ospkostka.roots import act, weyl_elements, identity_element

    data = osp_root_data(4)
    for lam0 in dominant_weights(data.type0, 2):
        for lam1 in dominant_weights(data.type1, 2):
            shift0 = tuple(a + b for a, b in zip(lam0, data.rho0))
            shift1 = tuple(a + b for a, b in zip(lam1, data.rho1))
            for w0 in weyl_elements(data.type0):
                for w1 in weyl_elements(data.type1):
                    if (w0, w1) == (
                        identity_element(data.eps_rank),
                        identity_element(data.delta_rank),
                    ):
                        continue
                    arg = BiWeight(
                        tuple(a - b - c for a, b, c in zip(act(w0, shift0), data.rho0, lam0)),
                        tuple(a - b - c for a, b, c in zip(act(w1, shift1), data.rho1, lam1)),
                    )
                    assert l_poly(data, arg) == QPoly.zero()


def test_kostka_rejects_bad_input():
    d3 = osp_root_data(3)
    with pytest.raises(ValueError):
        kostka(d3, ((0,), (-1,)), ((0,), (0,)))
    with pytest.raises(EnumerationTooLargeError):
        kostka(osp_root_data(11), ((0,) * 5, (0,) * 5), ((0,) * 5, (0,) * 5))


@pytest.mark.parametrize("N", [3, 4])
def test_kostka_truncated_brute_force(N):
    """Cross-check the Weyl sum against literally enumerated L-tables."""
    from ospkostka.roots import act, sign, weyl_elements

    data = osp_root_data(N)
    dmax = 5
    table = brute_force_partition_table(data, dmax)
    for lam0 in dominant_weights(data.type0, 1):
        for lam1 in dominant_weights(data.type1, 1):
            for mu0 in dominant_weights(data.type0, 1):
                for mu1 in dominant_weights(data.type1, 1):
                    expected = [0] * (dmax + 1)
                    shift0 = tuple(a + b for a, b in zip(lam0, data.rho0))
                    shift1 = tuple(a + b for a, b in zip(lam1, data.rho1))
                    for w0 in weyl_elements(data.type0):
                        arg0 = tuple(
                            a - b - c
                            for a, b, c in zip(act(w0, shift0), data.rho0, mu0)
                        )
                        for w1 in weyl_elements(data.type1):
                            arg1 = tuple(
                                a - b - c
                                for a, b, c in zip(act(w1, shift1), data.rho1, mu1)
                            )
                            s = sign(w0) * sign(w1)
                            for d in range(dmax + 1):
                                expected[d] += s * table.get(
                                    (BiWeight(arg0, arg1), d), 0
                                )
                    got = kostka(data, (lam0, lam1), (mu0, mu1))
                    # degrees above dmax cannot appear for these tiny weights
                    assert got.degree is None or got.degree <= dmax
                    assert tuple(got[d] for d in range(dmax + 1)) == tuple(expected)


@pytest.mark.parametrize("N", [3, 4, 5])
def test_triangularity_and_cone_nonvanishing(N):
    data = osp_root_data(N)
    box = 2
    labels = [
        (l0, l1)
        for l0 in dominant_weights(data.type0, box)
        for l1 in dominant_weights(data.type1, box)
    ]
    for lam in labels:
        for mu in labels:
            poly = kostka(data, lam, mu)
            ge = dominance_ge(data, lam, mu)
            if ge:
                assert poly, (lam, mu)
            else:
                assert not poly, (lam, mu)


def test_kostka_custom_agrees_with_builtin():
    for N in (3, 4):
        data = osp_root_data(N)
        roots = RootSet(odd_positive_roots(data), f"builtin-{N}")
        simples = simple_odd_roots(data)
        for lam1 in dominant_weights(data.type1, 1):
            lam = (tuple([1] + [0] * (data.eps_rank - 1)), lam1)
            mu = ((0,) * data.eps_rank, (0,) * data.delta_rank)
            assert kostka_custom(
                roots, simples, data.type0, data.type1,
                (data.rho0, data.rho1), lam, mu,
            ) == kostka(data, lam, mu)


def test_kostka_custom_single_root():
    # one root eps_1 with trivial D_1 factor and a C_1 reflection whose
    # term dies: lam - mu = 2*eps_1 decomposes once, in 2 parts
    v = biweight((2,), (0,))
    root = biweight((1,), (0,))
    out = kostka_custom(
        RootSet((root,), "single"),
        [root],
        GroupType("D", 1),
        GroupType("C", 1),
        ((0,), (1,)),
        ((2,), (0,)),
        ((0,), (0,)),
    )
    assert out == QPoly((0, 0, 1))


def test_kostka_custom_empty_reach():
    root = biweight((1,), (1,))
    out = kostka_custom(
        RootSet((root,), "single"),
        [root],
        GroupType("D", 1),
        GroupType("C", 1),
        ((0,), (1,)),
        ((1,), (0,)),
        ((0,), (0,)),
    )
    assert out == QPoly.zero()


def test_kostka_custom_rejects_bad_root_set():
    good = biweight((1,), (1,))
    bad = biweight((-1,), (-1,))
    with pytest.raises(ValueError):
        kostka_custom(
            RootSet((good, bad), "bad"),
            [good],
            GroupType("D", 1),
            GroupType("C", 1),
            ((0,), (1,)),
            ((0,), (0,)),
            ((0,), (0,)),
        )
