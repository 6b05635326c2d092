import pytest
from hypothesis import given, strategies as st

from ospkostka.roots import (
    EnumerationTooLargeError,
    GroupType,
    SignedPermutation,
    act,
    compose,
    dominant_representative,
    dominant_weights,
    identity_element,
    is_dominant,
    positive_roots,
    rho,
    sign,
    weyl_elements,
    weyl_order,
)

C1 = GroupType("C", 1)
C2 = GroupType("C", 2)
D1 = GroupType("D", 1)
D2 = GroupType("D", 2)


def test_positive_roots_c2():
    assert positive_roots(C2) == ((1, -1), (1, 1), (2, 0), (0, 2))


def test_positive_roots_d1_empty():
    assert positive_roots(D1) == ()


def test_positive_roots_d2():
    assert positive_roots(D2) == ((1, -1), (1, 1))


def test_rho_examples():
    assert rho(C2) == (2, 1)
    assert rho(D2) == (1, 0)
    assert rho(D1) == (0,)


@pytest.mark.parametrize(
    "gtype,count",
    [(C2, 8), (D2, 4), (D1, 1), (C1, 2), (GroupType("D", 3), 24)],
)
def test_weyl_counts(gtype, count):
    elements = list(weyl_elements(gtype))
    assert len(elements) == count == weyl_order(gtype)
    assert len(set(elements)) == count


def test_weyl_rank_guard():
    with pytest.raises(EnumerationTooLargeError):
        list(weyl_elements(GroupType("C", 9)))


def test_act_identity():
    w = identity_element(3)
    assert act(w, (5, -2, 7)) == (5, -2, 7)


def test_act_c1_sign_flip():
    w = SignedPermutation((0,), (-1,))
    assert act(w, (3,)) == (-3,)


def test_act_d2_swap_with_double_flip():
    w = SignedPermutation((1, 0), (-1, -1))
    assert act(w, (2, 5)) == (-5, -2)


def test_act_rank_mismatch():
    with pytest.raises(ValueError):
        act(identity_element(2), (1, 2, 3))


def test_sign_examples():
    assert sign(identity_element(3)) == 1
    transposition = SignedPermutation((1, 0, 2), (1, 1, 1))
    assert sign(transposition) == -1
    flip = SignedPermutation((0,), (-1,))
    assert sign(flip) == -1


def test_is_dominant_examples():
    assert is_dominant(D2, (3, -2))
    assert not is_dominant(C2, (1, 2))
    assert is_dominant(D1, (-5,))
    assert not is_dominant(D2, (1, 2))
    assert not is_dominant(C2, (1, -1))


@pytest.mark.parametrize("gtype", [C1, C2, GroupType("C", 3), GroupType("C", 4),
                                   D1, D2, GroupType("D", 3), GroupType("D", 4)])
def test_positive_roots_sum_to_two_rho(gtype):
    total = [0] * gtype.rank
    for root in positive_roots(gtype):
        for i, c in enumerate(root):
            total[i] += c
    assert tuple(total) == tuple(2 * x for x in rho(gtype))


@pytest.mark.parametrize("gtype", [C2, D2, GroupType("D", 3)])
def test_group_action_and_sign_homomorphism(gtype):
    probe = tuple(range(3 * gtype.rank, 0, -3))[: gtype.rank]
    elements = list(weyl_elements(gtype))
    for w in elements:
        for v in elements:
            wv = compose(w, v)
            assert act(wv, probe) == act(w, act(v, probe))
            assert sign(wv) == sign(w) * sign(v)


@given(st.lists(st.integers(min_value=-30, max_value=30), min_size=2, max_size=2))
def test_action_composition_on_arbitrary_weights(coords):
    lam = tuple(coords)
    elements = list(weyl_elements(D2))
    for w in elements:
        for v in elements:
            assert act(compose(w, v), lam) == act(w, act(v, lam))


@pytest.mark.parametrize("gtype", [C1, C2, D2, GroupType("D", 3), GroupType("C", 3)])
def test_faithful_on_regular_weights(gtype):
    regular = tuple(range(5 * gtype.rank, 0, -5))[: gtype.rank]
    assert is_dominant(gtype, regular)
    ident = identity_element(gtype.rank)
    for w in weyl_elements(gtype):
        if w != ident:
            assert act(w, regular) != regular


@pytest.mark.parametrize("gtype", [C2, D2, D1, GroupType("D", 3)])
def test_orbit_has_dominant_element(gtype):
    for lam in dominant_weights(gtype, 2):
        for w in weyl_elements(gtype):
            moved = act(w, lam)
            orbit = {act(v, moved) for v in weyl_elements(gtype)}
            assert any(is_dominant(gtype, x) for x in orbit)


@pytest.mark.parametrize("gtype", [C2, D2, GroupType("D", 3)])
def test_regular_orbit_has_unique_dominant_element(gtype):
    regular = tuple(range(2 * gtype.rank, 0, -2))[: gtype.rank]
    orbit = {act(w, regular) for w in weyl_elements(gtype)}
    dominant = [x for x in orbit if is_dominant(gtype, x)]
    assert dominant == [regular]


@pytest.mark.parametrize("gtype", [C1, C2, D1, D2, GroupType("D", 3), GroupType("C", 3)])
def test_dominant_representative_matches_enumeration(gtype):
    for lam in dominant_weights(gtype, 2):
        for w in weyl_elements(gtype):
            moved = act(w, lam)
            rep = dominant_representative(gtype, moved)
            if rep is None:
                # singular: some nontrivial element fixes the weight
                assert any(
                    act(v, moved) == moved and v != identity_element(gtype.rank)
                    for v in weyl_elements(gtype)
                )
                continue
            s, dom = rep
            assert is_dominant(gtype, dom)
            carriers = [
                v for v in weyl_elements(gtype) if act(v, moved) == dom
            ]
            assert carriers and all(sign(v) == s for v in carriers)
    if gtype.rank >= 2:
        assert dominant_representative(gtype, (1,) * gtype.rank) is None
