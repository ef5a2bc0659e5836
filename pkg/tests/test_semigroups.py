import itertools

import pytest

from agflag.errors import ArityMismatch, CardinalityMismatch, NotGaloisInvariant, PreconditionViolated, RangeError
from agflag.golden import EXAMPLE_CASES, full_set
from agflag.kummer import P_INF, Ramified, Split
from agflag.semigroups import (
    PMode,
    ghat_membership,
    guaranteed_block,
    hhat_closed_infty,
    hhat_generic,
    hstar_closed,
    hstar_closed_infty,
    hstar_closed_ramified,
    hstar_generic,
    jump_set,
    lub,
    nabla_empty,
    reduce_beta,
    scan_range,
)

INF, Q1 = PMode.INFINITY, PMode.RAMIFIED
B11 = (1, 1, 1, 1)


def test_hhat_examples(c7, herm):
    assert hhat_generic(c7, INF, (0, 0), 0)
    assert not hhat_generic(c7, INF, (0, 0), 1)
    assert hhat_closed_infty(herm, 4, B11, 70)
    assert hhat_closed_infty(herm, 4, B11, -4)
    assert not hhat_closed_infty(herm, 4, B11, -5)
    assert hhat_closed_infty(herm, 4, B11, 4)


def test_hstar_examples(c7, herm):
    assert hstar_generic(c7, 2, INF, (0, 0), 0)
    assert not hstar_generic(c7, 2, INF, (0, 0), 6)
    assert not hstar_generic(herm, 4, INF, B11, -5)
    assert hstar_closed_infty(herm, 4, B11, -4)
    assert not hstar_closed_infty(herm, 4, B11, 2)
    assert hstar_closed_infty(herm, 4, B11, 57)
    assert not hstar_closed_infty(herm, 4, B11, 56)
    assert hstar_closed_ramified(c7, 2, (0,), 0)
    assert not hstar_closed_ramified(c7, 2, (0,), 1)


def test_closed_form_preconditions(herm, c7):
    with pytest.raises(PreconditionViolated):
        hstar_closed_infty(herm, 4, (-1, 0, 0, 0), 3)
    with pytest.raises(RangeError):
        jump_set(c7, 1, Q1, ())
    with pytest.raises(ArityMismatch):
        jump_set(c7, 2, INF, (0,))


def _c7_cases():
    for t in (1, 2):
        for beta in itertools.product(range(3), repeat=t):
            yield t, INF, beta
    for beta in range(3):
        yield 2, Q1, (beta,)


@pytest.mark.parametrize("t,mode,beta", list(_c7_cases()))
def test_c7_closed_equals_generic_pointwise(c7, t, mode, beta):
    for a in range(scan_range(c7, t, beta).start - 3, scan_range(c7, t, beta).stop + 3):
        assert hstar_closed(c7, t, mode, beta, a) == hstar_generic(c7, t, mode, beta, a)


@pytest.mark.parametrize("t", [1, 2, 3, 4])
def test_hermitian_closed_equals_generic_reduced(herm, t):
    for beta in itertools.islice(itertools.product(range(5), repeat=t), 0, None, 7):
        assert jump_set(herm, t, INF, beta, "closed") == jump_set(herm, t, INF, beta, "generic")


@pytest.mark.parametrize("t", [2, 3, 4])
def test_hermitian_ramified_closed_equals_generic(herm, t):
    for beta in itertools.islice(itertools.product(range(5), repeat=t - 1), 0, None, 5):
        assert jump_set(herm, t, Q1, beta, "closed") == jump_set(herm, t, Q1, beta, "generic")


@pytest.mark.parametrize("case", EXAMPLE_CASES, ids=lambda c: str(c["beta"]))
def test_example_sets_closed_and_generic(herm, case):
    for method in ("closed", "generic"):
        js = jump_set(herm, case["t"], INF, case["beta"], method)
        assert list(js) == full_set(case)
        assert js.a0 == case["a0"]


def test_c7_example_set(c7):
    for method in ("closed", "generic", "code-oracle"):
        assert list(jump_set(c7, 2, INF, (0, 0), method)) == [0, 2, 3, 4, 5, 7]
        assert list(jump_set(c7, 2, Q1, (0,), method)) == [0, 2, 3, 4, 5, 7]


@pytest.mark.parametrize("t,beta", [(4, B11), (3, (2, 2, 2)), (2, (0, 4)), (1, (3,))])
def test_jump_set_relations(herm, t, beta):
    n, B = herm.n_for(t), sum(beta)
    js = jump_set(herm, t, INF, beta)
    hh = {a for a in range(-B - 2, n + 2 * herm.genus + 2) if hhat_generic(herm, INF, beta, a)}
    assert set(js) <= hh
    for a in scan_range(herm, t, beta):
        if 0 <= a + B < n:
            assert (a in js) == (a in hh)
    assert set(guaranteed_block(herm, t, beta)) <= set(js)
    assert n - B <= max(js) <= n + 2 * herm.genus - 1 - B
    assert {a for a in hh if a >= 2 * herm.genus - B} == set(range(2 * herm.genus - B, n + 2 * herm.genus + 2))


def test_reduce_beta():
    class M5:
        m = 5
    assert reduce_beta(M5, 2, (-3, -3, 7)) == (-3, (2, 2, 2))
    assert reduce_beta(M5, 9, (0, 4, 1)) == (9, (0, 4, 1))


def test_reduce_beta_shifts_jump_sets(herm):
    small = jump_set(herm, 3, INF, (2, 2, 2))
    big = jump_set(herm, 3, INF, (-3, -3, 7))
    assert [a + 5 for a in small] == list(big)
    for a in scan_range(herm, 3, (-3, -3, 7)):
        a2, b2 = reduce_beta(herm, a, (-3, -3, 7))
        assert (a in big) == hstar_closed(herm, 3, INF, b2, a2)


def test_reduce_beta_ramified_mode(herm):
    for beta in [(6, -2, 3), (-5, 9, 1)]:
        js = jump_set(herm, 4, Q1, beta, "generic")
        for a in scan_range(herm, 4, beta):
            a2, b2 = reduce_beta(herm, a, beta)
            assert (a in js) == hstar_closed(herm, 4, Q1, b2, a2)


def test_cardinality_guard(c7, monkeypatch):
    import agflag.semigroups as sg
    monkeypatch.setattr(sg, "_closed_at", lambda *args: True)
    with pytest.raises(CardinalityMismatch):
        jump_set(c7, 2, INF, (0, 0))


def test_ghat_examples(c7):
    Q = Ramified(1)
    assert ghat_membership(c7, (P_INF, Q), (0, 0))
    assert not ghat_membership(c7, (P_INF, Q), (1, 0))
    for alpha in [(2, 0), (1, 1), (3, -1), (0, 2)]:
        assert ghat_membership(c7, (P_INF, Q), alpha)
    with pytest.raises(NotGaloisInvariant):
        ghat_membership(c7, (P_INF, Split(3, 3)), (1, 1))
    assert nabla_empty(c7, (P_INF, Q), (1, 0), 0)


def _ghat_box(curve, places, lo=-2, hi=4):
    return {al for al in itertools.product(range(lo, hi), repeat=len(places)) if ghat_membership(curve, places, al)}


def test_lub_and_closure(c7):
    assert lub([(1, 2), (2, 1)]) == (2, 2)
    assert lub([(3, -1)]) == (3, -1)
    with pytest.raises(ArityMismatch):
        lub([(1,), (1, 2)])
    places = (P_INF, Ramified(1), Ramified(2))
    box = _ghat_box(c7, places, -1, 3)
    for u, v in itertools.combinations(sorted(box), 2):
        assert ghat_membership(c7, places, lub([u, v]))


def test_large_sum_is_member(c7):
    places = (P_INF, Ramified(1))
    for al in itertools.product(range(-4, 6), repeat=2):
        if sum(al) >= 2 * c7.genus:
            assert ghat_membership(c7, places, al)


def test_product_inclusion_nonnegative(c7):
    left = _ghat_box(c7, (P_INF,), 0, 5)
    right = _ghat_box(c7, (Ramified(1), Ramified(2)), 0, 4)
    for (a,), (b, c) in itertools.product(left, right):
        assert ghat_membership(c7, (P_INF, Ramified(1), Ramified(2)), (a, b, c))


def test_product_inclusion_fails_with_negative_entries(c7):
    # the only function in L(2Q_1 - Q_2) vanishes at P_inf, since 2Q_1 - Q_2 - P_inf is principal
    assert ghat_membership(c7, (P_INF,), (0,))
    assert ghat_membership(c7, (Ramified(1), Ramified(2)), (2, -1))
    assert not ghat_membership(c7, (P_INF, Ramified(1), Ramified(2)), (0, 2, -1))


def test_weierstrass_semigroup_lifts(c7):
    qs = (Ramified(1), Ramified(2))
    H_P = [a for a in range(0, 8) if ghat_membership(c7, (P_INF,), (a,))]
    assert H_P == [0, 2, 3, 4, 5, 6, 7]
    for beta in _ghat_box(c7, qs, 0, 3):
        for a in H_P:
            assert ghat_membership(c7, (P_INF, *qs), (a, *beta))
