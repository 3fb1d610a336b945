import pytest

from negacyclic.cosets import (CosetError, build_cosets, mult_order,
                               weight_class_sizes, weight_classes, wt3)


def test_mult_order_known_values():
    assert mult_order(3, 20) == 4
    assert mult_order(3, 2) == 1
    assert mult_order(9, 34) == 8
    assert mult_order(3, 28) == 6


def test_mult_order_gcd_error():
    with pytest.raises(CosetError):
        mult_order(3, 21)


def test_cosets_mod_20():
    t = build_cosets(3, 20)
    assert t.cosets[1] == (1, 3, 7, 9)
    assert t.cosets[5] == (5, 15)
    assert t.cosets[11] == (11, 13, 17, 19)
    assert t.odd_leaders == (1, 5, 11)


def test_cosets_mod_2():
    t = build_cosets(3, 2)
    assert t.cosets == {0: (0,), 1: (1,)}


def test_cosets_mod_26():
    t = build_cosets(3, 26)
    assert t.cosets[1] == (1, 3, 9)
    assert t.leader_of[25] == 17
    assert t.cosets[17] == (17, 23, 25)


@pytest.mark.parametrize("q,N", [(3, 20), (3, 26), (3, 80), (9, 34), (3, 242)])
def test_coset_partition_properties(q, N):
    t = build_cosets(q, N)
    seen = []
    for l, members in t.cosets.items():
        assert l == min(members)
        for i in members:
            assert (i * q) % N in members
        seen.extend(members)
    assert sorted(seen) == list(range(N))
    # |C_i| divides ord_N(q), and |C_1| equals it
    order = mult_order(q, N)
    assert len(t.cosets[t.leader_of[1]]) == order
    for members in t.cosets.values():
        assert order % len(members) == 0


def test_wt3_values():
    assert wt3(0) == 0
    assert wt3(5) == 3          # 5 = 2 + 1*3
    assert wt3(3 ** 4 - 1) == 8  # all digits are 2


def test_wt3_range_check():
    with pytest.raises(CosetError):
        wt3(10, 2)
    with pytest.raises(CosetError):
        wt3(-1)


def test_wt3_complement_identity_exhaustive():
    # wt3(3^s - 1 - i) = 2s - wt3(i) for all i, s <= 8
    for s in range(2, 9):
        top = 3 ** s - 1
        for i in range(top + 1):
            assert wt3(top - i) == 2 * s - wt3(i)


def test_wt3_parity_matches_integer():
    for i in range(3 ** 8):
        assert wt3(i) % 2 == i % 2


def test_wt3_constant_on_cosets():
    for m in range(2, 9):
        N = 3 ** m - 1
        t = build_cosets(3, N)
        for members in t.cosets.values():
            ws = {wt3(i) for i in members}
            assert len(ws) == 1


def test_weight_class_sizes_known():
    assert weight_classes(2).class_sizes == (2, 2, 3, 2)
    assert weight_classes(3).class_sizes == (7, 6, 7, 7)
    wc5 = weight_classes(5)
    assert wc5.class_sizes[1] == 61
    assert wc5.class_sizes[3] == 60


def test_weight_classes_match_closed_forms():
    for m in range(2, 9):
        wc = weight_classes(m)
        assert wc.class_sizes == weight_class_sizes(m)
        assert sum(wc.class_sizes) == 3 ** m
        for j in (1, 3):
            assert all(i % 2 == 1 for i in wc.class_members[j])


def test_weight_classes_odd_parity():
    wc = weight_classes(4)
    for j in range(4):
        for i in wc.class_members[j]:
            assert wt3(i) % 2 == j % 2


def test_complement_bijection_swaps_classes():
    # i -> 3^m - 1 - i swaps classes 1<->3 for even m, 0<->2 for odd m
    for m in range(2, 9):
        wc = weight_classes(m)
        top = 3 ** m - 1
        a, b = (1, 3) if m % 2 == 0 else (0, 2)
        assert {top - i for i in wc.class_members[a]} == set(wc.class_members[b])
        assert {top - i for i in wc.class_members[b]} == set(wc.class_members[a])


def test_weight_classes_min_m():
    with pytest.raises(CosetError):
        weight_classes(1)
