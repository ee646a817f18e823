from hypothesis import given
from hypothesis import strategies as st

from skein.cobordism import generator, compose, tensor, sucob_context
from skein.spanning import (DIM_COLUMNS, MarkClass, bell, decorated_partitions, dim_counts,
                            mark_classes, multinomial, set_partitions, spanning_S, spanning_T,
                            stirling2, t_size, theta_m, xi, xi_family)
from skein.surfaces import OUT, is_canonical


def test_xi_examples():
    assert xi(1, ()) == generator("u")
    assert xi(4, (1, 3)) == xi(4, (2, 4))
    (d,) = xi(2, (2,)).terms
    assert d.components[0].marks == ((OUT, 2),)
    assert MarkClass(3, (1, 2)).rep == (3,)


def test_theta_examples():
    ctx = sucob_context()
    assert theta_m(1, 1) == generator("theta")
    th = generator("theta")
    assert theta_m(1, 2) == compose(generator("m"), tensor(th, th), ctx)
    assert theta_m(2, 1) == spanning_T(2)[2]


def test_family_sizes():
    assert [len(spanning_S(m)) for m in range(1, 5)] == [1, 3, 11, 49]
    assert [len(spanning_T(m)) for m in range(1, 4)] == [3, 13, 69]
    assert spanning_S(1) == [generator("u")]
    assert spanning_T(1) == [generator("u"), theta_m(1, 1), theta_m(1, 2)]


def test_t2_order():
    fam = spanning_T(2)
    assert fam[:4] == [xi(2), xi(2, (2,)), theta_m(2, 1), theta_m(2, 2)]
    u, th, th2 = generator("u"), theta_m(1, 1), theta_m(1, 2)
    pairs = [tensor(a, b) for a in (u, th, th2) for b in (u, th, th2)]
    assert fam[4:] == pairs


def test_dim_counts_examples():
    assert [dim_counts(m).stirling_sum for m in range(6)] == [1, 1, 3, 11, 49, 257]
    assert [dim_counts(m).lambda_top for m in range(1, 6)] == [0, 2, 14, 92, 644]
    # the closed formula gives 104 at m = 4; an interpolation oracle in test_gram agrees
    assert [dim_counts(m).alpha_top for m in range(1, 6)] == [1, 4, 19, 104, 641]
    assert dim_counts(3).row() == [3, 11, 69, 5, 14, 19]
    assert len(DIM_COLUMNS) == len(dim_counts(0).row())


def test_counting_helpers():
    assert [bell(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert stirling2(5, 2) == 15
    assert multinomial(2, 1, 1) == 12
    assert [len(set_partitions(n)) for n in range(6)] == [1, 1, 2, 5, 15, 52]
    assert set_partitions(3)[:2] == [((1, 2, 3),), ((1, 2), (3,))]
    assert [c.rep for c in mark_classes(3)] == [(), (2,), (2, 3), (3,)]


def test_sizes_match_counts():
    for m in range(7):
        assert len(decorated_partitions(m, False)) == dim_counts(m).stirling_sum
        assert len(decorated_partitions(m, True)) == dim_counts(m).t_size == t_size(m)


def test_s_is_crosscap_free_part_of_t():
    for m in range(1, 4):
        t = spanning_T(m)
        free = [f for f in t if not any(d.has_crosscaps() for d in f.terms)]
        assert free == spanning_S(m)


@given(st.integers(1, 4))
def test_families_canonical(m):
    for f in spanning_T(m) + xi_family(m, 1):
        for d in f.terms:
            assert all(is_canonical(c) for c in d.components)


@given(st.integers(1, 6), st.data())
def test_mark_class_complement(m, data):
    J = data.draw(st.sets(st.integers(1, m)))
    comp = set(range(1, m + 1)) - J
    assert MarkClass(m, tuple(J)) == MarkClass(m, tuple(comp))
    assert len(mark_classes(m)) == 2 ** (m - 1)
