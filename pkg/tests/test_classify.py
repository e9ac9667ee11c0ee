import pytest

from quadorders import (
    InternalConsistencyError,
    OrderSpec,
    SplitKind,
    classify_order,
    factorize,
    is_associated,
    is_hfd,
    is_ideal_preserving,
    is_locally_associated,
    is_prime,
    is_squarefree,
    make_field,
    order_class_number,
    splitting_type,
)


def all_specs(d_values, n_values):
    for d in d_values:
        for n in n_values:
            yield OrderSpec(d, n)


SQUAREFREE_POS = [d for d in range(2, 31) if is_squarefree(d)]
SQUAREFREE_NEG = [d for d in range(-30, 0) if is_squarefree(d)]


def test_spec_validation():
    with pytest.raises(ValueError):
        OrderSpec(12, 2)
    with pytest.raises(ValueError):
        OrderSpec(0, 2)
    with pytest.raises(ValueError):
        OrderSpec(1, 2)
    with pytest.raises(ValueError):
        OrderSpec(2, 0)
    OrderSpec(-1, 1)


def test_fixture_records():
    r = classify_order(OrderSpec(2, 5))
    assert (r.m, r.L) == (3, 6)
    assert r.ideal_preserving and not r.locally_associated and not r.associated
    assert (r.h_maximal, r.h_order) == (1, 2)

    r = classify_order(OrderSpec(2, 2))
    assert (r.m, r.L) == (2, 2)
    assert r.locally_associated and not r.ideal_preserving and not r.associated
    assert r.h_order == 1

    r = classify_order(OrderSpec(5, 2))
    assert r.associated and r.hfd

    r = classify_order(OrderSpec(2, 3))
    assert (r.m, r.L) == (4, 4) and r.associated

    r = classify_order(OrderSpec(2, 11))
    assert (r.m, r.L) == (12, 12) and r.associated

    r = classify_order(OrderSpec(2, 33))
    assert (r.m, r.L) == (12, 48) and not r.locally_associated

    r = classify_order(OrderSpec(-7, 3))
    assert r.L == 4 and r.m == 1 and not r.locally_associated

    r = classify_order(OrderSpec(-1, 2))
    assert r.locally_associated and not r.associated

    r = classify_order(OrderSpec(-3, 2))
    assert r.associated and r.hfd

    r = classify_order(OrderSpec(-3, 4))
    assert not r.hfd

    r = classify_order(OrderSpec(2, 9))
    assert r.associated and not r.hfd


def test_order_class_number():
    assert order_class_number(OrderSpec(2, 5), 3, 6, 1) == 2
    assert order_class_number(OrderSpec(2, 1), 1, 1, 5) == 5
    with pytest.raises(InternalConsistencyError):
        order_class_number(OrderSpec(2, 5), 4, 6, 1)


def test_index_one_is_trivial():
    for d in (-5, -3, 2, 10):
        r = classify_order(OrderSpec(d, 1))
        assert r.m == 1 and r.L == 1
        assert r.ideal_preserving and r.locally_associated and r.associated
        assert r.h_order == r.h_maximal
        assert r.hfd == (r.h_maximal <= 2)


def test_record_invariants_grid():
    for spec in all_specs(SQUAREFREE_POS + SQUAREFREE_NEG, range(1, 31)):
        r = classify_order(spec)
        assert r.associated == (r.ideal_preserving and r.locally_associated)
        assert r.locally_associated == (r.m == r.L)
        assert r.L % r.m == 0
        assert r.h_order * r.m == r.h_maximal * r.L
        assert is_ideal_preserving(spec) == r.ideal_preserving
        assert is_locally_associated(spec) == r.locally_associated
        assert is_associated(spec) == r.associated
        assert is_hfd(spec, r.associated, r.h_maximal) == r.hfd
        if r.hfd and spec.n > 1:
            assert r.h_maximal <= 2 and r.associated


def test_ideal_preserving_is_inertness():
    for spec in all_specs((-10, -5, -3, 2, 5, 7, 15), range(2, 40)):
        F = make_field(spec.d)
        expected = all(
            splitting_type(F, p).kind is SplitKind.INERT
            for p, _ in factorize(spec.n)
        )
        assert is_ideal_preserving(spec) == expected


def test_locally_associated_descends_to_divisors():
    for spec in all_specs((2, 3, 5, 13, -1, -3), range(2, 61)):
        if is_locally_associated(spec):
            for s in range(2, spec.n):
                if spec.n % s == 0:
                    assert is_locally_associated(OrderSpec(spec.d, s))


def test_ideal_preserving_multiplicative():
    for d in (2, 5, -3, 11):
        for a in range(2, 25):
            for b in range(2, 25):
                ab = is_ideal_preserving(OrderSpec(d, a * b))
                parts = is_ideal_preserving(OrderSpec(d, a)) and is_ideal_preserving(
                    OrderSpec(d, b)
                )
                assert ab == parts


def test_hfd_shape_condition():
    # beyond the maximal order, hfd needs n prime or twice an odd prime
    for spec in all_specs((-3, 2, 5), range(2, 50)):
        r = classify_order(spec)
        if r.hfd:
            fac = factorize(spec.n)
            assert is_prime(spec.n) or (
                len(fac) == 2 and fac[0] == (2, 1) and fac[1][1] == 1
            )


def test_imaginary_closed_form():
    # d < 0: locally associated only for d = 1 (mod 8) with n = 2,
    # (-1, 2), and (-3, n) with n in {2, 3}; associated only at (-3, 2)
    for d in range(-60, 0):
        if not is_squarefree(d):
            continue
        for n in range(2, 30):
            spec = OrderSpec(d, n)
            expected_la = (
                (n == 2 and d % 8 == 1)
                or (d == -1 and n == 2)
                or (d == -3 and n in (2, 3))
            )
            assert is_locally_associated(spec) == expected_la, (d, n)
            assert is_associated(spec) == (d == -3 and n == 2)
