import pytest

from twobridge import (
    AlexanderPolynomial,
    IntPolynomial,
    NonCoprimeError,
    OutOfRangeError,
    alexander_polynomial,
    knot_determinant,
    torus_alexander,
    torus_targets,
    validate,
)
from conftest import all_raw_forms

P = IntPolynomial


def test_alexander_examples():
    assert alexander_polynomial(validate(3, 1)).poly == P([1, -1, 1])
    assert alexander_polynomial(validate(5, 3)).poly == P([1, -3, 1])
    assert alexander_polynomial(validate(7, 3)).poly == P([2, -3, 2])


def test_torus_alexander_examples():
    assert torus_alexander(2, 3).poly == P([1, -1, 1])
    assert torus_alexander(2, 5).poly == P([1, -1, 1, -1, 1])
    assert torus_alexander(2, 3) == alexander_polynomial(validate(3, 1))
    assert torus_alexander(3, 4).poly.degree == 6
    with pytest.raises(NonCoprimeError):
        torus_alexander(2, 4)
    with pytest.raises(OutOfRangeError):
        torus_alexander(3, 2)
    with pytest.raises(OutOfRangeError):
        torus_alexander(1, 5)


def test_determinant_examples():
    assert knot_determinant(validate(5, 3)) == 5
    assert knot_determinant(validate(3, 1)) == 3
    assert knot_determinant(validate(7, 3)) == 7


def test_torus_targets_examples():
    assert torus_targets(alexander_polynomial(validate(3, 1))) == [(2, 3)]
    assert torus_targets(alexander_polynomial(validate(5, 3))) == []
    product = AlexanderPolynomial(torus_alexander(2, 3).poly * torus_alexander(2, 5).poly)
    assert torus_targets(product) == [(2, 3), (2, 5)]


def test_torus_targets_of_torus_forms():
    # Delta of (9,1) is Delta of T(2,9), divisible by Delta of T(2,3) since 3 | 9
    targets = torus_targets(alexander_polynomial(validate(9, 1)))
    assert targets == [(2, 3), (2, 9)]
    assert torus_targets(alexander_polynomial(validate(15, 1))) == [(2, 3), (2, 5), (2, 15)]


def test_normalization_guard():
    with pytest.raises(ValueError):
        AlexanderPolynomial(P([-1, 1]))
    with pytest.raises(ValueError):
        AlexanderPolynomial(P.zero())


def test_invariant_sweep():
    for form in all_raw_forms(49):
        delta = alexander_polynomial(form)
        assert abs(delta.at(-1)) == form.p
        assert delta.at(1) in (1, -1)
        assert delta.is_palindromic_up_to_sign()
        assert knot_determinant(form) == form.p


def test_same_class_pairs_share_delta():
    # q and its odd inverse partner mod p present the same knot class
    for p, q, q2 in [(7, 3, 5), (9, 5, 7), (11, 3, 7), (13, 3, 9)]:
        from twobridge import canonical_key

        assert canonical_key(validate(p, q)) == canonical_key(validate(p, q2))
        assert alexander_polynomial(validate(p, q)) == alexander_polynomial(validate(p, q2))
