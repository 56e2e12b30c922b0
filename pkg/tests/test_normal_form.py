import pytest
from hypothesis import given, strategies as st

from twobridge import (
    EvenPError,
    Kind,
    NonCoprimeError,
    OutOfRangeError,
    TwoBridgeForm,
    canonical_key,
    classify,
    enumerate_forms,
    epsilon_sequence,
    sigma,
    validate,
)
from conftest import all_raw_forms


def test_validate_examples():
    assert validate(5, 3) == TwoBridgeForm(5, 3, mirror_flag=False)
    assert validate(5, 2) == TwoBridgeForm(5, 3, mirror_flag=True)
    with pytest.raises(EvenPError):
        validate(6, 1)


def test_validate_errors():
    with pytest.raises(NonCoprimeError):
        validate(9, 3)
    with pytest.raises(OutOfRangeError):
        validate(5, 7)
    with pytest.raises(OutOfRangeError):
        validate(5, 0)
    with pytest.raises(OutOfRangeError):
        validate(1, 1)


def test_epsilon_examples():
    assert epsilon_sequence(validate(3, 1)) == (1, 1)
    assert epsilon_sequence(validate(5, 3)) == (1, -1, -1, 1)
    assert epsilon_sequence(validate(7, 3)) == (1, 1, -1, -1, 1, 1)


def test_sigma_examples():
    assert sigma(validate(3, 1)) == 2
    assert sigma(validate(5, 3)) == 0
    assert sigma(validate(7, 3)) == 2


def test_canonical_key_examples():
    assert canonical_key(validate(5, 3)) == (2, 3)
    assert canonical_key(validate(5, 1)) == (1, 4)
    assert canonical_key(validate(7, 3)) == (2, 3, 4, 5)


def test_classify_examples():
    five_one = classify(validate(5, 1))
    assert five_one.kind is Kind.TORUS
    assert five_one.torus_params == (2, 5)
    assert classify(validate(5, 3)).kind is Kind.HYPERBOLIC
    assert classify(validate(7, 3)).kind is Kind.HYPERBOLIC


def test_enumerate_examples():
    as_pairs = lambda forms: [(f.p, f.q) for f in forms]
    assert as_pairs(enumerate_forms(3)) == [(3, 1)]
    assert as_pairs(enumerate_forms(5)) == [(3, 1), (5, 1), (5, 3)]
    assert as_pairs(enumerate_forms(7)) == [(3, 1), (5, 1), (5, 3), (7, 1), (7, 3)]
    with pytest.raises(OutOfRangeError):
        enumerate_forms(2)


def test_enumerate_is_deduplicated_and_sorted():
    forms = enumerate_forms(45)
    keys = {(f.p, canonical_key(f)) for f in forms}
    assert len(keys) == len(forms)
    assert forms == sorted(forms)


def test_epsilon_symmetry_and_even_sigma_sweep(raw_forms_99):
    for form in raw_forms_99:
        eps = epsilon_sequence(form)
        p = form.p
        assert len(eps) == p - 1
        assert all(eps[j - 1] == eps[p - j - 1] for j in range(1, p))
        assert sum(eps) % 2 == 0


valid_pq = st.integers(min_value=1, max_value=49).flatmap(
    lambda k: st.tuples(st.just(2 * k + 1), st.integers(min_value=1, max_value=2 * k))
)


@given(valid_pq)
def test_validate_idempotent(pq):
    import math

    p, q = pq
    if math.gcd(p, q) != 1:
        return
    form = validate(p, q)
    again = validate(form.p, form.q)
    assert (again.p, again.q) == (form.p, form.q)
    assert again.mirror_flag is False  # normal form q is already odd


@given(valid_pq)
def test_canonical_key_invariance(pq):
    import math

    p, q = pq
    if math.gcd(p, q) != 1:
        return
    key = canonical_key(TwoBridgeForm(p, q))
    qinv = pow(q, -1, p)
    assert canonical_key(TwoBridgeForm(p, qinv)) == key
    assert canonical_key(TwoBridgeForm(p, p - q)) == key


def test_torus_iff_key_contains_one(raw_forms_99):
    for form in raw_forms_99:
        torus = classify(form).kind is Kind.TORUS
        assert torus == (1 in canonical_key(form))
        if torus:
            assert classify(form).torus_params == (2, form.p)
