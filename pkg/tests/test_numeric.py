import math

import pytest

from twobridge import (
    DidNotConvergeError,
    GroupWord,
    IntPolynomial,
    NotARootError,
    instantiate_rep,
    riley_polynomial,
    roots,
    trace_function,
    validate,
    verify_form,
    verify_longitude,
)
from twobridge.numeric import RELATION_TOL, scaled_residual

P = IntPolynomial


def test_roots_examples():
    assert roots(P([1, -1])) == [pytest.approx(1.0)]

    pair = roots(P([1, 1, 1]))
    assert pair[0] == pytest.approx(complex(-0.5, -math.sqrt(3) / 2))
    assert pair[1] == pytest.approx(complex(-0.5, math.sqrt(3) / 2))

    golden = roots(P([1, -3, 1]))
    assert golden[0] == pytest.approx((3 - math.sqrt(5)) / 2)
    assert golden[1] == pytest.approx((3 + math.sqrt(5)) / 2)


def test_roots_rejects_constants():
    with pytest.raises(ValueError):
        roots(P([5]))


def test_roots_sorted_and_counted():
    for p, q in [(9, 5), (11, 3), (13, 5)]:
        lam = riley_polynomial(validate(p, q))
        rs = roots(lam)
        assert len(rs) == lam.degree
        assert rs == sorted(rs, key=lambda z: (z.real, z.imag))


def test_instantiate_rep_trefoil_exact():
    rep = instantiate_rep(validate(3, 1), 1.0)
    assert rep.residuals["relation"] == 0.0
    assert rep.residuals["lambda"] == 0.0
    assert rep.W[0][0] == 0  # w11 vanishes at the root


def test_instantiate_rep_figure_eight():
    form = validate(5, 3)
    y0 = roots(riley_polynomial(form))[1]
    rep = instantiate_rep(form, y0)
    assert rep.residuals["relation"] < RELATION_TOL
    assert rep.residuals["det"] < 1e-12
    assert rep.residuals["trace"] < 1e-9


def test_instantiate_rep_rejects_non_roots():
    with pytest.raises(NotARootError):
        instantiate_rep(validate(5, 3), 0.0)


def test_display_precision_root_needs_looser_gate():
    # seven decimals of the true root is a ~1e-9 perturbation: inside a 1e-6
    # gate, refined internally to full precision
    rep = instantiate_rep(validate(5, 3), complex(-0.5, 0.8660254), tol=1e-6)
    assert rep.residuals["relation"] < RELATION_TOL


def test_trace_function():
    form = validate(3, 1)
    rep = instantiate_rep(form, 1.0)
    assert trace_function(rep, GroupWord.generator(1)) == pytest.approx(0.0)
    word = GroupWord([(1, 1), (2, 1)])
    expected = (2 - rep.y0) ** 2 - 4
    assert trace_function(rep, word) == pytest.approx(expected)


def test_verify_longitude_examples():
    form = validate(5, 3)
    g_values = []
    for y0 in roots(riley_polynomial(form)):
        assert verify_longitude(form, y0)
        g_values.append(abs(complex(y0**2 - y0)))
    assert g_values == [pytest.approx(math.sqrt(3))] * 2

    assert verify_longitude(validate(3, 1), 1.0)

    with pytest.raises(NotARootError):
        verify_longitude(form, 0.3 + 0.1j)


def test_scaled_residual_balances_conditioning():
    lam = riley_polynomial(validate(5, 3))
    assert scaled_residual(lam, 0.0) == pytest.approx(1.0)  # |Lambda(0)| = 1, scale 1
    assert scaled_residual(lam, 2.0) == pytest.approx(1.0)  # |Lambda(2)| = 7, scale 7
    root = roots(lam)[0]
    assert scaled_residual(lam, root) < 1e-12


def test_verify_form_sweep_small():
    for p, q in [(5, 3), (7, 3), (9, 1), (13, 5)]:
        checks = verify_form(validate(p, q))
        assert len(checks) == (p - 1) // 2
        for chk in checks:
            assert chk.ok
            assert chk.relation_residual < RELATION_TOL
            assert chk.g_abs > 1e-6
