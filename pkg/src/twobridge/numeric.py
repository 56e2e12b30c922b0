"""Floating-point verification layer for the exact certificates.

Root finding in plain double precision fails here: the representation
polynomials of torus-like forms have Chebyshev-flavored root clusters near
y = 4 that companion-matrix eigenvalues cannot resolve past degree ~20.
Roots are therefore located by simultaneous (Durand-Kerner) iteration at
elevated precision via mpmath and only then rounded to complex doubles;
residual checks are measured at the elevated precision so they report the
defect of the actual representation, not rounding noise.

Root membership of caller-supplied points is judged by the
coefficient-scaled residual |Lambda(z)| / max(1, sum |c_k| |z|^k), the
standard backward-error measure.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import DidNotConvergeError, NotARootError
from .normal_form import TwoBridgeForm
from .polynomials import IntPolynomial
from .presentation import GroupWord, build_word
from .riley import holonomy_matrix, longitude_translation, riley_polynomial

ROOT_TOL = 1e-10
RELATION_TOL = 1e-9
LONGITUDE_TOL = 1e-6

_REFINE_DPS = 60
_NEWTON_STEPS = 100


def scaled_residual(poly: IntPolynomial, z: complex) -> float:
    """|poly(z)| relative to the evaluation's conditioning sum(|c_k| |z|^k)."""
    value = abs(poly.evaluate(complex(z)))
    az = abs(complex(z))
    scale = 0.0
    power = 1.0
    for c in poly.coeffs:
        scale += abs(c) * power
        power *= az
    return value / max(1.0, scale)


def _mp_scaled_residual(poly: IntPolynomial, z) -> float:
    value = abs(poly.evaluate(z))
    az = abs(z)
    scale = mpmath.mpf(0)
    power = mpmath.mpf(1)
    for c in poly.coeffs:
        scale += abs(c) * power
        power *= az
    return float(value / max(mpmath.mpf(1), scale))


def _derivative(poly: IntPolynomial) -> IntPolynomial:
    return IntPolynomial([k * c for k, c in enumerate(poly.coeffs)][1:])


def _mp_roots(lam: IntPolynomial) -> list:
    """Simultaneous iteration on the exact coefficients, retried at rising precision."""
    coeffs_desc = list(reversed(lam.coeffs))
    last = None
    for dps in (_REFINE_DPS, 2 * _REFINE_DPS, 4 * _REFINE_DPS):
        try:
            with mpmath.workdps(dps):
                found, err = mpmath.polyroots(
                    coeffs_desc, maxsteps=300, extraprec=mpmath.mp.prec, error=True
                )
                if err < mpmath.mpf(10) ** (-dps // 2):
                    return [mpmath.mpc(r) for r in found]
                last = f"error bound {mpmath.nstr(err, 5)} at {dps} digits"
        except mpmath.libmp.NoConvergence as exc:
            last = str(exc)
    raise DidNotConvergeError(f"root finding did not converge for {lam}: {last}")


def _mp_refine(lam: IntPolynomial, z0: complex):
    """Newton-refine a double estimate to a high-precision root of lam."""
    deriv = _derivative(lam)
    with mpmath.workdps(_REFINE_DPS):
        z = mpmath.mpc(z0)
        best, best_res = z, _mp_scaled_residual(lam, z)
        for _ in range(_NEWTON_STEPS):
            if best_res <= 1e-45:
                break
            dv = deriv.evaluate(z)
            if dv == 0:
                break
            z = z - lam.evaluate(z) / dv
            res = _mp_scaled_residual(lam, z)
            if res >= best_res:
                break
            best, best_res = z, res
        if best_res <= 1e-30:
            return best
    raise DidNotConvergeError(f"Newton refinement stalled near {z0} for {lam}")


def roots(lam: IntPolynomial, tol: float = ROOT_TOL) -> list[complex]:
    """All complex roots with multiplicity, each with scaled residual <= tol,
    sorted by (real, imaginary)."""
    if lam.degree < 1:
        raise ValueError("root finding needs degree >= 1")
    out = []
    for r in _mp_roots(lam):
        z = complex(r)
        if scaled_residual(lam, z) > tol:
            raise DidNotConvergeError(
                f"root {z} of {lam} has scaled residual {scaled_residual(lam, z):.3e} > {tol:.1e}"
            )
        out.append(z)
    return sorted(out, key=lambda z: (z.real, z.imag))


def _mp_meridian_images(y0):
    one, zero = mpmath.mpf(1), mpmath.mpf(0)
    a = mpmath.matrix([[one, one], [zero, one]])
    a_inv = mpmath.matrix([[one, -one], [zero, one]])
    b = mpmath.matrix([[one, zero], [-y0, one]])
    b_inv = mpmath.matrix([[one, zero], [y0, one]])
    return {(1, 1): a, (1, -1): a_inv, (2, 1): b, (2, -1): b_inv}


def _mp_word_image(word: GroupWord, images):
    acc = mpmath.matrix([[1, 0], [0, 1]])
    for letter in word.letters:
        acc = acc * images[letter]
    return acc


def _mp_max_abs(m) -> float:
    return float(max(abs(m[i, j]) for i in range(2) for j in range(2)))


def _to_numpy(m) -> np.ndarray:
    return np.array([[complex(m[0, 0]), complex(m[0, 1])], [complex(m[1, 0]), complex(m[1, 1])]])


@dataclass(frozen=True)
class NumericRep:
    """One parabolic representation at a numeric root of Lambda."""

    form: TwoBridgeForm
    y0: complex
    A: np.ndarray
    B: np.ndarray
    W: np.ndarray
    residuals: dict[str, float]


def instantiate_rep(form: TwoBridgeForm, y0: complex, tol: float = ROOT_TOL) -> NumericRep:
    """Build the numeric representation at y0 and measure its residuals.

    y0 must pass the scaled-residual root test at tolerance tol (NotARoot
    otherwise); it is then refined internally so the reported residuals
    measure the representation itself.  Residual keys: lambda (root
    membership), relation (W A W^-1 vs B), det (|det W - 1|), trace
    (numeric trace of W vs the symbolic w11 + w22 at y0).
    """
    lam = riley_polynomial(form)
    gate = scaled_residual(lam, y0)
    if gate > tol:
        raise NotARootError(f"scaled |Lambda({y0})| = {gate:.3e} > {tol:.1e} for {form}")
    root = _mp_refine(lam, complex(y0))
    with mpmath.workdps(_REFINE_DPS):
        images = _mp_meridian_images(root)
        w = _mp_word_image(build_word(form), images)
        # det W = 1 identically, so the adjugate is the exact inverse
        w_inv = mpmath.matrix([[w[1, 1], -w[0, 1]], [-w[1, 0], w[0, 0]]])
        a, b = images[(1, 1)], images[(2, 1)]
        relation_res = _mp_max_abs(w * a * w_inv - b)
        det_res = float(abs(w[0, 0] * w[1, 1] - w[0, 1] * w[1, 0] - 1))
        symbolic = holonomy_matrix(build_word(form))
        trace_res = float(
            abs((w[0, 0] + w[1, 1]) - (symbolic.w11.evaluate(root) + symbolic.w22.evaluate(root)))
        )
        lam_res = _mp_scaled_residual(lam, root)
    return NumericRep(
        form=form,
        y0=complex(root),
        A=_to_numpy(a),
        B=_to_numpy(b),
        W=_to_numpy(w),
        residuals={
            "lambda": lam_res,
            "relation": relation_res,
            "det": det_res,
            "trace": trace_res,
        },
    )


def trace_function(rep: NumericRep, word: GroupWord) -> complex:
    """tr^2 - 4 of the word's image under the representation."""
    b = np.array([[1.0, 0.0], [-rep.y0, 1.0]], dtype=complex)
    b_inv = np.array([[1.0, 0.0], [rep.y0, 1.0]], dtype=complex)
    a = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)
    a_inv = np.array([[1.0, -1.0], [0.0, 1.0]], dtype=complex)
    images = {(1, 1): a, (1, -1): a_inv, (2, 1): b, (2, -1): b_inv}
    acc = np.eye(2, dtype=complex)
    for letter in word.letters:
        acc = acc @ images[letter]
    tr = acc[0, 0] + acc[1, 1]
    return tr * tr - 4.0


def verify_longitude(
    form: TwoBridgeForm,
    y0: complex,
    tol: float = LONGITUDE_TOL,
    root_tol: float = ROOT_TOL,
) -> bool:
    """True iff |g(y0)| > tol: the longitude image at this root is a
    nontrivial parabolic.  Raises NotARoot when y0 is not a root of Lambda."""
    lam = riley_polynomial(form)
    if scaled_residual(lam, y0) > root_tol:
        raise NotARootError(f"y0 = {y0} is not a root of Lambda{form}")
    root = _mp_refine(lam, complex(y0))
    g = longitude_translation(form)
    with mpmath.workdps(_REFINE_DPS):
        return float(abs(g.evaluate(root))) > tol


@dataclass(frozen=True)
class RootCheck:
    """Per-root summary used by the batch verifier and the CLI."""

    y0: complex
    lambda_residual: float
    relation_residual: float
    g_abs: float
    longitude_nonzero: bool

    @property
    def ok(self) -> bool:
        return self.relation_residual < RELATION_TOL and self.longitude_nonzero


def verify_form(form: TwoBridgeForm, root_tol: float = ROOT_TOL) -> list[RootCheck]:
    """Instantiate and check every root of Lambda for one form, sorted order."""
    lam = riley_polynomial(form)
    g = longitude_translation(form)
    out = []
    for y0 in roots(lam, root_tol):
        rep = instantiate_rep(form, y0, root_tol)
        with mpmath.workdps(_REFINE_DPS):
            g_abs = float(abs(g.evaluate(mpmath.mpc(rep.y0))))
        out.append(
            RootCheck(
                y0=rep.y0,
                lambda_residual=rep.residuals["lambda"],
                relation_residual=rep.residuals["relation"],
                g_abs=g_abs,
                longitude_nonzero=g_abs > LONGITUDE_TOL,
            )
        )
    return out
