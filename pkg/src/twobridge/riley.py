"""Riley parabolic-representation machinery for 2-bridge knot groups.

The meridians go to A = [[1, 1], [0, 1]] and B = [[1, 0], [-y, 1]] over
Z[y].  The word w of a form (p, q) then has an exact holonomy matrix W;
its top-left entry is the representation polynomial Lambda(y), whose roots
parametrize the parabolic representations.  The longitude commuting with
x1 maps to [[1, -2g], [0, 1]] with g = w12*w22 + sigma.

The certificate computed here shows that no root of Lambda kills the
longitude: gcd(Lambda, g) = 1 over the rationals, and, mirroring the mod-2
argument, Lambda | (g - 1) over the 2-element field via the torus-form
recursion matrix W'.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

from .errors import DegreeMismatchError
from .normal_form import Kind, TwoBridgeForm, classify, enumerate_forms, sigma
from .polynomials import (
    GF2Polynomial,
    IntPolynomial,
    gcd_rational,
    gf2_divides,
    reduce_mod2,
)
from .presentation import GroupWord, build_word

_ZERO = IntPolynomial.zero()
_ONE = IntPolynomial.one()
_Y = IntPolynomial.variable()


@dataclass(frozen=True)
class PolyMatrix2:
    """2x2 matrix over IntPolynomial."""

    w11: IntPolynomial
    w12: IntPolynomial
    w21: IntPolynomial
    w22: IntPolynomial

    @classmethod
    def identity(cls) -> "PolyMatrix2":
        return cls(_ONE, _ZERO, _ZERO, _ONE)

    def __matmul__(self, other: "PolyMatrix2") -> "PolyMatrix2":
        return PolyMatrix2(
            self.w11 * other.w11 + self.w12 * other.w21,
            self.w11 * other.w12 + self.w12 * other.w22,
            self.w21 * other.w11 + self.w22 * other.w21,
            self.w21 * other.w12 + self.w22 * other.w22,
        )

    def det(self) -> IntPolynomial:
        return self.w11 * self.w22 - self.w12 * self.w21

    def entries(self) -> tuple[IntPolynomial, IntPolynomial, IntPolynomial, IntPolynomial]:
        return (self.w11, self.w12, self.w21, self.w22)

    def reduce_mod2(self) -> tuple[GF2Polynomial, GF2Polynomial, GF2Polynomial, GF2Polynomial]:
        return tuple(e.reduce_mod2() for e in self.entries())

    def substitute_negate(self) -> "PolyMatrix2":
        return PolyMatrix2(*(e.substitute_negate() for e in self.entries()))


# meridian images and their exact inverses
_A = PolyMatrix2(_ONE, _ONE, _ZERO, _ONE)
_A_INV = PolyMatrix2(_ONE, -_ONE, _ZERO, _ONE)
_B = PolyMatrix2(_ONE, _ZERO, -_Y, _ONE)
_B_INV = PolyMatrix2(_ONE, _ZERO, _Y, _ONE)

_LETTER_IMAGE = {(1, 1): _A, (1, -1): _A_INV, (2, 1): _B, (2, -1): _B_INV}


def holonomy_matrix(word: GroupWord) -> PolyMatrix2:
    """Exact product over Z[y] of the meridian images along the word."""
    acc = PolyMatrix2.identity()
    for letter in word.letters:
        acc = acc @ _LETTER_IMAGE[letter]
    return acc


def riley_polynomial(form: TwoBridgeForm) -> IntPolynomial:
    """Representation polynomial Lambda(y): the w11 entry of the word's holonomy.

    Checks the degree law deg = (p-1)/2 and Lambda(0) = 1; a violation is an
    internal bug, not a math condition.  The leading coefficient is expected
    in {+1, -1}; that is an empirical observation, so it only warns.
    """
    lam = holonomy_matrix(build_word(form)).w11
    n = (form.p - 1) // 2
    if lam.degree != n or lam.constant_term != 1:
        raise DegreeMismatchError(
            f"Lambda{form} has degree {lam.degree}, constant {lam.constant_term}; "
            f"expected degree {n}, constant 1"
        )
    if lam.leading_coefficient not in (1, -1):
        warnings.warn(
            f"Lambda{form} has leading coefficient {lam.leading_coefficient}, not a unit",
            stacklevel=2,
        )
    return lam


def longitude_translation(form: TwoBridgeForm) -> IntPolynomial:
    """g(y) = w12*w22 + sigma: half the translation of the longitude image,
    up to sign.  The longitude image is [[1, -2g], [0, 1]], so g != 0 at a
    root of Lambda means that representation does not kill the longitude."""
    w = holonomy_matrix(build_word(form))
    return w.w12 * w.w22 + IntPolynomial.constant(sigma(form))


@dataclass(frozen=True)
class TorusRecursion:
    """Sequences f_0..f_n, g_0..g_n and the recursion matrix W' = [[f_n, g_{n-1}], [y g_{n-1}, f_{n-1}]]."""

    f: tuple[IntPolynomial, ...]
    g: tuple[IntPolynomial, ...]
    w_prime: PolyMatrix2


def torus_recursion(n: int) -> TorusRecursion:
    """Run f_{j+1} = f_j + y*g_j, g_{j+1} = f_{j+1} + g_j from f_0 = g_0 = 1."""
    if n < 1:
        raise ValueError(f"n = {n} out of range, need n >= 1")
    f = [_ONE]
    g = [_ONE]
    for _ in range(n):
        f.append(f[-1] + _Y * g[-1])
        g.append(f[-1] + g[-1])
    w_prime = PolyMatrix2(f[n], g[n - 1], _Y * g[n - 1], f[n - 1])
    return TorusRecursion(tuple(f), tuple(g), w_prime)


def mod2_congruence_check(form: TwoBridgeForm) -> bool:
    """Entrywise W == W' over the 2-element field, with W' from the (p, 1) recursion."""
    w = holonomy_matrix(build_word(form))
    w_prime = torus_recursion((form.p - 1) // 2).w_prime
    return w.reduce_mod2() == w_prime.reduce_mod2()


class Verdict(enum.Enum):
    CERTIFIED = "certified"
    FAILED = "failed"


@dataclass(frozen=True)
class PropertyLCertificate:
    """Structured record of the no-representation-kills-the-longitude check.

    Certified iff gcd(Lambda, g) = 1 over the rationals (no common root, the
    direct reading) and Lambda | (g - 1) over GF(2) (the parity argument:
    g is odd, hence nonzero, at every root).
    """

    form: TwoBridgeForm
    lam: IntPolynomial
    g: IntPolynomial
    gcd_lambda_g: IntPolynomial
    mod2_divides: bool
    verdict: Verdict

    @property
    def certified(self) -> bool:
        return self.verdict is Verdict.CERTIFIED


def property_l_certificate(form: TwoBridgeForm) -> PropertyLCertificate:
    """Run both longitude certificates for one form.

    Torus forms are allowed; for them the certificate is informational
    (their finiteness is an Alexander-polynomial matter, not a longitude
    one).  A Failed verdict is data, never an exception.
    """
    lam = riley_polynomial(form)
    g = longitude_translation(form)
    gcd_lg = gcd_rational(lam, g)
    divides = gf2_divides(reduce_mod2(lam), reduce_mod2(g - _ONE))
    ok = gcd_lg == _ONE and divides
    return PropertyLCertificate(
        form=form,
        lam=lam,
        g=g,
        gcd_lambda_g=gcd_lg,
        mod2_divides=divides,
        verdict=Verdict.CERTIFIED if ok else Verdict.FAILED,
    )


def certificate_scan(p_max: int, jobs: int = 1) -> list[PropertyLCertificate]:
    """Certificates for every deduplicated form with p <= p_max, ascending order."""
    forms = enumerate_forms(p_max)
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(property_l_certificate, forms))
    return [property_l_certificate(form) for form in forms]


def is_torus_form(form: TwoBridgeForm) -> bool:
    return classify(form).kind is Kind.TORUS
