"""Alexander polynomials of 2-bridge knots and the torus-target enumeration.

The knot polynomial comes from the Fox derivative of the group relator,
abelianized at x1 = x2 = t and normalized up to units.  Torus-knot
polynomials have the classical closed form, which doubles as an
independent cross-check: Delta of (3, 1) must equal Delta of T(2, 3).

Divisibility Delta_target | Delta_source is necessary for a knot-group
epimorphism, and the degree bound deg Delta_T(r,s) = (r-1)(s-1) makes the
set of torus targets of any fixed polynomial finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonCoprimeError, OutOfRangeError
from .normal_form import TwoBridgeForm
from .polynomials import IntPolynomial, divides_up_to_units, exact_div
from .presentation import abelianize, build_relator, fox_derivative


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Alexander polynomial normalized to minimal degree 0 and positive constant term."""

    poly: IntPolynomial

    def __post_init__(self):
        if not self.poly or self.poly.constant_term <= 0:
            raise ValueError("normalized Alexander polynomial needs a positive constant term")

    @property
    def degree(self) -> int:
        return self.poly.degree

    def at(self, x):
        return self.poly.evaluate(x)

    def is_palindromic_up_to_sign(self) -> bool:
        c = self.poly.coeffs
        return c == c[::-1] or c == tuple(-a for a in reversed(c))

    def __str__(self) -> str:
        return self.poly.pretty("t")


def alexander_polynomial(form: TwoBridgeForm) -> AlexanderPolynomial:
    """Fox-calculus Alexander polynomial of the form's knot group."""
    relator = build_relator(form)
    d1 = abelianize(fox_derivative(relator, 1))
    # the fundamental identity forces the x2 partial to be the exact negative
    assert abelianize(fox_derivative(relator, 2)) == -d1, "Fox partials disagree"
    return AlexanderPolynomial(d1.unit_normalized())


def torus_alexander(r: int, s: int) -> AlexanderPolynomial:
    """Closed form (t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1)) for the (r, s) torus knot."""
    if not 2 <= r < s:
        raise OutOfRangeError(f"need 2 <= r < s, got ({r}, {s})")
    if math.gcd(r, s) != 1:
        raise NonCoprimeError(f"gcd({r}, {s}) != 1")

    def cyclic(n: int) -> IntPolynomial:
        return IntPolynomial((-1,) + (0,) * (n - 1) + (1,))

    numerator = cyclic(r * s) * cyclic(1)
    quotient = exact_div(exact_div(numerator, cyclic(r)), cyclic(s))
    if quotient.constant_term < 0:
        quotient = -quotient
    return AlexanderPolynomial(quotient)


def knot_determinant(form: TwoBridgeForm) -> int:
    """|Delta(-1)|, the knot determinant; for b(p, q) this is exactly p."""
    det = abs(alexander_polynomial(form).at(-1))
    assert det == form.p, f"determinant {det} != p for {form}"
    return det


def torus_targets(delta: AlexanderPolynomial) -> list[tuple[int, int]]:
    """All coprime (r, s), 2 <= r < s, whose torus polynomial divides delta up to units.

    Finite because deg Delta_T(r,s) = (r-1)(s-1) <= deg delta bounds the
    search; returned in ascending (r, s) order.
    """
    bound = delta.degree
    out = []
    r = 2
    while (r - 1) * r <= bound:
        s = r + 1
        while (r - 1) * (s - 1) <= bound:
            if math.gcd(r, s) == 1 and divides_up_to_units(torus_alexander(r, s).poly, delta.poly):
                out.append((r, s))
            s += 1
        r += 1
    return out
