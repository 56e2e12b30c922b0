"""Exact univariate polynomial arithmetic over Python's big integers.

Polynomials are stored densely as a tuple of coefficients, index = degree,
with no trailing zeros; the zero polynomial is the empty tuple.  The same
class carries polynomials in y (representation coordinates) and in t
(Alexander variable); the variable name only matters for printing.

Everything here is immutable, exact, and safe to share between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BothZeroError, ZeroDivisorError


def _trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class IntPolynomial:
    """Dense univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(list(coeffs)))

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "IntPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "IntPolynomial":
        return cls((1,))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def variable(cls) -> "IntPolynomial":
        """The monomial y (or t)."""
        return cls((0, 1))

    # -- basic structure ----------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the convention deg 0 = -1."""
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPolynomial((other,))
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        return self.pretty()

    # -- ring arithmetic ----------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by y^k (k >= 0)."""
        if not self.coeffs:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    # -- evaluation and substitution ----------------------------------

    def evaluate(self, x):
        """Horner evaluation; exact for int/Fraction input, float/complex otherwise."""
        acc = 0 * x  # matches the zero of the input's kind
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def substitute_negate(self) -> "IntPolynomial":
        """Return a(-y)."""
        return IntPolynomial([c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    # -- integer content ----------------------------------------------

    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> "IntPolynomial":
        """self divided by its content, sign preserved; zero stays zero."""
        c = self.content()
        if c <= 1:
            return self
        return IntPolynomial([a // c for a in self.coeffs])

    def reduce_mod2(self) -> "GF2Polynomial":
        """Coefficientwise parity."""
        bits = 0
        for k, c in enumerate(self.coeffs):
            if c & 1:
                bits |= 1 << k
        return GF2Polynomial(bits)

    # -- printing -----------------------------------------------------

    def pretty(self, var: str = "y") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                head = "" if mag == 1 else str(mag)
                body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def substitute_negate(a: IntPolynomial) -> IntPolynomial:
    """Return a(-y); module-level alias of the method."""
    return a.substitute_negate()


def reduce_mod2(a: IntPolynomial) -> "GF2Polynomial":
    """Coefficientwise parity; module-level alias of the method."""
    return a.reduce_mod2()


# -- rational-unit gcd ------------------------------------------------


def _pseudo_remainder(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """prem(a, b): remainder of lc(b)^(deg a - deg b + 1) * a by b, over the integers."""
    lead = b.leading_coefficient
    r = list(a.coeffs)
    nb = len(b.coeffs)
    while len(r) >= nb and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < nb:
            break
        top = r[-1]
        k = len(r) - nb
        r = [lead * c for c in r]
        for i, c in enumerate(b.coeffs):
            r[k + i] -= top * c
        r.pop()
    return IntPolynomial(r)


def gcd_rational(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Gcd in the rational polynomial ring, returned primitive over the integers
    with positive leading coefficient.

    Computed by a primitive pseudo-remainder sequence, so no Fraction
    arithmetic and no coefficient blowup beyond subresultant size.
    """
    if not a and not b:
        raise BothZeroError("gcd(0, 0) is undefined")
    a, b = a.primitive_part(), b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while b:
        a, b = b, _pseudo_remainder(a, b).primitive_part()
    if a.leading_coefficient < 0:
        a = -a
    return a


def _divmod_rational(a: IntPolynomial, d: IntPolynomial):
    """Long division over the rationals; returns (quotient, remainder) as Fraction tuples."""
    q = [Fraction(0)] * max(0, a.degree - d.degree + 1)
    r = [Fraction(c) for c in a.coeffs]
    lead = Fraction(d.leading_coefficient)
    nd = len(d.coeffs)
    while len(r) >= nd:
        c = r[-1] / lead
        k = len(r) - nd
        q[k] = c
        for i, dc in enumerate(d.coeffs):
            r[k + i] -= c * dc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return q, r


def divides_up_to_units(d: IntPolynomial, a: IntPolynomial) -> bool:
    """True iff a = ±d·h for some integer polynomial h.

    Both arguments are expected at minimal degree 0 (nonzero constant term),
    so of the Laurent units ±t^k only the sign remains to absorb.
    """
    if not d:
        raise ZeroDivisorError("division by the zero polynomial")
    if not a:
        return True
    if a.constant_term == 0 or d.constant_term == 0:
        raise ValueError("divides_up_to_units expects minimal-degree-0 operands")
    if a.degree < d.degree:
        return False
    q, r = _divmod_rational(a, d)
    if r:
        return False
    return all(c.denominator == 1 for c in q)


def exact_div(a: IntPolynomial, d: IntPolynomial) -> IntPolynomial:
    """a / d when the division is exact over the integers; raises otherwise."""
    if not d:
        raise ZeroDivisorError("division by the zero polynomial")
    q, r = _divmod_rational(a, d)
    if r or any(c.denominator != 1 for c in q):
        raise ValueError("division is not exact over the integers")
    return IntPolynomial([int(c) for c in q])


# -- polynomials over the 2-element field ------------------------------


class GF2Polynomial:
    """Polynomial over GF(2), stored as an integer bit mask (bit k = coefficient of y^k)."""

    __slots__ = ("bits",)

    bits: int

    def __init__(self, bits: int = 0):
        if bits < 0:
            raise ValueError("bit mask must be nonnegative")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int]) -> "GF2Polynomial":
        bits = 0
        for k, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << k
        return cls(bits)

    @property
    def degree(self) -> int:
        return self.bits.bit_length() - 1

    def coeffs(self) -> tuple[int, ...]:
        return tuple((self.bits >> k) & 1 for k in range(self.bits.bit_length()))

    def __bool__(self) -> bool:
        return self.bits != 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, GF2Polynomial):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("GF2", self.bits))

    def __add__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        return GF2Polynomial(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        a, b, out = self.bits, other.bits, 0
        while a:
            if a & 1:
                out ^= b
            a >>= 1
            b <<= 1
        return GF2Polynomial(out)

    def __mod__(self, other: "GF2Polynomial") -> "GF2Polynomial":
        if other.bits == 0:
            raise ZeroDivisorError("reduction modulo the zero polynomial")
        r, d = self.bits, other.bits
        dlen = d.bit_length()
        while r.bit_length() >= dlen:
            r ^= d << (r.bit_length() - dlen)
        return GF2Polynomial(r)

    def __repr__(self) -> str:
        return f"GF2Polynomial(0b{self.bits:b})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self, var: str = "y") -> str:
        if self.bits == 0:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            if (self.bits >> k) & 1:
                parts.append("1" if k == 0 else (var if k == 1 else f"{var}^{k}"))
        return " + ".join(parts)


def gf2_divides(d: GF2Polynomial, a: GF2Polynomial) -> bool:
    """True iff d divides a over the 2-element field."""
    if not d:
        raise ZeroDivisorError("divisibility by the zero polynomial")
    return not (a % d)


# -- Laurent wrapper ---------------------------------------------------


@dataclass(frozen=True)
class LaurentPolynomial:
    """Laurent polynomial c_m t^m + ... : an IntPolynomial plus the minimal degree m.

    Normalized so poly has nonzero constant term (the zero element is
    offset 0, zero poly).
    """

    poly: IntPolynomial
    offset: int = 0

    def __post_init__(self):
        coeffs = self.poly.coeffs
        k = 0
        while k < len(coeffs) and coeffs[k] == 0:
            k += 1
        if k == len(coeffs):
            object.__setattr__(self, "poly", IntPolynomial())
            object.__setattr__(self, "offset", 0)
        elif k:
            object.__setattr__(self, "poly", IntPolynomial(coeffs[k:]))
            object.__setattr__(self, "offset", self.offset + k)

    def __bool__(self) -> bool:
        return bool(self.poly)

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(-self.poly, self.offset)

    def unit_normalized(self) -> IntPolynomial:
        """Representative up to units ±t^k: minimal degree 0, positive constant term."""
        p = self.poly
        if p and p.constant_term < 0:
            p = -p
        return p

    def pretty(self, var: str = "t") -> str:
        if not self.poly:
            return "0"
        if self.offset == 0:
            return self.poly.pretty(var)
        return f"{var}^{self.offset} * ({self.poly.pretty(var)})"
