"""Normal forms (p, q) of 2-bridge knots and their exponent data.

A valid form has p, q odd and coprime with 0 < q < p.  Even q is accepted
on input and replaced by p - q, which is the mirror convention; the swap is
recorded on the form so nothing is merged silently.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

from .errors import EvenPError, NonCoprimeError, OutOfRangeError


@dataclass(frozen=True, order=True)
class TwoBridgeForm:
    """Validated normal form (p, q), q odd."""

    p: int
    q: int
    mirror_flag: bool = False

    def __str__(self) -> str:
        star = "*" if self.mirror_flag else ""
        return f"({self.p},{self.q}){star}"


class Kind(enum.Enum):
    TORUS = "torus"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class KnotClass:
    kind: Kind
    torus_params: Optional[tuple[int, int]] = None

    def __str__(self) -> str:
        if self.kind is Kind.TORUS:
            return f"torus{self.torus_params}"
        return "hyperbolic"


def validate(p: int, q: int) -> TwoBridgeForm:
    """Validate (p, q) and return the odd-q normal form.

    Even q is replaced by p - q (odd, since p is odd) with mirror_flag set.
    """
    if p % 2 == 0:
        raise EvenPError(f"p = {p} is even: (p, q) describes a 2-bridge link, not a knot")
    if p < 3:
        raise OutOfRangeError(f"p = {p} out of range, need odd p >= 3")
    if not 0 < q < p:
        raise OutOfRangeError(f"q = {q} out of range, need 0 < q < p = {p}")
    if math.gcd(p, q) != 1:
        raise NonCoprimeError(f"gcd({p}, {q}) = {math.gcd(p, q)} != 1")
    if q % 2 == 0:
        return TwoBridgeForm(p, p - q, mirror_flag=True)
    return TwoBridgeForm(p, q)


def epsilon_sequence(form: TwoBridgeForm) -> tuple[int, ...]:
    """Exponent sequence eps_j = (-1)**floor(j*q/p), j = 1 .. p-1."""
    p, q = form.p, form.q
    return tuple(-1 if (j * q // p) % 2 else 1 for j in range(1, p))


def sigma(form: TwoBridgeForm) -> int:
    """Sum of the exponent sequence; always even."""
    return sum(epsilon_sequence(form))


def canonical_key(form: TwoBridgeForm) -> tuple[int, ...]:
    """Dedup key: the sorted set {q, q^-1 mod p, p - q, p - q^-1 mod p}.

    Forms with equal p and equal key present the same unoriented
    knot-or-mirror class.  This is a dedup device for scans, not a claim
    of complete classification.
    """
    p, q = form.p, form.q
    qinv = pow(q, -1, p)
    return tuple(sorted({q, qinv, p - q, p - qinv}))


def classify(form: TwoBridgeForm) -> KnotClass:
    """Torus iff the key contains 1 (the (p, 1) class); otherwise hyperbolic.

    2-bridge knots are small, so the remaining forms are genuinely
    hyperbolic, never satellite.
    """
    if 1 in canonical_key(form):
        return KnotClass(Kind.TORUS, torus_params=(2, form.p))
    return KnotClass(Kind.HYPERBOLIC)


def enumerate_forms(p_max: int) -> list[TwoBridgeForm]:
    """All valid forms with p <= p_max, odd q, deduplicated by (p, canonical_key).

    The smallest odd q of each class is kept; output is sorted ascending.
    """
    if p_max < 3:
        raise OutOfRangeError(f"p_max = {p_max} out of range, need p_max >= 3")
    out: list[TwoBridgeForm] = []
    for p in range(3, p_max + 1, 2):
        seen = set()
        for q in range(1, p, 2):
            if math.gcd(p, q) != 1:
                continue
            form = TwoBridgeForm(p, q)
            key = canonical_key(form)
            if key in seen:
                continue
            seen.add(key)
            out.append(form)
    return out
