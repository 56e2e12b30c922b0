"""Two-generator presentation of the 2-bridge knot group, plus Fox calculus.

The group is <x1, x2 | w x1 w^-1 = x2> with w the alternating word built
from the exponent sequence.  Words are kept freely reduced; the group ring
carrier is just a dict from reduced words to integer coefficients, which is
all the Fox derivative needs before abelianizing.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .normal_form import TwoBridgeForm, epsilon_sequence
from .polynomials import IntPolynomial, LaurentPolynomial

# a letter is (generator, exponent) with generator in {1, 2}, exponent in {+1, -1}
Letter = tuple[int, int]


def _reduce(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        if gen not in (1, 2) or exp not in (1, -1):
            raise ValueError(f"bad letter ({gen}, {exp})")
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


class GroupWord:
    """Freely reduced word in x1, x2 with exponents +-1."""

    __slots__ = ("letters",)

    letters: tuple[Letter, ...]

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    @classmethod
    def identity(cls) -> "GroupWord":
        return cls(())

    @classmethod
    def generator(cls, gen: int, exp: int = 1) -> "GroupWord":
        return cls(((gen, exp),))

    def __len__(self) -> int:
        return len(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "GroupWord") -> "GroupWord":
        return GroupWord(self.letters + other.letters)

    def inverse(self) -> "GroupWord":
        return GroupWord(tuple((g, -e) for g, e in reversed(self.letters)))

    def exponent_sum(self) -> int:
        """Total exponent sum, i.e. the image in the abelianization x1, x2 -> t."""
        return sum(e for _, e in self.letters)

    def __repr__(self) -> str:
        return f"GroupWord({self.pretty()!r})"

    def __str__(self) -> str:
        return self.pretty()

    def pretty(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)


def build_word(form: TwoBridgeForm) -> GroupWord:
    """The word w = x1^eps1 x2^eps2 ... x2^eps_{p-1} of length p - 1."""
    eps = epsilon_sequence(form)
    return GroupWord(((1 if j % 2 == 1 else 2, eps[j - 1]) for j in range(1, form.p)))


def build_relator(form: TwoBridgeForm) -> GroupWord:
    """Relator w x1 w^-1 x2^-1 of the relation w x1 w^-1 = x2, freely reduced."""
    w = build_word(form)
    return w * GroupWord.generator(1) * w.inverse() * GroupWord.generator(2, -1)


class GroupRingElement:
    """Integer combination of freely reduced words."""

    __slots__ = ("terms",)

    terms: dict[GroupWord, int]

    def __init__(self, terms: Mapping[GroupWord, int] | None = None):
        clean = {w: c for w, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls) -> "GroupRingElement":
        return cls()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return GroupRingElement(out)

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        return self + (-other)

    def left_mul(self, word: GroupWord) -> "GroupRingElement":
        out: dict[GroupWord, int] = {}
        for w, c in self.terms.items():
            key = word * w
            out[key] = out.get(key, 0) + c
        return GroupRingElement(out)

    def __repr__(self) -> str:
        if not self.terms:
            return "GroupRingElement(0)"
        bits = [f"{c:+d}*[{w.pretty()}]" for w, c in sorted(self.terms.items(), key=lambda t: t[0].letters)]
        return "GroupRingElement(" + " ".join(bits) + ")"


def fox_derivative(word: GroupWord, gen: int) -> GroupRingElement:
    """Fox free derivative d/d(x_gen) of a word.

    Product rule D(uv) = D(u) + u D(v) with D(x) = 1 and D(x^-1) = -x^-1
    on the differentiated generator, 0 on the other.
    """
    if gen not in (1, 2):
        raise ValueError(f"unknown generator x{gen}")
    terms: dict[GroupWord, int] = {}
    prefix: list[Letter] = []
    for g, e in word.letters:
        if g == gen:
            if e == 1:
                key = GroupWord(tuple(prefix))
                terms[key] = terms.get(key, 0) + 1
            else:
                key = GroupWord(tuple(prefix) + ((g, e),))
                terms[key] = terms.get(key, 0) - 1
        prefix.append((g, e))
    return GroupRingElement(terms)


def abelianize(e: GroupRingElement) -> LaurentPolynomial:
    """Send both generators to t; each word becomes t**(exponent sum)."""
    if not e.terms:
        return LaurentPolynomial(IntPolynomial())
    degrees = {w.exponent_sum(): 0 for w in e.terms}
    for w, c in e.terms.items():
        degrees[w.exponent_sum()] += c
    lo = min(degrees)
    hi = max(degrees)
    coeffs = [degrees.get(k, 0) for k in range(lo, hi + 1)]
    return LaurentPolynomial(IntPolynomial(coeffs), lo)
