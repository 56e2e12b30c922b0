"""Epimorphism obstructions between 2-bridge knot groups.

The verdict rests solely on the Alexander divisibility criterion
Delta_target | Delta_source, a necessary condition for any knot-group
epimorphism.  Riley-polynomial divisibility is reported alongside as
heuristic evidence: it holds for meridian-preserving epimorphisms but is
not known to be necessary in general, so it never affects the verdict.
NotRuledOut means exactly that; the toolkit never constructs epimorphisms.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

from .alexander import alexander_polynomial
from .errors import OutOfRangeError
from .normal_form import TwoBridgeForm, canonical_key, enumerate_forms
from .polynomials import IntPolynomial, divides_up_to_units
from .riley import riley_polynomial


class ObstructionVerdict(enum.Enum):
    RULED_OUT = "ruled_out"
    NOT_RULED_OUT = "not_ruled_out"


@dataclass(frozen=True)
class ObstructionReport:
    source: TwoBridgeForm
    target: TwoBridgeForm
    alexander_divides: bool
    riley_divides: bool
    verdict: ObstructionVerdict
    reasons: tuple[str, ...]

    @property
    def ruled_out(self) -> bool:
        return self.verdict is ObstructionVerdict.RULED_OUT


@functools.lru_cache(maxsize=None)
def _invariants(form: TwoBridgeForm) -> tuple[IntPolynomial, IntPolynomial]:
    return alexander_polynomial(form).poly, riley_polynomial(form)


def obstruct(source: TwoBridgeForm, target: TwoBridgeForm) -> ObstructionReport:
    """Test the candidate epimorphism source -> target.

    RuledOut iff Delta_target does not divide Delta_source.  A NotRuledOut
    verdict is deliberately weak: no epimorphism is claimed.
    """
    delta_s, lam_s = _invariants(source)
    delta_t, lam_t = _invariants(target)
    alex = divides_up_to_units(delta_t, delta_s)
    riley = divides_up_to_units(lam_t, lam_s)
    # degree monotonicity is forced by divisibility; fail loudly if not
    assert not (alex and delta_t.degree > delta_s.degree), "divisibility without degree bound"
    verdict = ObstructionVerdict.NOT_RULED_OUT if alex else ObstructionVerdict.RULED_OUT
    word = "divides" if alex else "does not divide"
    reasons = (
        f"alexander: Delta{target} = {delta_t.pretty('t')} {word} "
        f"Delta{source} = {delta_s.pretty('t')} (verdict criterion)",
        f"riley: Lambda{target} {'divides' if riley else 'does not divide'} "
        f"Lambda{source} (heuristic evidence only)",
    )
    return ObstructionReport(
        source=source,
        target=target,
        alexander_divides=alex,
        riley_divides=riley,
        verdict=verdict,
        reasons=reasons,
    )


def scan(p_max: int, jobs: int = 1) -> list[ObstructionReport]:
    """Obstruction reports for all ordered pairs of distinct deduplicated forms
    with p <= p_max, sorted by (source, target)."""
    if p_max < 3:
        raise OutOfRangeError(f"p_max = {p_max} out of range, need p_max >= 3")
    forms = enumerate_forms(p_max)
    pairs = [(s, t) for s in forms for t in forms if s != t]
    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(lambda st: obstruct(*st), pairs))
    return [obstruct(s, t) for s, t in pairs]


def not_ruled_out(reports: list[ObstructionReport]) -> list[ObstructionReport]:
    """The interesting rows: candidate pairs surviving the Alexander test."""
    return [r for r in reports if not r.ruled_out]


def same_class(a: TwoBridgeForm, b: TwoBridgeForm) -> bool:
    """Same p and same canonical key: the same unoriented knot-or-mirror class."""
    return a.p == b.p and canonical_key(a) == canonical_key(b)
