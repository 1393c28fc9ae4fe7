"""Boole-Bell style inequality tests on correlation triples.

For three correlations c1 = C_1(A,B), c2 = C_2(A,C), c3 = C_3(B,C) the
tested quantity is

    lhs = |c1 + c2| - c3 - 1   ("plus" variant)
    lhs = |c1 - c2| + c3 - 1   ("minus" variant)

lhs <= 0 is the classic three-correlation bound; it is provable only when
the three data sets can be reshuffled into triples. Plain arithmetic gives
the weaker bound lhs <= 2*(1 - gamma) for any +-1 data, where gamma is the
maximum fraction of reshufflable triples (computed in ``fxbell.triples``).
A positive lhs is therefore a statement about how the data were grouped,
never an arithmetic impossibility.

The scan enumerates ordered triples of distinct currencies; for 22
currencies that is 22*21*20 = 9240 triples and 18480 tests counting both
sign variants. Symmetric duplicates (the plus variant is invariant under
swapping B and C) are retained so the test count is the documented one;
deduplication is left to consumers of the report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from itertools import permutations

import numpy as np

from .correlations import CorrelationSet
from .errors import DataError, DomainError
from .ingest import CurrencyId

VARIANTS = ("plus", "minus")

# lhs values above this are counted as violations; exactly saturated bounds
# (lhs == 0 up to FP noise) must not be flagged
VIOLATION_TOLERANCE = 1e-9

_RANGE_SLACK = 1e-12


def _check_correlation(value: float, name: str) -> None:
    if not math.isfinite(value) or abs(value) > 1.0 + _RANGE_SLACK:
        raise DomainError(f"{name} must lie in [-1, 1], got {value}")


def bell_like_lhs(c1: float, c2: float, c3: float, sign_variant: str = "plus") -> float:
    """|c1 +- c2| -+ c3 - 1; positive means the triple bound is violated."""
    if sign_variant not in VARIANTS:
        raise DomainError(f"sign_variant must be one of {VARIANTS}")
    for name, value in (("c1", c1), ("c2", c2), ("c3", c3)):
        _check_correlation(value, name)
    if sign_variant == "plus":
        return abs(c1 + c2) - c3 - 1.0
    return abs(c1 - c2) + c3 - 1.0


def model_free_check(
    c1: float, c2: float, c3: float, gamma: float, sign_variant: str = "plus"
) -> float:
    """Slack of the arithmetic bound: 2*(1 - gamma) - lhs.

    With gamma computed from the same data this is >= 0 up to FP noise; a
    genuinely negative slack indicates an inconsistency in the inputs, not a
    property the data could have.
    """
    if not 0.0 <= gamma <= 1.0 + _RANGE_SLACK:
        raise DomainError(f"gamma must lie in [0, 1], got {gamma}")
    return 2.0 * (1.0 - gamma) - bell_like_lhs(c1, c2, c3, sign_variant)


def significance(lhs: float, n: int) -> float:
    """Violation size in estimated standard deviations.

    Uses the rough estimate that a +-1 correlation over n samples has
    standard deviation 1/(2*sqrt(n)), so the returned value is
    lhs * 2 * sqrt(n).
    """
    if n < 1:
        raise DomainError("n must be >= 1")
    if not math.isfinite(lhs):
        raise DomainError("lhs must be finite")
    return lhs * 2.0 * math.sqrt(n)


@dataclass(frozen=True)
class TripleTest:
    """Outcome of one inequality test on an ordered currency triple.

    ``a`` is the shared currency: c1 = C_1(a,b), c2 = C_2(a,c),
    c3 = C_3(b,c). ``gamma`` and ``slack`` are filled in once the triple LP
    has run; ``sigma`` is the significance at the scan's sample count.
    """

    a: CurrencyId
    b: CurrencyId
    c: CurrencyId
    sign_variant: str
    c1: float
    c2: float
    c3: float
    lhs: float
    violated: bool
    sigma: float | None = None
    gamma: float | None = None
    slack: float | None = None

    def with_gamma(self, gamma: float) -> "TripleTest":
        slack = model_free_check(self.c1, self.c2, self.c3, gamma, self.sign_variant)
        return replace(self, gamma=gamma, slack=slack)

    def to_json_dict(self) -> dict:
        return {
            "currencies": {"a": self.a.code, "b": self.b.code, "c": self.c.code},
            "variant": self.sign_variant,
            "c1": self.c1,
            "c2": self.c2,
            "c3": self.c3,
            "lhs": self.lhs,
            "violated": self.violated,
            "sigma": self.sigma,
            "gamma": self.gamma,
            "slack": self.slack,
        }


def _scan_currencies(corrs: CorrelationSet) -> tuple[CurrencyId, ...]:
    seen: dict[int, CurrencyId] = {}
    for rec in corrs.records:
        seen.setdefault(rec.a.index, rec.a)
        seen.setdefault(rec.b.index, rec.b)
    return tuple(seen[i] for i in sorted(seen))


def scan_triples(
    corrs: CorrelationSet, *, tolerance: float = VIOLATION_TOLERANCE
) -> list[TripleTest]:
    """Evaluate both sign variants on every ordered triple of currencies.

    Expects a complete correlation set (all pairs, all segments; or a pooled
    set, in which case the same values feed all three slots). Results are
    sorted by descending lhs, ties broken by currency indices and variant so
    the order is deterministic.
    """
    currencies = _scan_currencies(corrs)
    m = len(currencies)
    if m < 3:
        raise DataError("triple scan needs at least 3 currencies")
    expected = (1 if corrs.pooled else 3) * m * (m - 1) // 2
    if len(corrs.records) != expected:
        raise DataError(
            f"incomplete correlation set: {len(corrs.records)} records, "
            f"expected {expected}"
        )

    tests: list[TripleTest] = []
    for a, b, c in permutations(currencies, 3):
        c1 = corrs.value(1, a, b)
        c2 = corrs.value(2, a, c)
        c3 = corrs.value(3, b, c)
        for variant in VARIANTS:
            lhs = bell_like_lhs(c1, c2, c3, variant)
            tests.append(
                TripleTest(
                    a=a,
                    b=b,
                    c=c,
                    sign_variant=variant,
                    c1=c1,
                    c2=c2,
                    c3=c3,
                    lhs=lhs,
                    violated=lhs > tolerance,
                    sigma=significance(lhs, corrs.n),
                )
            )
    tests.sort(
        key=lambda t: (-t.lhs, t.a.index, t.b.index, t.c.index, t.sign_variant)
    )
    return tests


@dataclass(frozen=True)
class SettingVector:
    """Unit vector in R^3 used by the singlet-correlation demo."""

    components: tuple[float, float, float]

    def __post_init__(self):
        norm = math.sqrt(sum(x * x for x in self.components))
        if abs(norm - 1.0) > 1e-12:
            raise DomainError(f"setting vector must have unit norm, got {norm}")

    def dot(self, other: "SettingVector") -> float:
        return float(
            sum(x * y for x, y in zip(self.components, other.components))
        )


@dataclass(frozen=True)
class SingletDemoResult:
    """Both inequality variants evaluated on perfect singlet correlations."""

    a: SettingVector
    b: SettingVector
    c: SettingVector
    c_ab: float
    c_ac: float
    c_bc: float
    lhs_plus: float
    lhs_minus: float
    violated_plus: bool
    violated_minus: bool

    @property
    def violated(self) -> bool:
        return self.violated_plus or self.violated_minus

    def to_json_dict(self) -> dict:
        return {
            "a": list(self.a.components),
            "b": list(self.b.components),
            "c": list(self.c.components),
            "c_ab": self.c_ab,
            "c_ac": self.c_ac,
            "c_bc": self.c_bc,
            "lhs_plus": self.lhs_plus,
            "lhs_minus": self.lhs_minus,
            "violated": self.violated,
        }


def singlet_demo(
    a: SettingVector, b: SettingVector, c: SettingVector
) -> SingletDemoResult:
    """Evaluate the triple bound on C(x,y) = -x.y singlet correlations.

    With a = (1,0,0), b = (1,1,0)/sqrt(2), c = (1,-1,0)/sqrt(2) the plus
    variant reads sqrt(2) <= 1, i.e. lhs = sqrt(2) - 1 > 0: the textbook
    violation produced by a correlation function no +-1 data set segmented
    into triples can reproduce.
    """
    c_ab = _clip_unit(-a.dot(b))
    c_ac = _clip_unit(-a.dot(c))
    c_bc = _clip_unit(-b.dot(c))
    lhs_plus = bell_like_lhs(c_ab, c_ac, c_bc, "plus")
    lhs_minus = bell_like_lhs(c_ab, c_ac, c_bc, "minus")
    return SingletDemoResult(
        a=a,
        b=b,
        c=c,
        c_ab=c_ab,
        c_ac=c_ac,
        c_bc=c_bc,
        lhs_plus=lhs_plus,
        lhs_minus=lhs_minus,
        violated_plus=lhs_plus > VIOLATION_TOLERANCE,
        violated_minus=lhs_minus > VIOLATION_TOLERANCE,
    )


def _clip_unit(value: float) -> float:
    # dot products of unit vectors can stick out of [-1, 1] by one ulp
    return float(np.clip(value, -1.0, 1.0))
