"""Trivariate distributions on {-1,+1}^3 and their moment inequalities.

Any normalized real function f(x1, x2, x3) of three +-1 variables is fixed
by its seven moments:

    f = (1 + K1*x1 + K2*x2 + K3*x3 + K12*x1*x2 + K13*x1*x3 + K23*x2*x3
           + K123*x1*x2*x3) / 8.

If f is to serve as a probability distribution (0 <= f <= 1, sum 1), its
first- and second-order moments must satisfy the fourteen bounds grouped
here as: single-moment bounds |K| <= 1, bivariate bounds
|K_i +- K_j| <= 1 +- K_ij, and the triple bound |K12 +- K13| <= 1 +- K23.
Conversely, whenever all fourteen hold, the eight conditions f(x) >= 0
leave a nonempty interval of admissible K123 values, and any choice inside
it yields a valid distribution with the prescribed six moments. Both
directions are implemented: the interval construction below, and an
independent LP feasibility oracle over the eight probabilities.

The K123 interval is evaluated in the compact two-term form

    lower = max(-1 - K3 - K12 + |K1 + K2 + K13 + K23|,
                -1 + K3 + K12 + |K1 - K2 - K13 + K23|)
    upper = min( 1 - K3 + K12 - |K1 + K2 - K13 - K23|,
                 1 + K3 - K12 - |K1 - K2 + K13 - K23|)

which expands to exactly the eight f(x) >= 0 bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import DomainError, NoDistributionError
from .simplex import feasible

# Outcome order used for all 8-vectors: lexicographic with +1 before -1.
OUTCOMES: tuple[tuple[int, int, int], ...] = tuple(
    product((+1, -1), repeat=3)
)

_NORM_TOL = 1e-12


@dataclass(frozen=True)
class MomentSet:
    """First- and second-order moments, optionally the third-order one."""

    k1: float
    k2: float
    k3: float
    k12: float
    k13: float
    k23: float
    k123: float | None = None

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (self.k1, self.k2, self.k3, self.k12, self.k13, self.k23)

    def to_json_dict(self) -> dict:
        payload = {
            "k1": self.k1,
            "k2": self.k2,
            "k3": self.k3,
            "k12": self.k12,
            "k13": self.k13,
            "k23": self.k23,
        }
        if self.k123 is not None:
            payload["k123"] = self.k123
        return payload


@dataclass(frozen=True)
class Trivariate:
    """Distribution over {-1,+1}^3; ``values[i]`` belongs to OUTCOMES[i]."""

    values: np.ndarray

    def validate(self, tol: float = _NORM_TOL) -> None:
        v = self.values
        if v.shape != (8,):
            raise DomainError("trivariate needs exactly 8 values")
        if not np.isfinite(v).all():
            raise DomainError("trivariate values must be finite")
        if (v < -tol).any() or (v > 1.0 + tol).any():
            raise DomainError("trivariate values must lie in [0, 1]")
        if abs(float(v.sum()) - 1.0) > tol:
            raise DomainError("trivariate must be normalized")

    def probability(self, x1: int, x2: int, x3: int) -> float:
        return float(self.values[OUTCOMES.index((x1, x2, x3))])


def moments_from_trivariate(f: Trivariate) -> MomentSet:
    """All seven moments by direct 8-term summation."""
    f.validate()
    v = f.values
    x = np.asarray(OUTCOMES, dtype=np.float64)  # (8, 3)
    k1, k2, k3 = (float(v @ x[:, i]) for i in range(3))
    k12 = float(v @ (x[:, 0] * x[:, 1]))
    k13 = float(v @ (x[:, 0] * x[:, 2]))
    k23 = float(v @ (x[:, 1] * x[:, 2]))
    k123 = float(v @ (x[:, 0] * x[:, 1] * x[:, 2]))
    return MomentSet(k1, k2, k3, k12, k13, k23, k123)


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: float
    bound: float
    satisfied: bool

    @property
    def slack(self) -> float:
        return self.bound - self.lhs


@dataclass(frozen=True)
class Three3Report:
    checks: tuple[InequalityCheck, ...]

    @property
    def all_satisfied(self) -> bool:
        return all(c.satisfied for c in self.checks)

    @property
    def violated(self) -> tuple[InequalityCheck, ...]:
        return tuple(c for c in self.checks if not c.satisfied)

    def to_json_dict(self) -> dict:
        return {
            "all_satisfied": self.all_satisfied,
            "checks": [
                {
                    "name": c.name,
                    "lhs": c.lhs,
                    "bound": c.bound,
                    "slack": c.slack,
                    "satisfied": c.satisfied,
                }
                for c in self.checks
            ],
        }


def check_three3(m: MomentSet, tol: float = _NORM_TOL) -> Three3Report:
    """Evaluate the fourteen moment inequalities with per-check slacks.

    Exactly saturated bounds count as satisfied: the moment region is
    closed, so boundary points still admit a distribution.
    """
    k1, k2, k3, k12, k13, k23 = m.as_tuple()
    checks: list[InequalityCheck] = []

    def add(name: str, lhs: float, bound: float) -> None:
        checks.append(
            InequalityCheck(
                name=name, lhs=lhs, bound=bound, satisfied=lhs <= bound + tol
            )
        )

    for name, value in (
        ("K1", k1), ("K2", k2), ("K3", k3),
        ("K12", k12), ("K13", k13), ("K23", k23),
    ):
        add(f"|{name}| <= 1", abs(value), 1.0)
    for (na, va), (nb, vb), (nab, vab) in (
        (("K1", k1), ("K2", k2), ("K12", k12)),
        (("K1", k1), ("K3", k3), ("K13", k13)),
        (("K2", k2), ("K3", k3), ("K23", k23)),
    ):
        add(f"|{na}+{nb}| <= 1+{nab}", abs(va + vb), 1.0 + vab)
        add(f"|{na}-{nb}| <= 1-{nab}", abs(va - vb), 1.0 - vab)
    add("|K12+K13| <= 1+K23", abs(k12 + k13), 1.0 + k23)
    add("|K12-K13| <= 1-K23", abs(k12 - k13), 1.0 - k23)
    return Three3Report(checks=tuple(checks))


@dataclass(frozen=True)
class K123Interval:
    """Admissible range for the third-order moment given the other six."""

    lhs: float  # lower end
    rhs: float  # upper end
    feasible: bool

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lhs + self.rhs)

    def to_json_dict(self) -> dict:
        return {"lower": self.lhs, "upper": self.rhs, "feasible": self.feasible}


def k123_interval(m: MomentSet, tol: float = _NORM_TOL) -> K123Interval:
    """Range of K123 values keeping all eight probabilities nonnegative."""
    k1, k2, k3, k12, k13, k23 = m.as_tuple()
    lower = max(
        -1.0 - k3 - k12 + abs(k1 + k2 + k13 + k23),
        -1.0 + k3 + k12 + abs(k1 - k2 - k13 + k23),
    )
    upper = min(
        1.0 - k3 + k12 - abs(k1 + k2 - k13 - k23),
        1.0 + k3 - k12 - abs(k1 - k2 + k13 - k23),
    )
    return K123Interval(lhs=lower, rhs=upper, feasible=upper >= lower - tol)


def construct_trivariate(
    m: MomentSet, choice: str | float = "midpoint"
) -> Trivariate:
    """Build a distribution with the six given moments.

    ``choice`` picks K123: "midpoint" (default, farthest from the boundary),
    "lhs"/"rhs" (interval ends, useful for boundary tests), or an explicit
    float inside the interval. Raises NoDistributionError when the interval
    is empty, which happens exactly when some moment inequality fails.
    """
    interval = k123_interval(m)
    if not interval.feasible:
        raise NoDistributionError(
            "no nonnegative normalized trivariate has these moments "
            f"(K123 interval [{interval.lhs}, {interval.rhs}] is empty)"
        )
    if choice == "midpoint":
        k123 = interval.midpoint
    elif choice == "lhs":
        k123 = interval.lhs
    elif choice == "rhs":
        k123 = interval.rhs
    else:
        k123 = float(choice)
        if not interval.lhs - _NORM_TOL <= k123 <= interval.rhs + _NORM_TOL:
            raise DomainError(
                f"explicit K123 = {k123} outside [{interval.lhs}, {interval.rhs}]"
            )
    k1, k2, k3, k12, k13, k23 = m.as_tuple()
    values = np.empty(8)
    for i, (x1, x2, x3) in enumerate(OUTCOMES):
        values[i] = (
            1.0
            + k1 * x1 + k2 * x2 + k3 * x3
            + k12 * x1 * x2 + k13 * x1 * x3 + k23 * x2 * x3
            + k123 * x1 * x2 * x3
        ) / 8.0
    # the construction can undershoot zero by FP dust at the boundary
    np.clip(values, 0.0, 1.0, out=values)
    result = Trivariate(values=values)
    result.validate(tol=1e-9)
    return result


def feasibility_oracle(m: MomentSet, tol: float = 1e-9) -> bool:
    """LP existence test for the trivariate, independent of the interval.

    Solves for f >= 0 over the eight outcomes subject to normalization and
    the six moment equations; used to cross-verify that the interval
    construction accepts exactly the moment sets it should.
    """
    for value in m.as_tuple():
        if not math.isfinite(value):
            raise DomainError("moments must be finite")
    x = np.asarray(OUTCOMES, dtype=np.float64)
    a_eq = np.vstack(
        [
            np.ones(8),
            x[:, 0], x[:, 1], x[:, 2],
            x[:, 0] * x[:, 1], x[:, 0] * x[:, 2], x[:, 1] * x[:, 2],
        ]
    )
    b_eq = np.asarray([1.0, *m.as_tuple()])
    return feasible(a_eq, b_eq, tol=tol)
