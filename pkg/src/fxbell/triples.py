"""Maximum fraction of reshufflable triples via linear programming.

Three data sets of +-1 pairs D_1, D_2, D_3 (equal length N) support a
"triple" (x, y, z) when one record of each set can be aligned so that D_1
contributes (x, y), D_2 contributes (x, z), and D_3 contributes (y, z).
gamma is the largest fraction of records that can simultaneously be matched
into such triples by reshuffling. A direct search over permutations is
O(N!^2); the computation collapses to a small LP because only the per-set
counts of the four pair values matter.

Unknowns: m_0..m_7, the number of matched triples of each of the eight
(x, y, z) patterns, and u_k(x, y), the leftover pairs of each value in set
k. Each observed count splits as N_k(x,y) = n_k(x,y) + u_k(x,y) with
n_k(x,y) the pattern totals induced by the m_i (12 equalities); the
leftover total U = sum u_k(x,y) is the same for every k (2 more
equalities, redundant but kept for transparency). Minimizing
U = N - sum(m_i) over those 20 nonnegative unknowns (plus U >= 0, a 21st
inequality) yields gamma = (N - U) / N.

The relaxation is solved with the dense simplex; on every instance
exercised so far the optimum is integral, which is verified per solve by
rounding and re-checking (reported, never assumed).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataError, DomainError, InsufficientDataError
from .ingest import CurrencyId, SegmentedData
from .simplex import SimplexResult, solve_standard_form

# The eight matchable patterns (x, y, z), in the canonical m_0..m_7 order.
# Set 1 holds (x, y), set 2 holds (x, z), set 3 holds (y, z).
TRIPLE_PATTERNS: tuple[tuple[int, int, int], ...] = (
    (+1, +1, +1),  # m_0
    (+1, -1, +1),  # m_1
    (+1, +1, -1),  # m_2
    (+1, -1, -1),  # m_3
    (-1, +1, +1),  # m_4
    (-1, -1, +1),  # m_5
    (-1, +1, -1),  # m_6
    (-1, -1, -1),  # m_7
)

PAIR_VALUES: tuple[tuple[int, int], ...] = ((+1, +1), (+1, -1), (-1, +1), (-1, -1))


def _pattern_pair(pattern: tuple[int, int, int], segment: int) -> tuple[int, int]:
    x, y, z = pattern
    if segment == 1:
        return (x, y)
    if segment == 2:
        return (x, z)
    return (y, z)


def _sign_slot(v: int) -> int:
    return 0 if v == 1 else 1


@dataclass(frozen=True)
class PairCounts:
    """Occurrence counts N_k(x, y) of the four pair values per data set.

    ``counts[k-1, i, j]`` counts pairs in set k with first entry +1 (i=0) or
    -1 (i=1) and second entry +1 (j=0) or -1 (j=1). The counts determine the
    three correlations exactly.
    """

    counts: np.ndarray  # (3, 2, 2) int64
    n: int

    def count(self, segment: int, x: int, y: int) -> int:
        return int(self.counts[segment - 1, _sign_slot(x), _sign_slot(y)])

    def correlation(self, segment: int) -> float:
        c = self.counts[segment - 1]
        return float(c[0, 0] - c[0, 1] - c[1, 0] + c[1, 1]) / self.n

    @property
    def correlations(self) -> tuple[float, float, float]:
        return (self.correlation(1), self.correlation(2), self.correlation(3))

    def validate(self) -> None:
        if self.counts.shape != (3, 2, 2):
            raise DataError("pair counts must have shape (3, 2, 2)")
        if (self.counts < 0).any():
            raise DataError("pair counts must be nonnegative")
        totals = self.counts.sum(axis=(1, 2))
        if not (totals == self.n).all():
            raise DataError(
                f"pair counts sum to {totals.tolist()} but n = {self.n}"
            )


def pair_counts_from_arrays(
    d1: np.ndarray, d2: np.ndarray, d3: np.ndarray
) -> PairCounts:
    """Tally (N, 2) arrays of +-1 pairs, one per data set."""
    arrays = (d1, d2, d3)
    n = arrays[0].shape[0]
    counts = np.zeros((3, 2, 2), dtype=np.int64)
    for k, arr in enumerate(arrays):
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise DataError("each data set must be an (N, 2) array")
        if arr.shape[0] != n:
            raise DataError("data sets must have equal length")
        first = arr[:, 0] == 1
        second = arr[:, 1] == 1
        counts[k, 0, 0] = np.count_nonzero(first & second)
        counts[k, 0, 1] = np.count_nonzero(first & ~second)
        counts[k, 1, 0] = np.count_nonzero(~first & second)
        counts[k, 1, 1] = np.count_nonzero(~first & ~second)
    result = PairCounts(counts=counts, n=n)
    result.validate()
    return result


def count_pairs(
    data: SegmentedData, a: CurrencyId, b: CurrencyId, c: CurrencyId
) -> PairCounts:
    """Pair counts for a currency triple: segment 1 pairs (a,b), segment 2
    (a,c), segment 3 (b,c), matching C_1(A,B), C_2(A,C), C_3(B,C)."""
    if len({a.index, b.index, c.index}) != 3:
        raise DomainError("count_pairs needs three distinct currencies")
    if data.n_segments < 3:
        raise DataError("need 3 segments to count triple pairs")
    d1 = np.column_stack(
        (data.segment_column(1, a), data.segment_column(1, b))
    )
    d2 = np.column_stack(
        (data.segment_column(2, a), data.segment_column(2, c))
    )
    d3 = np.column_stack(
        (data.segment_column(3, b), data.segment_column(3, c))
    )
    return pair_counts_from_arrays(d1, d2, d3)


def pair_counts_from_segments(data: SegmentedData) -> PairCounts:
    """Pair counts for two-column data where each segment is its own pair set."""
    if data.n_currencies != 2:
        raise DataError("expected two-column data; use count_pairs instead")
    if data.n_segments != 3:
        raise DataError("need exactly 3 segments")
    d1, d2, d3 = (np.asarray(seg) for seg in data.segments)
    return pair_counts_from_arrays(d1, d2, d3)


@dataclass(frozen=True)
class TripleLpProblem:
    """Equality-form encoding of the maximum-triples LP.

    Variable order: m_0..m_7, then u_k(x,y) for k = 1..3 with (x,y) in the
    order (+,+), (+,-), (-,+), (-,-), then one slack that carries U >= 0
    (written as sum(m) + slack = N). Rows: the 12 count identities, the 2
    redundant leftover-total equalities, then the slack row.
    """

    counts: PairCounts
    objective: np.ndarray  # minimize objective . x  (+ constant n)
    a_eq: np.ndarray
    b_eq: np.ndarray

    @property
    def n(self) -> int:
        return self.counts.n

    # Spec-level shape of the optimization problem: 8 m's + 12 u's are the
    # unknowns, U is derived; all 21 quantities are sign-constrained.
    @property
    def num_unknowns(self) -> int:
        return 20

    @property
    def num_inequalities(self) -> int:
        return 21

    @property
    def num_equalities(self) -> int:
        return 14


def build_lp(counts: PairCounts) -> TripleLpProblem:
    """Encode pair counts as the 20-unknown LP described in the module docs."""
    counts.validate()
    if counts.n == 0:
        raise InsufficientDataError("cannot build the triple LP for N = 0")
    n_vars = 8 + 12 + 1  # m's, u's, slack for U >= 0
    rows: list[np.ndarray] = []
    rhs: list[float] = []

    # count identities: n_k(x,y) + u_k(x,y) = N_k(x,y)
    for k in (1, 2, 3):
        for pair_idx, (x, y) in enumerate(PAIR_VALUES):
            row = np.zeros(n_vars)
            for i, pattern in enumerate(TRIPLE_PATTERNS):
                if _pattern_pair(pattern, k) == (x, y):
                    row[i] = 1.0
            row[8 + 4 * (k - 1) + pair_idx] = 1.0
            rows.append(row)
            rhs.append(float(counts.count(k, x, y)))

    # leftover totals agree across the three sets (implied, kept explicit)
    for k in (2, 3):
        row = np.zeros(n_vars)
        row[8:12] = 1.0
        row[8 + 4 * (k - 1) : 8 + 4 * k] = -1.0
        rows.append(row)
        rhs.append(0.0)

    # U = N - sum(m) >= 0, as sum(m) + slack = N
    row = np.zeros(n_vars)
    row[:8] = 1.0
    row[20] = 1.0
    rows.append(row)
    rhs.append(float(counts.n))

    objective = np.zeros(n_vars)
    objective[:8] = -1.0  # min U = N - sum(m)
    return TripleLpProblem(
        counts=counts,
        objective=objective,
        a_eq=np.vstack(rows),
        b_eq=np.asarray(rhs),
    )


@dataclass(frozen=True)
class TripleLpSolution:
    """Optimal matching counts and the resulting triple fraction."""

    m: np.ndarray  # (8,)
    u: np.ndarray  # (3, 4) in PAIR_VALUES order
    unmatched: float  # U = N - sum(m)
    gamma: float
    integral: bool
    counts: PairCounts
    iterations: int

    @property
    def n(self) -> int:
        return self.counts.n

    @property
    def correlations(self) -> tuple[float, float, float]:
        return self.counts.correlations

    @property
    def bound(self) -> float:
        """2*(1 - gamma), the arithmetic cap on |C_1 +- C_2| -+ C_3 - 1."""
        return 2.0 * (1.0 - self.gamma)

    def to_json_dict(self) -> dict:
        c1, c2, c3 = self.correlations
        return {
            "n": self.n,
            "pair_counts": self.counts.counts.tolist(),
            "m": self.m.tolist(),
            "u": self.u.tolist(),
            "unmatched": self.unmatched,
            "gamma": self.gamma,
            "bound": self.bound,
            "integral": self.integral,
            "correlations": {"c1": c1, "c2": c2, "c3": c3},
        }


def _check_integral(
    problem: TripleLpProblem, m: np.ndarray, u: np.ndarray, unmatched: float
) -> bool:
    """Round to integers and re-verify feasibility and the objective."""
    m_int = np.rint(m).astype(np.int64)
    u_int = np.rint(u).astype(np.int64)
    if (m_int < 0).any() or (u_int < 0).any():
        return False
    counts = problem.counts
    for k in (1, 2, 3):
        for pair_idx, (x, y) in enumerate(PAIR_VALUES):
            induced = sum(
                int(m_int[i])
                for i, pattern in enumerate(TRIPLE_PATTERNS)
                if _pattern_pair(pattern, k) == (x, y)
            )
            if induced + int(u_int[k - 1, pair_idx]) != counts.count(k, x, y):
                return False
    unmatched_int = counts.n - int(m_int.sum())
    if unmatched_int < 0:
        return False
    return abs(unmatched_int - unmatched) <= 1e-6


def solve_max_triples(problem: TripleLpProblem) -> TripleLpSolution:
    """Minimize the unmatched count U and report gamma = (N - U) / N."""
    result: SimplexResult = solve_standard_form(
        problem.objective, problem.a_eq, problem.b_eq
    )
    if not result.is_optimal:
        # u_k = N_k, m = 0 is always feasible and the region is bounded
        raise DataError(f"triple LP unexpectedly {result.status}")
    x = result.x
    m = x[:8]
    u = x[8:20].reshape(3, 4)
    unmatched = float(problem.n + result.objective)  # N - sum(m)
    unmatched = min(max(unmatched, 0.0), float(problem.n))
    gamma = (problem.n - unmatched) / problem.n
    return TripleLpSolution(
        m=m,
        u=u,
        unmatched=unmatched,
        gamma=gamma,
        integral=_check_integral(problem, m, u, unmatched),
        counts=problem.counts,
        iterations=result.iterations,
    )


def gamma_for_triple(
    data: SegmentedData, a: CurrencyId, b: CurrencyId, c: CurrencyId
) -> TripleLpSolution:
    """End-to-end gamma for one currency triple: count, build, solve."""
    return solve_max_triples(build_lp(count_pairs(data, a, b, c)))


def gamma_for_counts(counts: PairCounts) -> TripleLpSolution:
    return solve_max_triples(build_lp(counts))
