"""Segment-wise and pooled pair correlations of the +-1 sign data.

A correlation here is the plain average of elementwise products,
C_s(A,B) = (1/N) * sum_i A_{s,i} * B_{s,i}. Products of +-1 entries are
accumulated in integer arithmetic and divided once at the end, so every
value is an exact ratio of integers; comparisons elsewhere can use a 1e-12
tolerance without worrying about accumulation drift.

For 22 currencies and 3 segments there are 3 * 22*21/2 = 693 distinct
nontrivial records. Per-segment per-currency means are computed in the same
pass because they are a useful diagnostic (near-zero means make the triple
bound tight in practice), but they feed no inequality.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DataError, DomainError
from .ingest import CurrencyId, SegmentedData, SignMatrix

POOLED = 0  # segment marker for whole-series correlations


@dataclass(frozen=True)
class CorrelationRecord:
    """One pair correlation; ``value * n`` is the exact integer product sum."""

    segment: int  # 1..parts, or POOLED
    a: CurrencyId
    b: CurrencyId
    value: float
    n: int
    product_sum: int

    def __post_init__(self):
        if abs(self.value) > 1.0 + 1e-12:
            raise DataError(f"correlation out of range: {self.value}")


@dataclass(frozen=True)
class CorrelationSet:
    """All pair correlations of one data set, with orientation-free lookup."""

    records: tuple[CorrelationRecord, ...]
    means: dict[tuple[int, int], float]  # (segment, currency index) -> mean
    n: int  # sample count behind each record
    pooled: bool = False
    _lookup: dict[tuple[int, int, int], float] = field(
        default_factory=dict, repr=False
    )

    def __post_init__(self):
        for rec in self.records:
            key = (rec.segment, *sorted((rec.a.index, rec.b.index)))
            self._lookup[key] = rec.value

    def value(self, segment: int, a: CurrencyId, b: CurrencyId) -> float:
        """C_segment(a, b); for a pooled set the segment label is ignored."""
        if a.index == b.index:
            raise DomainError("trivial correlation C(A,A) is excluded")
        seg = POOLED if self.pooled else segment
        key = (seg, *sorted((a.index, b.index)))
        try:
            return self._lookup[key]
        except KeyError:
            raise DataError(
                f"no correlation stored for segment {seg}, "
                f"pair ({a.code}, {b.code})"
            ) from None

    @property
    def currency_count(self) -> int:
        indices = {rec.a.index for rec in self.records}
        indices |= {rec.b.index for rec in self.records}
        return len(indices)

    def max_abs_mean(self, currencies: tuple[CurrencyId, ...]) -> float:
        """Largest |per-segment mean| among the given currencies."""
        segs = {rec.segment for rec in self.records}
        return max(
            abs(self.means[(s, c.index)]) for s in segs for c in currencies
        )

    def to_csv(self) -> str:
        lines = ["segment,currency_a,currency_b,value,n"]
        for rec in self.records:
            lines.append(
                f"{rec.segment},{rec.a.code},{rec.b.code},{rec.value!r},{rec.n}"
            )
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "kind": "correlations",
            "pooled": self.pooled,
            "n": self.n,
            "records": [
                {
                    "segment": rec.segment,
                    "a": rec.a.code,
                    "b": rec.b.code,
                    "value": rec.value,
                    "n": rec.n,
                }
                for rec in self.records
            ],
        }


def _record(segment: int, a: CurrencyId, b: CurrencyId, col_a, col_b, n: int):
    product_sum = int(np.sum(col_a.astype(np.int64) * col_b.astype(np.int64)))
    return CorrelationRecord(
        segment=segment,
        a=a,
        b=b,
        value=product_sum / n,
        n=n,
        product_sum=product_sum,
    )


def correlate(
    data: SegmentedData, segment: int, a: CurrencyId, b: CurrencyId
) -> CorrelationRecord:
    """C_segment(a, b) for one segment and one currency pair."""
    if a.index == b.index:
        raise DomainError("trivial correlation C(A,A) is excluded")
    col_a = data.segment_column(segment, a)
    col_b = data.segment_column(segment, b)
    return _record(segment, a, b, col_a, col_b, data.rows_per_segment)


def all_correlations(data: SegmentedData) -> CorrelationSet:
    """Every segment correlation plus per-segment currency means, one pass.

    The product sums for all pairs of one segment come from the integer Gram
    matrix of the segment block, so each value is the exact integer sum
    divided once by N.
    """
    n = data.rows_per_segment
    records: list[CorrelationRecord] = []
    means: dict[tuple[int, int], float] = {}
    for seg_index, block in enumerate(data.segments, start=1):
        wide = block.astype(np.int64)
        gram = wide.T @ wide
        col_sums = wide.sum(axis=0)
        for cur in data.currencies:
            means[(seg_index, cur.index)] = int(col_sums[cur.index]) / n
        for i, a in enumerate(data.currencies):
            for b in data.currencies[i + 1 :]:
                product_sum = int(gram[a.index, b.index])
                records.append(
                    CorrelationRecord(
                        segment=seg_index,
                        a=a,
                        b=b,
                        value=product_sum / n,
                        n=n,
                        product_sum=product_sum,
                    )
                )
    return CorrelationSet(records=tuple(records), means=means, n=n)


def pooled_correlate(
    signs: SignMatrix, a: CurrencyId, b: CurrencyId
) -> CorrelationRecord:
    """Correlation over all rows of the sign matrix, no segmentation."""
    if a.index == b.index:
        raise DomainError("trivial correlation C(A,A) is excluded")
    col_a = signs.signs[:, a.index]
    col_b = signs.signs[:, b.index]
    return _record(POOLED, a, b, col_a, col_b, signs.n_rows)


def pooled_correlations_from_rows(
    rows: np.ndarray, currencies: tuple[CurrencyId, ...]
) -> CorrelationSet:
    """Pooled CorrelationSet over the given +-1 rows."""
    n = rows.shape[0]
    wide = rows.astype(np.int64)
    gram = wide.T @ wide
    col_sums = wide.sum(axis=0)
    means = {(POOLED, c.index): int(col_sums[c.index]) / n for c in currencies}
    records = []
    for i, a in enumerate(currencies):
        for b in currencies[i + 1 :]:
            product_sum = int(gram[a.index, b.index])
            records.append(
                CorrelationRecord(
                    segment=POOLED,
                    a=a,
                    b=b,
                    value=product_sum / n,
                    n=n,
                    product_sum=product_sum,
                )
            )
    return CorrelationSet(records=tuple(records), means=means, n=n, pooled=True)


def pooled_correlations(data: SegmentedData) -> CorrelationSet:
    """Pooled correlations over the segments' concatenated N*parts rows.

    This is the "whole data set" view of the exact rows that the segmented
    analysis uses, so pooled value == mean of the per-segment values.
    """
    return pooled_correlations_from_rows(data.concatenated(), data.currencies)
