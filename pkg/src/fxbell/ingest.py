"""Exchange-rate CSV ingestion, sign digitization, and segmentation.

The expected input is the public "foreign exchange rates per dollar
2000-2019" CSV: one header row, a date column, and exactly 22 currency
columns quoted as currency units per US dollar. Cells that do not parse as
a positive finite number (the file uses the literal ``ND``) mark a no-data
day, and the whole record is skipped; the data set removes whole records,
not individual cells.

The pipeline is: parse -> forward-difference signs (entries become +1/-1)
-> contiguous split into equal-length segments, dropping the trailing
remainder. All downstream analysis consumes the segmented +-1 data.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from typing import Iterable, TextIO

import numpy as np

from .errors import DomainError, FormatError, InsufficientDataError

CURRENCY_COUNT = 22

ZERO_POLICIES = ("plus", "minus", "drop_row")

# Header texts of the published Kaggle export mapped to ISO 4217 codes.
# Short alphanumeric headers (fixtures, re-serialized tables) pass through.
_KAGGLE_CODES = {
    "AUSTRALIA - AUSTRALIAN DOLLAR/US$": "AUD",
    "EURO AREA - EURO/US$": "EUR",
    "NEW ZEALAND - NEW ZELAND DOLLAR/US$": "NZD",
    "UNITED KINGDOM - UNITED KINGDOM POUND/US$": "GBP",
    "BRAZIL - REAL/US$": "BRL",
    "CANADA - CANADIAN DOLLAR/US$": "CAD",
    "CHINA - YUAN/US$": "CNY",
    "HONG KONG - HONG KONG DOLLAR/US$": "HKD",
    "INDIA - INDIAN RUPEE/US$": "INR",
    "KOREA - WON/US$": "KRW",
    "MEXICO - MEXICAN PESO/US$": "MXN",
    "SOUTH AFRICA - RAND/US$": "ZAR",
    "SINGAPORE - SINGAPORE DOLLAR/US$": "SGD",
    "DENMARK - DANISH KRONE/US$": "DKK",
    "JAPAN - YEN/US$": "JPY",
    "MALAYSIA - RINGGIT/US$": "MYR",
    "NORWAY - NORWEGIAN KRONE/US$": "NOK",
    "SWEDEN - KRONA/US$": "SEK",
    "SRI LANKA - SRI LANKAN RUPEE/US$": "LKR",
    "SWITZERLAND - FRANC/US$": "CHF",
    "TAIWAN - NEW TAIWAN DOLLAR/US$": "TWD",
    "THAILAND - BAHT/US$": "THB",
}

_DATE_HEADER_RE = re.compile(r"date|time", re.IGNORECASE)
_SHORT_CODE_RE = re.compile(r"^[A-Za-z0-9]{1,6}$")


@dataclass(frozen=True)
class CurrencyId:
    """Column identity: position in the rate table plus a short label."""

    index: int
    code: str

    def __str__(self) -> str:
        return self.code


@dataclass(frozen=True)
class RateTable:
    """Usable exchange-rate records in file order.

    ``rates`` is an (R, 22) float array; every entry is finite and > 0.
    ``dates`` are opaque labels, no calendar arithmetic is ever applied.
    """

    dates: tuple[str, ...]
    currencies: tuple[CurrencyId, ...]
    rates: np.ndarray
    skipped_rows: int

    @property
    def n_rows(self) -> int:
        return self.rates.shape[0]

    def currency(self, code: str) -> CurrencyId:
        """Resolve a currency by code (case-insensitive)."""
        wanted = code.strip().upper()
        for cur in self.currencies:
            if cur.code.upper() == wanted:
                return cur
        raise DomainError(f"unknown currency code: {code!r}")


@dataclass(frozen=True)
class SignMatrix:
    """Signs of day-over-day rate changes, entries in {-1, +1}.

    ``zero_count`` tallies exactly-zero differences; how they were mapped is
    recorded in ``zero_policy``. Under "plus"/"minus" the matrix has one row
    fewer than the source table; under "drop_row" rows containing a zero
    difference are removed and counted in ``dropped_zero_rows``.
    """

    signs: np.ndarray
    currencies: tuple[CurrencyId, ...]
    zero_policy: str
    zero_count: int
    dropped_zero_rows: int = 0

    @property
    def n_rows(self) -> int:
        return self.signs.shape[0]

    def currency(self, code: str) -> CurrencyId:
        wanted = code.strip().upper()
        for cur in self.currencies:
            if cur.code.upper() == wanted:
                return cur
        raise DomainError(f"unknown currency code: {code!r}")

    def to_json_dict(self) -> dict:
        return {
            "kind": "sign_matrix",
            "currencies": [c.code for c in self.currencies],
            "zero_policy": self.zero_policy,
            "zero_count": self.zero_count,
            "dropped_zero_rows": self.dropped_zero_rows,
            "rows": self.signs.astype(int).tolist(),
        }


@dataclass(frozen=True)
class SegmentedData:
    """Sign data split into equal contiguous blocks (time order preserved)."""

    segments: tuple[np.ndarray, ...]
    currencies: tuple[CurrencyId, ...]
    rows_per_segment: int
    dropped: int

    @property
    def n_segments(self) -> int:
        return len(self.segments)

    @property
    def n_currencies(self) -> int:
        return len(self.currencies)

    def currency(self, code: str) -> CurrencyId:
        wanted = code.strip().upper()
        for cur in self.currencies:
            if cur.code.upper() == wanted:
                return cur
        raise DomainError(f"unknown currency code: {code!r}")

    def segment_column(self, segment: int, currency: CurrencyId) -> np.ndarray:
        """One currency's +-1 values within segment ``segment`` (1-based)."""
        if not 1 <= segment <= self.n_segments:
            raise DomainError(f"segment must be 1..{self.n_segments}")
        return self.segments[segment - 1][:, currency.index]

    def concatenated(self) -> np.ndarray:
        """The segments glued back together (the first N*parts sign rows)."""
        return np.concatenate(self.segments, axis=0)

    def to_json_dict(self) -> dict:
        return {
            "kind": "segmented_signs",
            "currencies": [c.code for c in self.currencies],
            "rows_per_segment": self.rows_per_segment,
            "dropped": self.dropped,
            "segments": [seg.astype(int).tolist() for seg in self.segments],
        }


def segmented_from_json_dict(payload: dict) -> SegmentedData:
    if payload.get("kind") != "segmented_signs":
        raise FormatError("not a segmented_signs payload")
    currencies = tuple(
        CurrencyId(i, code) for i, code in enumerate(payload["currencies"])
    )
    segments = tuple(
        np.asarray(rows, dtype=np.int8) for rows in payload["segments"]
    )
    for seg in segments:
        if seg.ndim != 2 or not np.isin(seg, (-1, 1)).all():
            raise FormatError("segments must be 2-D arrays of +-1")
    return SegmentedData(
        segments=segments,
        currencies=currencies,
        rows_per_segment=int(payload["rows_per_segment"]),
        dropped=int(payload["dropped"]),
    )


def _short_code(header: str, position: int) -> str:
    text = header.strip()
    if _SHORT_CODE_RE.match(text):
        return text.upper()
    normalized = " ".join(text.upper().split())
    if normalized in _KAGGLE_CODES:
        return _KAGGLE_CODES[normalized]
    cleaned = re.sub(r"[^A-Za-z0-9]+", "_", text).strip("_").upper()
    return cleaned[:12] if cleaned else f"COL{position}"


def _parse_cell(cell: str) -> float | None:
    """Positive finite rate, or None for anything that marks no-data."""
    try:
        value = float(cell)
    except ValueError:
        return None
    if not np.isfinite(value) or value <= 0.0:
        return None
    return value


def parse_rate_table(source: str | TextIO | Iterable[str]) -> RateTable:
    """Parse rate CSV text into a RateTable, skipping no-data records.

    The date column is the first column whose header mentions "date" or
    "time" (the public export calls it "Time Serie"); leading columns before
    it, such as an unnamed row index, are ignored. Exactly 22 currency
    columns must follow. Any row in which some rate cell is missing or not a
    positive finite number is skipped whole and counted.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    reader = csv.reader(source)
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("empty input: no header row") from None

    date_col = None
    for pos, name in enumerate(header):
        if _DATE_HEADER_RE.search(name):
            date_col = pos
            break
    if date_col is None:
        # plain layout: first column is the date
        date_col = 0
    currency_headers = header[date_col + 1 :]
    if len(currency_headers) != CURRENCY_COUNT:
        raise FormatError(
            f"expected {CURRENCY_COUNT} currency columns after the date "
            f"column, found {len(currency_headers)}"
        )
    currencies = tuple(
        CurrencyId(i, _short_code(name, i))
        for i, name in enumerate(currency_headers)
    )

    dates: list[str] = []
    rows: list[list[float]] = []
    skipped = 0
    width = date_col + 1 + CURRENCY_COUNT
    for record in reader:
        if not record or all(not cell.strip() for cell in record):
            continue
        if len(record) != width:
            skipped += 1
            continue
        values = [_parse_cell(cell) for cell in record[date_col + 1 :]]
        if any(v is None for v in values):
            skipped += 1
            continue
        dates.append(record[date_col])
        rows.append(values)  # type: ignore[arg-type]

    if len(rows) < 2:
        raise InsufficientDataError(
            f"need at least 2 usable records, found {len(rows)}"
        )
    return RateTable(
        dates=tuple(dates),
        currencies=currencies,
        rates=np.asarray(rows, dtype=np.float64),
        skipped_rows=skipped,
    )


def load_rate_table(path) -> RateTable:
    with open(path, newline="") as handle:
        return parse_rate_table(handle)


def rate_table_to_csv(table: RateTable) -> str:
    """Canonical CSV text; floats use repr so re-parsing is bit-exact."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["Date"] + [c.code for c in table.currencies])
    for date, row in zip(table.dates, table.rates):
        writer.writerow([date] + [repr(float(v)) for v in row])
    return out.getvalue()


def forward_diff_signs(table: RateTable, zero_policy: str = "plus") -> SignMatrix:
    """Signs of forward (record-wise) differences of the rates.

    Entry (i, c) is the sign of ``rate[i+1, c] - rate[i, c]``. The source
    data never defines the sign of an exactly-zero difference, so the choice
    is exposed: "plus" maps 0 -> +1 (default), "minus" maps 0 -> -1, and
    "drop_row" removes every row that contains a zero difference. The number
    of zero differences encountered is always reported.
    """
    if zero_policy not in ZERO_POLICIES:
        raise DomainError(
            f"zero_policy must be one of {ZERO_POLICIES}, got {zero_policy!r}"
        )
    if table.n_rows < 2:
        raise InsufficientDataError("need at least 2 rows to difference")

    diffs = table.rates[1:] - table.rates[:-1]
    zero_mask = diffs == 0.0
    zero_count = int(zero_mask.sum())
    dropped_zero_rows = 0
    if zero_policy == "drop_row":
        keep = ~zero_mask.any(axis=1)
        dropped_zero_rows = int((~keep).sum())
        diffs = diffs[keep]
        if diffs.shape[0] == 0:
            raise InsufficientDataError("all difference rows contained zeros")
        signs = np.where(diffs > 0.0, 1, -1).astype(np.int8)
    else:
        fill = 1 if zero_policy == "plus" else -1
        signs = np.where(diffs > 0.0, 1, np.where(diffs < 0.0, -1, fill))
        signs = signs.astype(np.int8)
    return SignMatrix(
        signs=signs,
        currencies=table.currencies,
        zero_policy=zero_policy,
        zero_count=zero_count,
        dropped_zero_rows=dropped_zero_rows,
    )


def segment(signs: SignMatrix, parts: int = 3) -> SegmentedData:
    """Split the sign rows into ``parts`` equal contiguous blocks.

    Keeps the earliest ``parts * N`` rows where ``N = rows // parts``; the
    trailing remainder (< parts rows) is dropped and counted.
    """
    if parts < 1:
        raise DomainError("parts must be >= 1")
    rows = signs.n_rows
    if rows < parts:
        raise InsufficientDataError(
            f"cannot split {rows} rows into {parts} parts"
        )
    n = rows // parts
    dropped = rows - parts * n
    blocks = tuple(
        signs.signs[k * n : (k + 1) * n].copy() for k in range(parts)
    )
    return SegmentedData(
        segments=blocks,
        currencies=signs.currencies,
        rows_per_segment=n,
        dropped=dropped,
    )
