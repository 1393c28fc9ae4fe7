"""Regenerate fx_fixture.csv (deterministic; run from the repo root).

The fixture mirrors the public export's shape: an unnamed index column,
a "Time Serie" date column, 22 full currency headers, and ND markers on
no-data rows. 41 data lines, of which 3 are unusable (one single ND cell,
one all-ND row, one negative rate), leave 38 usable records, 37 sign rows,
and three segments of 12.

Column couplings change between segments so the triple scan finds
violations on this file; two flat days produce zero differences and a row
of width mismatch exercises the malformed-record path.
"""

from pathlib import Path

from fxbell.rng import SplitMix64

HEADERS = [
    "AUSTRALIA - AUSTRALIAN DOLLAR/US$",
    "EURO AREA - EURO/US$",
    "NEW ZEALAND - NEW ZELAND DOLLAR/US$",
    "UNITED KINGDOM - UNITED KINGDOM POUND/US$",
    "BRAZIL - REAL/US$",
    "CANADA - CANADIAN DOLLAR/US$",
    "CHINA - YUAN/US$",
    "HONG KONG - HONG KONG DOLLAR/US$",
    "INDIA - INDIAN RUPEE/US$",
    "KOREA - WON/US$",
    "MEXICO - MEXICAN PESO/US$",
    "SOUTH AFRICA - RAND/US$",
    "SINGAPORE - SINGAPORE DOLLAR/US$",
    "DENMARK - DANISH KRONE/US$",
    "JAPAN - YEN/US$",
    "MALAYSIA - RINGGIT/US$",
    "NORWAY - NORWEGIAN KRONE/US$",
    "SWEDEN - KRONA/US$",
    "SRI LANKA - SRI LANKAN RUPEE/US$",
    "SWITZERLAND - FRANC/US$",
    "TAIWAN - NEW TAIWAN DOLLAR/US$",
    "THAILAND - BAHT/US$",
]

BASES = [
    1.52, 0.91, 1.64, 0.79, 4.95, 1.36, 7.10, 7.78, 83.1, 1318.0, 17.1,
    18.4, 1.34, 6.86, 148.0, 4.68, 10.6, 10.4, 302.0, 0.88, 31.4, 35.2,
]

SIGN_ROWS = 37  # 38 usable records
SEED = 20240917

# loadings per segment: strong common moves inside blocs, and a flip of the
# MXN coupling in segment 2 so minus-variant violations show up
EURO_BLOC = {1, 3, 13, 16, 17, 19}  # EUR GBP DKK NOK SEK CHF
ASIA_BLOC = {6, 7, 12, 14, 20, 21, 15, 9}
MXN = 10


def loading(segment: int, col: int) -> float:
    if col in EURO_BLOC:
        return (0.9, 0.95, 0.7)[segment]
    if col in ASIA_BLOC:
        return (0.45, 0.25, 0.6)[segment]
    if col == MXN:
        return (0.2, -0.85, 0.3)[segment]
    return (0.25, 0.15, -0.35)[segment]


def main() -> None:
    rng = SplitMix64(SEED)
    signs: list[list[int]] = []
    for i in range(SIGN_ROWS):
        segment = min(i // 12, 2)
        factor = 2.0 * rng.next_float() - 1.0
        row = []
        for col in range(22):
            noise = 2.0 * rng.next_float() - 1.0
            value = loading(segment, col) * factor + 0.85 * noise
            row.append(1 if value >= 0.0 else -1)
        signs.append(row)
    # flat days: zero forward difference for HKD and SGD
    signs[5][7] = 0
    signs[20][12] = 0

    rates = [list(BASES)]
    for row in signs:
        prev = rates[-1]
        rates.append(
            [p * (1.0 + 0.011 * s) for p, s in zip(prev, row)]
        )

    lines = ["," + "Time Serie," + ",".join(HEADERS)]
    day = 0

    def date_label() -> str:
        nonlocal day
        day += 1
        return f"2023-01-{day:02d}" if day <= 31 else f"2023-02-{day - 31:02d}"

    index = 0
    for i, row in enumerate(rates):
        cells = [f"{v:.6f}" for v in row]
        # interleave the three unusable records at fixed spots
        if i == 7:
            nd = list(cells)
            nd[1] = "ND"
            lines.append(f"{index},{date_label()}," + ",".join(nd))
            index += 1
        if i == 19:
            lines.append(f"{index},{date_label()}," + ",".join(["ND"] * 22))
            index += 1
        if i == 30:
            bad = list(cells)
            bad[9] = "-5.0"
            lines.append(f"{index},{date_label()}," + ",".join(bad))
            index += 1
        lines.append(f"{index},{date_label()}," + ",".join(cells))
        index += 1

    out = Path(__file__).parent / "fx_fixture.csv"
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {out} ({index} data rows)")


if __name__ == "__main__":
    main()
