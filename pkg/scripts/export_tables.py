#!/usr/bin/env python3
"""Export every Cayley table the package knows about to JSON and CSV files.

Writes one file per algebra into the output directory: the seven canonical
Hurwitz tables, the four biquaternion tensor tables, and the eight bullet
tables (four signatures x two variants).
"""

import argparse
import sys
from pathlib import Path

from hurwitz_ga.canonical import (
    HurwitzClass,
    build_biquaternion,
    build_table,
    dump_table_json,
    table_to_csv,
)
from hurwitz_ga.ga_core import ALL_SIGNATURES
from hurwitz_ga.octonify import BulletVariant, cayley_table_bullet


def all_tables():
    for cls in HurwitzClass:
        yield build_table(cls)
    for c in (HurwitzClass.C, HurwitzClass.Cs):
        for h in (HurwitzClass.H, HurwitzClass.Hs):
            yield build_biquaternion(c, h)
    for sig in ALL_SIGNATURES:
        for variant in BulletVariant:
            yield cayley_table_bullet(sig, variant)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("tables"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    for table in all_tables():
        stem = table.name.replace(":", "_").replace(",", "").replace("+", "plus").replace("-", "minus")
        (args.out / f"{stem}.json").write_text(dump_table_json(table) + "\n")
        (args.out / f"{stem}.csv").write_text(table_to_csv(table))
        print(f"wrote {args.out / stem}.{{json,csv}}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
