"""Regenerate src/bzsv/data/*.json from the row builders in bzsv.families.

Run from the repository root:  python3 tools/build_corpus.py
"""

from __future__ import annotations

import json
from pathlib import Path

from bzsv.families import CAPTIONS, FAMILIES, TABLE_SIZES, TABLES
from bzsv.tables import SCHEMA_VERSION, entry_from_spec, write_table

DATA = Path(__file__).resolve().parents[1] / "src" / "bzsv" / "data"

EXCLUDED = [
    {"knop": "(1.6)", "G_hat": "SL2", "rho_hat": "Sym3(SL2)",
     "reason": "generic stabilizer of the representation is not connected; the expected period involves a cubic cover"},
    {"knop": "(2.3)", "G_hat": "GLn", "rho_hat": "T(Sym2(GLn))",
     "reason": "generic stabilizer is not connected; the dual integral lives on a covering group"},
    {"knop": "(2.7), m odd", "G_hat": "SO(2k+1)", "rho_hat": "T(std(SO(2k+1)))",
     "reason": "generic stabilizer is not connected; the dual integral lives on a covering group"},
    {"knop": "(2.9)", "G_hat": "G2", "rho_hat": "T(std(G2))",
     "reason": "generic stabilizer is not connected"},
]


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    for table in TABLES:
        entries = [entry_from_spec(FAMILIES[(table, r)]()) for r in range(1, TABLE_SIZES[table] + 1)]
        write_table(DATA / f"{table}.json", table, CAPTIONS[table], entries)
    excluded = {"schema": SCHEMA_VERSION, "excluded": EXCLUDED}
    (DATA / "excluded.json").write_text(json.dumps(excluded, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
    print(f"wrote {len(TABLES)} tables and excluded.json to {DATA}")


if __name__ == "__main__":
    main()
