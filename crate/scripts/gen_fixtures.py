#!/usr/bin/env python3
"""Regenerate the Jones reference table and the KnotInfo test corpus.

Reads the KnotInfo knot table shipped with the `database_knotinfo` package
and writes:

  crates/core/data/jones_refs.dat            catalog knots + unknot
  crates/core/tests/fixtures/knotinfo_le10.dat  every prime knot with <= 10 crossings

Usage: python3 scripts/gen_fixtures.py [path/to/database_knotinfo/parent]
"""
import re
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
if len(sys.argv) > 1:
    sys.path.insert(0, sys.argv[1])

from database_knotinfo import link_list  # noqa: E402

TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(t(?:\^\(?(-?\d+)\)?)?)?")


def parse_jones(text):
    """Parse KnotInfo's 't+ t^3-t^4' style into {power_of_t: coefficient}."""
    out = {}
    s = text.replace(" ", "")
    pos = 0
    while pos < len(s):
        m = TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at {pos}")
        sign, coef, tpart, exp = m.groups()
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        if tpart:
            e = int(exp) if exp is not None else 1
        else:
            e = 0
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return {e: c for e, c in out.items() if c != 0}


def fmt_poly(p):
    return " ".join(f"{4 * e}:{c}" for e, c in sorted(p.items()))


def catalog_names():
    names = []
    with open(ROOT / "crates/core/data/catalog.csv") as f:
        next(f)
        for line in f:
            if line.strip():
                names.append(line.split(",", 1)[0])
    return names


def main():
    from database_knotinfo.__version__ import value as version
    rows = link_list()[1:]
    by_name = {r["name"]: r for r in rows}

    refs = ROOT / "crates/core/data/jones_refs.dat"
    with open(refs, "w") as f:
        f.write("# Jones polynomial reference table for the shipped catalog.\n")
        f.write(f"# source: KnotInfo via database_knotinfo {version}, column jones_polynomial\n")
        f.write("# generated by scripts/gen_fixtures.py; do not edit by hand\n")
        f.write("# format: name | exponent:coefficient ... | source\n")
        f.write("# exponents are powers of t in quarter units (t^1 = 4)\n")
        f.write("unknot | 0:1 | trivial\n")
        for name in catalog_names():
            p = parse_jones(by_name[name]["jones_polynomial"])
            f.write(f"{name} | {fmt_poly(p)} | KnotInfo\n")

    corpus = ROOT / "crates/core/tests/fixtures/knotinfo_le10.dat"
    with open(corpus, "w") as f:
        f.write(f"# KnotInfo knots with at most 10 crossings (database_knotinfo {version})\n")
        f.write("# generated by scripts/gen_fixtures.py; do not edit by hand\n")
        f.write("# format: name | dt | jones (quarter-unit exponent:coef) | braid | unknotting | positive_braid\n")
        for r in rows:
            cn = int(r["crossing_number"])
            if cn < 3 or cn > 10:
                continue
            p = parse_jones(r["jones_polynomial"])
            dt = r["dt_notation"].strip("[]").replace(" ", "")
            # some knots list several words as "{[...],[...]}"; keep the first
            braid = r["braid_notation"].replace(" ", "").strip("{}").split("],[")[0].strip("[]")
            f.write(
                f"{r['name']} | {dt} | {fmt_poly(p)} | {braid} | "
                f"{r['unknotting_number']} | {r['positive_braid']}\n"
            )


if __name__ == "__main__":
    main()
