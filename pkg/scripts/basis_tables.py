#!/usr/bin/env python3
"""Print integral-basis tables by degree, split into the triangular segments,
with the generating-function counts alongside the enumeration.

Example:
    python scripts/basis_tables.py --algebra sl21 --monoid trunc:2 --degree 3
"""

import argparse
import sys
from collections import Counter

from superpbw.algebra import preset, load_spec_path, PRESET_NAMES
from superpbw.coeffalg import monoid_preset
from superpbw.engine import Engine, key_degree
from superpbw.exprio import divided_key_str, divided_sort_key
from superpbw.verify import genfun_counts


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--algebra", default="sl21")
    ap.add_argument("--monoid", default="trunc:2")
    ap.add_argument("--degree", type=int, default=3)
    ap.add_argument("--counts-only", action="store_true")
    args = ap.parse_args()

    spec = preset(args.algebra) if args.algebra in PRESET_NAMES \
        else load_spec_path(args.algebra)
    engine = Engine(spec, monoid_preset(args.monoid))

    oracle = genfun_counts(spec, engine.monoid, args.degree)
    keys = engine.enumerate_basis(args.degree)
    counts = Counter(key_degree(k) for k in keys)
    print("algebra %s, coefficients %s, degree <= %d"
          % (spec.name, engine.monoid.name, args.degree))
    print("degree | enumerated | generating function")
    for d in range(args.degree + 1):
        mark = "" if counts[d] == oracle[d] else "   MISMATCH"
        print("%6d | %10d | %d%s" % (d, counts[d], oracle[d], mark))
    if args.counts_only:
        return 0

    for title, seg in (("B-", -1), ("B0", 0), ("B+", 1)):
        syms = [s for s in engine.order.syms if engine.segment_of(s) == seg]
        part = engine.enumerate_basis(args.degree, syms)
        part.sort(key=lambda k: (key_degree(k), divided_sort_key(engine, k)))
        print("\n%s (%d elements)" % (title, len(part)))
        for k in part:
            print("  %s" % divided_key_str(engine, k))
    return 0


if __name__ == "__main__":
    sys.exit(main())
