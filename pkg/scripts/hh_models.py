#!/usr/bin/env python3
"""Cross-check the two Hochschild cochain models and time them."""
import argparse
import time

from stabinv.algebra import algebra_from_presentation
from stabinv.catalog import CatalogError, instantiate, list_families, smallest_params
from stabinv.fields import FieldSpec
from stabinv.hochschild import hochschild_dims


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--char", type=int, default=2)
    ap.add_argument("--degree", type=int, default=2, help="top cohomological degree")
    ap.add_argument("--max-dim", type=int, default=30, help="skip larger algebras")
    args = ap.parse_args()
    F = FieldSpec.gf(args.char) if args.char else FieldSpec.rationals()

    mismatches = 0
    for e in list_families():
        try:
            a = algebra_from_presentation(instantiate(e.family, smallest_params(e.family, F), F))
        except CatalogError:
            continue
        if a.dim > args.max_dim:
            continue
        times, dims = {}, {}
        for method in ("radical", "unit"):
            t = time.perf_counter()
            dims[method] = hochschild_dims(a, args.degree, method=method).dims
            times[method] = time.perf_counter() - t
        same = dims["radical"] == dims["unit"]
        mismatches += not same
        print(f"{e.family:<11} dim {a.dim:>3}  HH {dims['radical']}  "
              f"radical {times['radical']:.2f}s  unit {times['unit']:.2f}s  {'agree' if same else 'DIFFER'}")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
