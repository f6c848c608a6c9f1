#!/usr/bin/env python3
"""Invariant survey of every catalog family at its smallest parameters."""
import argparse
import time

from stabinv.algebra import algebra_from_presentation
from stabinv.catalog import CatalogError, instantiate, list_families, smallest_params
from stabinv.fields import FieldSpec
from stabinv.report import ReportConfig, build_report

FIELDS = {"2": FieldSpec.gf(2), "3": FieldSpec.gf(3), "4": FieldSpec.gf(2, 2), "0": FieldSpec.rationals()}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fields", default="2,3,0", help="comma list from 0 (QQ), 2, 3, 4 (GF(4))")
    ap.add_argument("--hh-max", type=int, default=2)
    args = ap.parse_args()
    cfg = ReportConfig(n_max=2, hh_max=args.hh_max)

    header = f"{'family':<11} {'field':<7} {'dim':>4} {'det':>4} {'Z':>3} {'Z/R':>4} " \
             f"{'T/[A,A]':<9} {'Z/T^perp':<9} {'HH':<12} {'sym':<5} {'sb':<5} secs"
    print(header)
    print("-" * len(header))
    for key in args.fields.split(","):
        F = FIELDS[key]
        for e in list_families():
            try:
                ps = smallest_params(e.family, F)
            except CatalogError:
                continue
            t = time.perf_counter()
            a = algebra_from_presentation(instantiate(e.family, ps, F))
            r = build_report(a, cfg, e.family)
            secs = time.perf_counter() - t
            print(f"{e.family:<11} {str(F):<7} {r.dimension:>4} {r.cartan['det']:>4} {r.dim_center:>3} "
                  f"{r.center_quotients['reynolds']:>4} {str(r.kulshammer['dims'] or '-'):<9} "
                  f"{str(r.orthogonal_quotient['dims'] or '-'):<9} {str(r.hh['dims']):<12} "
                  f"{str(r.flags['symmetric']):<5} {str(r.flags['special_biserial']):<5} {secs:.2f}")


if __name__ == "__main__":
    main()
