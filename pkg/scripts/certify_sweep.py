#!/usr/bin/env python3
"""Sweep the longitude certificates over all normal forms up to a bound.

Prints one row per form plus timing and coefficient-growth statistics;
exits 2 if any certificate fails, so it can gate a CI job.
"""

import argparse
import sys
import time

from twobridge import Kind, certificate_scan, classify


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pmax", type=int, default=99)
    parser.add_argument("--quiet", action="store_true", help="summary only")
    args = parser.parse_args()

    start = time.monotonic()
    certs = certificate_scan(args.pmax)
    elapsed = time.monotonic() - start

    failed = 0
    max_coeff = 0
    by_kind = {Kind.TORUS: 0, Kind.HYPERBOLIC: 0}
    for cert in certs:
        kind = classify(cert.form).kind
        by_kind[kind] += 1
        max_coeff = max(max_coeff, *(abs(c) for c in cert.lam.coeffs))
        if not cert.certified:
            failed += 1
        if not args.quiet:
            print(
                f"({cert.form.p:>3},{cert.form.q:>3})  {kind.value:<10}  "
                f"deg {cert.lam.degree:>2}  gcd={cert.gcd_lambda_g.pretty():<3}  "
                f"mod2={str(cert.mod2_divides):<5}  {cert.verdict.value}"
            )

    print(
        f"\n{len(certs)} forms (p <= {args.pmax}): {by_kind[Kind.TORUS]} torus, "
        f"{by_kind[Kind.HYPERBOLIC]} hyperbolic; {failed} failed; {elapsed:.2f}s"
    )
    print(f"largest |coefficient| of any Lambda: {max_coeff}")
    return 2 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
