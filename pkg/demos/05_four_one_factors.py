#!/usr/bin/env python3
"""Walkthrough: peeling four edge-disjoint 1-factors out of a k-factor.

Starting from a realization with a k-regular residual class, each round
drives the residual's maximum matching to perfection by merging leftover odd
cycles (bridging directly, or manufacturing a bridge with a multi-switch or a
parallel two-switch), then promotes the perfect matching to a new 1-factor.
The result: min(k, 4) one-factors plus a (k-4)-regular residual, packed
edge-disjointly into a realization of pi.
"""

from factorpack import four_ones_realization, verify_certificate
from factorpack.coloring import certificate_from_realization

pi, k = (5, 5, 5, 5, 5, 5), 5
real = four_ones_realization(pi, k, seed=0)
cert = certificate_from_realization(real, "four-ones", k)

print(f"pi = {pi}, k = {k}")
for i, matching in enumerate(cert.one_factors):
    print(f"  1-factor {i}: {list(matching)}")
print(f"  residual ({cert.residual[0]}-regular): {list(cert.residual[1])}")
print(f"  black: {list(cert.black_edges)}")

report = verify_certificate(pi, k, cert)
print("independent verification:", "PASS" if report.passed else report.violations)

print()
print("what the recoloring log recorded:")
for batch in real.trace.batches:
    if batch.op == "multi_switch":
        p = batch.params
        print(f"  multi_switch u={p['u']} v={p['v']} w={p['w']} mode={p['mode']} "
              f"chain length {p['r']}")
    elif batch.op == "parallel_two_switch":
        print(f"  parallel_two_switch {batch.params['pair']} <-> {batch.params['other']}")
    elif batch.op == "peel_one_factor":
        print(f"  peeled 1-factor #{batch.params['index']}")
