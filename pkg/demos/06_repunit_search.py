"""Repunit coincidences across bases, and the cross-prime parameter scan.

A repunit to base b of length k is 1 + b + ... + b^(k-1).  Two repunits in
different bases are rarely equal -- 31 and 8191 are the famous small cases --
and for each base pair at most one exponent pair can work.  That scarcity is
load-bearing: the cross-prime parameter scan reduces a whole family of
hypothetical group pairs to repunit equalities and watches them all die.
"""

import ncgraph as ng


def main():
    print("== repunits, exactly ==\n")
    for b, k in ((2, 5), (5, 3), (2, 13), (90, 3), (10, 9)):
        print(f"  repunit({b:2d}, {k:2d}) = {ng.repunit(b, k)}")
    print()

    print("== bounded search for cross-base equalities ==\n")
    for max_base, max_exp in ((12, 20), (100, 20)):
        solutions = ng.goormaghtigh_search(max_base, max_exp)
        print(f"  bases <= {max_base}, exponents <= {max_exp}:")
        for s in solutions:
            print(f"    repunit({s.x}, {s.m}) == repunit({s.y}, {s.n}) "
                  f"== {s.value}")
    print()
    print("  (each base pair can appear at most once; the search verifies")
    print("   that as it goes and would raise on a second hit)\n")

    print("== the cross-prime parameter scan ==\n")
    scan = ng.cross_prime_scan(max_prime=7, max_exp=8, max_cofactor=50)
    print(f"  prime pairs tried: {len(scan.prime_pairs)}")
    print(f"  candidate parameter tuples: {scan.candidates}")
    print(f"  candidates admitting aligned exponent pairs: "
          f"{scan.candidates_with_pairs}")
    print(f"  survivors: {len(scan.survivors)}  -> verdict: {scan.verdict}")
    print(f"  repunit coincidences met on the divisor grid:")
    for base1, len1, base2, len2, value in scan.repunit_coincidences:
        print(f"    repunit({base1}, {len1}) == repunit({base2}, {len2}) "
              f"== {value}")
    print("\n  the coincidence above is the same (2,5) vs (5,3) equality the")
    print("  dedicated search found -- two independent routes, one answer")


if __name__ == "__main__":
    main()
