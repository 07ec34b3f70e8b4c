#!/usr/bin/env python3
"""Characteristic numbers from truncated Chern series, orbifold Euler
characteristics, Noether surface invariants, and Jacobian-ring Hodge
numbers — all exact.
"""

from spin7 import charnum


def main():
    print("Euler characteristics by degree-pairing of the top Chern class:")
    for label, w, d, orders in (
            ("CP^3", [1, 1, 1, 1], [], []),
            ("quintic threefold", [1, 1, 1, 1, 1], [5], []),
            ("octic CY3 in (1,1,1,1,4)", [1, 1, 1, 1, 4], [8], []),
            ("orbifold (1,1,1,1,4)", [1, 1, 1, 1, 4], [], [4]),
            ("octic fourfold in (1,1,1,1,4,4)", [1, 1, 1, 1, 4, 4],
             [8], [4, 4])):
        res = charnum.euler_characteristics(w, d, orders)
        note = (f" (orbifold value {res.chi_orb})"
                if res.corrections else "")
        print(f"  {label}: chi = {res.chi_top}{note}")
    print()

    print("surface invariants via Noether's formula:")
    for label, w, d in (("(8,8) in (1,1,1,1,4)", [1, 1, 1, 1, 4], [8, 8]),
                        ("(8,4) in (1,1,1,1,4)", [1, 1, 1, 1, 4], [8, 4]),
                        ("quartic in CP^3", [1, 1, 1, 1], [4])):
        chi, k2, pg = charnum.noether_pg(w, d)
        print(f"  {label}: chi = {chi}, K^2 = {k2}, p_g = {pg}")
    print()

    print("Hodge numbers from the graded Jacobian ring:")
    ring = charnum.GradedMonomialRing((1, 1, 1, 1, 1), 5)
    print("  quintic: middle Hodge diagonal",
          charnum.steenbrink_hodge([1, 1, 1, 1, 1], 5),
          "(primitive; h^{2,1} = 101)")
    print("  quartic surface:",
          charnum.steenbrink_hodge([1, 1, 1, 1], 4))
    print("  octic fourfold in (1,1,1,1,4,4): h^{3,1} =",
          charnum.steenbrink_hodge([1, 1, 1, 1, 4, 4], 8)[1])
    print()
    print("the Hilbert function of the quintic's Jacobian ring is "
          "palindromic:")
    top = ring.socle_degree
    print("  ", [ring.hilbert(k) for k in range(top + 1)])


if __name__ == "__main__":
    main()
