#!/usr/bin/env python3
"""Exact exterior algebra on R^8 and the distinguished 4-form.

Walks through the basic objects: multivectors with rational coefficients,
wedge products, the Hodge star, and the 14-term self-dual 4-form whose
stabilizer is 21-dimensional.
"""

from fractions import Fraction

from spin7 import (cayley_form, format_form, hodge_star, inner, wedge)
from spin7.forms import Multivector, contract, g2_split, volume_form


def main():
    phi = cayley_form()
    vol = volume_form(8)

    print("The distinguished 4-form on R^8:")
    print(" ", format_form(phi))
    print()
    print("self-dual:        *phi == phi  ->", hodge_star(phi) == phi)
    print("normalization:    phi ^ phi == 14 vol  ->",
          wedge(phi, phi) == 14 * vol)
    print("norm squared:     <phi, phi> ==", inner(phi, phi))
    print()

    # Contraction by a vector produces the 3-forms spanning the rank-8
    # block of Lambda^3.
    v = [Fraction(1), Fraction(0), Fraction(-1, 2)] + [Fraction(0)] * 5
    print("contraction by v = e1 - e3/2:")
    print(" ", format_form(contract(v, phi)))
    print()

    # Splitting off the first coordinate reveals the 7-dimensional
    # cross-product 3-form and its dual.
    phi3, psi4 = g2_split(phi)
    print("7-dimensional factors: phi = dx1 ^ phi3 + psi4 with")
    print("  phi3 =", format_form(phi3))
    print("  psi4 = *phi3  ->", hodge_star(phi3) == psi4)


if __name__ == "__main__":
    main()
