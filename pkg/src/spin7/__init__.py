"""Exact linear algebra for Spin(7)/G2/SU(4) structures on R^8 and
topological invariants of asymptotically cylindrical Spin(7)-manifolds
obtained from weighted-projective orbifold configurations."""

from spin7.forms import (
    Multivector,
    wedge,
    hodge_star,
    contract,
    inner,
    cayley_form,
    g2_split,
    su4_forms,
    cylinder_form,
    parse_form,
    format_form,
)

__all__ = [
    "Multivector",
    "wedge",
    "hodge_star",
    "contract",
    "inner",
    "cayley_form",
    "g2_split",
    "su4_forms",
    "cylinder_form",
    "parse_form",
    "format_form",
]
