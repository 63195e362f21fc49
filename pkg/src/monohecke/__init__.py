"""
Generic Hecke algebras attached to the monomial groups G(b,1,n) = W x| H_b.

Modules:

* :mod:`~monohecke.group`: the group WH_b and its combinatorics
* :mod:`~monohecke.scalars`: Laurent scalars over Z[a, v, v^-1] and Z[1/b][v, v^-1]
* :mod:`~monohecke.hecke`: the algebra in the rescaled T-basis, bar involution, trace
* :mod:`~monohecke.rpoly`: R*-polynomials and the partial order on WH_b
* :mod:`~monohecke.subexpr`: distinguished subexpressions and the closed R* formula
* :mod:`~monohecke.kl`: the Kazhdan-Lusztig basis and P*-polynomials
* :mod:`~monohecke.glnq`: brute-force structure constants inside GL_n(F_q)
* :mod:`~monohecke.cli`: command-line front end
"""

from .group import GroupElement, GroupParams, Reflection
from .hecke import HeckeAlgebra, HeckeElement
from .notation import format_element, parse_element
from .scalars import GenericScalar, SpecializedScalar

__version__ = "0.1.0"

__all__ = [
    "GroupElement", "GroupParams", "Reflection", "HeckeAlgebra", "HeckeElement",
    "format_element", "parse_element", "GenericScalar", "SpecializedScalar",
]
