"""ufw — exhaustively verified finite combinatorics.

Subpackages:
  setfam     set families, filters, ultrafilters on finite grounds
  semigroup  finite Cayley tables, ideals, kernels, ultrafilter products
  largeness  monochromatic-structure searches and threshold numbers
  discalc    exact finite-difference calculus over the rationals
  genpoly    certified interval evaluation, digit systems, automata
  arrow      preference aggregation and the dictatorship analysis
  folup      first-order structures, ultraproducts, transfer checks
"""

__version__ = "0.1.0"

from . import arrow, discalc, errors, folup, genpoly, largeness, semigroup, setfam

__all__ = [
    "__version__",
    "arrow",
    "discalc",
    "errors",
    "folup",
    "genpoly",
    "largeness",
    "semigroup",
    "setfam",
]
