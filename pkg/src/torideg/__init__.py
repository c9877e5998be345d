"""Exact toric degeneration toolkit.

Polynomials over Q with positive multigradings, Groebner machinery, Groebner
fans and tropical cones, quasivaluations with their value semigroups and
polytopes, wall-crossing maps between adjacent maximal cones, and lifted
multi-parameter flat families, all in exact rational arithmetic.
"""

__version__ = "0.1.0"
