"""Exact-arithmetic construction of the seven Hurwitz algebras inside the
four 3D geometric algebras G(p,q), p+q=3.

Subpackages:

- :mod:`hurwitz_ga.ga_core` -- exact multivector arithmetic (blade products,
  grade operations, the four involutions).
- :mod:`hurwitz_ga.canonical` -- structure-constant tables for R, C, Cs, H,
  Hs, O, Os and the four biquaternion algebras, with property checkers.
- :mod:`hurwitz_ga.octonify` -- the modified products turning G(p,q) into an
  octonionic composition algebra, with norm and classification.
- :mod:`hurwitz_ga.isomorphism` -- even/pseudoscalar subalgebras, the
  biquaternion factorization, the involution dictionary, and signed basis
  isomorphism search.
- :mod:`hurwitz_ga.cli` -- command-line interface.
"""

from hurwitz_ga.ga_core import Multivector, Signature

__all__ = ["Multivector", "Signature"]
__version__ = "0.1.0"
