"""Schubert variety combinatorics: pattern avoidance, Bruhat order,
Kazhdan-Lusztig polynomials, inversion arrangements and Coxeter pattern maps.

The heavy lifting happens in the compiled extension; this package re-exports
its functions.  Permutations are lists of 1-based values in one-line notation.
"""

try:
    from schubert._schubert import *  # noqa: F401,F403  (installed layout)
    from schubert._schubert import __doc__ as _core_doc
except ImportError:  # in-tree build: extension on PYTHONPATH
    from _schubert import *  # noqa: F401,F403
    from _schubert import __doc__ as _core_doc

__all__ = [name for name in dir() if not name.startswith("_")]
