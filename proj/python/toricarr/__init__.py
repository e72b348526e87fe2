"""Exact flag-vector invariants of graded posets and hyperplane arrangements.

Thin wrapper around the compiled extension module.  Exact integers are
returned as Python ints and polynomials as canonical strings.
"""

try:
    # Installed layout: the extension lives inside this package.
    from ._toricarr import (
        AffineArrangement,
        Graph,
        Poset,
        ToricArrangement,
        ab_to_cd,
        cd_expand,
        omega,
    )
except ImportError:
    # Build-tree layout: the extension sits on sys.path by itself.
    from _toricarr import (
        AffineArrangement,
        Graph,
        Poset,
        ToricArrangement,
        ab_to_cd,
        cd_expand,
        omega,
    )

__all__ = [
    "AffineArrangement",
    "Graph",
    "Poset",
    "ToricArrangement",
    "ab_to_cd",
    "cd_expand",
    "omega",
]
