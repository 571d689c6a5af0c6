"""First Hochschild cohomology of finite-dimensional quiver algebras.

Closed combinatorial dimension formulas for path, monomial, truncated,
pre-generated and incidence algebras, each cross-checked by a brute-force
exact-linear-algebra oracle (derivations modulo inner derivations).
"""

from .quiver import Arrow, ParallelPair, Path, Quiver, compose, enumerate_paths
from .presentations import (
    AlgebraPresentation,
    MonomialIdeal,
    StructureConstantAlgebra,
    TruncationIdeal,
    basis_B,
    build_algebra,
)
from .formulas import H1Report, classify_and_compute
from .exactalg import h1_oracle, regular_bimodule
from .simplicial import Poset, gs_compare

__all__ = [
    "Arrow",
    "ParallelPair",
    "Path",
    "Quiver",
    "compose",
    "enumerate_paths",
    "AlgebraPresentation",
    "MonomialIdeal",
    "StructureConstantAlgebra",
    "TruncationIdeal",
    "basis_B",
    "build_algebra",
    "H1Report",
    "classify_and_compute",
    "h1_oracle",
    "regular_bimodule",
    "Poset",
    "gs_compare",
]

__version__ = "0.1.0"
