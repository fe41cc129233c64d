"""Exact topological invariants of smooth complete intersections in
projective space, and the classification of the convex, rationally
connected ones among them.

All arithmetic is exact (arbitrary-precision integers, integer
polynomials, Gaussian integers, truncated integer power series); there is
no floating point anywhere.
"""

from .exact import (
    GaussianInteger,
    I,
    IntPolynomial,
    ONE_PLUS_T_SQUARED,
    TruncatedSeries,
    binomial,
    series_coefficient,
)
from .topology import (
    CIType,
    InternalCheckError,
    InvariantReport,
    chi22,
    compute_invariants,
    euler_characteristic,
    hypersurface_middle_betti,
    middle_betti,
    poincare_polynomial,
    reduce_type,
    vanishes_at_i,
    verify_expansion_identity,
)
from .lines import (
    LineGeometry,
    ProductObstruction,
    fiber_type,
    line_geometry,
    product_obstruction,
)
from .classify import (
    LemmaCase,
    LemmaRecord,
    ParityOutcome,
    ScanReport,
    TheoremRecord,
    Verdict,
    VerdictKind,
    dimension_leq1_catalog,
    homogeneous_parity_report,
    iter_types,
    lemma_classify,
    scan_lemma,
    scan_theorem,
    theorem_verdict,
)

__version__ = "0.1.0"

__all__ = [
    "GaussianInteger",
    "I",
    "IntPolynomial",
    "ONE_PLUS_T_SQUARED",
    "TruncatedSeries",
    "binomial",
    "series_coefficient",
    "CIType",
    "InternalCheckError",
    "InvariantReport",
    "chi22",
    "compute_invariants",
    "euler_characteristic",
    "hypersurface_middle_betti",
    "middle_betti",
    "poincare_polynomial",
    "reduce_type",
    "vanishes_at_i",
    "verify_expansion_identity",
    "LineGeometry",
    "ProductObstruction",
    "fiber_type",
    "line_geometry",
    "product_obstruction",
    "LemmaCase",
    "LemmaRecord",
    "ParityOutcome",
    "ScanReport",
    "TheoremRecord",
    "Verdict",
    "VerdictKind",
    "dimension_leq1_catalog",
    "homogeneous_parity_report",
    "iter_types",
    "lemma_classify",
    "scan_lemma",
    "scan_theorem",
    "theorem_verdict",
    "__version__",
]
