"""Exact-arithmetic enumeration of spanned flats, arrangement vertices, and
bichromatic point-hyperplane incidences, plus the extremal constructions and
counting formulas they are checked against."""

from .kernel import (
    Flat,
    GeometryError,
    Point,
    affine_hull,
    affine_rank,
    contains,
    format_rational,
    hyperplane,
    join,
    meet,
    parse_rational,
    rank_of,
)
from .spans import (
    CoverCertificate,
    PlaneOrLinePairCover,
    SpannedSet,
    arrangement_vertices,
    is_r_degenerate,
    max_collinear,
    max_cover_plane_or_two_lines,
    max_degenerate_subset,
    rank_sum_cover,
    spanned_codim2_count,
    spanned_flats,
    spanned_hyperplane_count,
)
from .incidence import (
    BiArrangement,
    CountReport,
    EnvelopeTerms,
    bound_envelope,
    count_bichromatic,
    validate_vertices,
)
from .constructions import (
    BichromaticConstruction,
    ConstructionError,
    LineGrid2D,
    ThetaMkConstruction,
    bichromatic_lower_construction,
    erdos_grid_2d,
    purdy_counterexample,
    theta_mk_construction,
    verify_covering_lines,
)
from .formulas import (
    AllocationPreconditionError,
    FormulaDomainError,
    PurdyCounts,
    pigeonhole_check,
    purdy_counts,
    purdy_crossover,
)

__all__ = [
    "AllocationPreconditionError",
    "BiArrangement",
    "BichromaticConstruction",
    "ConstructionError",
    "CountReport",
    "CoverCertificate",
    "EnvelopeTerms",
    "Flat",
    "FormulaDomainError",
    "GeometryError",
    "LineGrid2D",
    "PlaneOrLinePairCover",
    "Point",
    "PurdyCounts",
    "SpannedSet",
    "ThetaMkConstruction",
    "affine_hull",
    "affine_rank",
    "arrangement_vertices",
    "bichromatic_lower_construction",
    "bound_envelope",
    "contains",
    "count_bichromatic",
    "erdos_grid_2d",
    "format_rational",
    "hyperplane",
    "is_r_degenerate",
    "join",
    "max_collinear",
    "max_cover_plane_or_two_lines",
    "max_degenerate_subset",
    "meet",
    "parse_rational",
    "pigeonhole_check",
    "purdy_counterexample",
    "purdy_counts",
    "purdy_crossover",
    "rank_of",
    "rank_sum_cover",
    "spanned_codim2_count",
    "spanned_flats",
    "spanned_hyperplane_count",
    "theta_mk_construction",
    "validate_vertices",
    "verify_covering_lines",
]

__version__ = "0.1.0"
