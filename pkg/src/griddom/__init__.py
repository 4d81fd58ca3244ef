"""griddom: optimal dominating sets on grid graphs.

Construction of minimum dominating sets (which are also [1,2]-sets) for
m x n grids with m, n >= 16 in time proportional to the answer, a full
coverage verifier, and independent exact solvers for small grids.
"""

from .construction import (
    DEFICIT_CLASSES,
    LAST_ROW_FROM_COL2,
    MIN_SIDE,
    PHASE_OVERRIDES,
    TRANSPOSED_CLASSES,
    PatternSet,
    black_disks,
    construct,
    first_column_offset,
    gamma_formula,
    pattern_class,
    row_offset,
    white_squares_first_row,
    white_squares_sides,
)
from .deviations import DEVIATIONS, load_ledger
from .grid import (
    GridDims,
    Vertex,
    boundary,
    closed_neighborhood,
    neighbors,
    residue_class,
    subgrid_vertices,
)
from .oracle import (
    CapacityError,
    FormulaComparison,
    OracleResult,
    exact_gamma_bruteforce,
    exact_gamma_dp,
    oracle_vs_formula,
)
from .render import (
    RenderedGrid,
    document_to_pattern,
    dumps_document,
    pattern_to_document,
    render_ascii,
    render_svg,
)
from .verify import (
    CoverageReport,
    PatternVerdict,
    corner_multiplicity_check,
    count_cross_check,
    coverage_map,
    interior_unique_coverage,
    verify_pattern,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "CoverageReport",
    "DEFICIT_CLASSES",
    "DEVIATIONS",
    "FormulaComparison",
    "GridDims",
    "LAST_ROW_FROM_COL2",
    "MIN_SIDE",
    "OracleResult",
    "PHASE_OVERRIDES",
    "PatternSet",
    "PatternVerdict",
    "RenderedGrid",
    "TRANSPOSED_CLASSES",
    "Vertex",
    "black_disks",
    "boundary",
    "closed_neighborhood",
    "construct",
    "corner_multiplicity_check",
    "count_cross_check",
    "coverage_map",
    "document_to_pattern",
    "dumps_document",
    "exact_gamma_bruteforce",
    "exact_gamma_dp",
    "first_column_offset",
    "gamma_formula",
    "interior_unique_coverage",
    "load_ledger",
    "neighbors",
    "oracle_vs_formula",
    "pattern_class",
    "pattern_to_document",
    "render_ascii",
    "render_svg",
    "residue_class",
    "row_offset",
    "subgrid_vertices",
    "verify_pattern",
    "white_squares_first_row",
    "white_squares_sides",
]
