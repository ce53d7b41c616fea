"""Exact framed Homfly invariants of the decorated Hopf link."""

from .ring import (
    ConsistencyError,
    LaurentPoly1,
    LaurentPoly2,
    RingElem,
    determinant,
    det_fractions,
    format_poly1,
    format_poly2,
    format_ring_elem,
    parse_poly1,
    parse_poly2,
    parse_ring_elem,
    quantum_factor,
    ring_elem_from_json,
    ring_elem_to_json,
    try_exact_div,
)
from .partitions import (
    EMPTY,
    Partition,
    column_partition,
    conjugate,
    frobenius,
    hook_partition,
    index_set,
    parse_partition,
    partitions_of,
    partitions_up_to,
    pieri_column,
    pieri_row,
    row_partition,
)
from .series import (
    TruncatedSeries,
    linear_factor,
    schur_classical,
    schur_of_series,
    series_invert,
    series_mul,
)
from .hopf import (
    HopfResult,
    Route,
    complete_series,
    content_polynomial,
    curl_identity_check,
    elementary_series,
    elementary_series_by_rows,
    elementary_series_empty,
    eval_unknot,
    framing_factor,
    hopf_column_row_closed,
    hopf_invariant,
    hopf_invariant_symmetrized,
    required_degree,
)
from .sln import (
    Sl2Check,
    SlNResult,
    hopf_sln_minor,
    hopf_sln_substitution,
    sl2_quantum_check,
    sln_elementary_factors,
    vandermonde_minor,
)

__version__ = "0.1.0"
