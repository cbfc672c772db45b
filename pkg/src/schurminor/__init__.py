"""Exact verification of Schur polynomials as minors of a banded matrix of
elementary symmetric polynomials, via extended Vandermonde minors."""

from .jacobi_trudi import (
    build_P,
    det_bareiss,
    det_cofactor,
    det_hessenberg,
    minor_rows,
    row_zero_pattern_check,
)
from .matrix import PolyMatrix
from .partitions import Partition, partitions_in_box
from .poly import (
    InexactDivisionError,
    MultiPoly,
    parse_text,
    poly_add,
    poly_eval,
    poly_exact_div,
    poly_mul,
    render_text,
)
from .schur import (
    IdentityReport,
    paper_nu,
    partition_from_selection,
    schur_bialternant,
    schur_jacobi_trudi,
    selection_from_partition,
    verify_main_identity,
    verify_propositions,
)
from .symmetric import VariableSet, char_poly_coeffs, elementary, signed_elementary, verify_root_relation
from .tableaux import enumerate_ssyt, schur_tableaux
from .vandermonde import (
    ColumnSelection,
    build_extended,
    minor_matrix,
    sgn_from_i,
    sgn_from_j,
    vandermonde_det,
    verify_column_relation,
)

__version__ = "0.1.0"
