"""Toolkit for finite orthoposets: validation, cone algebra, structural
classification, quantum-logic style operators, law verification and
exhaustive model search."""

from .core import (
    BOTTOM_LABEL,
    TOP_LABEL,
    FinitePoset,
    Mask,
    OposetError,
    OrthoPoset,
    SizeLimitError,
    ValidationError,
    Violation,
    from_covers,
    iter_bits,
    validate_order,
    validate_ortho,
)
from .checks import (
    CHECKS,
    check_adjoint_conditions,
    check_boolean,
    check_lattice,
    check_orthomodular,
    check_skew_omp,
    check_strong_skew_omp,
    find_benzene_obstruction,
)
from .operators import (
    OperatorTable,
    commutator,
    compatible,
    flat,
    operator_table,
    pixley,
    sharp,
    sharp_conj,
    sharp_impl,
)
from .laws import SUITES, run_suites
from .models import (
    ModelStream,
    benzene,
    canonical_certificate,
    crown,
    enumerate_orthoposets,
    isomorphic,
    nonlattice12,
    power_set,
)
from .io import export_dot, parse_poset, serialize_poset
from .reports import CheckReport, LawReport, Witness, render_json, report_document

__version__ = "0.1.0"
