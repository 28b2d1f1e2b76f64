"""Polynomials of maximum lead coefficient bounded by 1 on a finite set."""

from .chebyshev import (
    CorrectionTerm,
    chebyshev_T,
    continuous_lead_bound,
    correction_term,
    map_from_unit,
    map_to_unit,
)
from .closed_forms import (
    ClosedFormQuery,
    closed_form_lead,
    closed_form_polynomial,
    lead_coefficient_closed_form,
)
from .errors import (
    DegenerateMap,
    DegreeMismatch,
    DuplicateAbscissa,
    InternalInconsistency,
    LPolyError,
    NoMaximum,
    UnsupportedDegree,
    ZeroPolynomial,
)
from .kernel import BACKEND
from .poly import PointSet, Polynomial, affine_compose, interpolate
from .solver import AlternationCertificate, ExtremalResult, VerificationReport, solve, verify

__version__ = "0.1.0"
