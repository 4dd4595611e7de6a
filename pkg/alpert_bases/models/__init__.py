from .dyadic import DyadicCube, GridWindow, cube_containing
from .polynomial import Monomial, MonomialOrder, OrderKind, Polynomial, f_n_k, f_n_k_size
from .piecewise import PiecewisePoly
from .measure import Atom, Box, Measure, MeasureKind
from .groebner import GroebnerBasis
from .support import SupportDescriptor, SupportKind
from .spaces import BasisKind, DimensionReport, FunctionFamily, OrthoBasis
from .families import AssignmentReport, AssignmentViolation, FamilyAssignment, FamilyOverride, ViolationReason
from .bundle import BasisBundle, BundleCounts
from .reports import (
    CompletenessResult,
    DimsRow,
    OrthogonalityResult,
    RunConfig,
    RunReport,
    TelescopingResult,
    Tolerance,
    VerifyReport,
)
