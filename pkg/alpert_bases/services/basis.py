"""Variable Alpert basis service.

Builds the basis of a grid window from a measure and a family assignment,
expands and reconstructs functions, and runs the verification suite.
"""

from typing import List, Optional, Sequence

from .base import BaseService
from ..errors import VerificationFailedException
from ..helpers import bundle as bundle_helpers
from ..logging_config import get_logger
from ..models.bundle import BasisBundle
from ..models.dyadic import DyadicCube, GridWindow
from ..models.families import AssignmentReport, FamilyAssignment
from ..models.measure import Measure
from ..models.piecewise import PiecewisePoly
from ..models.reports import (
    CompletenessResult,
    OrthogonalityResult,
    TelescopingResult,
    Tolerance,
    VerifyReport,
)

logger = get_logger("services.basis")


class BasisService(BaseService):
    """Service for the variable Alpert basis of a grid window.

    Example:
        >>> api = AlpertApi(seed=7)
        >>> bundle = api.basis.build(mu, window, FamilyAssignment.constant(1, ["1"]))
        >>> report = api.basis.verify(bundle, trials=5)
        >>> report.passed
        True
    """

    def validate_assignment(self, assignment: FamilyAssignment, window: GridWindow) -> AssignmentReport:
        return bundle_helpers.validate_assignment(assignment, window)

    def build(self, mu: Measure, window: GridWindow, assignment: FamilyAssignment) -> BasisBundle:
        """Build the bundle of wavelet, complement and top bases.

        Raises:
            InvalidAssignmentException: If 1 is missing from some U_Q or nesting fails.
        """
        return bundle_helpers.build(mu, window, assignment, workers=self._workers)

    def expand(self, bundle: BasisBundle, f: PiecewisePoly) -> List[float]:
        return bundle_helpers.expand(bundle, f)

    def reconstruct(self, bundle: BasisBundle, coeffs: Sequence[float]) -> PiecewisePoly:
        return bundle_helpers.reconstruct(bundle, coeffs)

    def verify_complete(self, bundle: BasisBundle, trials: int) -> CompletenessResult:
        return bundle_helpers.verify_complete(bundle, trials, self._rng())

    def verify_telescoping(self, bundle: BasisBundle, inner: DyadicCube, outer: DyadicCube,
                           trials: int) -> TelescopingResult:
        """Discrepancy of the telescoping identity for Q inside R.

        Raises:
            HypothesisViolatedException: If U_Q and U_R differ.
        """
        return bundle_helpers.verify_telescoping(bundle, inner, outer, trials, self._rng())

    def verify_orthogonality(self, bundle: BasisBundle) -> OrthogonalityResult:
        return bundle_helpers.verify_orthogonality(bundle)

    def verify(self, bundle: BasisBundle, trials: int, max_pairs: Optional[int] = None,
               strict: bool = False) -> VerifyReport:
        """Completeness, orthogonality and telescoping over every valid pair.

        Args:
            bundle: A built bundle.
            trials: Random functions per check.
            max_pairs: Optional cap on the number of telescoping pairs.
            strict: Raise instead of returning a failed report.

        Raises:
            VerificationFailedException: In strict mode, if a residual exceeds its tolerance.
        """
        report = VerifyReport(
            completeness=self.verify_complete(bundle, trials),
            orthogonality=self.verify_orthogonality(bundle),
        )
        pairs = bundle_helpers.telescoping_pairs(bundle)
        if max_pairs is not None:
            pairs = pairs[:max_pairs]
        for inner, outer in pairs:
            result = self.verify_telescoping(bundle, inner, outer, trials)
            report.telescoping.append(result)
            report.max_telescoping = max(report.max_telescoping, result.max_discrepancy)

        failures = []
        if report.completeness.max_residual > Tolerance.COMPLETENESS:
            failures.append(f'completeness residual {report.completeness.max_residual:.3e}')
        if report.completeness.max_parseval_defect > Tolerance.PARSEVAL:
            failures.append(f'Parseval defect {report.completeness.max_parseval_defect:.3e}')
        orthogonality = report.orthogonality
        if max(orthogonality.max_violation, orthogonality.max_wavelet_violation) > Tolerance.ORTHOGONALITY:
            failures.append(f'orthogonality violation {orthogonality.max_violation:.3e}')
        if orthogonality.exact_failures:
            failures.append(f'{orthogonality.exact_failures} exact orthogonality failures')
        if report.max_telescoping > Tolerance.TELESCOPING:
            failures.append(f'telescoping discrepancy {report.max_telescoping:.3e}')

        report.passed = not failures
        if failures:
            logger.error(f"Verification failed: {', '.join(failures)}")
            if strict:
                raise VerificationFailedException('Verification failed: ' + ', '.join(failures))
        return report
