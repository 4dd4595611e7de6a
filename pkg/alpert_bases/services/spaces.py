"""Component and Alpert space service.

Exact dimensions, greedy component bases, orthonormal bases of Alpert
spaces, projections and the dimension table of the dims command.
"""

from fractions import Fraction
from typing import List, Sequence

from .base import BaseService
from ..errors import VerificationFailedException
from ..helpers import spaces, staircase, vanishing
from ..logging_config import get_logger
from ..models.dyadic import DyadicCube
from ..models.measure import Measure
from ..models.piecewise import PiecewisePoly
from ..models.polynomial import Polynomial
from ..models.reports import DimsRow
from ..models.spaces import DimensionReport, FunctionFamily, OrthoBasis
from ..models.support import SupportKind

logger = get_logger("services.spaces")


class SpacesService(BaseService):
    """Service for P_{Q,U}(mu) and L^2_{Q,U,V}(mu).

    Example:
        >>> api = AlpertApi()
        >>> U = api.spaces.family(["1"], nvars=1)
        >>> api.spaces.dimension_report(mu, DyadicCube(1, (0,)), U, U).actual
        1
    """

    def family(self, texts: Sequence[str], nvars: int) -> FunctionFamily:
        return FunctionFamily.from_texts(nvars, texts)

    def degree_family(self, nvars: int, k: int) -> FunctionFamily:
        """F^n_k ascending in the service's order."""
        return FunctionFamily.of_degree(nvars, k, self._monomial_order(nvars))

    def gram_matrix(self, mu: Measure, cube: DyadicCube, fam: Sequence[PiecewisePoly]) -> List[List[Fraction]]:
        return spaces.gram_matrix(mu, cube, fam)

    def component_dimension(self, mu: Measure, cube: DyadicCube, U: FunctionFamily) -> int:
        return spaces.component_dimension(mu, cube, U)

    def component_basis(self, mu: Measure, cube: DyadicCube, U: FunctionFamily) -> List[Polynomial]:
        return spaces.component_basis(mu, cube, U)

    def alpert_space_basis(self, mu: Measure, cube: DyadicCube, U: FunctionFamily,
                           V: FunctionFamily) -> OrthoBasis:
        return spaces.alpert_space_basis(mu, cube, U, V)

    def complement_basis(self, mu: Measure, cube: DyadicCube, U_small: FunctionFamily,
                         U_large: FunctionFamily) -> OrthoBasis:
        return spaces.complement_basis(mu, cube, U_small, U_large)

    def component_projection(self, mu: Measure, cube: DyadicCube, U: FunctionFamily,
                             f: PiecewisePoly) -> PiecewisePoly:
        return spaces.component_projection(mu, cube, U, f)

    def alpert_projection(self, mu: Measure, cube: DyadicCube, U: FunctionFamily, V: FunctionFamily,
                          f: PiecewisePoly) -> PiecewisePoly:
        return spaces.alpert_projection(mu, cube, U, V, f)

    def dimension_report(self, mu: Measure, cube: DyadicCube, U: FunctionFamily,
                         V: FunctionFamily) -> DimensionReport:
        return spaces.dimension_report(mu, cube, U, V)

    def dims_table(self, mu: Measure, cube: DyadicCube, k_max: int) -> List[DimsRow]:
        """Dimensions of P_{Q,F^n_k} and L^2_{Q,F^n_k,F^n_k} for k = 1..k_max.

        The Gram-rank column is checked against the Groebner staircase for
        atomic measures.

        Raises:
            VerificationFailedException: If the two columns disagree.
        """
        nvars = mu.nvars
        order = self._monomial_order(nvars)
        desc = vanishing.support(mu, cube)
        G = vanishing.vanishing_ideal(desc, order)
        hilbert = staircase.hilbert_dimension(G)
        boxes = desc.kind == SupportKind.FULL_BOX

        rows = []
        for k in range(1, k_max + 1):
            U = self.degree_family(nvars, k)
            component = spaces.component_dimension(mu, cube, U)
            ambient = sum(spaces.component_dimension(mu, child, U) for child in cube.children())
            row = DimsRow(
                k=k,
                family_size=len(U),
                component_dim=component,
                staircase=None if boxes else staircase.staircase_count(G, k),
                ambient=ambient,
                alpert_dim=ambient - component,
                hilbert_dim=hilbert,
                note='staircase n/a: I_Q = {0}' if boxes else '',
            )
            if row.staircase is not None and row.staircase != component:
                logger.error(f"k={k}: Gram rank {component} but staircase {row.staircase}")
                raise VerificationFailedException(
                    f'Gram rank {component} and staircase count {row.staircase} disagree at k={k}'
                )
            logger.debug(f"k={k}: component {component}, ambient {ambient}")
            rows.append(row)
        return rows
