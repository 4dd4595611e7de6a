"""Result records of the verification operations and of CLI runs."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .base import BaseModel
from .dyadic import DyadicCube, GridWindow
from .families import FamilyAssignment
from .polynomial import OrderKind


@dataclass
class CompletenessResult(BaseModel):
    """max_residual: max ||f - reconstruct(expand(f))|| / ||f|| over the trials
    max_parseval_defect: max | ||f||^2 - sum coeff^2 | / ||f||^2
    """
    trials: int = 0
    max_residual: float = 0.0
    max_parseval_defect: float = 0.0


@dataclass
class TelescopingResult(BaseModel):
    inner: DyadicCube = field(default_factory=DyadicCube)
    outer: DyadicCube = field(default_factory=DyadicCube)
    trials: int = 0
    max_discrepancy: float = 0.0


@dataclass
class OrthogonalityResult(BaseModel):
    """max_wavelet_violation: max |<b, 1_Q p>| for wavelets b on Q, p in U_R, R in the tower of Q
    max_violation: max |<b_i, b_j> - delta_ij| over overlapping bundle functions
    exact_failures: exact pairs whose pre-normalized inner product is nonzero
    """
    max_wavelet_violation: float = 0.0
    max_violation: float = 0.0
    exact_failures: int = 0
    pairs: int = 0


@dataclass
class DimsRow(BaseModel):
    """One line of the dims table.

    staircase is None when I_Q = {0} (box measures); the note says so.
    """
    k: int = 1
    family_size: int = 0
    component_dim: int = 0
    staircase: Optional[int] = None
    ambient: int = 0
    alpert_dim: int = 0
    hilbert_dim: int = 0
    note: str = ''


@dataclass
class VerifyReport(BaseModel):
    completeness: CompletenessResult = field(default_factory=CompletenessResult)
    orthogonality: OrthogonalityResult = field(default_factory=OrthogonalityResult)
    telescoping: List[TelescopingResult] = field(default_factory=list)
    max_telescoping: float = 0.0
    passed: bool = True


@dataclass
class RunConfig(BaseModel):
    """Parsed build/verify configuration file."""
    measure: str = ''
    window: GridWindow = field(default_factory=GridWindow)
    order: str = OrderKind.GREVLEX
    families: Dict = field(default_factory=dict)
    seed: int = 0
    trials: int = 10
    workers: int = 1

    def assignment(self, nvars: int) -> FamilyAssignment:
        data = dict(self.families)
        data.setdefault('nvars', nvars)
        data.setdefault('order', self.order)
        return FamilyAssignment.from_dict(data)


@dataclass
class RunReport(BaseModel):
    """Summary printed after every CLI command.

    inputs maps file paths to their sha256; result holds the command output
    that is also written with --out.
    """
    command: str = ''
    inputs: Dict[str, str] = field(default_factory=dict)
    outputs: List[str] = field(default_factory=list)
    seed: Optional[int] = None
    residuals: Dict[str, float] = field(default_factory=dict)
    dimensions: List[DimsRow] = field(default_factory=list)
    result: Dict = field(default_factory=dict)
    wall_time: float = 0.0


class Tolerance:
    COMPLETENESS = 1e-9
    PARSEVAL = 1e-9
    ORTHOGONALITY = 1e-10
    TELESCOPING = 1e-9
    NORMALIZATION = 1e-12
