from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from .base import BaseModel
from .dyadic import DyadicCube
from ..errors import InvalidArgumentException


class SupportKind:
    FINITE_POINTS = 'finite_points'
    FULL_BOX = 'full_box'


@dataclass
class SupportDescriptor(BaseModel):
    """The smallest algebraic set carrying the mass of a cube.

    finite_points: the set itself (finite sets are algebraic).
    full_box: boxes of positive volume; their Zariski closure is all of R^n.
    """
    nvars: int = 1
    kind: str = SupportKind.FINITE_POINTS
    points: List[Tuple[Fraction, ...]] = field(default_factory=list)
    boxes: List[DyadicCube] = field(default_factory=list)

    def __post_init__(self):
        if self.kind not in (SupportKind.FINITE_POINTS, SupportKind.FULL_BOX):
            raise InvalidArgumentException(f'Unknown support kind: {self.kind}')
        deduplicated = []
        for point in self.points:
            point = tuple(point)
            if point not in deduplicated:
                deduplicated.append(point)
        self.points = deduplicated
        if self.kind == SupportKind.FULL_BOX and not self.boxes:
            raise InvalidArgumentException('A full_box support needs at least one box')

    @property
    def is_empty(self) -> bool:
        return self.kind == SupportKind.FINITE_POINTS and not self.points
