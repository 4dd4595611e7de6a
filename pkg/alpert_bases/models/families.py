"""Per-cube family rules U_Q for the variable Alpert basis."""

import functools
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .base import BaseModel
from .dyadic import DyadicCube, GridWindow
from .polynomial import MonomialOrder, OrderKind, Polynomial
from .spaces import FunctionFamily
from ..errors import InvalidArgumentException


@dataclass
class FamilyOverride(BaseModel):
    """A rule replacing the default family on part of the grid.

    below_level: applies to cubes with level < below_level
    subtree: applies to cubes inside this cube
    degree / members: the family, F^n_degree or explicit polynomial texts

    When both selectors are given, both must hold.
    """
    below_level: Optional[int] = None
    subtree: Optional[DyadicCube] = None
    degree: Optional[int] = None
    members: Optional[List[str]] = None

    def __post_init__(self):
        if self.below_level is None and self.subtree is None:
            raise InvalidArgumentException('An override needs below_level or subtree')
        if (self.degree is None) == (self.members is None):
            raise InvalidArgumentException('An override needs exactly one of degree or members')

    def applies(self, cube: DyadicCube) -> bool:
        if self.below_level is not None and not cube.level < self.below_level:
            return False
        if self.subtree is not None and not self.subtree.contains(cube):
            return False
        return True


@functools.lru_cache(maxsize=None)
def _family(nvars: int, order_kind: str, degree: Optional[int], members: Optional[Tuple[str, ...]]) -> FunctionFamily:
    if members is not None:
        return FunctionFamily.from_texts(nvars, members)
    return FunctionFamily.of_degree(nvars, degree, MonomialOrder(order_kind, nvars))


@dataclass
class FamilyAssignment(BaseModel):
    """Rule mapping every cube of a window to its family U_Q.

    The default applies everywhere; overrides are scanned in order and the
    last one that applies wins.
    """
    nvars: int = 1
    order: str = OrderKind.GREVLEX
    default_degree: Optional[int] = 1
    default_members: Optional[List[str]] = None
    overrides: List[FamilyOverride] = field(default_factory=list)

    def __post_init__(self):
        if self.default_members is not None:
            self.default_degree = None
        if self.default_degree is None and self.default_members is None:
            raise InvalidArgumentException('A family assignment needs default_degree or default_members')

    @classmethod
    def constant(cls, nvars: int, members: List[str], order: str = OrderKind.GREVLEX) -> 'FamilyAssignment':
        return cls(nvars=nvars, order=order, default_members=list(members))

    @property
    def monomial_order(self) -> MonomialOrder:
        return MonomialOrder(self.order, self.nvars)

    def family(self, cube: DyadicCube) -> FunctionFamily:
        degree, members = self.default_degree, self.default_members
        for override in self.overrides:
            if override.applies(cube):
                degree, members = override.degree, override.members
        return _family(self.nvars, self.order, degree, tuple(members) if members is not None else None)

    def families_below(self, window: GridWindow, cube: DyadicCube) -> List[FunctionFamily]:
        """Distinct families U_Q over the window cubes Q inside cube.

        Below a cube that strictly contains no subtree selector, every cube
        of a level gets the same family, so one descendant chain suffices.
        """
        found: List[FunctionFamily] = []
        subtrees = [o.subtree for o in self.overrides if o.subtree is not None]

        def visit(q: DyadicCube) -> None:
            family = self.family(q)
            if family not in found:
                found.append(family)
            if q.level <= window.min_level:
                return
            children = q.children()
            if not any(q.strictly_contains(s) for s in subtrees):
                children = children[:1]
            for child in children:
                visit(child)

        visit(cube)
        return found

    def top_family(self, window: GridWindow, root: DyadicCube) -> FunctionFamily:
        """U_T: intersection of U_Q over the window cubes inside the root, in the root's order."""
        families = self.families_below(window, root)
        top = families[0]
        for other in families[1:]:
            top = top.intersection(other)
        return top

    def one(self) -> Polynomial:
        return Polynomial.constant(self.nvars)


@dataclass
class AssignmentViolation(BaseModel):
    cube: DyadicCube = field(default_factory=DyadicCube)
    reason: str = ''


class ViolationReason:
    MISSING_ONE = 'missing_one'
    NOT_NESTED = 'not_nested'


@dataclass
class AssignmentReport(BaseModel):
    ok: bool = True
    checked: int = 0
    violations: List[AssignmentViolation] = field(default_factory=list)
