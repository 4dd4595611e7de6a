from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .base import BaseModel
from .dyadic import DyadicCube, GridWindow
from .families import FamilyAssignment
from .measure import Measure
from .piecewise import PiecewisePoly
from .spaces import BasisKind, FunctionFamily, OrthoBasis


@dataclass
class BundleCounts(BaseModel):
    wavelets: int = 0
    complements: int = 0
    tops: int = 0
    total: int = 0
    cubes: int = 0


@dataclass
class BasisBundle(BaseModel):
    """Wavelets, complement bases and top bases of a variable Alpert basis.

    Coefficient order: tops by root order, then cubes coarse to fine and by
    coordinates, complements before wavelets within a cube.
    """
    measure: Measure = field(default_factory=Measure)
    window: GridWindow = field(default_factory=GridWindow)
    assignment: FamilyAssignment = field(default_factory=FamilyAssignment)
    families: Dict[DyadicCube, FunctionFamily] = field(default_factory=dict)
    top_families: Dict[DyadicCube, FunctionFamily] = field(default_factory=dict)
    wavelets: Dict[DyadicCube, OrthoBasis] = field(default_factory=dict)
    complements: Dict[DyadicCube, OrthoBasis] = field(default_factory=dict)
    tops: Dict[DyadicCube, OrthoBasis] = field(default_factory=dict)

    def bases(self) -> List[OrthoBasis]:
        """Every non-empty basis in coefficient order."""
        ordered = [self.tops[root] for root in self.window.roots if root in self.tops]
        cubes = sorted(set(self.wavelets) | set(self.complements), key=DyadicCube.sort_key)
        for cube in cubes:
            for group in (self.complements, self.wavelets):
                if cube in group:
                    ordered.append(group[cube])
        return [basis for basis in ordered if basis.dimension]

    def entries(self) -> List[Tuple[OrthoBasis, int]]:
        """(basis, index) for every bundle function, in coefficient order."""
        return [(basis, i) for basis in self.bases() for i in range(basis.dimension)]

    @property
    def size(self) -> int:
        return sum(basis.dimension for basis in self.bases())

    def counts(self) -> BundleCounts:
        wavelets = sum(b.dimension for b in self.wavelets.values())
        complements = sum(b.dimension for b in self.complements.values())
        tops = sum(b.dimension for b in self.tops.values())
        return BundleCounts(wavelets, complements, tops, wavelets + complements + tops, len(self.families))

    def family(self, cube: DyadicCube) -> Optional[FunctionFamily]:
        return self.families.get(cube)

    def group(self, kind: str) -> Dict[DyadicCube, OrthoBasis]:
        return {
            BasisKind.WAVELET: self.wavelets,
            BasisKind.COMPLEMENT: self.complements,
            BasisKind.TOP: self.tops,
        }[kind]

    def project(self, kind: str, cube: DyadicCube, f: PiecewisePoly) -> PiecewisePoly:
        """Exact projection of f onto one stored space; zero if the cube carries none."""
        from ..helpers.spaces import project

        basis = self.group(kind).get(cube)
        if basis is None:
            return PiecewisePoly.zero(f.nvars)
        return project(self.measure, cube, basis, f)

    def to_records(self) -> List[Dict]:
        return [record for basis in self.bases() for record in basis.to_records()]

    def to_dict(self):
        return {
            'window': self.window.to_dict(),
            'order': self.assignment.order,
            'counts': self.counts().to_dict(),
            'functions': self.to_records(),
        }
