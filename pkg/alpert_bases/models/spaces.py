import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from .base import BaseModel
from .dyadic import DyadicCube
from .piecewise import PiecewisePoly
from .polynomial import MonomialOrder, OrderKind, Polynomial, f_n_k
from ..errors import DimensionMismatchException
from ..logging_config import get_logger

logger = get_logger("models.spaces")


class FunctionFamily:
    """Ordered finite family of polynomials (the sets U and V).

    Order matters: greedy selection and Gram-Schmidt scan members in order.
    Duplicates are accepted and reported through `duplicates`.
    """

    __slots__ = ('nvars', 'members')

    def __init__(self, nvars: int, members: Sequence[Polynomial] = ()):
        self.nvars = nvars
        self.members = list(members)
        for member in self.members:
            if member.nvars != nvars:
                raise DimensionMismatchException(
                    f'Family member {member.to_text()} is not in {nvars} variables'
                )
        if self.duplicates:
            logger.debug(f"Family has repeated members: {[p.to_text() for p in self.duplicates]}")

    @classmethod
    def of_degree(cls, nvars: int, k: int, order: Optional[MonomialOrder] = None) -> 'FunctionFamily':
        """F^n_k: monomials of degree < k, ascending in the order."""
        order = order or MonomialOrder(OrderKind.GREVLEX, nvars)
        return cls(nvars, [Polynomial.monomial(m) for m in f_n_k(nvars, k, order)])

    @classmethod
    def from_texts(cls, nvars: int, texts: Sequence[str]) -> 'FunctionFamily':
        return cls(nvars, [Polynomial.parse(text, nvars) for text in texts])

    @property
    def duplicates(self) -> List[Polynomial]:
        seen, repeated = set(), []
        for member in self.members:
            if member in seen and member not in repeated:
                repeated.append(member)
            seen.add(member)
        return repeated

    def as_set(self) -> frozenset:
        return frozenset(self.members)

    def issubset(self, other: 'FunctionFamily') -> bool:
        return self.as_set() <= other.as_set()

    def intersection(self, other: 'FunctionFamily') -> 'FunctionFamily':
        """Members of self that also lie in other, keeping self's order."""
        keep = other.as_set()
        return FunctionFamily(self.nvars, [p for p in self.members if p in keep])

    def __contains__(self, p: Polynomial) -> bool:
        return p in self.as_set()

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FunctionFamily):
            return NotImplemented
        return self.nvars == other.nvars and self.members == other.members

    def __hash__(self):
        return hash((self.nvars, tuple(self.members)))

    def to_texts(self) -> List[str]:
        return [p.to_text() for p in self.members]

    def __repr__(self) -> str:
        return f'FunctionFamily({self.to_texts()!r})'


class BasisKind:
    WAVELET = 'wavelet'
    COMPLEMENT = 'complement'
    TOP = 'top'
    COMPONENT = 'component'
    ALPERT = 'alpert'


@dataclass
class OrthoBasis(BaseModel):
    """Orthonormal basis carried by exact, orthogonal, pre-normalized functions.

    gram_certificate is the exact Gram matrix of the pre-normalized
    functions; it is diagonal with positive entries.
    """
    cube: DyadicCube = field(default_factory=DyadicCube)
    kind: str = BasisKind.ALPERT
    exact: List[PiecewisePoly] = field(default_factory=list)
    gram_certificate: List[List[Fraction]] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.exact)

    @property
    def norms_squared(self) -> List[Fraction]:
        return [self.gram_certificate[i][i] for i in range(self.dimension)]

    @property
    def norms(self) -> List[float]:
        return [math.sqrt(value) for value in self.norms_squared]

    @property
    def functions(self) -> List[PiecewisePoly]:
        """Normalized floating representatives."""
        return [f.scale(1.0 / norm) for f, norm in zip(self.exact, self.norms)]

    def is_orthogonal(self) -> bool:
        return all(
            self.gram_certificate[i][j] == 0
            for i in range(self.dimension) for j in range(self.dimension) if i != j
        )

    def to_records(self) -> List[Dict]:
        return [
            {
                'cube': self.cube.to_dict(),
                'kind': self.kind,
                'pieces': normalized.to_records(),
                'norm': norm,
                'exact_pre_normalized': exact.to_records(),
            }
            for exact, normalized, norm in zip(self.exact, self.functions, self.norms)
        ]

    def to_dict(self):
        return {'cube': self.cube.to_dict(), 'kind': self.kind, 'functions': self.to_records()}


@dataclass
class DimensionReport(BaseModel):
    """Exact dimensions around one Alpert space.

    ambient: sum over children of dim P_{Q',U}
    lower_bound, upper_bound: the dimension sandwich
    actual: dim L^2_{Q,U,V}
    freebies: conditions of V that left the dimension unchanged, in order
    drops: per condition of V, 0 (freebie) or 1
    """
    cube: DyadicCube = field(default_factory=DyadicCube)
    ambient: int = 0
    lower_bound: int = 0
    upper_bound: int = 0
    actual: int = 0
    freebies: int = 0
    drops: List[int] = field(default_factory=list)
    component_v: int = 0
    v_subset_u: bool = False
