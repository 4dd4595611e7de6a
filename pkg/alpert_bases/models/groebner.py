from dataclasses import dataclass, field
from typing import List

from .base import BaseModel
from .polynomial import Monomial, MonomialOrder, Polynomial


@dataclass
class GroebnerBasis(BaseModel):
    """Groebner basis of an ideal in nvars variables under a fixed order.

    Reduced bases keep their generators sorted by ascending leading monomial,
    which makes equal ideals compare equal. An empty generator list is the
    zero ideal; [1] is the unit ideal.
    """
    nvars: int = 1
    order: MonomialOrder = field(default_factory=MonomialOrder)
    generators: List[Polynomial] = field(default_factory=list)
    reduced: bool = True

    @property
    def leading_monomials(self) -> List[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    @property
    def is_zero_ideal(self) -> bool:
        return not self.generators

    @property
    def is_unit_ideal(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def normal_form(self, p: Polynomial) -> Polynomial:
        from ..helpers.groebner import reduce
        return reduce(p, self.generators, self.order)

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def is_groebner(self) -> bool:
        from ..helpers.groebner import is_groebner
        return is_groebner(self.generators, self.order)

    def is_reduced(self) -> bool:
        from ..helpers.groebner import is_reduced
        return is_reduced(self.generators, self.order)

    def to_dict(self):
        return {
            'nvars': self.nvars,
            'order': self.order.kind,
            'generators': [g.to_text(self.order) for g in self.generators],
        }
