"""
Sign decompositions A = Π₊(A)·A + Π₋(A)·A as filters on spectral data.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from .domain import SpectralDatum, SpectralOperator
from .enumeration import check_invertible


@dataclass(frozen=True)
class SpectralFilter:
    """Spectral projection selecting the data whose sign lies in `signs`."""

    signs: FrozenSet[int]

    def passes(self, datum: SpectralDatum) -> bool:
        return datum.sign in self.signs

    def apply(self, data: Iterable[SpectralDatum]) -> List[SpectralDatum]:
        return [datum for datum in data if self.passes(datum)]

    def compose(self, other: 'SpectralFilter') -> 'SpectralFilter':
        return SpectralFilter(self.signs & other.signs)

    def plus(self, other: 'SpectralFilter') -> 'SpectralFilter':
        """Sum of two filters with disjoint ranges."""
        if self.signs & other.signs:
            raise ValueError("Filters overlap; their sum is not a projection")
        return SpectralFilter(self.signs | other.signs)


POSITIVE = SpectralFilter(frozenset({1}))
NEGATIVE = SpectralFilter(frozenset({-1}))


def sign_decomposition(operator: SpectralOperator) -> Tuple[SpectralFilter, SpectralFilter]:
    """
    Spectral projections (Π₊, Π₋) onto positive and negative spectrum.

    Raises:
        KernelError: If zero lies in the spectrum
    """
    check_invertible(operator)
    return POSITIVE, NEGATIVE
