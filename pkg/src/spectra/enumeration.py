"""
Spectrum enumeration in nondecreasing |value| order.

Every enumeration is a fresh generator, so listing a prefix twice yields
identical output. Equal |value| ties are broken by value ascending; equal
values are merged into one datum with summed multiplicity.
"""

import heapq
import itertools
import logging
import math
from typing import Iterator, List, Optional, Tuple

from .domain import (
    CirclePowerData, EnumerationError, KernelError, ModelKind, SpectralDatum, SpectralOperator,
)

logger = logging.getLogger(__name__)

# relative tolerance for merging equal eigenvalues
MERGE_TOLERANCE = 1e-12

# (|value|, value, multiplicity)
Entry = Tuple[float, float, int]


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def circle_value(data: CirclePowerData, t: float) -> float:
    """scale·sign(t)^parity·|t|^power with 0^0 = 1."""
    magnitude = 1.0 if data.power == 0 else abs(t) ** data.power
    if data.parity:
        magnitude *= _sign(t)
    return data.scale * magnitude


def _circle_entries(data: CirclePowerData) -> Iterator[Entry]:
    if data.power <= 0:
        raise EnumerationError(
            f"Spectrum of |D + a|^{data.power} accumulates at zero or is infinitely degenerate; "
            f"it has no |value|-ordered enumeration")
    alpha = data.shift - math.floor(data.shift)

    def side(start: float, step: float) -> Iterator[Entry]:
        for n in itertools.count():
            value = circle_value(data, start + step * n)
            yield abs(value), value, 1

    return heapq.merge(side(alpha, 1.0), side(alpha - 1.0, -1.0))


def _oscillator_entries(operator: SpectralOperator) -> Iterator[Entry]:
    n = operator.params["n"]
    for k in itertools.count():
        value = operator.scale * (2 * k + n)
        yield abs(value), value, math.comb(k + n - 1, n - 1)


def _finite_entries(operator: SpectralOperator) -> Iterator[Entry]:
    if operator.kind == ModelKind.FINITE_RANK_PROJECTION:
        pairs = [(1.0, operator.params["rank"])]
    else:
        values = operator.params["values"]
        multiplicities = operator.params.get("multiplicities") or [1] * len(values)
        pairs = list(zip((float(v) for v in values), (int(m) for m in multiplicities)))
    entries = [(abs(operator.scale * v), operator.scale * v, m) for v, m in pairs]
    return iter(sorted(entries))


class _LazyData:
    """Cached prefix of a factor enumeration."""

    def __init__(self, operator: SpectralOperator):
        self._iterator = enumerate_spectrum(operator)
        self._items: List[SpectralDatum] = []

    def get(self, index: int) -> Optional[SpectralDatum]:
        while len(self._items) <= index:
            item = next(self._iterator, None)
            if item is None:
                return None
            self._items.append(item)
        return self._items[index]


def _tensor_entries(operator: SpectralOperator) -> Iterator[Entry]:
    first, second = (_LazyData(f) for f in operator.factors)
    start1, start2 = first.get(0), second.get(0)
    if start1 is None or start2 is None:
        return
    heap = []

    def push(i: int, j: int) -> None:
        d1, d2 = first.get(i), second.get(j)
        if d1 is None or d2 is None:
            return
        value = operator.scale * d1.value * d2.value
        heapq.heappush(heap, (abs(value), value, i, j, d1.multiplicity * d2.multiplicity))

    push(0, 0)
    while heap:
        magnitude, value, i, j, multiplicity = heapq.heappop(heap)
        yield magnitude, value, multiplicity
        push(i, j + 1)
        if j == 0:
            push(i + 1, 0)


def _entries(operator: SpectralOperator) -> Iterator[Entry]:
    if operator.is_circle:
        return _circle_entries(operator.circle)
    if operator.kind == ModelKind.HARMONIC_OSCILLATOR:
        return _oscillator_entries(operator)
    if operator.is_tensor:
        return _tensor_entries(operator)
    return _finite_entries(operator)


def _close(x: float, y: float) -> bool:
    return abs(x - y) <= MERGE_TOLERANCE * max(abs(x), abs(y), 1e-300)


def _merge_window(window: List[Entry]) -> Iterator[SpectralDatum]:
    """Data of one equal-|value| window, equal values merged, in ascending value order."""
    current: Optional[List] = None
    for _, value, multiplicity in sorted(window, key=lambda entry: entry[1]):
        if current is not None and _close(current[0], value):
            current[1] += multiplicity
            continue
        if current is not None:
            yield SpectralDatum(value=current[0], multiplicity=current[1], sign=_sign(current[0]))
        current = [value, multiplicity]
    if current is not None:
        yield SpectralDatum(value=current[0], multiplicity=current[1], sign=_sign(current[0]))


def enumerate_spectrum(operator: SpectralOperator) -> Iterator[SpectralDatum]:
    """
    Fresh generator of spectral data in |value| order.

    Entries whose |value| agree within MERGE_TOLERANCE form one window, so
    values reached through different index pairs are merged even when
    rounding puts another entry between them.

    Raises:
        EnumerationError: For spectra without a |value|-ordered listing
    """
    entries = _entries(operator)

    def grouped() -> Iterator[SpectralDatum]:
        window: List[Entry] = []
        for entry in entries:
            if window and not _close(window[0][0], entry[0]):
                yield from _merge_window(window)
                window = []
            window.append(entry)
        if window:
            yield from _merge_window(window)

    return grouped()


def eigenvalues(operator: SpectralOperator, count: int) -> List[SpectralDatum]:
    """
    First `count` spectral data in |value| order.

    Raises:
        ValueError: If count < 1
    """
    if count < 1:
        raise ValueError(f"Count must be at least 1, got {count}")
    return list(itertools.islice(enumerate_spectrum(operator), count))


def counting_function(operator: SpectralOperator, T: float) -> int:
    """#{λ : |λ| ≤ T} counted with multiplicity."""
    total = 0
    for datum in enumerate_spectrum(operator):
        if abs(datum.value) > T * (1 + MERGE_TOLERANCE):
            break
        total += datum.multiplicity
    return total


def has_kernel(operator: SpectralOperator) -> bool:
    """Whether zero lies in the spectrum."""
    if operator.is_circle:
        data = operator.circle
        return data.power > 0 and abs(data.shift - round(data.shift)) < 1e-12
    if operator.kind == ModelKind.HARMONIC_OSCILLATOR:
        return False
    if operator.is_tensor:
        return any(has_kernel(factor) for factor in operator.factors)
    if operator.kind == ModelKind.FINITE_RANK_PROJECTION:
        return True
    return any(float(v) == 0 for v in operator.params["values"])


def check_invertible(operator: SpectralOperator) -> None:
    """
    Raises:
        KernelError: If zero lies in the spectrum
    """
    if has_kernel(operator):
        raise KernelError(f"{operator.label()} has a kernel")
