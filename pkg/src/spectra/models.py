"""
Construction of model operators from kinds and parameters.
"""

import logging
import math
from typing import Any, Dict, Mapping, Union

from symbolcore.domain import BiOrder

from .domain import (
    CIRCLE_KINDS, CirclePowerData, ModelDescriptor, ModelError, ModelKind,
    NonInvertibleModelError, SpectralOperator,
)

logger = logging.getLogger(__name__)

OperatorSpec = Union[SpectralOperator, ModelDescriptor, Mapping[str, Any]]


def _real(params: Mapping[str, Any], name: str, default: Any = None) -> float:
    value = params.get(name, default)
    if value is None:
        raise ModelError(f"Missing parameter '{name}'")
    try:
        value = float(value)
    except (TypeError, ValueError) as e:
        raise ModelError(f"Parameter '{name}' must be real, got {value!r}") from e
    if not math.isfinite(value):
        raise ModelError(f"Parameter '{name}' must be finite, got {value}")
    return value


def _positive_int(params: Mapping[str, Any], name: str) -> int:
    value = params.get(name)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ModelError(f"Parameter '{name}' must be a positive integer, got {value!r}")
    return value


def _is_integer(x: float) -> bool:
    return abs(x - round(x)) < 1e-12


def _scale(params: Mapping[str, Any]) -> float:
    scale = _real(params, "scale", 1.0)
    if scale == 0:
        raise ModelError("Parameter 'scale' must be non-zero")
    return scale


def _circle_model(kind: ModelKind, params: Dict[str, Any], scale: float) -> SpectralOperator:
    if kind == ModelKind.CIRCLE_DIRAC:
        shift, power, parity = _real(params, "a"), 1.0, 1
        if _is_integer(shift):
            raise NonInvertibleModelError(f"circle_dirac({shift}) has eigenvalue 0; the shift must not be an integer")
    elif kind == ModelKind.ABS_CIRCLE_DIRAC:
        shift, power, parity = _real(params, "a"), 1.0, 0
    elif kind == ModelKind.TORUS_LAPLACIAN_SHIFT:
        shift, power, parity = _real(params, "c"), 2.0, 0
    else:
        shift, power = _real(params, "a"), _real(params, "p")
        parity = params.get("parity", 0)
        if parity not in (0, 1):
            raise ModelError(f"Parameter 'parity' must be 0 or 1, got {parity!r}")
        if _is_integer(shift) and (power < 0 or (power == 0 and parity == 1)):
            raise NonInvertibleModelError(f"circle_power({shift}, {power}, {parity}) is undefined on the zero mode")
    return SpectralOperator(
        kind=kind, params=params, order=BiOrder(power, 0.0), closed_form="hurwitz",
        elliptic=power != 0, circle=CirclePowerData(shift=shift, power=power, parity=parity, scale=scale),
        scale=scale,
    )


def make_model(kind: Union[str, ModelKind], params: Mapping[str, Any] = None) -> SpectralOperator:
    """
    Build a model operator.

    Args:
        kind: Model kind name or ModelKind
        params: Kind-specific parameters; every kind accepts a non-zero real 'scale'

    Returns:
        Immutable SpectralOperator descriptor

    Raises:
        ModelError: If the kind is unknown or the parameters are invalid
        NonInvertibleModelError: For circle_dirac with an integer shift
    """
    try:
        kind = ModelKind(kind)
    except ValueError as e:
        raise ModelError(f"Unknown model kind: {kind!r}") from e
    params = dict(params or {})
    scale = _scale(params)

    if kind in CIRCLE_KINDS:
        operator = _circle_model(kind, params, scale)

    elif kind == ModelKind.HARMONIC_OSCILLATOR:
        _positive_int(params, "n")
        operator = SpectralOperator(kind=kind, params=params, order=BiOrder(2.0, 0.0),
                                    closed_form="hurwitz", scale=scale)

    elif kind == ModelKind.TENSOR:
        if "first" not in params or "second" not in params:
            raise ModelError("Tensor models need parameters 'first' and 'second'")
        first, second = as_operator(params["first"]), as_operator(params["second"])
        for factor in (first, second):
            if factor.is_tensor:
                raise ModelError("Tensor factors must act on a single factor")
        if first.is_finite and second.is_finite:
            closed_form = "finite"
        elif first.is_finite or second.is_finite:
            closed_form = None
        else:
            closed_form = "hurwitz"
        stored = {key: value for key, value in params.items() if key not in ("first", "second")}
        operator = SpectralOperator(
            kind=kind, params=stored, order=BiOrder(first.order.m1, second.order.m1),
            closed_form=closed_form, elliptic=first.elliptic and second.elliptic,
            factors=(first, second), scale=scale,
        )

    elif kind == ModelKind.FINITE_RANK_PROJECTION:
        _positive_int(params, "rank")
        if "host" in params and params["host"] is not None:
            as_operator(params["host"])
        operator = SpectralOperator(kind=kind, params=params, order=BiOrder(0.0, 0.0),
                                    closed_form="finite", elliptic=False, scale=scale)

    else:
        values = params.get("values")
        if not values:
            raise ModelError("Explicit models need a non-empty list 'values'")
        multiplicities = params.get("multiplicities") or [1] * len(values)
        if len(multiplicities) != len(values) or any(int(m) < 1 for m in multiplicities):
            raise ModelError("Multiplicities must be positive and match the values")
        order = params.get("order", [0.0, 0.0])
        operator = SpectralOperator(kind=kind, params=params, order=BiOrder(float(order[0]), float(order[1])),
                                    closed_form="finite", elliptic=False, scale=scale)

    logger.debug(f"Built model {operator.label()}")
    return operator


def as_operator(spec: OperatorSpec) -> SpectralOperator:
    """Accept an operator, a descriptor, or a descriptor dictionary."""
    if isinstance(spec, SpectralOperator):
        return spec
    if isinstance(spec, ModelDescriptor):
        return make_model(spec.kind, spec.params)
    if isinstance(spec, Mapping):
        try:
            descriptor = ModelDescriptor.model_validate(dict(spec))
        except Exception as e:
            raise ModelError(f"Invalid model descriptor: {e}") from e
        return make_model(descriptor.kind, descriptor.params)
    raise ModelError(f"Cannot build a model from {type(spec).__name__}")


def tensor(first: OperatorSpec, second: OperatorSpec, scale: float = 1.0) -> SpectralOperator:
    return make_model(ModelKind.TENSOR, {"first": as_operator(first), "second": as_operator(second),
                                         "scale": scale})


def negate(operator: SpectralOperator) -> SpectralOperator:
    """The model −A."""
    params = dict(operator.params)
    params["scale"] = -operator.scale
    if operator.is_tensor:
        params["first"], params["second"] = operator.factors
    return make_model(operator.kind, params)


def effective_dimension(operator: SpectralOperator) -> int:
    """Dimension entering pole bookkeeping: 1 per circle, 2n for the n-dimensional oscillator."""
    if operator.kind == ModelKind.HARMONIC_OSCILLATOR:
        return 2 * operator.params["n"]
    return 1
