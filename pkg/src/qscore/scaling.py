"""Two-point linear rescaling of a value from one interval onto another.

The map sends ``input_min`` to ``scaled_min`` and ``input_max`` to
``scaled_max``. ``input_min`` may be numerically larger than ``input_max``;
this is how rank scales are expressed (the worst rank is the scale minimum).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateScaleError

__all__ = ["ScaleSpec", "linear_scale"]


@dataclass(frozen=True)
class ScaleSpec:
    input_min: float
    input_max: float
    scaled_min: float
    scaled_max: float

    def __post_init__(self):
        if self.input_min == self.input_max:
            raise DegenerateScaleError(
                f"degenerate scale: input_min == input_max == {self.input_min!r}"
            )
        if not self.scaled_min < self.scaled_max:
            raise ValueError(
                f"scaled_min ({self.scaled_min!r}) must be below "
                f"scaled_max ({self.scaled_max!r})"
            )

    @property
    def rate(self) -> float:
        """Output units per input unit."""
        return (self.scaled_max - self.scaled_min) / (self.input_max - self.input_min)

    @property
    def offset(self) -> float:
        """Output at input zero, so that ``output = input * rate + offset``."""
        return self.scaled_min - self.input_min * self.rate


def linear_scale(value, spec: ScaleSpec):
    """Map ``value`` through the line defined by ``spec``.

    Equal to ``value * spec.rate + spec.offset``, but evaluated as an
    interpolation weight between the two scaled endpoints so that both
    endpoints are reproduced exactly in floating point. Works elementwise on
    numpy arrays. Values outside the input interval are extrapolated.

    >>> spec = ScaleSpec(input_min=100, input_max=1, scaled_min=1, scaled_max=10)
    >>> linear_scale(1, spec), linear_scale(100, spec)
    (10.0, 1.0)
    """
    t = (value - spec.input_min) / (spec.input_max - spec.input_min)
    return (1.0 - t) * spec.scaled_min + t * spec.scaled_max
