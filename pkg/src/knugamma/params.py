"""The deformation parameter pair (k, nu) and its derived composites."""

from dataclasses import dataclass, field

from .errors import NonPositiveArgument


@dataclass(frozen=True)
class Params:
    """Deformation pair.  ``c = k*nu`` is the step of every recurrence
    and series in the family; ``r = k/nu`` is the base of the rescaling
    prefactors.  Both are stored at construction so all call sites use
    the exact same doubles.
    """

    k: float
    nu: float
    c: float = field(init=False)
    r: float = field(init=False)

    def __post_init__(self):
        if not (self.k > 0.0):
            raise NonPositiveArgument(f"k must be > 0, got {self.k}")
        if not (self.nu > 0.0):
            raise NonPositiveArgument(f"nu must be > 0, got {self.nu}")
        object.__setattr__(self, "c", self.k * self.nu)
        object.__setattr__(self, "r", self.k / self.nu)
