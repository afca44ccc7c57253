"""Compensated floating-point accumulation (Neumaier's variant of Kahan summation)."""


class CompensatedSum:
    """Running sum that carries a correction term for lost low-order bits.

    Neumaier's branch also handles the case where the incoming value is
    larger than the running total, which plain Kahan summation gets wrong.
    """

    __slots__ = ("_total", "_correction")

    def __init__(self) -> None:
        self._total = 0.0
        self._correction = 0.0

    def add(self, value: float) -> None:
        t = self._total + value
        if abs(self._total) >= abs(value):
            self._correction += (self._total - t) + value
        else:
            self._correction += (value - t) + self._total
        self._total = t

    @property
    def value(self) -> float:
        return self._total + self._correction
