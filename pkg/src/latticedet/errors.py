"""Shared exception types."""


class DomainError(ValueError):
    """An argument lies outside the numeric domain an operation supports."""


class DegenerateBoundaryError(ValueError):
    """Robin parameters with 1 + alpha = 0 or 1 + beta = 0 make the endpoint
    elimination singular; such conditions are rejected, not regularized."""


class IllPosedRatioError(ValueError):
    """The free characteristic vanishes at lambda = 0, so the determinant
    ratio has a zero denominator."""


class NoZeroModeError(ValueError):
    """lambda = 0 is not an eigenvalue within the detection tolerance."""

    def __init__(self, characteristic_at_zero: float):
        self.characteristic_at_zero = characteristic_at_zero
        super().__init__(
            "no zero mode: characteristic(0) = %r is not zero within tolerance"
            % characteristic_at_zero
        )
