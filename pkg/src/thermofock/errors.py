"""Shared exception types for numerical self-checks."""


class NumericalGuardError(ValueError):
    """A numerical self-check failed (tail mass, quadrature error estimate,
    stability bound, zero-frequency division guard).

    Raised instead of silently returning a value whose accuracy cannot be
    vouched for.  The message states the failed guard and the offending
    magnitude so the caller can widen grids / truncations and retry.
    """
