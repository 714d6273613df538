"""Exception types shared across homport."""


class NonUnitaryError(ValueError):
    """A transition matrix (or 2x2 block) failed the unitarity check."""

    def __init__(self, deviation, tol):
        self.deviation = float(deviation)
        self.tol = float(tol)
        super().__init__(
            f"matrix is not unitary: max|M^H M - I| = {self.deviation:.3e} > {self.tol:.1e}"
        )


class CapExceededError(ValueError):
    """A dimension exceeds a configured cost cap."""

    def __init__(self, what, dim, cap):
        self.dim = dim
        self.cap = cap
        super().__init__(f"{what}: dimension {dim} exceeds cap {cap}")
