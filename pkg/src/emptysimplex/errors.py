"""Exception hierarchy shared by all modules."""


class EmptySimplexError(Exception):
    """Base class for all library errors."""


class NotInvertible(EmptySimplexError):
    """Modular inverse requested for an element not coprime to the modulus."""


class BadLength(EmptySimplexError):
    """Generator vector has the wrong number of entries."""


class SumNotZero(EmptySimplexError):
    """Generator entries do not sum to 0 modulo the volume."""


class GcdNotOne(EmptySimplexError):
    """gcd(volume, generator entries) is not 1."""


class BadParameters(EmptySimplexError):
    """Parameters outside the valid range of a constructor."""


class BoundExceeded(EmptySimplexError):
    """Volume too large for an exhaustive lattice-point listing."""


class MemoryBudgetExceeded(EmptySimplexError):
    """A meet-in-the-middle half-list would not fit the configured cap."""


class BudgetExceeded(EmptySimplexError):
    """An enumeration would exceed its configured operation budget."""


class VerifyBudgetExceeded(EmptySimplexError):
    """Cross-verification requested for a dimension too large to enumerate."""


class WidthAboveCap(EmptySimplexError):
    """No functional of spread <= cap exists."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"lattice width exceeds cap {cap}")


class NoRoots(EmptySimplexError):
    """No (d+1)-th roots of unity exist for the given modulus."""


class NotPrime(EmptySimplexError):
    """A prime modulus was required."""


class CheckpointCorrupt(EmptySimplexError):
    """Checkpoint file does not match the sweep parameters or digest."""


class DegenerateGenerator(EmptySimplexError):
    """Circulant generator whose shifts are affinely dependent."""


class NotCyclic(EmptySimplexError):
    """Conversion to cyclic form requested for a non-cyclic simplex."""


class BadFactor(EmptySimplexError):
    """Skip parameter does not divide d+1 nontrivially."""


class ValidationFailed(EmptySimplexError):
    """A constructed object failed its post-hoc checks."""
