"""Exception types raised by table validation and constructions.

Every error names a concrete witness (an element or a triple of elements)
so a failing check can be replayed by hand against the offending table.
"""

from __future__ import annotations


class BraceForgeError(Exception):
    """Base class for all validation and construction failures."""

    # set to "add" / "circle" when a group error is re-raised during
    # brace validation, so callers can tell which table was at fault
    side: str | None = None


class CapExceeded(BraceForgeError):
    """A size cap was exceeded (search, enumeration, or construction)."""


# ---------------------------------------------------------------- groups


class NotClosed(BraceForgeError):
    """Table is not a square matrix over 0..n-1."""


class NoIdentity(BraceForgeError):
    """No two-sided identity element exists."""


class NoInverse(BraceForgeError):
    def __init__(self, x: int, msg: str | None = None):
        self.x = int(x)
        super().__init__(msg or f"element {x} has no right inverse")


class NotAssociative(BraceForgeError):
    def __init__(self, a: int, b: int, c: int, msg: str | None = None):
        self.witness = (int(a), int(b), int(c))
        super().__init__(msg or f"(a b) c != a (b c) at (a, b, c) = {self.witness}")


class NotASubgroup(BraceForgeError):
    """Subset is not a subgroup (empty, missing identity, or not closed)."""


class NotNormal(BraceForgeError):
    def __init__(self, g: int, s: int, out: int):
        self.witness = (int(g), int(s), int(out))
        super().__init__(f"conjugate of {s} by {g} is {out}, outside the subgroup")


# ---------------------------------------------------------------- braces


class IdentityMismatch(BraceForgeError):
    """The two tables of a brace must both have their identity at index 0."""


class CompatibilityFailed(BraceForgeError):
    def __init__(self, a: int, b: int, c: int):
        self.witness = (int(a), int(b), int(c))
        super().__init__(
            "a o (b + c) != (a o b) - a + (a o c) at (a, b, c) = "
            f"{self.witness}"
        )


class NotAnIdeal(BraceForgeError):
    """Quotient was requested by a subset that is not an ideal."""


class ValidationFailed(BraceForgeError):
    """A constructed object failed its own re-validation (internal bug guard)."""


# ---------------------------------------------------------- constructions


class NotABraceAutomorphism(BraceForgeError):
    def __init__(self, b: int, msg: str | None = None):
        self.b = int(b)
        super().__init__(msg or f"action of element {b} is not a brace automorphism")


class NotAHomomorphism(BraceForgeError):
    def __init__(self, b1: int, b2: int):
        self.witness = (int(b1), int(b2))
        super().__init__(f"action(b1 o b2) != action(b1) action(b2) at {self.witness}")


class BadPrime(BraceForgeError):
    """Wreath construction needs an odd prime not dividing the acting order."""


class NotACocycle(BraceForgeError):
    def __init__(self, g: int, h: int):
        self.witness = (int(g), int(h))
        super().__init__(f"pi(g h) != pi(g) + g.pi(h) at (g, h) = {self.witness}")


class NotBijective(BraceForgeError):
    """The cocycle map pi must be a bijection with pi(identity) = 0."""


class BadAction(BraceForgeError):
    """Action rows must be automorphisms and the action a homomorphism."""


# ------------------------------------------------------------------ ybe


class NotCommuting(BraceForgeError):
    """Permutation solutions need sigma and tau to commute."""


class NotInvariant(BraceForgeError):
    def __init__(self, y: int, z: int, out: int):
        self.witness = (int(y), int(z), int(out))
        super().__init__(
            f"subset is not invariant: map of {y} sends {z} to {out}, outside the subset"
        )
