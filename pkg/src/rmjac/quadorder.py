"""Real quadratic orders: discriminant, conductor, mod-2 class, splitting.

An order in Q(sqrt(d)) with conductor c is Z[c*eta], where eta is
(sqrt(d)-1)/2 when d = 1 mod 4 and sqrt(d) otherwise.  Everything here is
plain integer arithmetic on the descriptor (d, c).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import Unsupported


class Mod2TensorClass(enum.Enum):
    FieldF4 = "FieldF4"
    SplitF2xF2 = "SplitF2xF2"
    NonReduced = "NonReduced"


class SplittingType(enum.Enum):
    Split = "Split"
    Inert = "Inert"
    Ramified = "Ramified"


def is_squarefree(n):
    """Trial division; fine at desk scale."""
    if n < 1:
        return False
    q = 2
    while q * q <= n:
        if n % (q * q) == 0:
            return False
        q += 1
    return True


@dataclass(frozen=True)
class QuadraticOrder:
    """Descriptor (d, c): square-free d >= 2 and positive conductor c."""

    d: int
    c: int = 1

    def __post_init__(self):
        if self.d < 2 or not is_squarefree(self.d):
            raise ValueError("d must be a square-free integer >= 2, got %r" % (self.d,))
        if self.c < 1:
            raise ValueError("conductor must be positive, got %r" % (self.c,))

    def discriminant(self):
        if self.d % 4 == 1:
            return self.c * self.c * self.d
        return self.c * self.c * 4 * self.d

    def generator_poly(self):
        """Minimal polynomial of c*eta, as (constant, linear) with monic X^2."""
        if self.d % 4 == 1:
            return (-self.c * self.c * (self.d - 1) // 4, self.c)
        return (-self.c * self.c * self.d, 0)

    def mod2_tensor_class(self):
        """Class of (order tensor Z/2), read off the generator poly mod 2."""
        const, lin = (v % 2 for v in self.generator_poly())
        if lin == 1 and const == 1:
            cls = Mod2TensorClass.FieldF4  # X^2+X+1, irreducible
        elif lin == 1:
            cls = Mod2TensorClass.SplitF2xF2  # X(X+1), two distinct roots
        else:
            cls = Mod2TensorClass.NonReduced  # (X+const)^2, double root
        # the congruence form of the same criterion; both ways must agree
        assert (cls is Mod2TensorClass.FieldF4) == (self.discriminant() % 8 == 5)
        return cls


def legendre(a, p):
    """Legendre symbol (a/p) in {-1, 0, +1}, Euler's criterion."""
    a %= p
    if a == 0:
        return 0
    e = pow(a, (p - 1) // 2, p)
    return 1 if e == 1 else -1


def splitting_type(p, d):
    """Behavior of the rational prime p in Q(sqrt(d)).

    Only d = 5 mod 8 is supported at p = 2 (inert there); other 2-adic cases
    are rejected rather than silently classified.
    """
    if not is_squarefree(d) or d < 2:
        raise ValueError("d must be square-free and >= 2")
    if p == 2:
        if d % 8 == 5:
            return SplittingType.Inert
        raise Unsupported("p = 2 is only classified when d = 5 mod 8")
    if d % p == 0:
        return SplittingType.Ramified
    return SplittingType.Split if legendre(d, p) == 1 else SplittingType.Inert
