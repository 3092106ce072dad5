"""Mode combinatorics and boundary-condition bookkeeping.

For the electromagnetic field in D space dimensions the angular eigenmodes at
fixed angular number l >= 1 split into one TM multiplet family of size

    b_l(D) = (2l + D - 2) (l + D - 3)! / ((D - 2)! l!)

and (D-2) TE families totalling

    h_l(D) = l (l + D - 2) (2l + D - 2) (l + D - 4)! / ((D - 3)! (l + 1)!).

Both are polynomials of degree D-2 in nu = l + (D-2)/2; the exact rational
coefficients of that expansion drive the small-gap asymptotics.  Boundary
conditions enter through the Robin pair (alpha, beta) per sphere and mode
type.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "BoundaryCondition",
    "BoundaryPair",
    "Channel",
    "DegeneracyPolynomial",
    "bc_coefficients",
    "degeneracy",
    "degeneracy_polynomial",
    "nu",
]


class BoundaryCondition(Enum):
    PERFECTLY_CONDUCTING = "pc"
    INFINITELY_PERMEABLE = "ip"

    @classmethod
    def from_string(cls, s: str) -> "BoundaryCondition":
        try:
            return cls(s.strip().lower())
        except ValueError:
            raise ValueError(f"unknown boundary condition {s!r}; use 'pc' or 'ip'") from None


class Channel(Enum):
    TE = "TE"
    TM = "TM"


@dataclass(frozen=True)
class BoundaryPair:
    """Boundary conditions on the inner and outer sphere."""

    inner: BoundaryCondition
    outer: BoundaryCondition

    @property
    def is_homogeneous(self) -> bool:
        return self.inner == self.outer

    @property
    def is_mixed(self) -> bool:
        return self.inner != self.outer

    def swapped(self) -> "BoundaryPair":
        return BoundaryPair(self.outer, self.inner)

    @classmethod
    def from_string(cls, s: str) -> "BoundaryPair":
        parts = [p for p in s.replace(";", ",").split(",") if p.strip()]
        if len(parts) != 2:
            raise ValueError(f"boundary pair must be 'inner,outer', got {s!r}")
        return cls(BoundaryCondition.from_string(parts[0]),
                   BoundaryCondition.from_string(parts[1]))

    def __str__(self):
        return f"{self.inner.value},{self.outer.value}"


def _check_dim(dim: int) -> None:
    if not isinstance(dim, int) or dim < 3:
        raise ValueError(f"space dimension must be an integer >= 3, got {dim!r}")


def _check_l(l: int) -> None:
    if not isinstance(l, int) or l < 1:
        raise ValueError(f"angular number must be an integer >= 1, got {l!r}")


def nu(l: int, dim: int) -> float:
    """Bessel order nu = l + (D-2)/2."""
    _check_l(l)
    _check_dim(dim)
    return l + (dim - 2) / 2.0


def nu_exact(l: int, dim: int) -> Fraction:
    _check_l(l)
    _check_dim(dim)
    return Fraction(2 * l + dim - 2, 2)


def bc_coefficients(channel: Channel, bc: BoundaryCondition, dim: int
                    ) -> tuple[Fraction, Fraction]:
    """Robin pair (alpha, beta) for a sphere with the given condition.

    TE keeps the field's tangential structure; TM carries the radial weight
    r^{(D-2)/2}, and the permeable condition differentiates the TE weight
    r^{(4-D)/2} instead.
    """
    _check_dim(dim)
    pc = bc is BoundaryCondition.PERFECTLY_CONDUCTING
    if channel is Channel.TE:
        return (Fraction(1), Fraction(0)) if pc else (Fraction(4 - dim, 2), Fraction(1))
    if channel is Channel.TM:
        return (Fraction(dim - 2, 2), Fraction(1)) if pc else (Fraction(1), Fraction(0))
    raise ValueError(f"unknown channel {channel!r}")


def degeneracy(channel: Channel, l: int, dim: int) -> int:
    """Number of modes at angular number l (exact integer)."""
    _check_l(l)
    _check_dim(dim)
    if channel is Channel.TM:
        val = Fraction((2 * l + dim - 2) * math.factorial(l + dim - 3),
                       math.factorial(dim - 2) * math.factorial(l))
    elif channel is Channel.TE:
        val = Fraction(l * (l + dim - 2) * (2 * l + dim - 2) * math.factorial(l + dim - 4),
                       math.factorial(dim - 3) * math.factorial(l + 1))
    else:
        raise ValueError(f"unknown channel {channel!r}")
    if val.denominator != 1 or val <= 0:
        raise ArithmeticError(f"degeneracy came out non-integer: {val}")
    return int(val)


@dataclass(frozen=True)
class DegeneracyPolynomial:
    """Exact expansion of the degeneracy in powers of nu = l + (D-2)/2."""

    dim: int
    channel: Channel
    coefficients: tuple[Fraction, ...]  # index j multiplies nu**j

    def coefficient(self, j: int) -> Fraction:
        if 0 <= j < len(self.coefficients):
            return self.coefficients[j]
        return Fraction(0)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def evaluate_exact(self, l: int) -> Fraction:
        x = nu_exact(l, self.dim)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __call__(self, nu_value):
        """Float Horner evaluation; accepts scalars or numpy arrays."""
        acc = nu_value * 0.0
        for c in reversed(self.coefficients):
            acc = acc * nu_value + float(c)
        return acc


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return out


def _poly_in_l(channel: Channel, dim: int) -> list[Fraction]:
    """The degeneracy as an exact polynomial in l (factorials cancelled)."""
    if channel is Channel.TM:
        p = [Fraction(dim - 2), Fraction(2)]  # 2l + D - 2
        for i in range(1, dim - 2):
            p = _poly_mul(p, [Fraction(i), Fraction(1)])
        return [c / math.factorial(dim - 2) for c in p]
    if dim == 3:
        return [Fraction(1), Fraction(2)]  # 2l + 1
    if dim == 4:
        return [Fraction(0), Fraction(4), Fraction(2)]  # 2l(l+2)
    p = _poly_mul([Fraction(0), Fraction(1)], [Fraction(dim - 2), Fraction(1)])
    p = _poly_mul(p, [Fraction(dim - 2), Fraction(2)])
    for i in range(2, dim - 3):
        p = _poly_mul(p, [Fraction(i), Fraction(1)])
    return [c / math.factorial(dim - 3) for c in p]


@lru_cache(maxsize=None)
def degeneracy_polynomial(channel: Channel, dim: int) -> DegeneracyPolynomial:
    """Exact coefficients of the degeneracy in powers of nu."""
    _check_dim(dim)
    poly_l = _poly_in_l(channel, dim)
    # Substitute l = nu - (D-2)/2 by binomial expansion, exactly.
    shift = -Fraction(dim - 2, 2)
    out = [Fraction(0)] * len(poly_l)
    for n, c in enumerate(poly_l):
        if not c:
            continue
        for j in range(n + 1):
            out[j] += c * math.comb(n, j) * shift ** (n - j)
    return DegeneracyPolynomial(dim=dim, channel=channel, coefficients=tuple(out))
