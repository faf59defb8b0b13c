"""Exact arithmetic over Z_d for prime d: inverses, quadratic residues, Legendre symbol.

All values are canonicalized into the range [0, d) immediately, so downstream
symplectic computations never see negative representatives.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenDimensionError, NotPrimeError, ZeroInverseError


def is_prime(n: int) -> bool:
    """Deterministic trial division; dimensions stay small by design."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(d: int) -> int:
    if not is_prime(d):
        raise NotPrimeError(f"qudit dimension must be prime, got {d}")
    return d


@dataclass(frozen=True)
class PrimeDim:
    """A qudit dimension, verified prime at construction."""

    d: int

    def __post_init__(self) -> None:
        require_prime(self.d)

    def __int__(self) -> int:
        return self.d


def mod_inverse(a: int, d: int) -> int:
    """Multiplicative inverse of a modulo prime d."""
    a %= d
    if a == 0:
        raise ZeroInverseError(f"0 has no inverse mod {d}")
    return pow(a, -1, d)


def legendre(x: int, d: int) -> int:
    """Legendre symbol: 1 for a nonzero square mod d, -1 for a non-square, 0 for 0."""
    if d == 2:
        raise EvenDimensionError("Legendre symbol is used only for odd prime d")
    x %= d
    if x == 0:
        return 0
    r = pow(x, (d - 1) // 2, d)
    return 1 if r == 1 else -1


def smallest_nonresidue(d: int) -> int:
    """Least nu in Z_d* with legendre(nu) = -1."""
    if d == 2:
        raise EvenDimensionError("quadratic non-residues require odd prime d")
    for nu in range(2, d):
        if legendre(nu, d) == -1:
            return nu
    raise NotPrimeError(f"no non-residue found; {d} is not an odd prime")
