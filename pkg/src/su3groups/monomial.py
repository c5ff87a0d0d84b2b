"""Exact arithmetic for monomial 3x3 matrices with root-of-unity entries.

An element is stored as a permutation of the three coordinates plus an
integer phase exponent per row: row i has its single nonzero entry
zeta_L^exps[i] in column perm[i], where zeta_L = exp(2*pi*i/L).  All
arithmetic stays in the integers, so group computations built on top are
exact.  Elements are canonicalized to the smallest modulus representing
their exponents, which makes equality and hashing structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm
from typing import Iterable

import numpy as np

MAX_MODULUS = 2**31 - 1

IDENTITY_PERM = (0, 1, 2)
_ALL_PERMS = (
    (0, 1, 2), (1, 2, 0), (2, 0, 1),  # even
    (0, 2, 1), (2, 1, 0), (1, 0, 2),  # odd
)
_EVEN_PERMS = frozenset(_ALL_PERMS[:3])


def perm_is_even(perm: tuple[int, int, int]) -> bool:
    return perm in _EVEN_PERMS


def perm_compose(first: tuple[int, int, int], second: tuple[int, int, int]) -> tuple[int, int, int]:
    """Row-to-column composition: apply `first`, then `second`."""
    return (second[first[0]], second[first[1]], second[first[2]])


def perm_inverse(perm: tuple[int, int, int]) -> tuple[int, int, int]:
    inv = [0, 0, 0]
    for i in range(3):
        inv[perm[i]] = i
    return (inv[0], inv[1], inv[2])


@dataclass(frozen=True)
class MonomialElement:
    """A monomial unitary matrix: entry zeta^exps[i] at (i, perm[i]).

    Construct through :func:`monomial` or the generator factories below;
    the raw constructor does not canonicalize.
    """

    perm: tuple[int, int, int]
    exps: tuple[int, int, int]
    modulus: int

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        if not isinstance(other, MonomialElement):
            return NotImplemented
        la, lb = self.modulus, other.modulus
        level = lcm(la, lb)
        fa, fb = level // la, level // lb
        p, ea, eb = self.perm, self.exps, other.exps
        return _reduced(
            perm_compose(p, other.perm),
            (
                ea[0] * fa + eb[p[0]] * fb,
                ea[1] * fa + eb[p[1]] * fb,
                ea[2] * fa + eb[p[2]] * fb,
            ),
            level,
        )

    def __pow__(self, k: int) -> "MonomialElement":
        if k < 0:
            return self.inverse() ** (-k)
        result = IDENTITY
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "MonomialElement":
        inv = perm_inverse(self.perm)
        level = self.modulus
        return _reduced(inv, tuple(-self.exps[inv[j]] for j in range(3)), level)

    def conjugated_by(self, t: "MonomialElement") -> "MonomialElement":
        """t^-1 * self * t."""
        return t.inverse() * self * t

    def is_diagonal(self) -> bool:
        return self.perm == IDENTITY_PERM

    def is_identity(self) -> bool:
        return self.perm == IDENTITY_PERM and self.exps == (0, 0, 0)

    def has_unit_determinant(self) -> bool:
        """det = sign(perm) * zeta^(sum exps); true iff that equals 1."""
        total = sum(self.exps) % self.modulus
        if perm_is_even(self.perm):
            return total == 0
        return self.modulus % 2 == 0 and total == self.modulus // 2

    def order(self) -> int:
        """Smallest k >= 1 with self**k equal to the identity."""
        level = self.modulus
        if self.is_diagonal():
            return lcm(*(level // gcd(e, level) for e in self.exps))
        acc = self * self
        k = 2
        bound = 3 * level + 3
        while not acc.is_identity():
            acc = acc * self
            k += 1
            if k > bound:
                raise RuntimeError(f"order iteration exceeded bound {bound}")
        return k

    def to_complex(self) -> np.ndarray:
        """The literal 3x3 complex matrix (bridge to the numeric oracle)."""
        mat = np.zeros((3, 3), dtype=complex)
        for i in range(3):
            mat[i, self.perm[i]] = np.exp(2j * np.pi * self.exps[i] / self.modulus)
        return mat

    def __repr__(self) -> str:
        return f"MonomialElement(perm={self.perm}, exps={self.exps}, modulus={self.modulus})"


def _reduced(perm: tuple[int, int, int], exps: Iterable[int], modulus: int) -> MonomialElement:
    """Reduce mod `modulus`, then divide out the common exponent factor."""
    if modulus > MAX_MODULUS:
        raise ValueError(f"modulus {modulus} exceeds the cap {MAX_MODULUS}")
    e = tuple(x % modulus for x in exps)
    g = gcd(e[0], e[1], e[2], modulus)
    if g > 1:
        return MonomialElement(perm, (e[0] // g, e[1] // g, e[2] // g), modulus // g)
    return MonomialElement(perm, e, modulus)


def monomial(perm: tuple[int, int, int], exps: Iterable[int], modulus: int) -> MonomialElement:
    """Validated, canonicalized element with entry zeta_modulus^exps[i] at (i, perm[i])."""
    perm = tuple(perm)
    if perm not in _ALL_PERMS:
        raise ValueError(f"perm {perm!r} is not a permutation of (0, 1, 2)")
    if not 1 <= modulus <= MAX_MODULUS:
        raise ValueError(f"modulus must be in [1, {MAX_MODULUS}], got {modulus}")
    exps = tuple(exps)
    if len(exps) != 3:
        raise ValueError("exactly three exponents required")
    return _reduced(perm, exps, modulus)


IDENTITY = MonomialElement(IDENTITY_PERM, (0, 0, 0), 1)


def cycle_generator() -> MonomialElement:
    """The cyclic permutation matrix E = [[0,1,0],[0,0,1],[1,0,0]]."""
    return MonomialElement((1, 2, 0), (0, 0, 0), 1)


def phase_generator(n: int, a: int, b: int) -> MonomialElement:
    """The diagonal matrix F(n,a,b) = diag(eta^a, eta^b, eta^-a-b), eta = exp(2*pi*i/n)."""
    _check_params(n, (a, b), "n", ("a", "b"))
    return _reduced(IDENTITY_PERM, (a, b, -a - b), n)


def flip_generator(d: int, r: int, s: int) -> MonomialElement:
    """The reflection-type generator with rows (delta^r, . , .), (., ., delta^s),
    (., -delta^-r-s, .), delta = exp(2*pi*i/d).

    The sign of the last entry is folded into the exponent lattice by
    working modulo lcm(2, d), where -1 = zeta^(L/2).
    """
    _check_params(d, (r, s), "d", ("r", "s"))
    level = lcm(2, d)
    c = level // d
    return _reduced((0, 2, 1), (r * c, s * c, level // 2 - (r + s) * c), level)


def scalar_omega(modulus: int = 3) -> MonomialElement:
    """The central scalar diag(w, w, w) with w = exp(2*pi*i/3)."""
    if modulus < 3 or modulus % 3:
        raise ValueError(f"modulus must be a positive multiple of 3, got {modulus}")
    third = modulus // 3
    return _reduced(IDENTITY_PERM, (third, third, third), modulus)


def _check_params(n: int, others: tuple[int, ...], n_name: str, names: tuple[str, ...]) -> None:
    if n < 1:
        raise ValueError(f"{n_name} must be >= 1, got {n}")
    if n > MAX_MODULUS:
        raise ValueError(f"{n_name} must be <= {MAX_MODULUS}, got {n}")
    for name, value in zip(names, others):
        if not 0 <= value < n:
            raise ValueError(f"{name} must satisfy 0 <= {name} < {n_name}, got {value}")
