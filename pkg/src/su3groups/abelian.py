"""Structure of finite abelian diagonal subgroups.

Every finite abelian group of diagonal determinant-one phase matrices is
Z_m x Z_n with m the maximal element order and n | m.  This module
computes that pair with explicit witness generators, and solves the
two-generator congruence system that determines the diagonal part of a
C-group directly from its parameters.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, lcm

from .engine import GroupTable
from .errors import NotClosed, NotDiagonal
from .monomial import IDENTITY, MonomialElement


@dataclass(frozen=True)
class AbelianStructure:
    """Z_m x Z_n shape of a diagonal group, with witness generators."""

    m: int
    n: int
    gen_m: MonomialElement
    gen_n: MonomialElement


@dataclass(frozen=True)
class TwoGenDecomposition:
    """Solution (m, p, t) of the two-generator congruence system.

    m is the common order of the two canonical diagonal generators X and Y,
    p the smallest index with Y^p a power of X, and t the smallest witness
    with Y^p = X^(p*t).  When p = m the intersection is trivial and t is
    reported as the sentinel 0 (the witness range is empty in that case).
    """

    m: int
    p: int
    t: int


def abelian_structure(diag: GroupTable) -> AbelianStructure:
    """(m, n) with witnesses for a closed group of diagonal matrices.

    Witnesses satisfy: order(gen_m) = m, order(gen_n) = n, the cyclic
    groups they generate intersect trivially, and their products span the
    whole group.
    """
    elements = diag.elements
    for x in elements:
        if not x.is_diagonal():
            raise NotDiagonal(f"non-diagonal element {x!r} in claimed diagonal group")
    member = diag.element_set
    if IDENTITY not in member:
        raise NotClosed("group does not contain the identity")
    for g in diag.generators:
        for x in elements:
            if x * g not in member:
                raise NotClosed("element set is not closed under multiplication")
    m = max(x.order() for x in elements)
    order = len(elements)
    if order % m:
        raise ValueError(f"maximal order {m} does not divide the group order {order}")
    n = order // m
    if m % n:
        raise ValueError(
            f"cofactor {n} does not divide the maximal order {m}; "
            "input is not a determinant-one diagonal group"
        )
    gen_m = next(x for x in elements if x.order() == m)
    if n == 1:
        return AbelianStructure(m, 1, gen_m, IDENTITY)
    nontrivial_m = _cyclic_set(gen_m) - {IDENTITY}
    for y in elements:
        if y.order() != n:
            continue
        if _cyclic_set(y).isdisjoint(nontrivial_m):
            return AbelianStructure(m, n, gen_m, y)
    raise ValueError("no complement generator found; input is not Z_m x Z_n")


def two_gen_decomposition(n: int, a: int, b: int) -> TwoGenDecomposition:
    """Solve the congruences p*(b - a*t) = 0 and p*(a + b*(1 + t)) = 0 mod n.

    p runs ascending over 1..m, t ascending over 1..m/p - 1, and the first
    hit wins; p = m with t = 0 is the always-valid fallback (trivial
    intersection).  m = lcm(ord(eta^a), ord(eta^b)) where eta is the
    primitive n-th root of unity.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"a, b must lie in [0, {n}), got {a}, {b}")
    m = lcm(n // gcd(a, n), n // gcd(b, n))
    for p in range(1, m + 1):
        for t in range(1, m // p):
            if (p * (b - a * t)) % n == 0 and (p * (a + b * (1 + t))) % n == 0:
                return TwoGenDecomposition(m, p, t)
    return TwoGenDecomposition(m, m, 0)


def intersection_check(x: MonomialElement, y: MonomialElement, p: int) -> bool:
    """True iff <x> intersect <y> equals <x^p> equals <y^p> (by enumeration)."""
    if not (x.is_diagonal() and y.is_diagonal()):
        raise NotDiagonal("intersection check is defined for diagonal elements")
    if x.order() != y.order():
        raise ValueError("x and y must have equal order")
    common = _cyclic_set(x) & _cyclic_set(y)
    return common == _cyclic_set(x**p) == _cyclic_set(y**p)


def _cyclic_set(x: MonomialElement) -> set[MonomialElement]:
    out = {IDENTITY}
    acc = x
    while acc not in out:
        out.add(acc)
        acc = acc * x
    return out
