"""Presentation of the delta-6 series and its three-dimensional irreps.

The group of order 6n^2 in the D-family is presented on four generators
P, Q, R, S (an S3 pair acting on a Z_n x Z_n pair).  Its two families of
three-dimensional irreducible matrix assignments differ only in the sign
of Q; the image of either family with phase parameter l is again a group
of the same shape with n replaced by m = n/gcd(l,n).

That gives a cheap obstruction: a group can be such an image only if its
order is 6 times a perfect square.  Order 162 fails the test, which is
what separates D(9,1,1;2,1,1) from every image of this family.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from .engine import GroupTable, close, default_order_cap
from .monomial import MonomialElement, cycle_generator, monomial
from .series_d import build_d_group


@dataclass(frozen=True)
class Delta6Presentation:
    """Generator images of the four-generator presentation with parameter n."""

    n: int
    l: int
    kind: int
    p: MonomialElement
    q: MonomialElement
    r: MonomialElement
    s: MonomialElement


@dataclass(frozen=True)
class Delta6Image:
    """Image structure of an irrep: presentation parameter m and verification verdict."""

    m: int
    order: int
    is_delta6: bool


def build_irrep(kind: int, n: int, l: int) -> Delta6Presentation:
    """Matrix images of P, Q, R, S for irrep family `kind` (1 or 2).

    Kind 2 negates the Q matrix; kind 1's Q has determinant -1, so those
    images live in U(3) rather than SU(3).  The defining relations with
    parameter n hold exactly for both kinds.
    """
    if kind not in (1, 2):
        raise ValueError(f"kind must be 1 or 2, got {kind}")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if not 1 <= l <= n - 1:
        raise ValueError(f"l must satisfy 1 <= l <= n-1, got {l}")
    p = cycle_generator()
    if kind == 1:
        q = monomial((2, 1, 0), (0, 0, 0), 1)
    else:
        q = monomial((2, 1, 0), (1, 1, 1), 2)
    r = monomial((0, 1, 2), (l, -l, 0), n)
    s = monomial((0, 1, 2), (0, l, -l), n)
    return Delta6Presentation(n=n, l=l, kind=kind, p=p, q=q, r=r, s=s)


def presentation_relations_hold(pres: Delta6Presentation, n_value: Optional[int] = None) -> bool:
    """Check all seven relation families exactly, with R,S of order dividing n_value."""
    n = pres.n if n_value is None else n_value
    p, q, r, s = pres.p, pres.q, pres.r, pres.s
    pi = p.inverse()
    qi = q.inverse()
    checks = (
        (p**3).is_identity(),
        (q**2).is_identity(),
        ((p * q) ** 2).is_identity(),
        (r**n).is_identity(),
        (s**n).is_identity(),
        r * s == s * r,
        p * r * pi == r.inverse() * s.inverse(),
        p * s * pi == r,
        q * r * qi == s.inverse(),
        q * s * qi == r.inverse(),
    )
    return all(checks)


def image_structure(
    pres: Delta6Presentation, l: Optional[int] = None, order_cap: Optional[int] = None
) -> Delta6Image:
    """Effective parameter m = n/gcd(l,n) of the image, with verification.

    Verifies that the closure of the generator images has order 6*m^2,
    that the relations hold with n replaced by m, and that the image
    fingerprint matches the reference group D(m,0,1;2,1,1).
    """
    if l is None:
        l = pres.l
    cap = default_order_cap() if order_cap is None else order_cap
    m = pres.n // gcd(l, pres.n)  # l in [1, n-1] forces m >= 2
    table = close((pres.p, pres.q, pres.r, pres.s), cap)
    order_ok = len(table) == 6 * m * m
    relations_ok = presentation_relations_hold(pres, m)
    reference = build_d_group(m, 0, 1, 2, 1, 1, cap)
    fingerprint_ok = table.fingerprint() == reference.fingerprint()
    return Delta6Image(m=m, order=len(table), is_delta6=order_ok and relations_ok and fingerprint_ok)


def delta6_image_obstruction(order: int) -> bool:
    """True iff order/6 is a positive perfect square.

    This is the necessary condition for a group of that order to be the
    image of a three-dimensional irrep of the 6n^2 family; returning False
    certifies the group cannot be such an image.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order % 6:
        return False
    k = order // 6
    return isqrt(k) ** 2 == k
