"""The D-group series: a C-group extended by a determinant-one reflection.

D(n,a,b;d,r,s) adds the generator G~(d,r,s) to {E, F(n,a,b)}.  Conjugating
with the diagonal transform T turns the reflection data into the fixed
matrix G = [[-1,0,0],[0,0,-1],[0,-1,0]], in which frame the group is the
semidirect product of its diagonal part with the six monomial permutation
elements {1, E, E^2, G, EG, E^2G} forming an S3 complement.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional

from .abelian import abelian_structure
from .engine import GroupTable, close, default_order_cap
from .errors import NotDiagonal
from .monomial import (
    IDENTITY,
    MonomialElement,
    cycle_generator,
    flip_generator,
    monomial,
    phase_generator,
)


@dataclass(frozen=True)
class DStructure:
    """Classification record of D(n,a,b;d,r,s): diagonal part Z_p x Z_q, order 6pq."""

    n: int
    a: int
    b: int
    d: int
    r: int
    s: int
    p: int
    q: int
    order: int
    s3_split: bool


@dataclass(frozen=True)
class DerivedGenerators:
    """Derived elements of the reflection data (d, r, s).

    a       : square of the flip generator (diagonal)
    g_prime : E^2 * flip^2 * E * flip, the reflection with its phases
              concentrated in the lower 2x2 block
    t       : diagonal similarity transform carrying g_prime to g
    b       : (E * g_prime * E)^2, the diagonal factor in t^-1 E t = b * E
    g       : the canonical reflection [[-1,0,0],[0,0,-1],[0,-1,0]]
    """

    a: MonomialElement
    g_prime: MonomialElement
    t: MonomialElement
    b: MonomialElement
    g: MonomialElement


def canonical_reflection() -> MonomialElement:
    """G = [[-1,0,0],[0,0,-1],[0,-1,0]], the parameter-free reflection."""
    return MonomialElement((0, 2, 1), (1, 1, 1), 2)


def derived_generators(d: int, r: int, s: int) -> DerivedGenerators:
    """Compute {A, G', T, B, G} from the reflection parameters.

    Satisfies exactly: g^2 = 1, t^-1 * g_prime * t = g, and
    t^-1 * E * t = b * E; those identities are what the structure analysis
    of D-groups rests on.
    """
    flip = flip_generator(d, r, s)
    e = cycle_generator()
    a = flip * flip
    g_prime = e * e * flip * flip * e * flip
    level = lcm(2, d)
    c = level // d
    half = level // 2
    t = monomial((0, 1, 2), (half - (2 * r + s) * c, half + (2 * r + s) * c, 0), level)
    ege = e * g_prime * e
    b = ege * ege
    g = g_prime.conjugated_by(t)
    return DerivedGenerators(a=a, g_prime=g_prime, t=t, b=b, g=g)


def build_d_group(
    n: int, a: int, b: int, d: int, r: int, s: int, order_cap: Optional[int] = None
) -> GroupTable:
    """Closure of {E, F(n,a,b), G~(d,r,s)}."""
    return close(
        (cycle_generator(), phase_generator(n, a, b), flip_generator(d, r, s)), order_cap
    )


def conjugated_d_group(
    n: int, a: int, b: int, d: int, r: int, s: int, order_cap: Optional[int] = None
) -> GroupTable:
    """The T-conjugated presentation T^-1 D T, on which structure checks run."""
    t = derived_generators(d, r, s).t
    gens = (cycle_generator(), phase_generator(n, a, b), flip_generator(d, r, s))
    return close(tuple(x.conjugated_by(t) for x in gens), order_cap)


def s3_action_table(sample: MonomialElement) -> dict[str, MonomialElement]:
    """The five nontrivial conjugates of a diagonal element.

    Keys name the conjugating word; the values permute the diagonal
    entries (a,b,c) as: g -> (a,c,b), e -> (c,a,b), eg -> (c,b,a),
    e2 -> (b,c,a), e2g -> (b,a,c).
    """
    if not sample.is_diagonal():
        raise NotDiagonal("the permutation action is defined on diagonal elements")
    e = cycle_generator()
    g = canonical_reflection()
    return {
        "g": sample.conjugated_by(g),
        "e": sample.conjugated_by(e),
        "eg": sample.conjugated_by(e * g),
        "e2": sample.conjugated_by(e * e),
        "e2g": sample.conjugated_by(e * e * g),
    }


def diagonal_generating_set(
    n: int, a: int, b: int, d: int, r: int, s: int, reduced: bool = True
) -> tuple[MonomialElement, ...]:
    """Generating set of the diagonal subgroup of the conjugated D-group.

    The full set conjugates each of A, B, F by the five nontrivial words of
    the permutation complement (18 generators); the reduced set keeps the
    eight that survive after the conjugation identities of diagonal
    determinant-one matrices eliminate the rest.
    """
    dg = derived_generators(d, r, s)
    e = cycle_generator()
    g = dg.g
    f = phase_generator(n, a, b)
    if reduced:
        return (
            dg.a,
            dg.a.conjugated_by(e),
            dg.b,
            dg.b.conjugated_by(e),
            f,
            f.conjugated_by(e),
            f.conjugated_by(g),
            f.conjugated_by(e * g),
        )
    words = (g, e, e * g, e * e, e * e * g)
    out = [dg.a, dg.b, f]
    for base in (dg.a, dg.b, f):
        out.extend(base.conjugated_by(w) for w in words)
    return tuple(out)


def diagonal_subgroup_a(
    n: int, a: int, b: int, d: int, r: int, s: int, order_cap: Optional[int] = None
) -> GroupTable:
    """The diagonal normal subgroup of the conjugated D-group, by closure
    of the reduced eight-element generating set."""
    return close(diagonal_generating_set(n, a, b, d, r, s, reduced=True), order_cap)


def split_check(conjugated: GroupTable) -> bool:
    """Whether {1, E, E^2, G, EG, E^2G} is an S3 complement in the table.

    Verifies the six elements are present, closed, of S3 order statistics,
    meet the diagonal kernel only in the identity, and that their cosets
    against the diagonal part tile the whole group.
    """
    e = cycle_generator()
    g = canonical_reflection()
    candidates = (IDENTITY, e, e * e, g, e * g, e * e * g)
    if len(set(candidates)) != 6:
        return False
    if any(x not in conjugated.element_set for x in candidates):
        return False
    candidate_set = set(candidates)
    for x in candidates:
        for y in candidates:
            if x * y not in candidate_set:
                return False
    orders = sorted(x.order() for x in candidates)
    if orders != [1, 2, 2, 2, 3, 3]:
        return False
    if any(x.is_diagonal() for x in candidates[1:]):
        return False
    return 6 * len(conjugated.diagonal_part()) == len(conjugated)


def classify_d_group(
    n: int, a: int, b: int, d: int, r: int, s: int, order_cap: Optional[int] = None
) -> DStructure:
    """Classification record (Z_p x Z_q) : S3, verified against the closure.

    (p, q) come from the abelian structure of the diagonal subgroup; no
    closed formula in the parameters exists, so they are computed values.
    """
    cap = default_order_cap() if order_cap is None else order_cap
    diag = diagonal_subgroup_a(n, a, b, d, r, s, cap)
    structure = abelian_structure(diag)
    p, q = structure.m, structure.n
    order = 6 * p * q
    full = build_d_group(n, a, b, d, r, s, cap)
    if len(full) != order:
        raise RuntimeError(
            f"closure order {len(full)} contradicts 6*p*q = {order} "
            f"for D({n},{a},{b};{d},{r},{s})"
        )
    conjugated = conjugated_d_group(n, a, b, d, r, s, cap)
    if len(conjugated) != len(full):
        raise RuntimeError("conjugated presentation changed the group order")
    return DStructure(
        n=n, a=a, b=b, d=d, r=r, s=s, p=p, q=q, order=order,
        s3_split=split_check(conjugated),
    )
