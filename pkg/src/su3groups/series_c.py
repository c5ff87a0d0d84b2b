"""The C-group series: construction, classification, and structure tests.

C(n,a,b) is generated by the cyclic permutation E and the diagonal phase
matrix F(n,a,b).  Its diagonal part is Z_m x Z_p with (m, p, t) given by
the two-generator congruence system, so the group is (Z_m x Z_p) : Z_3 of
order 3*m*p.  The classifier computes that record and cross-checks it
against an actual closure.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from .abelian import two_gen_decomposition
from .engine import GroupTable, close, default_order_cap, generator_homomorphism
from .errors import CapExceeded
from .monomial import IDENTITY, MonomialElement, cycle_generator, phase_generator, scalar_omega

VERDICT_CYCLIC = "CyclicSemidirect"
VERDICT_DELTA = "Delta3m2"
VERDICT_GENERIC = "Generic"


@dataclass(frozen=True)
class CStructure:
    """Classification record of C(n,a,b)."""

    n: int
    a: int
    b: int
    m: int
    p: int
    t: int
    order: int
    verdict: str
    tn_flag: bool
    z3_split: bool


def build_c_group(n: int, a: int, b: int, order_cap: Optional[int] = None) -> GroupTable:
    """Closure of {E, F(n,a,b)}."""
    return close((cycle_generator(), phase_generator(n, a, b)), order_cap)


def diagonal_generators(n: int, a: int, b: int) -> tuple[MonomialElement, MonomialElement]:
    """The canonical diagonal generator pair X = F(n,a,b), Y = F(n,b,-a-b)."""
    return phase_generator(n, a, b), phase_generator(n, b, (-a - b) % n)


def classify_c_group(n: int, a: int, b: int, order_cap: Optional[int] = None) -> CStructure:
    """Full classification record, verified against the closure order.

    The order 3*m*p is known before any closure is built, so runaway
    parameters fail fast with CapExceeded instead of enumerating.
    """
    dec = two_gen_decomposition(n, a, b)
    order = 3 * dec.m * dec.p
    cap = default_order_cap() if order_cap is None else order_cap
    if order > cap:
        raise CapExceeded(cap, f"C({n},{a},{b}) has order {order}, above the cap {cap}")
    table = build_c_group(n, a, b, cap)
    if len(table) != order:
        raise RuntimeError(
            f"closure order {len(table)} contradicts 3*m*p = {order} for C({n},{a},{b})"
        )
    if dec.p == 1:
        verdict = VERDICT_CYCLIC
    elif dec.p == dec.m:
        verdict = VERDICT_DELTA
    else:
        verdict = VERDICT_GENERIC
    record = CStructure(
        n=n,
        a=a,
        b=b,
        m=dec.m,
        p=dec.p,
        t=dec.t,
        order=order,
        verdict=verdict,
        tn_flag=dec.p == 1 and _t_series_congruence(n, a, b),
        z3_split=has_central_z3_splitting(table),
    )
    return record


def semidirect_witness(
    n: int, a: int, b: int, order_cap: Optional[int] = None
) -> tuple[GroupTable, tuple[MonomialElement, MonomialElement, MonomialElement]]:
    """Diagonal normal subgroup and the complement {1, E, E^2}, verified.

    Checks that the diagonal part is normal, meets <E> trivially, and that
    the products d * E^j cover the whole group without repetition.
    """
    table = build_c_group(n, a, b, order_cap)
    diag = table.diagonal_part()
    e = cycle_generator()
    complement = (IDENTITY, e, e * e)
    if not table.is_normal(diag):
        raise RuntimeError(f"diagonal part of C({n},{a},{b}) is not normal")
    if any(c in diag.element_set for c in complement[1:]):
        raise RuntimeError("complement meets the diagonal part nontrivially")
    products = {d * c for d in diag.elements for c in complement}
    if len(products) != 3 * len(diag) or products != table.element_set:
        raise RuntimeError(f"coset decomposition of C({n},{a},{b}) failed")
    return diag, complement


def has_central_z3_splitting(group: GroupTable) -> bool:
    """Whether the group is a direct product of the central Z_3 with a complement.

    True iff the scalar diag(w,w,w) belongs to the group but not to
    K = <derived subgroup, cubes>: exactly then a homomorphism onto Z_3
    separates the scalar, and its kernel is the direct complement.  Since
    everything commutes modulo the derived subgroup, K is already generated
    by the derived subgroup together with the cubes of the group
    generators.
    """
    omega = scalar_omega(3)
    if omega not in group:
        return False
    derived = group.derived_subgroup()
    cube_gens = tuple(g * g * g for g in group.generators)
    seeds = tuple(derived.generators) + cube_gens
    if all(s == IDENTITY for s in seeds):
        return True
    kernel_part = close(seeds, len(group))
    return omega not in kernel_part


def is_tn(record: CStructure) -> bool:
    """Whether the record matches the metacyclic T-series Z_m : Z_3.

    Requires p = 1 plus the congruence 1 + x + x^2 = 0 (mod n') for some
    presentation of the group as C(n',1,x); the search runs over the six
    orderings of the diagonal entry triple and rescales by the unit that
    normalizes the leading exponent to 1.
    """
    return record.p == 1 and _t_series_congruence(record.n, record.a, record.b)


def tn_prime_condition(n: int) -> bool:
    """Informational side condition: every prime factor of n is 1 mod 3."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    d = 2
    while d * d <= n:
        if n % d == 0:
            if d % 3 != 1:
                return False
            while n % d == 0:
                n //= d
        d += 1
    return n == 1 or n % 3 == 1


def _t_series_congruence(n: int, a: int, b: int) -> bool:
    g = gcd(a, b, n)
    n_red = n // g
    entries = (a // g, (b // g) % n_red, (-(a // g) - (b // g)) % n_red)
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            u = entries[i] % n_red
            if gcd(u, n_red) != 1:
                continue
            x = (entries[j] * pow(u, -1, n_red)) % n_red
            if (1 + x + x * x) % n_red == 0:
                return True
    return False


def delta3_irrep_correspondence(n: int, a: int, b: int, order_cap: Optional[int] = None) -> bool:
    """Whether C(n,a,b) is the image of the delta-series group C(n,0,1)
    under the generator assignment E -> E, F(n,0,1) -> F(n,a,b).

    The assignment is extended multiplicatively over the whole domain; the
    result is True iff it is consistent (a homomorphism) and its image is
    exactly the element set of C(n,a,b).
    """
    cap = default_order_cap() if order_cap is None else order_cap
    base = close((cycle_generator(), phase_generator(n, 0, 1 % n)), cap)
    phi = generator_homomorphism(base, (cycle_generator(), phase_generator(n, a, b)))
    if phi is None:
        return False
    image = set(phi.values())
    return image == build_c_group(n, a, b, cap).element_set
