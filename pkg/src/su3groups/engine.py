"""Finite-group machinery over monomial elements.

Groups are represented extensionally: a `GroupTable` holds every element,
in the deterministic order the breadth-first closure discovered it.  All
structural queries (center, derived subgroup, quotient to the permutation
part, fingerprint) are brute-force scans over that table, which is the
point: results are certain, not heuristic, at the scale this library
targets.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .errors import CapExceeded, SubNotContained
from .monomial import IDENTITY, IDENTITY_PERM, MonomialElement

_FALLBACK_ORDER_CAP = 10**6


def default_order_cap() -> int:
    """Element cap for closures; override with the SU3_ORDER_CAP env var."""
    value = os.environ.get("SU3_ORDER_CAP")
    if value:
        cap = int(value)
        if cap < 1:
            raise ValueError(f"SU3_ORDER_CAP must be >= 1, got {cap}")
        return cap
    return _FALLBACK_ORDER_CAP


class GroupTable:
    """A closed set of monomial elements together with its generating set.

    Instances are immutable; build them with :func:`close`.  Iteration
    follows discovery order, so reports derived from a table are
    reproducible run to run.
    """

    def __init__(self, generators: Sequence[MonomialElement], elements: Sequence[MonomialElement]):
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.element_set = frozenset(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[MonomialElement]:
        return iter(self.elements)

    def __contains__(self, x: MonomialElement) -> bool:
        return x in self.element_set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupTable):
            return NotImplemented
        return self.element_set == other.element_set

    def __hash__(self) -> int:
        return hash(self.element_set)

    def __repr__(self) -> str:
        return f"GroupTable(order={len(self.elements)}, generators={len(self.generators)})"

    # -- structural queries -------------------------------------------------

    def element_order_histogram(self) -> dict[int, int]:
        """Map element order -> number of elements of that order."""
        return dict(sorted(Counter(x.order() for x in self.elements).items()))

    def center(self) -> "GroupTable":
        gens = self.generators
        members = [x for x in self.elements if all(x * g == g * x for g in gens)]
        return GroupTable(members, members)

    def diagonal_part(self) -> "GroupTable":
        """The subgroup of diagonal elements (kernel of the permutation part)."""
        members = [x for x in self.elements if x.perm == IDENTITY_PERM]
        return GroupTable(members, members)

    def derived_subgroup(self, order_cap: Optional[int] = None) -> "GroupTable":
        """Normal closure of the commutators of the generators."""
        cap = len(self.elements) if order_cap is None else order_cap
        gens = self.generators
        inverses = [g.inverse() for g in gens]
        seeds: list[MonomialElement] = []
        seen = {IDENTITY}
        for a, ai in zip(gens, inverses):
            for b, bi in zip(gens, inverses):
                c = ai * bi * a * b
                if c not in seen:
                    seen.add(c)
                    seeds.append(c)
        if not seeds:
            return GroupTable((), (IDENTITY,))
        while True:
            table = close(seeds, cap)
            extra = []
            for g, gi in zip(gens, inverses):
                for x in table.elements:
                    c = gi * x * g
                    if c not in table.element_set and c not in seen:
                        seen.add(c)
                        extra.append(c)
            if not extra:
                return table
            seeds.extend(extra)

    def is_normal(self, sub: "GroupTable") -> bool:
        if not sub.element_set <= self.element_set:
            raise SubNotContained("subgroup elements are not all contained in the parent")
        for g in self.generators:
            gi = g.inverse()
            for x in sub.elements:
                if gi * x * g not in sub.element_set:
                    return False
        return True

    def perm_part_epimorphism(self) -> dict[MonomialElement, tuple[int, int, int]]:
        """Map each element to its permutation part.

        With permutations composed left-to-right (row index through both
        factors) this is a homomorphism onto a subgroup of S3; its kernel
        is exactly the diagonal part.
        """
        return {x: x.perm for x in self.elements}

    def perm_image(self) -> frozenset[tuple[int, int, int]]:
        return frozenset(x.perm for x in self.elements)

    def fingerprint(self) -> "GroupFingerprint":
        return self._fingerprint

    @cached_property
    def _fingerprint(self) -> "GroupFingerprint":
        histogram = tuple(sorted(Counter(x.order() for x in self.elements).items()))
        derived = self.derived_subgroup()
        return GroupFingerprint(
            order=len(self.elements),
            order_histogram=histogram,
            center_order=len(self.center()),
            derived_order=len(derived),
            abelian_invariants=self._abelianization_invariants(derived),
        )

    def _abelianization_invariants(self, derived: "GroupTable") -> tuple[int, ...]:
        """Invariant factors of G/[G,G], from coset orders."""
        kernel = derived.element_set
        coset_of: dict[MonomialElement, int] = {}
        reps: list[MonomialElement] = []
        for x in self.elements:
            if x in coset_of:
                continue
            idx = len(reps)
            reps.append(x)
            for k in derived.elements:
                coset_of[x * k] = idx
        orders = []
        for r in reps:
            acc = r
            j = 1
            while acc not in kernel:
                acc = acc * r
                j += 1
            orders.append(j)
        return invariant_factors_from_orders(orders)


def close(generators: Iterable[MonomialElement], order_cap: Optional[int] = None) -> GroupTable:
    """Breadth-first closure of the generators under multiplication.

    Raises CapExceeded as soon as the element count would pass `order_cap`
    (default from :func:`default_order_cap`), which is the guardrail
    against runaway parameter choices.
    """
    gens = tuple(generators)
    if not gens:
        raise ValueError("at least one generator is required")
    cap = default_order_cap() if order_cap is None else order_cap
    if cap < 1:
        raise ValueError(f"order_cap must be >= 1, got {cap}")
    elements = [IDENTITY]
    seen = {IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in gens:
                y = g * x
                if y not in seen:
                    if len(seen) >= cap:
                        raise CapExceeded(cap)
                    seen.add(y)
                    elements.append(y)
                    next_frontier.append(y)
        frontier = next_frontier
    return GroupTable(gens, elements)


def generator_homomorphism(
    domain: GroupTable, images: Sequence[MonomialElement]
) -> Optional[dict[MonomialElement, MonomialElement]]:
    """Extend generator assignments of `domain` multiplicatively.

    Returns the full map element -> image if the assignment is consistent
    on every generator multiplication (hence a homomorphism), else None.
    """
    if len(images) != len(domain.generators):
        raise ValueError("one image per generator is required")
    pairs = list(zip(domain.generators, images))
    phi = {IDENTITY: IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        next_frontier = []
        for x in frontier:
            fx = phi[x]
            for g, ig in pairs:
                y = g * x
                fy = ig * fx
                known = phi.get(y)
                if known is None:
                    phi[y] = fy
                    next_frontier.append(y)
                elif known != fy:
                    return None
        frontier = next_frontier
    if len(phi) != len(domain.elements):
        raise ValueError("generators do not generate the given table")
    return phi


@dataclass(frozen=True)
class GroupFingerprint:
    """Isomorphism-invariant summary used to separate non-isomorphic groups.

    Equal fingerprints do NOT certify isomorphism; distinct fingerprints
    prove non-isomorphism.  Callers should phrase conclusions accordingly
    ("fingerprint-equal" vs "fingerprint-distinct").
    """

    order: int
    order_histogram: tuple[tuple[int, int], ...]
    center_order: int
    derived_order: int
    abelian_invariants: tuple[int, ...]

    def sort_key(self) -> tuple:
        return (
            self.order,
            self.order_histogram,
            self.center_order,
            self.derived_order,
            self.abelian_invariants,
        )


def invariant_factors_from_orders(orders: Sequence[int]) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group given all element orders.

    Works prime by prime: the count of solutions of x^(p^k) = 1 determines
    the partition of exponents of the p-primary component; the factors are
    then reassembled largest-first and returned as an ascending divisibility
    chain.  The multiset of element orders determines a finite abelian
    group completely, so this is exact.
    """
    n = len(orders)
    if n == 1:
        return ()
    counts = Counter(orders)
    primes = set()
    for d in counts:
        primes.update(_prime_factors(d))
    exponents_per_prime: dict[int, list[int]] = {}
    for p in sorted(primes):
        # a_k = log_p N(p^k) - log_p N(p^(k-1)) with N(q) = #{x : x^q = 1};
        # the a_k are the conjugate partition of the p-exponent multiset.
        layers = []
        prev = _log_int(sum(c for d, c in counts.items() if _divides_prime_power(d, p, 0)), p)
        k = 1
        while True:
            cur = _log_int(sum(c for d, c in counts.items() if _divides_prime_power(d, p, k)), p)
            if cur == prev:
                break
            layers.append(cur - prev)
            prev = cur
            k += 1
        rank = layers[0] if layers else 0
        exponents_per_prime[p] = [sum(1 for a in layers if a >= r) for r in range(1, rank + 1)]
    rank = max((len(v) for v in exponents_per_prime.values()), default=0)
    factors = []
    for j in range(rank):
        f = 1
        for p, exps in exponents_per_prime.items():
            if j < len(exps):
                f *= p ** exps[j]
        factors.append(f)
    # factors is descending with each divisible by the next; return ascending
    return tuple(reversed(factors))


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _divides_prime_power(d: int, p: int, k: int) -> bool:
    """True iff d divides p^k."""
    if d == 1:
        return True
    while k > 0 and d % p == 0:
        d //= p
        k -= 1
    return d == 1


def _is_power(n: int, p: int) -> Optional[int]:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 else None


def _log_int(n: int, p: int) -> int:
    k = _is_power(n, p)
    if k is None:
        raise ValueError(f"{n} is not a power of {p}; element orders are inconsistent")
    return k
