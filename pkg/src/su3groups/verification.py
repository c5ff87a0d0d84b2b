"""Built-in verification suite: every published classification fact this
library reproduces, checked against independent oracles.

Each check validates the exact engine through a different route: abstract
model groups multiplied as plain tuples, permutation groups composed by
hand, numeric closures of literal complex matrices, or direct congruence
arithmetic.  None of the oracles here touch the monomial representation's
internals, so agreement is evidence, not tautology.

The registry drives both the `verify-paper` CLI command and the
acceptance test module.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Optional, Sequence

from .abelian import abelian_structure, two_gen_decomposition
from .delta6 import (
    build_irrep,
    delta6_image_obstruction,
    image_structure,
    presentation_relations_hold,
)
from .engine import GroupFingerprint, close, invariant_factors_from_orders
from .errors import CapExceeded
from .monomial import (
    MonomialElement,
    cycle_generator,
    flip_generator,
    monomial,
    phase_generator,
    scalar_omega,
)
from .oracle import match_one_to_one, numeric_close
from .series_c import build_c_group, classify_c_group, diagonal_generators
from .series_d import (
    build_d_group,
    canonical_reflection,
    classify_d_group,
    derived_generators,
    diagonal_generating_set,
    diagonal_subgroup_a,
    s3_action_table,
)

_RNG_SEED = 0x5D3  # fixed so verification is reproducible

C_FIXTURES = (
    (1, 0, 0), (2, 0, 1), (2, 1, 1), (3, 0, 1), (3, 1, 1), (3, 1, 2),
    (4, 0, 1), (4, 1, 1), (5, 0, 1), (6, 0, 1), (6, 1, 1), (6, 2, 1),
    (7, 0, 1), (7, 1, 2), (8, 1, 3), (9, 1, 1), (9, 0, 1), (10, 1, 3),
    (12, 1, 5), (14, 1, 2), (21, 1, 4), (26, 1, 3),
)

D_FIXTURES = (
    (1, 0, 0, 1, 0, 0), (2, 0, 1, 2, 1, 1), (3, 0, 1, 2, 1, 1),
    (4, 0, 1, 2, 1, 1), (5, 0, 1, 2, 1, 1), (9, 1, 1, 2, 1, 1),
    (2, 1, 1, 4, 1, 2), (3, 1, 1, 3, 1, 2), (6, 1, 1, 2, 0, 1),
    (4, 1, 3, 4, 2, 1),
)


class CheckFailed(Exception):
    """A verification check did not hold."""


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailed(message)


# -- independent oracles ------------------------------------------------------


def abstract_fingerprint(
    elements: Sequence[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
) -> GroupFingerprint:
    """Fingerprint of an abstract finite group, by exhaustive brute force.

    Orders by iterated multiplication, center by an all-pairs scan, derived
    subgroup as the closure of all commutators (inverses found by powering
    to order-1), abelianization from the coset orders.
    """
    elems = list(elements)
    index = set(elems)
    if len(index) != len(elems):
        raise ValueError("duplicate elements")

    def order_of(x: Hashable) -> int:
        k, acc = 1, x
        while acc != identity:
            acc = mul(acc, x)
            k += 1
        return k

    def inverse_of(x: Hashable) -> Hashable:
        acc, prev = x, identity
        while acc != identity:
            prev = acc
            acc = mul(acc, x)
        return prev

    orders = {x: order_of(x) for x in elems}
    histogram = tuple(sorted(Counter(orders.values()).items()))
    center = sum(1 for x in elems if all(mul(x, y) == mul(y, x) for y in elems))
    inverses = {x: inverse_of(x) for x in elems}
    commutators = {
        mul(mul(inverses[a], inverses[b]), mul(a, b)) for a in elems for b in elems
    }
    derived = _abstract_closure(commutators, mul, identity)
    coset_reps = []
    assigned = set()
    for x in elems:
        if x in assigned:
            continue
        coset_reps.append(x)
        for k in derived:
            assigned.add(mul(x, k))
    coset_orders = []
    for r in coset_reps:
        acc, j = r, 1
        while acc not in derived:
            acc = mul(acc, r)
            j += 1
        coset_orders.append(j)
    return GroupFingerprint(
        order=len(elems),
        order_histogram=histogram,
        center_order=center,
        derived_order=len(derived),
        abelian_invariants=invariant_factors_from_orders(coset_orders),
    )


def _abstract_closure(
    seeds: Iterable[Hashable],
    mul: Callable[[Hashable, Hashable], Hashable],
    identity: Hashable,
) -> set[Hashable]:
    gens = list(seeds)
    out = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(g, x)
                if y not in out:
                    out.add(y)
                    nxt.append(y)
        frontier = nxt
    return out


def semidirect_z3_model(n: int) -> tuple[list[tuple], Callable, tuple]:
    """Abstract model of (Z_n x Z_n) : Z_3.

    Elements are ((c, d), k); the order-3 action on the lattice part is
    (c, d) -> (-c-d, c), matching how the cyclic permutation acts on the
    exponents of a diagonal matrix.
    """

    def act(vec: tuple[int, int], k: int) -> tuple[int, int]:
        c, d = vec
        for _ in range(k):
            c, d = (-c - d) % n, c
        return (c, d)

    def mul(x: tuple, y: tuple) -> tuple:
        (v1, k1), (v2, k2) = x, y
        w = act(v2, k1)
        return (((v1[0] + w[0]) % n, (v1[1] + w[1]) % n), (k1 + k2) % 3)

    elements = [((c, d), k) for c in range(n) for d in range(n) for k in range(3)]
    return elements, mul, ((0, 0), 0)


def s4_order_histogram() -> dict[int, int]:
    """Element-order histogram of the symmetric group on four letters."""

    def compose(p: tuple, q: tuple) -> tuple:
        return tuple(q[p[i]] for i in range(4))

    identity = (0, 1, 2, 3)
    hist: Counter = Counter()
    for p in itertools.permutations(range(4)):
        k, acc = 1, p
        while acc != identity:
            acc = compose(acc, p)
            k += 1
        hist[k] += 1
    return dict(sorted(hist.items()))


def direct_product_histogram(m: int, n: int) -> dict[int, int]:
    """Element-order histogram of Z_m x Z_n, by direct enumeration."""
    hist: Counter = Counter()
    for i in range(m):
        for j in range(n):
            hist[lcm(m // gcd(i, m), n // gcd(j, n))] += 1
    return dict(sorted(hist.items()))


def _random_diagonal(rng: random.Random, max_modulus: int = 60) -> MonomialElement:
    level = rng.randint(1, max_modulus)
    e0, e1 = rng.randrange(level), rng.randrange(level)
    return monomial((0, 1, 2), (e0, e1, -e0 - e1), level)


# -- the checks ---------------------------------------------------------------


def check_c_911() -> str:
    record = classify_c_group(9, 1, 1)
    _require(record.m == 9, f"m = {record.m}, expected 9")
    _require(record.p == 3, f"p = {record.p}, expected 3")
    _require(record.t == 1, f"t = {record.t}, expected 1")
    _require(record.order == 81, f"order = {record.order}, expected 81")
    table = build_c_group(9, 1, 1)
    _require(len(table) == 81, f"closure order {len(table)} != 81")
    return "C(9,1,1): m=9 p=3 t=1 order=81, closure agrees"


def check_c_611() -> str:
    record = classify_c_group(6, 1, 1)
    _require(record.order == 36, f"order = {record.order}, expected 36")
    _require(record.z3_split, "central Z3 splitting not detected")
    model = close((cycle_generator(), phase_generator(2, 0, 1), scalar_omega(3)))
    _require(len(model) == 36, f"A4 x Z3 model has order {len(model)}")
    fp_c = build_c_group(6, 1, 1).fingerprint()
    _require(fp_c == model.fingerprint(), "fingerprint differs from the A4 x Z3 model")
    return "C(6,1,1): order 36, splits off Z3, fingerprint matches A4 x Z3"


def check_c_2114() -> str:
    record = classify_c_group(21, 1, 4)
    _require(record.order == 63, f"order = {record.order}, expected 63")
    _require(record.p == 1, f"p = {record.p}, expected 1")
    _require(record.tn_flag, "T-series flag not set")
    _require(record.z3_split, "central Z3 splitting not detected")
    return "C(21,1,4): order 63, p=1, T-series, splits off Z3"


def check_delta3_family() -> str:
    for n in range(2, 8):
        record = classify_c_group(n, 0, 1)
        _require(record.verdict == "Delta3m2", f"n={n}: verdict {record.verdict}")
        _require(record.order == 3 * n * n, f"n={n}: order {record.order} != {3*n*n}")
        table = build_c_group(n, 0, 1)
        elements, mul, identity = semidirect_z3_model(n)
        model_fp = abstract_fingerprint(elements, mul, identity)
        _require(
            table.fingerprint() == model_fp,
            f"n={n}: fingerprint differs from the abstract (Z{n} x Z{n}) : Z3 model",
        )
        rebuilt = build_c_group(n, 0, 1)
        _require(table.fingerprint() == rebuilt.fingerprint(), f"n={n}: rebuild changed fingerprint")
    return "C(n,0,1) for n=2..7: order 3n^2, fingerprints match the abstract models"


def check_delta6_family() -> str:
    for n in range(2, 6):
        record = classify_d_group(n, 0, 1, 2, 1, 1)
        _require(record.order == 6 * n * n, f"n={n}: order {record.order} != {6*n*n}")
    histogram = build_d_group(2, 0, 1, 2, 1, 1).element_order_histogram()
    oracle_hist = s4_order_histogram()
    _require(
        histogram == oracle_hist == {1: 1, 2: 9, 3: 8, 4: 6},
        f"order-24 histogram {histogram} differs from the S4 oracle {oracle_hist}",
    )
    return "D(n,0,1;2,1,1) for n=2..5: order 6n^2; n=2 histogram matches the S4 oracle"


def check_d_911211() -> str:
    record = classify_d_group(9, 1, 1, 2, 1, 1)
    _require(record.order == 162, f"order = {record.order}, expected 162")
    _require((record.p, record.q) == (9, 3), f"(p,q) = {(record.p, record.q)}, expected (9,3)")
    _require(record.s3_split, "S3 splitting not verified")
    _require(
        not delta6_image_obstruction(162),
        "162 wrongly passes the 6-times-square condition",
    )
    return "D(9,1,1;2,1,1): order 162 = 6*9*3, splits over S3, 162/6 is not a square"


def check_irrep_relations() -> str:
    count = 0
    for n in range(2, 7):
        for l in range(1, n):
            for kind in (1, 2):
                pres = build_irrep(kind, n, l)
                _require(
                    presentation_relations_hold(pres),
                    f"relations fail for kind {kind}, n={n}, l={l}",
                )
                m = n // gcd(l, n)
                image = image_structure(pres)
                _require(
                    image.m == m and image.order == 6 * m * m and image.is_delta6,
                    f"image of kind {kind}, n={n}, l={l}: {image}",
                )
                count += 1
    return f"{count} irreps (n=2..6, both kinds): relations exact, image order 6*(n/gcd(l,n))^2"


def check_identity_properties() -> str:
    rng = random.Random(_RNG_SEED)
    e = cycle_generator()
    # five conjugation identities on random diagonals
    for _ in range(500):
        x = _random_diagonal(rng)
        conj = s3_action_table(x)
        a, b, c = x.exps
        level = x.modulus
        expected = {
            "g": (a, c, b),
            "e": (c, a, b),
            "eg": (c, b, a),
            "e2": (b, c, a),
            "e2g": (b, a, c),
        }
        for key, pattern in expected.items():
            _require(
                conj[key] == monomial((0, 1, 2), pattern, level),
                f"conjugation {key} failed on {x!r}",
            )
    # commutation relations of the diagonal generator pair
    for _ in range(100):
        n = rng.randint(1, 40)
        a, b = rng.randrange(n), rng.randrange(n)
        x, y = diagonal_generators(n, a, b)
        _require(x * e == e * x.inverse() * y.inverse(), f"XE relation fails at ({n},{a},{b})")
        _require(y * e == e * x, f"YE relation fails at ({n},{a},{b})")
    # similarity-transform identities
    for _ in range(50):
        d = rng.randint(1, 24)
        r, s = rng.randrange(d), rng.randrange(d)
        dg = derived_generators(d, r, s)
        _require((dg.g * dg.g).is_identity(), f"g^2 != 1 at ({d},{r},{s})")
        _require(dg.g_prime.conjugated_by(dg.t) == dg.g, f"t-conjugation of g' fails at ({d},{r},{s})")
        _require(e.conjugated_by(dg.t) == dg.b * e, f"t-conjugation of e fails at ({d},{r},{s})")
        # setwise stability of the diagonal subgroup, on bounds that keep
        # the phase lattice lcm(n, 2d) small enough to enumerate
        n = rng.randint(1, 4)
        a, b = rng.randrange(n), rng.randrange(n)
        d2 = rng.randint(1, 6)
        r2, s2 = rng.randrange(d2), rng.randrange(d2)
        diag = diagonal_subgroup_a(n, a, b, d2, r2, s2, order_cap=3000)
        t2 = derived_generators(d2, r2, s2).t
        conjugated = {x.conjugated_by(t2) for x in diag}
        _require(
            conjugated == diag.element_set,
            f"t-conjugation moved the diagonal subgroup at ({n},{a},{b};{d2},{r2},{s2})",
        )
    return "500 diagonal conjugations, 100 commutation pairs, 50 transform identities: all exact"


def check_generating_set_reduction() -> str:
    rng = random.Random(_RNG_SEED + 1)
    done = 0
    while done < 20:
        n = rng.randint(1, 9)
        a, b = rng.randrange(n), rng.randrange(n)
        d = rng.randint(1, 6)
        r, s = rng.randrange(d), rng.randrange(d)
        try:
            reduced = close(diagonal_generating_set(n, a, b, d, r, s, reduced=True), 334)
        except CapExceeded:
            continue
        full = close(diagonal_generating_set(n, a, b, d, r, s, reduced=False), 334)
        _require(
            reduced == full,
            f"reduced and full generating sets disagree at ({n},{a},{b};{d},{r},{s})",
        )
        done += 1
    # conjugation identities that justify dropping the redundant generators
    e = cycle_generator()
    g = canonical_reflection()
    for _ in range(50):
        x = _random_diagonal(rng)
        lhs = x.conjugated_by(e * e)
        rhs = x.inverse() * x.conjugated_by(e).inverse()
        _require(lhs == rhs, f"double-cycle reduction fails on {x!r}")
        lhs = x.conjugated_by(e * e * g)
        rhs = x.conjugated_by(g).inverse() * x.conjugated_by(e * g).inverse()
        _require(lhs == rhs, f"cycle-reflection reduction fails on {x!r}")
    return "20 random parameter tuples: 18-generator and 8-generator closures coincide"


def check_abelian_structure_oracle() -> str:
    tables = []
    for n, a, b in C_FIXTURES:
        tables.append(build_c_group(n, a, b).diagonal_part())
    for n, a, b, d, r, s in D_FIXTURES:
        tables.append(diagonal_subgroup_a(n, a, b, d, r, s))
    _require(len(tables) >= 30, f"only {len(tables)} diagonal fixtures")
    for table in tables:
        structure = abelian_structure(table)
        m, n_ = structure.m, structure.n
        _require(n_ >= 1 and m % n_ == 0, f"cofactor {n_} does not divide {m}")
        _require(m * n_ == len(table), f"m*n = {m*n_} != order {len(table)}")
        _require(
            table.element_order_histogram() == direct_product_histogram(m, n_),
            f"histogram differs from Z_{m} x Z_{n_}",
        )
        products = {
            (structure.gen_m**i) * (structure.gen_n**j)
            for i in range(m)
            for j in range(n_)
        }
        _require(
            len(products) == m * n_ and products == table.element_set,
            "witness generators do not reconstruct the group uniquely",
        )
    return f"{len(tables)} diagonal subgroups: histogram and reconstruction match Z_m x Z_n"


def check_exact_vs_numeric() -> str:
    checked = 0
    for n, a, b in C_FIXTURES:
        gens = (cycle_generator(), phase_generator(n, a, b))
        checked += _compare_closures(gens)
    for n, a, b, d, r, s in D_FIXTURES:
        gens = (cycle_generator(), phase_generator(n, a, b), flip_generator(d, r, s))
        checked += _compare_closures(gens)
    return f"{checked} fixture groups: exact and numeric closures agree element by element"


def _compare_closures(gens: tuple[MonomialElement, ...]) -> int:
    exact = close(gens, 2000)
    numeric = numeric_close([g.to_complex() for g in gens], cap=2001)
    _require(
        len(exact) == len(numeric),
        f"exact order {len(exact)} != numeric order {len(numeric)}",
    )
    _require(
        match_one_to_one([x.to_complex() for x in exact], numeric),
        "exact elements do not match numeric elements one-to-one",
    )
    return 1


def check_order_formula_sweep() -> str:
    count = 0
    for n in range(1, 13):
        for a in range(n):
            for b in range(n):
                dec = two_gen_decomposition(n, a, b)
                table = build_c_group(n, a, b, order_cap=10**5)
                _require(
                    len(table) == 3 * dec.m * dec.p,
                    f"C({n},{a},{b}): closure {len(table)} != 3*m*p = {3*dec.m*dec.p}",
                )
                count += 1
    return f"{count} parameter tuples with n <= 12: closure order equals 3*m*p"


CHECKS: tuple[tuple[str, Callable[[], str]], ...] = (
    ("c-911-worked-example", check_c_911),
    ("c-611-central-split", check_c_611),
    ("c-2114-t-series", check_c_2114),
    ("delta3-family", check_delta3_family),
    ("delta6-family", check_delta6_family),
    ("d-911211-counterexample", check_d_911211),
    ("irrep-relations", check_irrep_relations),
    ("identity-properties", check_identity_properties),
    ("generating-set-reduction", check_generating_set_reduction),
    ("abelian-structure-oracle", check_abelian_structure_oracle),
    ("exact-vs-numeric", check_exact_vs_numeric),
    ("order-formula-sweep", check_order_formula_sweep),
)


def run_check(name: str, fn: Callable[[], str]) -> CheckResult:
    try:
        detail = fn()
    except CheckFailed as exc:
        return CheckResult(name=name, passed=False, detail=str(exc))
    except Exception as exc:  # a crash is a failure, not an error state
        return CheckResult(name=name, passed=False, detail=f"{type(exc).__name__}: {exc}")
    return CheckResult(name=name, passed=True, detail=detail)


def run_all(emit: Optional[Callable[[CheckResult], None]] = None) -> list[CheckResult]:
    results = []
    for name, fn in CHECKS:
        result = run_check(name, fn)
        results.append(result)
        if emit is not None:
            emit(result)
    return results
