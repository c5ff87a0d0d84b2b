"""Independent numeric brute-force engine for cross-checking the exact one.

Everything here works on literal 3x3 complex matrices and floating-point
products; nothing is shared with the integer-exact representation.  The
closure deduplicates by rounding entries onto a grid of pitch eps, with a
half-pitch shifted copy of the grid so that a value sitting on a cell
boundary still matches its twin.  Roots of unity of the moduli this
library handles are separated by far more than the default eps, and the
UnstableDedup guard turns any violation of that assumption into a hard
error instead of a silent miscount.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from .errors import CapExceeded, UnstableDedup

DEFAULT_EPS = 1e-8
_DEFAULT_CAP = 10**5


def numeric_close(
    generators: Sequence[np.ndarray],
    eps: float = DEFAULT_EPS,
    cap: int = _DEFAULT_CAP,
) -> list[np.ndarray]:
    """Closure of unitary 3x3 matrices under product, eps-deduplicated.

    Deterministic for a fixed generator order.  Raises CapExceeded when
    the element count would pass `cap` and UnstableDedup when two distinct
    elements come within 10*eps of each other.
    """
    if not 1e-12 <= eps <= 1e-6:
        raise ValueError(f"eps must lie in [1e-12, 1e-6], got {eps}")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")
    gens = [np.asarray(g, dtype=complex) for g in generators]
    if not gens:
        raise ValueError("at least one generator is required")
    for g in gens:
        _check_matrix(g)

    elements: list[np.ndarray] = []
    primary: dict[tuple, int] = {}
    shifted: dict[tuple, int] = {}

    def find(mat: np.ndarray) -> Optional[int]:
        k1, k2 = _grid_keys(mat, eps)
        idx = primary.get(k1)
        if idx is None:
            idx = shifted.get(k2)
        if idx is None:
            return None
        # Copies of one element differ only by float noise (~1e-13); a
        # cell-sharing pair beyond eps/10 is two genuinely distinct matrices.
        if _distance(mat, elements[idx]) > eps / 10:
            raise UnstableDedup(
                "two distinct matrices fell into one dedup cell; "
                "eps is misconfigured for these generators"
            )
        return idx

    def insert(mat: np.ndarray) -> None:
        k1, k2 = _grid_keys(mat, eps)
        primary[k1] = len(elements)
        shifted[k2] = len(elements)
        elements.append(mat)

    insert(np.eye(3, dtype=complex))
    frontier = [elements[0]]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in gens:
                y = g @ x
                if find(y) is None:
                    if len(elements) >= cap:
                        raise CapExceeded(cap)
                    insert(y)
                    next_frontier.append(y)
        frontier = next_frontier
    _pairwise_guard(elements, eps)
    return elements


def numeric_element_order(mat: np.ndarray, eps: float = DEFAULT_EPS, max_power: int = 10**6) -> int:
    """Smallest k >= 1 with mat^k equal to the identity within eps."""
    _check_matrix(np.asarray(mat, dtype=complex))
    eye = np.eye(3)
    acc = np.asarray(mat, dtype=complex)
    for k in range(1, max_power + 1):
        if _distance(acc, eye) <= eps:
            return k
        acc = acc @ mat
    raise RuntimeError(f"no power up to {max_power} reached the identity")


def match_one_to_one(
    exact_mats: Sequence[np.ndarray], numeric_mats: Sequence[np.ndarray], eps: float = DEFAULT_EPS
) -> bool:
    """True iff each matrix of the first list matches exactly one of the second within eps."""
    if len(exact_mats) != len(numeric_mats):
        return False
    pool = np.stack([np.asarray(m) for m in numeric_mats])
    for m in exact_mats:
        dists = np.abs(pool - np.asarray(m)).reshape(len(pool), -1).max(axis=1)
        if int(np.sum(dists <= eps)) != 1:
            return False
    return True


def _check_matrix(mat: np.ndarray) -> None:
    if mat.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {mat.shape}")
    if _distance(mat @ mat.conj().T, np.eye(3)) > 1e-9:
        raise ValueError("matrix is not unitary within 1e-9")


def _grid_keys(mat: np.ndarray, eps: float) -> tuple[tuple, tuple]:
    flat = np.concatenate([mat.real.ravel(), mat.imag.ravel()]) / eps
    return tuple(np.rint(flat).astype(np.int64)), tuple(np.rint(flat + 0.5).astype(np.int64))


def _distance(a: np.ndarray, b: np.ndarray) -> float:
    return float(np.max(np.abs(a - b)))


def _pairwise_guard(elements: list[np.ndarray], eps: float) -> None:
    """Raise if two distinct closure elements are closer than 10*eps."""
    n = len(elements)
    if n < 2:
        return
    stacked = np.stack(elements).reshape(n, -1)
    chunk = max(1, 200_000 // n)
    for start in range(0, n, chunk):
        block = stacked[start : start + chunk]
        dists = np.abs(block[:, None, :] - stacked[None, :, :]).max(axis=2)
        for i in range(len(block)):
            dists[i, start + i] = np.inf
        if float(dists.min()) < 10 * eps:
            raise UnstableDedup(
                "two distinct closure elements are closer than 10*eps; "
                "eps is misconfigured for these generators"
            )
