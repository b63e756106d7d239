"""The alternating-block cycle family and its sharpness bookkeeping.

For each choice of k free coordinates, the blocks of pinned coordinates
between consecutive stars are constant, and the block value flips at every
star (an empty block still flips).  The two choices of leading value give
two faces per star set, for a cycle of norm 2 * C(n, k) whose minimum
filling weight is exactly C(n, k+1).  The ratio fill / norm^((k+1)/k)
therefore approaches a positive constant, which is what pins the exponent
of the dimension-free filling bound.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial
from typing import Iterable, NamedTuple

from .chains import Chain
from .faces import Face
from .filling import exact_fill, linear_fill

__all__ = [
    "minimizer_member",
    "minimizer_cycle",
    "minimizer_norm",
    "minimizer_fill_value",
    "verify_minimizer",
    "SharpnessRow",
    "sharpness_asymptote",
    "sharpness_table",
]


def minimizer_member(n: int, stars: tuple[int, ...], parity_seed: int) -> Face:
    """One member face: stars at the given 1-based coordinates, pinned
    blocks alternating from ``parity_seed``, flipping at every star."""
    if parity_seed not in (0, 1):
        raise ValueError("parity_seed must be 0 or 1")
    if not all(1 <= s <= n for s in stars) or len(set(stars)) != len(stars):
        raise ValueError(f"stars must be distinct coordinates in [1, {n}]")
    return _block_face(n, tuple(s - 1 for s in stars), parity_seed)


def _block_face(n: int, stars: tuple[int, ...], leading: int) -> Face:
    free = 0
    for position in stars:
        free |= 1 << position
    fixed = 0
    passed = 0
    for position in range(n):
        if free >> position & 1:
            passed += 1
        elif (leading ^ passed) & 1:
            fixed |= 1 << position
    return Face(n, free, fixed)


@lru_cache(maxsize=None)
def _minimizer_chain(n: int, k: int) -> Chain:
    """The family member for any 0 <= k <= n.

    k = 0 gives the two antipodal constant vertices; k = n degenerates to
    the empty chain (both leading values name the same all-free face, which
    cancels over Z2).
    """
    if not 0 <= k <= n or n < 1:
        raise ValueError(f"need 0 <= k <= n with n >= 1, got n={n}, k={k}")
    support: set[Face] = set()
    for stars in itertools.combinations(range(n), k):
        for leading in (0, 1):
            support ^= {_block_face(n, stars, leading)}
    return Chain(n, k, frozenset(support))


def minimizer_cycle(n: int, k: int) -> Chain:
    """The norm-2*C(n,k) cycle that makes both filling bounds tight."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return _minimizer_chain(n, k)


def minimizer_norm(n: int, k: int) -> int:
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return 2 * comb(n, k)


def minimizer_fill_value(n: int, k: int) -> int:
    """The exact minimum filling weight, C(n, k+1)."""
    if not 1 <= k < n:
        raise ValueError(f"need 1 <= k < n, got n={n}, k={k}")
    return comb(n, k + 1)


def verify_minimizer(
    n: int,
    k: int,
    *,
    oracle_limit: int = 5,
    node_budget: int = 1_000_000,
) -> dict:
    """Check the family member's defining properties; returns a report.

    Structural checks run at any desk scale; the exact-oracle check is
    skipped (None) when n exceeds ``oracle_limit``.
    """
    z = minimizer_cycle(n, k)
    fill_value = comb(n, k + 1)
    cut = z.slice(1, 1)
    checks: dict[str, bool | None] = {
        "cycle": z.is_cycle(),
        "norm": z.norm == 2 * comb(n, k),
        "slice_sides": cut.z_plus + cut.z_minus == _minimizer_chain(n - 1, k),
        "slice_crossing": cut.z_zero == _minimizer_chain(n - 1, k - 1),
        "linear_sharpness": linear_fill(z).filling.norm == fill_value,
    }
    if n <= oracle_limit:
        result = exact_fill(z, node_budget)
        checks["oracle_fill"] = result.optimal and result.filling.norm == fill_value
    else:
        checks["oracle_fill"] = None
    return {
        "n": n,
        "k": k,
        "norm": z.norm,
        "fill_value": fill_value,
        "checks": checks,
        "ok": all(v for v in checks.values() if v is not None),
    }


class SharpnessRow(NamedTuple):
    n: int
    norm: int
    fill: int
    ratio: float
    asymptote: float
    quotient: float


def sharpness_asymptote(k: int) -> float:
    """Limit of fill / norm^((k+1)/k) over the family as n grows."""
    if k < 1:
        raise ValueError(f"degree {k} must be at least 1")
    return factorial(k) ** (1.0 / k) / (2.0 ** ((k + 1) / k) * (k + 1))


def sharpness_table(k: int, n_values: Iterable[int]) -> list[SharpnessRow]:
    """Closed-form rows (no chain construction), so n may be large."""
    if k < 1:
        raise ValueError(f"degree {k} must be at least 1")
    asymptote = sharpness_asymptote(k)
    rows = []
    for n in n_values:
        if n <= k:
            raise ValueError(f"need n > k, got n={n}, k={k}")
        norm = 2 * comb(n, k)
        fill = comb(n, k + 1)
        ratio = fill / float(norm) ** ((k + 1) / k)
        rows.append(SharpnessRow(n, norm, fill, ratio, asymptote, ratio / asymptote))
    return rows
