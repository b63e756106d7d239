"""Filling cycles in the cube.

Three engines produce a (k+1)-chain whose boundary is a given k-cycle:

* ``linear_fill`` carries the certificate (n-k)/(2(k+1)) * norm(z).  It
  scans every (coordinate, side) slice, scores each one by the exact cost
  of pushing that side across the slice and filling the rest one cube
  down, and recurses on the cheapest.  The minimum is at most the average
  over all 2n slices, which is exactly the certificate, so the bound
  survives every level of the recursion.

* ``recursive_fill`` carries the dimension-free certificate
  c_k * norm(z)^((k+1)/k).  It looks for a slice that crosses little of
  the cycle; if one side of such a slice is small it pushes that side
  across (case 1), if both sides are large it fills the crossing one
  degree down and splits the problem into the two hyperfaces (case 2),
  and if every slice crosses a lot the cycle is big enough that the
  linear bound already fits under the power bound (case 3).

* ``exact_fill`` is a branch-and-bound search for a minimum-weight
  filling, seeded with the linear filling and pruned by the admissible
  bound ceil(residual / (2(k+1))).

Degree-0 cycles (even vertex sets) are filled by pairing vertices along
monotone edge paths; they sit outside the power-law regime but the linear
certificate n/2 * norm(z) still holds for the pairing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import Chain, SliceDecomposition
from .constants import c_constant, constants_for
from .faces import Face

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "FillResult",
    "linear_fill",
    "recursive_fill",
    "exact_fill",
    "connected_components",
    "support_subcube",
    "fill_bound_linear",
    "fill_bound_power",
]

DEFAULT_NODE_BUDGET = 1_000_000


@dataclass(frozen=True)
class FillResult:
    """A filling plus provenance.

    ``bound_certificate`` is the value the strategy guarantees: an exact
    rational for the linear strategy, a float for the power bound, and the
    achieved weight for the exact search.  ``optimal`` is set only by a
    completed exact search.
    """

    filling: Chain
    strategy: str
    bound_certificate: Fraction | float | int
    optimal: bool = False
    nodes_explored: int = 0


def _require_cycle(z: Chain) -> None:
    boundary = z.boundary()
    if boundary.support:
        sample = ", ".join(str(f) for f in boundary.sorted_faces()[:6])
        raise ValueError(
            f"chain is not a cycle: boundary has {boundary.norm} faces ({sample})"
        )


def fill_bound_linear(n: int, k: int, norm: int) -> Fraction:
    """The linear certificate (n-k) * norm / (2(k+1)), exactly."""
    if not 0 <= k <= n:
        raise ValueError(f"degree {k} outside [0, {n}]")
    if norm < 0:
        raise ValueError("norm must be nonnegative")
    return Fraction((n - k) * norm, 2 * (k + 1))


def fill_bound_power(k: int, norm: int) -> float:
    """The dimension-free certificate c_k * norm^((k+1)/k)."""
    if k < 1:
        raise ValueError(f"degree {k} must be at least 1")
    if norm < 0:
        raise ValueError("norm must be nonnegative")
    return c_constant(k) * float(norm) ** ((k + 1) / k)


def _top_cell_fill(z: Chain) -> Chain:
    # In Q_{k+1} the only nonempty k-cycle is the boundary of the top cell.
    top = Face(z.n, (1 << z.n) - 1, 0)
    if z.support == top.boundary():
        return Chain(z.n, z.n, frozenset((top,)))
    raise ValueError("chain is not a cycle")


def _fill_zero_cycle(z: Chain) -> Chain:
    """Pair up vertices and connect each pair by a monotone edge path."""
    vertices = z.sorted_faces()
    if len(vertices) % 2:
        raise ValueError("a vertex chain of odd size has no filling")
    edges: set[Face] = set()
    for a, b in zip(vertices[0::2], vertices[1::2]):
        current = a.fixed_bits
        diff = current ^ b.fixed_bits
        while diff:
            bit = diff & -diff
            edges ^= {Face(z.n, bit, current & ~bit)}
            current ^= bit
            diff &= diff - 1
    return Chain(z.n, 1, frozenset(edges))


def _best_slice(z: Chain) -> SliceDecomposition:
    """The (coordinate, side) slice minimizing the exact inductive cost."""
    n, k = z.n, z.k
    tail = Fraction(n - k - 1, 2 * (k + 1))
    best: SliceDecomposition | None = None
    best_score: Fraction | None = None
    for coordinate in range(1, n + 1):
        cut = z.slice(coordinate, 1)
        both = cut.z_plus.norm + cut.z_minus.norm
        for designated in (cut, cut.swapped()):
            score = designated.z_plus.norm + tail * both
            if best_score is None or score < best_score:
                best, best_score = designated, score
    assert best is not None
    return best


def _linear_fill_chain(z: Chain) -> Chain:
    if not z.support:
        return Chain(z.n, z.k + 1)
    if z.k == 0:
        return _fill_zero_cycle(z)
    if z.n == z.k + 1:
        return _top_cell_fill(z)
    cut = _best_slice(z)
    inner = _linear_fill_chain(cut.z_plus + cut.z_minus)
    pushed = cut.z_plus.prism(cut.coordinate)
    return inner.inject(cut.coordinate, f"fixed-{1 - cut.plus_value}") + pushed


def linear_fill(z: Chain) -> FillResult:
    """Fill a cycle within the certificate (n-k)/(2(k+1)) * norm(z)."""
    _require_cycle(z)
    if z.support and z.n < z.k + 1:
        raise ValueError("no fillings exist above the top degree")
    certificate = (
        fill_bound_linear(z.n, z.k, z.norm) if z.support else Fraction(0)
    )
    return FillResult(_linear_fill_chain(z), "linear", certificate)


def connected_components(z: Chain) -> list[Chain]:
    """Partition the support into classes linked by shared (k-1)-faces."""
    if not z.support:
        return []
    by_boundary: dict[Face, list[Face]] = {}
    for face in z.support:
        for g in face.boundary():
            by_boundary.setdefault(g, []).append(face)
    components: list[Chain] = []
    seen: set[Face] = set()
    for face in z.sorted_faces():
        if face in seen:
            continue
        block = {face}
        queue = [face]
        while queue:
            current = queue.pop()
            for g in current.boundary():
                for neighbour in by_boundary[g]:
                    if neighbour not in block:
                        block.add(neighbour)
                        queue.append(neighbour)
        seen |= block
        components.append(Chain(z.n, z.k, frozenset(block)))
    return components


def support_subcube(z: Chain) -> tuple[tuple[int, ...], dict[int, int], Chain]:
    """Active coordinates, pinned values of the rest, and the restriction.

    A coordinate is active when some face leaves it free or when the support
    takes both pinned values there.  The restricted chain lives in a cube of
    dimension len(active); injecting the pinned coordinates back recovers z.
    """
    if not z.support:
        return ((), {}, Chain(0, z.k))
    full = (1 << z.n) - 1
    free_any = 0
    ones = 0
    zeros = 0
    for face in z.support:
        free_any |= face.free_mask
        ones |= face.fixed_bits
        zeros |= ~face.fixed_bits & ~face.free_mask & full
    active_mask = free_any | (ones & zeros)
    active = tuple(i + 1 for i in range(z.n) if active_mask >> i & 1)
    fixed_values = {
        i + 1: 1 if ones >> i & 1 else 0
        for i in range(z.n)
        if not active_mask >> i & 1
    }
    inactive_desc = sorted(fixed_values, reverse=True)
    restricted = []
    for face in z.support:
        reduced = face
        for coordinate in inactive_desc:
            reduced = reduced.delete_coordinate(coordinate)
        restricted.append(reduced)
    return (active, fixed_values, Chain(len(active), z.k, frozenset(restricted)))


def _embed_from_subcube(chain: Chain, fixed_values: dict[int, int]) -> Chain:
    out = chain
    for coordinate in sorted(fixed_values):
        out = out.inject(coordinate, f"fixed-{fixed_values[coordinate]}")
    return out


def _recursive_fill_chain(z: Chain) -> Chain:
    n, k = z.n, z.k
    if not z.support:
        return Chain(n, k + 1)
    if n == k + 1:
        return _top_cell_fill(z)
    if k == 1:
        # A connected 1-cycle of norm 2m fits in an m-dimensional subcube,
        # where the linear certificate is already quadratic in the norm.
        parts = Chain(n, 2)
        for component in connected_components(z):
            _active, fixed_values, inner = support_subcube(component)
            parts = parts + _embed_from_subcube(_linear_fill_chain(inner), fixed_values)
        return parts

    # A coordinate nothing crosses, with everything on one side: descend
    # into that hyperface before any case analysis.
    for coordinate in range(1, n + 1):
        cut = z.slice(coordinate, 1)
        if not cut.z_zero.support and (not cut.z_plus.support or not cut.z_minus.support):
            side = cut.z_plus if cut.z_plus.support else cut.z_minus
            value = 1 if cut.z_plus.support else 0
            return _recursive_fill_chain(side).inject(coordinate, f"fixed-{value}")

    consts = constants_for(k)
    threshold = consts.epsilon * float(z.norm) ** ((k - 1) / k)
    candidates: list[tuple[int, int, int, SliceDecomposition]] = []
    for coordinate in range(1, n + 1):
        cut = z.slice(coordinate, 1)
        crossing = cut.z_zero.norm
        if crossing >= threshold:
            continue
        small_side = min(cut.z_plus.norm, cut.z_minus.norm)
        cheap = small_side <= consts.delta * float(crossing) ** (k / (k - 1))
        candidates.append((crossing, 0 if cheap else 1, coordinate, cut))

    if not candidates:
        # Every slice crosses a lot, so the cycle is large and the linear
        # certificate fits under the power certificate.
        return _linear_fill_chain(z)

    _, cheap_tag, _, cut = min(candidates, key=lambda item: item[:3])
    if cheap_tag == 0:
        # Case 1: push the smaller side across the slice.
        if cut.z_plus.norm > cut.z_minus.norm:
            cut = cut.swapped()
        inner = _recursive_fill_chain(cut.z_plus + cut.z_minus)
        pushed = cut.z_plus.prism(cut.coordinate)
        return inner.inject(cut.coordinate, f"fixed-{1 - cut.plus_value}") + pushed

    # Case 2: fill the crossing one degree down, cap it with its prism, and
    # fill the two corrected sides separately in their hyperfaces.
    w0 = _recursive_fill_chain(cut.z_zero)
    plus_part = _recursive_fill_chain(cut.z_plus + w0)
    minus_part = _recursive_fill_chain(cut.z_minus + w0)
    return (
        w0.prism(cut.coordinate)
        + plus_part.inject(cut.coordinate, f"fixed-{cut.plus_value}")
        + minus_part.inject(cut.coordinate, f"fixed-{1 - cut.plus_value}")
    )


def recursive_fill(z: Chain) -> FillResult:
    """Fill a cycle within the certificate c_k * norm(z)^((k+1)/k)."""
    _require_cycle(z)
    if z.support and z.k < 1:
        raise ValueError("degree-0 cycles are outside the power-law regime; use linear_fill")
    if z.support and z.n < z.k + 1:
        raise ValueError("no fillings exist above the top degree")
    certificate = fill_bound_power(z.k, z.norm) if z.support else 0.0
    return FillResult(_recursive_fill_chain(z), "recursive", certificate)


def exact_fill(z: Chain, node_budget: int = DEFAULT_NODE_BUDGET) -> FillResult:
    """Minimum-weight filling by branch and bound.

    Any filling must contain a cell incident to each residual face, so the
    search branches on the coboundary cells of the minimum-rank residual
    face, in rank order, excluding cells already tried at this node so the
    branches partition the solution space.  A node is pruned when its weight
    plus ceil(residual / (2(k+1))) cannot beat the best known filling
    (each cell clears at most 2(k+1) residual faces).

    If the node budget runs out, the best filling found so far is returned
    with ``optimal`` False.  Node counts are deterministic.
    """
    if node_budget <= 0:
        raise ValueError("node budget must be positive")
    _require_cycle(z)
    if not z.support:
        return FillResult(Chain(z.n, z.k + 1), "exact", 0, optimal=True)

    seed = _linear_fill_chain(z)
    best = seed
    best_weight = seed.norm
    denominator = 2 * (z.k + 1)
    floor_weight = -(-z.norm // denominator)
    if best_weight <= floor_weight:
        # The seed already meets the global lower bound.
        return FillResult(best, "exact", best_weight, optimal=True)

    boundary_cache: dict[Face, frozenset[Face]] = {}

    def cell_boundary(cell: Face) -> frozenset[Face]:
        cached = boundary_cache.get(cell)
        if cached is None:
            cached = cell.boundary()
            boundary_cache[cell] = cached
        return cached

    chosen: set[Face] = set()
    excluded: set[Face] = set()
    nodes = 0
    aborted = False

    def search(residual: frozenset[Face], weight: int) -> None:
        nonlocal best, best_weight, nodes, aborted
        if aborted:
            return
        nodes += 1
        if nodes > node_budget:
            aborted = True
            return
        if not residual:
            if weight < best_weight:
                best_weight = weight
                best = Chain(z.n, z.k + 1, frozenset(chosen))
            return
        if weight + -(-len(residual) // denominator) >= best_weight:
            return
        pivot = min(residual)
        options = sorted(
            cell for cell in pivot.coboundary() if cell not in chosen and cell not in excluded
        )
        tried: list[Face] = []
        for cell in options:
            chosen.add(cell)
            search(residual ^ cell_boundary(cell), weight + 1)
            chosen.remove(cell)
            if aborted:
                break
            excluded.add(cell)
            tried.append(cell)
        for cell in tried:
            excluded.remove(cell)

    search(z.support, 0)
    return FillResult(best, "exact", best_weight, optimal=not aborted, nodes_explored=nodes)
