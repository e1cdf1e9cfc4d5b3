"""
Minimum set cover and maximum independent set over bitmask universes.

Sets, universes and adjacency rows are plain Python ints used as bitsets:
bit j of a set mask is element j.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from config.settings import settings
from core.errors import CapacityError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass
class SearchResult:
    size: int
    chosen: List[int]
    exact: bool
    nodes: int = 0
    solver: str = "greedy"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def greedy_cover(universe: int, sets: Sequence[int]) -> List[int]:
    """Chvatal's greedy rule: take the set covering most uncovered elements, lowest index on ties."""
    uncovered = universe
    chosen = []
    while uncovered:
        best, gain = -1, 0
        for i, s in enumerate(sets):
            g = popcount(s & uncovered)
            if g > gain:
                best, gain = i, g
        if best < 0:
            raise PreconditionError("candidate sets do not cover the universe", module="covering")
        chosen.append(best)
        uncovered &= ~sets[best]
    return chosen


def reduce_dominated(sets: Sequence[int]) -> List[int]:
    """Indices of the sets not contained in another set; equal sets keep their first copy."""
    first = {}
    for i, s in enumerate(sets):
        if s and s not in first:
            first[s] = i
    unique = sorted(first.items(), key=lambda kv: (-popcount(kv[0]), kv[1]))
    kept: List[Tuple[int, int]] = []
    for s, i in unique:
        if not any(s | t == t for t, _ in kept):
            kept.append((s, i))
    return sorted(i for _, i in kept)


def exact_cover(universe: int, sets: Sequence[int], max_candidates: Optional[int] = None,
                max_nodes: Optional[int] = None) -> SearchResult:
    """
    Minimum set cover by branch-and-bound.

    The greedy cover is the incumbent. Branching picks the uncovered element
    with the fewest candidate sets; pruning uses the size of a family of
    uncovered elements that share no candidate set.
    """
    max_candidates = settings.MAX_CANDIDATE_CENTERS if max_candidates is None else max_candidates
    max_nodes = settings.MAX_NODES if max_nodes is None else max_nodes

    keep = reduce_dominated(sets)
    if len(keep) > max_candidates:
        raise CapacityError(
            f"exact cover needs {len(keep)} candidate centers after reduction (cap {max_candidates})",
            module="covering",
        )
    reduced = [sets[i] for i in keep]
    incumbent = greedy_cover(universe, reduced)

    # element -> bitmask of candidate sets containing it
    holders = {}
    for e in iter_bits(universe):
        holders[e] = sum(1 << k for k, s in enumerate(reduced) if s >> e & 1)

    best = {"size": len(incumbent), "chosen": list(incumbent)}
    nodes = 0

    def lower_bound(uncovered: int) -> int:
        used = 0
        count = 0
        for e in sorted(iter_bits(uncovered), key=lambda x: popcount(holders[x])):
            if holders[e] & used == 0:
                used |= holders[e]
                count += 1
        largest = max(popcount(s & uncovered) for s in reduced)
        return max(count, -(-popcount(uncovered) // largest))

    def search(uncovered: int, chosen: List[int]):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise CapacityError(f"branch-and-bound exceeded {max_nodes} nodes", module="covering")
        if not uncovered:
            if len(chosen) < best["size"]:
                best["size"], best["chosen"] = len(chosen), list(chosen)
            return
        if len(chosen) + lower_bound(uncovered) >= best["size"]:
            return
        pivot = min(iter_bits(uncovered), key=lambda x: (popcount(holders[x]), x))
        options = sorted(iter_bits(holders[pivot]), key=lambda k: (-popcount(reduced[k] & uncovered), k))
        for k in options:
            chosen.append(k)
            search(uncovered & ~reduced[k], chosen)
            chosen.pop()

    search(universe, [])
    logger.debug(f"[SetCover] {len(sets)} candidates -> {len(reduced)} after dominance, "
                 f"optimum {best['size']} (greedy {len(incumbent)}), {nodes} nodes")
    return SearchResult(
        size=best["size"],
        chosen=sorted(keep[k] for k in best["chosen"]),
        exact=True,
        nodes=nodes,
        solver="branch_and_bound",
    )


def greedy_independent_set(adjacency: Sequence[int]) -> List[int]:
    """First-fit independent set in index order."""
    chosen = []
    blocked = 0
    for v, row in enumerate(adjacency):
        if not blocked >> v & 1:
            chosen.append(v)
            blocked |= row | (1 << v)
    return chosen


def max_independent_set(adjacency: Sequence[int], max_nodes: Optional[int] = None) -> SearchResult:
    """Maximum independent set of a conflict graph given as adjacency bitmasks."""
    max_nodes = settings.MAX_NODES if max_nodes is None else max_nodes
    n = len(adjacency)
    incumbent = greedy_independent_set(adjacency)
    best = {"size": len(incumbent), "chosen": list(incumbent)}
    nodes = 0

    def clique_cover_bound(mask: int) -> int:
        # vertices grouped greedily into cliques; an independent set takes at most one per clique
        count = 0
        while mask:
            v = (mask & -mask).bit_length() - 1
            clique = 1 << v
            candidates = mask & adjacency[v]
            while candidates:
                u = (candidates & -candidates).bit_length() - 1
                clique |= 1 << u
                candidates &= adjacency[u]
            mask &= ~clique
            count += 1
        return count

    def search(mask: int, chosen: List[int]):
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise CapacityError(f"packing search exceeded {max_nodes} nodes", module="covering")
        if not mask:
            if len(chosen) > best["size"]:
                best["size"], best["chosen"] = len(chosen), list(chosen)
            return
        if len(chosen) + clique_cover_bound(mask) <= best["size"]:
            return
        v = max(iter_bits(mask), key=lambda x: (popcount(adjacency[x] & mask), -x))
        chosen.append(v)
        search(mask & ~adjacency[v] & ~(1 << v), chosen)
        chosen.pop()
        if adjacency[v] & mask:
            search(mask & ~(1 << v), chosen)

    search((1 << n) - 1, [])
    return SearchResult(size=best["size"], chosen=sorted(best["chosen"]), exact=True, nodes=nodes,
                        solver="branch_and_bound")
