"""Exact domination-number computation and per-vertex classification.

The core solver is a branch-and-bound over adjacency bitmasks: it
branches on the undominated vertex with the fewest remaining candidate
dominators (ties to the smallest label), seeds the incumbent with a
greedy cover, and prunes with the coverage lower bound
ceil(undominated / best-possible-coverage).  Results are exact and
deterministic, including the witness sets.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable

from .graphs import Graph, bits, delete_vertices, mask_of, set_of

__all__ = [
    "DominationReport",
    "is_dominating",
    "domination_number",
    "minimum_dominating_set",
    "constrained_domination_number",
    "minimum_dominating_sets",
    "independent_domination_number",
    "private_neighbors",
    "classify_vertices",
    "all_minimum_sets_efficient",
    "all_minimum_sets_cliques",
    "clear_caches",
]


@dataclass(frozen=True)
class DominationReport:
    """Everything the characterization layer needs to know about one graph.

    good[v] / bad[v] say whether v belongs to some / no minimum dominating
    set; critical[v] says deleting v drops the domination number by one,
    and critical_vertices collects those v.  strong_equality means every
    minimum dominating set is independent (so the independent domination
    number is witnessed by all of them).
    """

    gamma: int
    witness: frozenset[int]
    good: tuple[bool, ...]
    bad: tuple[bool, ...]
    critical: tuple[bool, ...]
    critical_vertices: frozenset[int]
    independent_domination_number: int
    strong_equality: bool


def is_dominating(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff every vertex of g is in the set or adjacent to a member."""
    m = _checked_mask(g, vertices)
    dom = 0
    for v in bits(m):
        dom |= g.closed[v]
    return dom == (1 << g.n) - 1


def _checked_mask(g: Graph, vertices: Iterable[int]) -> int:
    m = mask_of(vertices)
    if m & ~((1 << g.n) - 1) or m < 0:
        raise ValueError("vertex set is not contained in the graph")
    return m


def _solve(closed: tuple[int, ...], n: int, include: int = 0, exclude: int = 0):
    """Minimum dominating set containing ``include`` and avoiding ``exclude``.

    Returns (size, mask) or None when no such set exists.
    """
    full = (1 << n) - 1
    dominated = 0
    for v in bits(include):
        dominated |= closed[v]
    allowed = full & ~exclude & ~include

    undom = full & ~dominated
    for w in bits(undom):
        if not closed[w] & allowed:
            return None

    # greedy incumbent: repeatedly take the allowed vertex covering the most
    best_mask = include
    dom = dominated
    avail = allowed
    while dom != full:
        pick, pickcov = -1, 0
        for c in bits(avail):
            cov = (closed[c] & ~dom).bit_count()
            if cov > pickcov:
                pick, pickcov = c, cov
        best_mask |= 1 << pick
        dom |= closed[pick]
        avail &= ~(1 << pick)
    best = [best_mask.bit_count(), best_mask]

    def rec(size: int, mask: int, dominated: int, allowed: int) -> None:
        undom = full & ~dominated
        if not undom:
            if size < best[0]:
                best[0], best[1] = size, mask
            return
        # admissible bound: every added vertex covers at most maxcov new ones
        maxcov = 0
        for c in bits(allowed):
            cov = (closed[c] & undom).bit_count()
            if cov > maxcov:
                maxcov = cov
        if not maxcov:
            return
        need = (undom.bit_count() + maxcov - 1) // maxcov
        if size + need >= best[0]:
            return
        # branch vertex: undominated with fewest candidate dominators
        w, wcount = -1, n + 1
        for x in bits(undom):
            cnt = (closed[x] & allowed).bit_count()
            if cnt < wcount:
                w, wcount = x, cnt
        rem = allowed
        for c in bits(closed[w] & allowed):
            cbit = 1 << c
            rem &= ~cbit
            rec(size + 1, mask | cbit, dominated | closed[c], rem)

    rec(include.bit_count(), include, dominated, allowed)
    return best[0], best[1]


@lru_cache(maxsize=None)
def _gamma_witness(g: Graph) -> tuple[int, int]:
    size, mask = _solve(g.closed, g.n)
    return size, mask


def domination_number(g: Graph) -> int:
    return _gamma_witness(g)[0]


def minimum_dominating_set(g: Graph) -> frozenset[int]:
    """A deterministic witness minimum dominating set."""
    return set_of(_gamma_witness(g)[1])


@lru_cache(maxsize=None)
def _constrained(g: Graph, include: int, exclude: int):
    if include & exclude:
        raise ValueError("include and exclude overlap")
    res = _solve(g.closed, g.n, include, exclude)
    return None if res is None else res[0]


def constrained_domination_number(
    g: Graph, include: Iterable[int] = (), exclude: Iterable[int] = ()
) -> int | None:
    """Minimum size of a dominating set forced to contain ``include`` and
    avoid ``exclude``; None when no such set exists (infeasible queries are
    ordinary data, not errors)."""
    return _constrained(g, _checked_mask(g, include), _checked_mask(g, exclude))


@lru_cache(maxsize=None)
def _gamma_set_masks(g: Graph) -> tuple[int, ...]:
    gamma = domination_number(g)
    full = (1 << g.n) - 1
    closed = g.closed
    out = []
    for comb in combinations(range(g.n), gamma):
        dom = 0
        for v in comb:
            dom |= closed[v]
        if dom == full:
            out.append(mask_of(comb))
    return tuple(out)


def minimum_dominating_sets(g: Graph) -> list[frozenset[int]]:
    """All minimum dominating sets, lexicographically ordered."""
    return [set_of(m) for m in _gamma_set_masks(g)]


def _solve_independent(nbr: tuple[int, ...], closed: tuple[int, ...], n: int) -> int:
    """Minimum size of an independent dominating set (always exists)."""
    full = (1 << n) - 1

    # greedy maximal independent incumbent
    dom, size, avail = 0, 0, full
    while dom != full:
        pick, pickcov = -1, 0
        for c in bits(avail):
            cov = (closed[c] & ~dom).bit_count()
            if cov > pickcov:
                pick, pickcov = c, cov
        dom |= closed[pick]
        avail &= ~closed[pick]
        size += 1
    best = [size]

    def rec(size: int, dominated: int, allowed: int) -> None:
        undom = full & ~dominated
        if not undom:
            if size < best[0]:
                best[0] = size
            return
        maxcov = 0
        for c in bits(allowed):
            cov = (closed[c] & undom).bit_count()
            if cov > maxcov:
                maxcov = cov
        if not maxcov:
            return
        if size + (undom.bit_count() + maxcov - 1) // maxcov >= best[0]:
            return
        w, wcount = -1, n + 1
        for x in bits(undom):
            cnt = (closed[x] & allowed).bit_count()
            if cnt < wcount:
                w, wcount = x, cnt
        rem = allowed
        for c in bits(closed[w] & allowed):
            cbit = 1 << c
            rem &= ~cbit
            # chosen vertices must stay pairwise nonadjacent
            rec(size + 1, dominated | closed[c], rem & ~nbr[c])

    rec(0, 0, full)
    return best[0]


@lru_cache(maxsize=None)
def independent_domination_number(g: Graph) -> int:
    return _solve_independent(g.nbr, g.closed, g.n)


def private_neighbors(g: Graph, x: int, group: Iterable[int]) -> frozenset[int]:
    """Vertices dominated by x and by no other member of the group.

    Closed-neighborhood convention: x counts as its own private neighbor
    when no other group member sits in N[x].
    """
    m = _checked_mask(g, group)
    if not m >> x & 1:
        raise ValueError(f"vertex {x} is not in the group")
    others = 0
    for y in bits(m & ~(1 << x)):
        others |= g.closed[y]
    return set_of(g.closed[x] & ~others)


def _mask_is_independent(g: Graph, m: int) -> bool:
    return all(g.nbr[v] & m == 0 for v in bits(m))


@lru_cache(maxsize=None)
def classify_vertices(g: Graph) -> DominationReport:
    gamma, witness_mask = _gamma_witness(g)
    # good via constrained search (forcing v in), not via set enumeration
    good = tuple(
        _constrained(g, 1 << v, 0) == gamma for v in range(g.n)
    )
    deleted_gammas = []
    for v in range(g.n):
        h, _ = delete_vertices(g, (v,))
        deleted_gammas.append(domination_number(h))
    critical = tuple(dg == gamma - 1 for dg in deleted_gammas)
    strong = all(_mask_is_independent(g, m) for m in _gamma_set_masks(g))
    return DominationReport(
        gamma=gamma,
        witness=set_of(witness_mask),
        good=good,
        bad=tuple(not b for b in good),
        critical=critical,
        critical_vertices=frozenset(v for v in range(g.n) if critical[v]),
        independent_domination_number=independent_domination_number(g),
        strong_equality=strong,
    )


def all_minimum_sets_efficient(g: Graph) -> bool:
    """True iff the closed neighborhoods of every minimum dominating set
    partition the vertex set (no overlaps, full coverage)."""
    full = (1 << g.n) - 1
    for m in _gamma_set_masks(g):
        union, total = 0, 0
        for v in bits(m):
            union |= g.closed[v]
            total += g.closed[v].bit_count()
        if union != full or total != g.n:
            return False
    return True


def all_minimum_sets_cliques(g: Graph) -> bool:
    """True iff every minimum dominating set induces a complete subgraph."""
    for m in _gamma_set_masks(g):
        for v in bits(m):
            rest = m & ~(1 << v)
            if g.nbr[v] & rest != rest:
                return False
    return True


_CACHED = (
    _gamma_witness,
    _constrained,
    _gamma_set_masks,
    independent_domination_number,
    classify_vertices,
)


def clear_caches() -> None:
    """Drop all per-graph memoization (bounded-memory corpus runs)."""
    for fn in _CACHED:
        fn.cache_clear()
