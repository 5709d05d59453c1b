"""Exact search for linear quotient orderings.

Whether the colon ideal at a position is variable-generated depends only on
the *set* of preceding generators, so the search walks subsets instead of
permutations: a depth-first traversal over linear-extendable subsets with a
visited-set memo.  Within the node budget the reported maximum prefix
length is exact.

Candidates are tried in reverse input order; the choice is arbitrary but
fixed, and it is what makes the returned witnesses reproducible run to run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import DuplicateGeneratorError, LinquotError
from .monomials import Monomial

DEFAULT_NODE_BUDGET = 10_000_000

Exps = tuple[int, ...]


def _step_linear(chosen: list[Exps], cand: Exps) -> bool:
    """Is (chosen) : (cand) generated by variables?"""
    colons = [tuple(x - y if x > y else 0 for x, y in zip(p, cand)) for p in chosen]
    var_set = {c.index(1) for c in colons if sum(c) == 1}
    return all(any(c[v] for v in var_set) for c in colons)


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a most-linear search.

    ``ordering`` is a full permutation of the input whose first
    ``linear_prefix_length`` quotients are linear; the tail (when not fully
    linear) is the unused generators in input order.  ``proven_maximal`` is
    False only when the node budget cut the traversal short.
    """

    ordering: tuple[Monomial, ...]
    linear_prefix_length: int
    fully_linear: bool
    nodes_explored: int
    elapsed: float
    proven_maximal: bool

    def prefix(self) -> list[Monomial]:
        return list(self.ordering[:self.linear_prefix_length])


def linear_prefix_length(ordering: Sequence[Monomial]) -> int:
    """Largest n such that the quotients at positions 1..n are all linear."""
    exps = [m.exponents for m in ordering]
    chosen: list[Exps] = []
    for i, e in enumerate(exps):
        if i and not _step_linear(chosen, e):
            return i
        chosen.append(e)
    return len(exps)


def _dfs(exps: list[Exps], budget: int, stop_at_full: bool):
    """Iterative DFS over linear-extendable subsets.

    Returns (best_seq, nodes, exhausted) where nodes counts extension
    attempts (linearity tests) and exhausted means the whole reachable
    space was traversed within budget.
    """
    r = len(exps)
    candidates = tuple(range(r - 1, -1, -1))
    visited = {0}
    nodes = 0
    seq: list[int] = []
    chosen: list[Exps] = []
    best: list[int] = []
    stack = [iter(candidates)]
    mask = 0
    exhausted = True
    while stack:
        descended = False
        for t in stack[-1]:
            if mask >> t & 1:
                continue
            child = mask | (1 << t)
            if child in visited:
                continue
            nodes += 1
            if nodes > budget:
                return best, nodes - 1, False
            if _step_linear(chosen, exps[t]):
                visited.add(child)
                mask = child
                seq.append(t)
                chosen.append(exps[t])
                if len(seq) > len(best):
                    best = seq.copy()
                    if stop_at_full and len(best) == r:
                        return best, nodes, True
                stack.append(iter(candidates))
                descended = True
                break
        if not descended:
            stack.pop()
            if seq and len(seq) >= len(stack):
                t = seq.pop()
                chosen.pop()
                mask &= ~(1 << t)
    return best, nodes, exhausted


def _prepare(generators: Sequence[Monomial]) -> list[Monomial]:
    gens = list(generators)
    if not gens:
        raise LinquotError("need at least one generator")
    if len({m.exponents for m in gens}) != len(gens):
        raise DuplicateGeneratorError("generators must be pairwise distinct")
    return gens


def most_linear_ordering(generators: Sequence[Monomial],
                         budget: int = DEFAULT_NODE_BUDGET) -> SearchResult:
    """An ordering achieving the maximum linear prefix length over all
    permutations (exact when the traversal completes within budget)."""
    gens = _prepare(generators)
    exps = [m.exponents for m in gens]
    t0 = time.perf_counter()
    best, nodes, exhausted = _dfs(exps, budget, stop_at_full=True)
    elapsed = time.perf_counter() - t0
    used = set(best)
    tail = [i for i in range(len(gens)) if i not in used]
    ordering = tuple(gens[i] for i in best) + tuple(gens[i] for i in tail)
    full = len(best) == len(gens)
    return SearchResult(ordering, len(best), full, nodes, elapsed,
                        proven_maximal=exhausted or full)


def find_linear_ordering(generators: Sequence[Monomial],
                         budget: int = DEFAULT_NODE_BUDGET) -> Optional[list[Monomial]]:
    """Some linear quotient ordering of the generators, or None when no
    permutation has linear quotients (None is only authoritative when the
    search completed within budget)."""
    result = most_linear_ordering(generators, budget=budget)
    if result.fully_linear:
        return list(result.ordering)
    return None
