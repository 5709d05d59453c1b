"""Independent Betti-number oracles for monomial ideals.

Two brute-force methods that share no code with the quotient-count
formulas: per-multidegree simplicial homology of upper Koszul complexes,
and homology of the Taylor complex reduced mod the maximal ideal.  Both
compute exact ranks over the rationals via fraction-free (Bareiss)
elimination, so they are characteristic-zero answers.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import Sequence

from .errors import LinquotError, OracleBudgetError
from .monomials import Monomial
from .quotients import BettiTable

Exps = tuple[int, ...]

ORACLE_GENERATOR_BUDGET = 15
TAYLOR_GENERATOR_BUDGET = 11


def bareiss_rank(matrix: list[list[int]]) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    M = [row[:] for row in matrix]
    rows = len(M)
    cols = len(M[0]) if rows else 0
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, rows):
            mic = M[i][c]
            mrc = M[r][c]
            row_i, row_r = M[i], M[r]
            for jj in range(c + 1, cols):
                row_i[jj] = (row_i[jj] * mrc - mic * row_r[jj]) // prev
            row_i[c] = 0
        prev = M[r][c]
        r += 1
        if r == rows:
            break
    return r


def _lcm_lattice(gens: list[Exps]) -> set[Exps]:
    lattice = set(gens)
    frontier = set(gens)
    while frontier:
        new = set()
        for a in frontier:
            for g in gens:
                l = tuple(max(x, y) for x, y in zip(a, g))
                if l not in lattice:
                    new.add(l)
        lattice |= new
        frontier = new
    return lattice


def _upper_koszul_betti_at(mu: Exps, gens: list[Exps]) -> dict[int, int]:
    """Homological-index -> multigraded Betti number at multidegree mu,
    read off the reduced homology of the upper Koszul complex."""
    n = len(mu)

    def in_ideal(m: Exps) -> bool:
        return any(all(x >= y for x, y in zip(m, g)) for g in gens)

    verts = [v for v in range(n) if mu[v] > 0]
    faces: list[list[tuple[int, ...]]] = [[] for _ in range(len(verts) + 2)]
    for size in range(len(verts) + 1):
        for sigma in combinations(verts, size):
            m = list(mu)
            for v in sigma:
                m[v] -= 1
            if in_ideal(tuple(m)):
                faces[size].append(sigma)
    if not faces[0]:
        return {}

    pos = [ {f: i for i, f in enumerate(level)} for level in faces ]

    def boundary(size: int) -> list[list[int]]:
        mat = [[0] * len(faces[size]) for _ in range(len(faces[size - 1]))]
        for cidx, f in enumerate(faces[size]):
            for a in range(size):
                sub = f[:a] + f[a + 1:]
                if sub in pos[size - 1]:
                    mat[pos[size - 1][sub]][cidx] = -1 if a % 2 else 1
        return mat

    ranks = [0] * (len(verts) + 2)
    for size in range(1, len(verts) + 1):
        if faces[size] and faces[size - 1]:
            ranks[size] = bareiss_rank(boundary(size))

    # beta_{i, mu} = dim Htilde_{i-1}; with the empty face as the sole
    # (-1)-chain, that is |faces of size i| - rank b_i - rank b_{i+1},
    # and for i = 0 it degenerates to 1 - rank b_1.
    out: dict[int, int] = {}
    if ranks[1] == 0:
        out[0] = 1
    for i in range(1, len(verts) + 1):
        h = len(faces[i]) - ranks[i] - ranks[i + 1]
        if h:
            out[i] = h
    return out


def betti_oracle(generators: Sequence[Monomial], *,
                 max_generators: int = ORACLE_GENERATOR_BUDGET,
                 threads: int = 1) -> BettiTable:
    """Total Betti numbers via upper Koszul simplicial homology, summed over
    the lcm lattice.  Independent of any linear quotient structure."""
    gens = [m.exponents for m in generators]
    if not gens:
        raise LinquotError("need at least one generator")
    if len(gens) > max_generators:
        raise OracleBudgetError(f"{len(gens)} generators exceeds the oracle "
                                f"budget of {max_generators}")
    lattice = sorted(_lcm_lattice(gens))
    totals: dict[int, int] = {}
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = pool.map(lambda mu: _upper_koszul_betti_at(mu, gens), lattice)
    else:
        results = (_upper_koszul_betti_at(mu, gens) for mu in lattice)
    for local in results:
        for i, b in local.items():
            totals[i] = totals.get(i, 0) + b
    pd = max(totals)
    betti = tuple(totals.get(i, 0) for i in range(pd + 1))
    degrees = {m.degree() for m in generators}
    shift = degrees.pop() if len(degrees) == 1 else None
    return BettiTable(pd, betti, shift)


def betti_taylor(generators: Sequence[Monomial], *,
                 max_generators: int = TAYLOR_GENERATOR_BUDGET) -> BettiTable:
    """Total Betti numbers via the Taylor complex tensored down to the
    residue field: a second, structurally different enumeration."""
    gens = [m.exponents for m in generators]
    r = len(gens)
    if not gens:
        raise LinquotError("need at least one generator")
    if r > max_generators:
        raise OracleBudgetError(f"{r} generators exceeds the Taylor budget "
                                f"of {max_generators}")
    n = len(gens[0])

    subsets: list[list[tuple[int, ...]]] = [list(combinations(range(r), s))
                                            for s in range(r + 1)]
    lcms: list[dict[tuple[int, ...], Exps]] = []
    for s, level in enumerate(subsets):
        d: dict[tuple[int, ...], Exps] = {}
        for sub in level:
            acc = [0] * n
            for t in sub:
                g = gens[t]
                for v in range(n):
                    if g[v] > acc[v]:
                        acc[v] = g[v]
            d[sub] = tuple(acc)
        lcms.append(d)

    def reduced_boundary(s: int) -> list[list[int]]:
        lower = {sub: i for i, sub in enumerate(subsets[s - 1])}
        mat = [[0] * len(subsets[s]) for _ in range(len(subsets[s - 1]))]
        for cidx, sub in enumerate(subsets[s]):
            full = lcms[s][sub]
            for a in range(s):
                rest = sub[:a] + sub[a + 1:]
                if lcms[s - 1][rest] == full:   # unit entry survives mod m
                    mat[lower[rest]][cidx] = -1 if a % 2 else 1
        return mat

    ranks = [0] * (r + 2)
    for s in range(1, r + 1):
        if subsets[s] and subsets[s - 1]:
            ranks[s] = bareiss_rank(reduced_boundary(s))
    # beta_i(I) = dim H_{i+1} of the reduced Taylor complex of P/I
    totals = {}
    for i in range(r):
        s = i + 1
        h = len(subsets[s]) - ranks[s] - ranks[s + 1]
        if h:
            totals[i] = h
    pd = max(totals)
    betti = tuple(totals.get(i, 0) for i in range(pd + 1))
    degrees = {m.degree() for m in generators}
    shift = degrees.pop() if len(degrees) == 1 else None
    return BettiTable(pd, betti, shift)
