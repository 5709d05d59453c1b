"""Ordered generating lists for powers of edge ideals.

Two constructions live here: the revlex list of all formal k-fold edge
products (with first-occurrence representative flags), and the two-block
anticycle ordering with its relocated top generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .errors import FamilyParameterError, LinquotError
from .graphs import EdgeIdeal, anticycle
from .monomials import Monomial


@dataclass(frozen=True)
class EdgeDecomposition:
    """Exponent vector over edge positions: the formal product
    m_1^a_1 ... m_r^a_r."""

    alpha: tuple[int, ...]

    @property
    def k(self) -> int:
        return sum(self.alpha)

    def monomial(self, ideal: EdgeIdeal) -> Monomial:
        exps = [0] * ideal.context.n
        for t, a in enumerate(self.alpha):
            if a:
                i, j = ideal.graph.edges[t]
                exps[i] += a
                exps[j] += a
        return Monomial(tuple(exps))


@dataclass(frozen=True)
class PowerEntry:
    monomial: Monomial
    alpha: Optional[tuple[int, ...]]
    representative: bool

    def to_json(self) -> dict:
        return {"monomial": list(self.monomial.exponents),
                "alpha": list(self.alpha) if self.alpha is not None else None,
                "representative": self.representative}

    @classmethod
    def from_json(cls, data: dict) -> "PowerEntry":
        alpha = data.get("alpha")
        return cls(Monomial(tuple(data["monomial"])),
                   tuple(alpha) if alpha is not None else None,
                   bool(data["representative"]))


@dataclass(frozen=True)
class OrderedPowerGenerators:
    """An ordered generating list of I(G)^k with per-entry decomposition
    annotations and representative flags."""

    ideal: EdgeIdeal
    k: int
    entries: tuple[PowerEntry, ...]

    def monomials(self) -> list[Monomial]:
        return [e.monomial for e in self.entries]

    def representatives(self) -> list[Monomial]:
        return [e.monomial for e in self.entries if e.representative]

    def representative_flags(self) -> list[bool]:
        return [e.representative for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def revlex_precedes(alpha: tuple[int, ...], beta: tuple[int, ...]) -> bool:
    """True when the last nonzero entry of alpha - beta is negative."""
    for a, b in zip(reversed(alpha), reversed(beta)):
        if a != b:
            return a < b
    return False


def _revlex_compositions(r: int, k: int) -> Iterator[tuple[int, ...]]:
    # Generated directly in revlex order: recurse on the last coordinate.
    if r == 1:
        yield (k,)
        return
    for last in range(k + 1):
        for head in _revlex_compositions(r - 1, k - last):
            yield head + (last,)


def revlex_power_list(ideal: EdgeIdeal, k: int) -> OrderedPowerGenerators:
    """All C(r+k-1, k) formal k-fold products in revlex order, flagged by
    first occurrence of their vertex decomposition."""
    if k < 1:
        raise LinquotError("power k must be >= 1")
    r = len(ideal)
    n = ideal.context.n
    edge_exps = [ideal.graph.edge_monomial(t).exponents for t in range(r)]
    entries = []
    seen: set[tuple[int, ...]] = set()
    for alpha in _revlex_compositions(r, k):
        exps = [0] * n
        for t, a in enumerate(alpha):
            if a:
                ei = edge_exps[t]
                for v in range(n):
                    if ei[v]:
                        exps[v] += a * ei[v]
        key = tuple(exps)
        rep = key not in seen
        seen.add(key)
        entries.append(PowerEntry(Monomial(key), alpha, rep))
    assert len(entries) == comb(r + k - 1, k)
    return OrderedPowerGenerators(ideal, k, tuple(entries))


def representatives(ordering: OrderedPowerGenerators) -> list[Monomial]:
    return ordering.representatives()


def power_generators(ideal: EdgeIdeal, k: int) -> set[Monomial]:
    """The minimal generating set of I(G)^k: distinct k-fold edge products.

    All products share degree 2k, so distinctness is minimality.
    """
    if k < 1:
        raise LinquotError("power k must be >= 1")
    n = ideal.context.n
    edge_exps = [ideal.graph.edge_monomial(t).exponents for t in range(len(ideal))]
    cur = {(0,) * n}
    for _ in range(k):
        cur = {tuple(p[v] + e[v] for v in range(n)) for p in cur for e in edge_exps}
    return {Monomial(t) for t in cur}


def edge_decompositions_of(m: Monomial, ideal: EdgeIdeal) -> list[EdgeDecomposition]:
    """Every way to write m as a formal product of the ideal's edges,
    by exhaustive divide-and-recurse; empty when m is not such a product."""
    r = len(ideal)
    edges = [ideal.graph.edge_monomial(t) for t in range(r)]
    out: list[EdgeDecomposition] = []
    alpha = [0] * r

    def rec(rest: Monomial, t0: int) -> None:
        if rest.is_unit():
            out.append(EdgeDecomposition(tuple(alpha)))
            return
        for t in range(t0, r):
            if edges[t].divides(rest):
                alpha[t] += 1
                rec(rest.colon(edges[t]), t)
                alpha[t] -= 1

    rec(m, 0)
    return out


def _one_decomposition(m: Monomial, edges: list[Monomial]) -> Optional[tuple[int, ...]]:
    r = len(edges)
    alpha = [0] * r

    def rec(rest: Monomial, t0: int) -> bool:
        if rest.is_unit():
            return True
        for t in range(t0, r):
            if edges[t].divides(rest):
                alpha[t] += 1
                if rec(rest.colon(edges[t]), t):
                    return True
                alpha[t] -= 1
        return False

    return tuple(alpha) if rec(m, 0) else None


def _priority_key(m: Monomial, priority: list[int]) -> tuple[int, ...]:
    return tuple(m.exponents[v] for v in priority)


def anticycle_ordering(n: int, k: int) -> OrderedPowerGenerators:
    """The two-block ordering of the minimal generators of I(A_n)^k.

    Block F holds the generators divisible by x_n, sorted by descending lex
    with variable priority x_n > x_2 > ... > x_{n-1} > x_1.  Block S holds
    the rest, sorted by descending lex with priority x_1 > ... > x_{n-1},
    after which (x_1 x_{n-1})^k is relocated to sit immediately after the
    distinguished generator (x_1 x_{n-1})^{k-1} (x_2 x_{n-1}).

    k = 1 is produced but carries no linearity claim.
    """
    if n < 5:
        raise FamilyParameterError("anticycle ordering needs n >= 5")
    if k < 1:
        raise LinquotError("power k must be >= 1")
    ideal = anticycle(n)
    gens = power_generators(ideal, k)
    F = [m for m in gens if m.exponents[n - 1] > 0]
    S = [m for m in gens if m.exponents[n - 1] == 0]
    prio_f = [n - 1] + list(range(1, n - 1)) + [0]
    prio_s = list(range(n - 1))
    F.sort(key=lambda m: _priority_key(m, prio_f), reverse=True)
    S.sort(key=lambda m: _priority_key(m, prio_s), reverse=True)

    star_exp = [0] * n
    star_exp[0] = k
    star_exp[n - 2] = k
    star = Monomial(tuple(star_exp))
    dist_exp = [0] * n
    dist_exp[0] = k - 1
    dist_exp[1] = 1
    dist_exp[n - 2] = k
    distinguished = Monomial(tuple(dist_exp))
    S.remove(star)
    S.insert(S.index(distinguished) + 1, star)

    edges = [ideal.graph.edge_monomial(t) for t in range(len(ideal))]
    entries = []
    for m in F + S:
        alpha = _one_decomposition(m, edges)
        assert alpha is not None, "power generator must decompose into edges"
        entries.append(PowerEntry(m, alpha, True))
    return OrderedPowerGenerators(ideal, k, tuple(entries))


def anticycle_blocks(ordering: OrderedPowerGenerators) -> tuple[list[Monomial], list[Monomial]]:
    """Split an anticycle ordering back into its (F, S) blocks by
    divisibility by the last variable."""
    n = ordering.ideal.context.n
    mons = ordering.monomials()
    F = [m for m in mons if m.exponents[n - 1] > 0]
    S = [m for m in mons if m.exponents[n - 1] == 0]
    return F, S
