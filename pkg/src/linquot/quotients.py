"""Colon ideals along an ordering, the linearity tests, and the
projective-dimension / Betti-number bookkeeping they induce.

Everything here works on an ordered list of monomials.  The two linearity
tests are deliberately independent implementations of the same predicate:
one minimalizes each colon ideal and inspects degrees, the other runs the
pairwise gcd criterion; the test suite holds them equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional, Sequence

from .errors import DuplicateGeneratorError, LinquotError, NonLinearOrderingError
from .monomials import Monomial, display_sorted

Exps = tuple[int, ...]


def _colon(a: Exps, b: Exps) -> Exps:
    return tuple(x - y if x > y else 0 for x, y in zip(a, b))


def _divides(a: Exps, b: Exps) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _minimalize(colons: set[Exps]) -> list[Exps]:
    """Minimal elements under divisibility (duplicates already collapsed)."""
    mins: list[Exps] = []
    for c in sorted(colons, key=lambda t: (sum(t), t)):
        if not any(_divides(g, c) for g in mins):
            mins.append(c)
    return mins


def colon_minimal_generators(prefix, m: Monomial) -> tuple[Monomial, ...]:
    """Minimal generating set of (prefix) : (m) for a set of monomials.

    The empty prefix yields the empty set (the zero ideal).
    """
    prefix = list(prefix)
    me = m.exponents
    if any(p.exponents == me for p in prefix):
        raise DuplicateGeneratorError(f"{m} already lies in the prefix")
    colons = {_colon(p.exponents, me) for p in prefix}
    return tuple(display_sorted(Monomial(c) for c in _minimalize(colons)))


@dataclass(frozen=True)
class QuotientStep:
    """One position of a quotient report (1-based ``index``)."""

    index: int
    generators: tuple[Monomial, ...]
    linear: bool
    nu: int

    @property
    def is_unit(self) -> bool:
        return any(g.is_unit() for g in self.generators)

    def to_json(self) -> dict:
        return {"index": self.index,
                "generators": [list(g.exponents) for g in self.generators],
                "linear": self.linear,
                "nu": self.nu}

    @classmethod
    def from_json(cls, data: dict) -> "QuotientStep":
        gens = tuple(Monomial(tuple(g)) for g in data["generators"])
        return cls(int(data["index"]), gens, bool(data["linear"]), int(data["nu"]))


@dataclass(frozen=True)
class QuotientReport:
    steps: tuple[QuotientStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def nus(self) -> list[int]:
        return [s.nu for s in self.steps]

    def all_linear(self) -> bool:
        return all(s.linear for s in self.steps)

    def all_linear_up_to_repetition(self) -> bool:
        return all(s.linear or s.is_unit for s in self.steps)

    def to_json(self) -> list[dict]:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, data: list[dict]) -> "QuotientReport":
        return cls(tuple(QuotientStep.from_json(d) for d in data))


def get_quotients(ordering: Sequence[Monomial], *, allow_repetitions: bool = False) -> QuotientReport:
    """Minimal generators of every successive colon ideal along ``ordering``.

    Position 1 reports the zero ideal (no generators, nu = 0).  A repeated
    monomial makes its colon ideal the unit ideal; that is an error unless
    ``allow_repetitions`` is set, in which case the unit generator is
    reported as-is so revlex lists can be audited before dedup.
    """
    exps = [m.exponents for m in ordering]
    if not allow_repetitions and len(set(exps)) != len(exps):
        raise DuplicateGeneratorError("ordering repeats a monomial "
                                      "(pass allow_repetitions=True to audit anyway)")
    steps = [QuotientStep(1, (), True, 0)] if ordering else []
    for i in range(1, len(exps)):
        me = exps[i]
        colons = {_colon(exps[j], me) for j in range(i)}
        mins = _minimalize(colons)
        gens = tuple(display_sorted(Monomial(c) for c in mins))
        linear = all(sum(c) == 1 for c in mins)
        steps.append(QuotientStep(i + 1, gens, linear, len(mins)))
    return QuotientReport(tuple(steps))


# ------------------------------------------------------------- linearity

@dataclass(frozen=True)
class LinearityReport:
    """Outcome of the linearity scan.

    ``first_failure`` is the 0-based position of the first generator whose
    colon ideal is not variable-generated; ``violators`` lists the 0-based
    predecessor positions at that step for which no single-variable colon
    divides their contribution (the pairwise-criterion witnesses).
    """

    size: int
    prefix_length: int
    first_failure: Optional[int]
    violators: tuple[int, ...]

    @property
    def linear(self) -> bool:
        return self.first_failure is None


def _step_witnesses(exps: list[Exps], i: int) -> tuple[int, ...]:
    me = exps[i]
    colons = [_colon(exps[j], me) for j in range(i)]
    var_set = {c.index(1) for c in colons if sum(c) == 1}
    return tuple(j for j, c in enumerate(colons)
                 if not any(c[v] for v in var_set))


def linearity_report(ordering: Sequence[Monomial]) -> LinearityReport:
    """Scan the ordering with the pairwise criterion, stopping at the first
    non-linear position."""
    exps = [m.exponents for m in ordering]
    for i in range(1, len(exps)):
        bad = _step_witnesses(exps, i)
        if bad:
            return LinearityReport(len(exps), i, i, bad)
    return LinearityReport(len(exps), len(exps), None, ())


def is_linear_by_quotients(ordering: Sequence[Monomial]) -> bool:
    """Implementation A: minimalize every colon ideal, demand degree-1
    minimal generators throughout."""
    return get_quotients(ordering).all_linear()


def is_linear_by_pairs(ordering: Sequence[Monomial]) -> bool:
    """Implementation B: the gcd criterion.  For every j < i some h < i
    must satisfy colon(m_h, m_i) = x with x | colon(m_j, m_i)."""
    return linearity_report(ordering).linear


def is_linear_ordering(ordering: Sequence[Monomial], *, implementation: str = "pairs") -> bool:
    if implementation == "pairs":
        return is_linear_by_pairs(ordering)
    if implementation == "quotients":
        return is_linear_by_quotients(ordering)
    raise LinquotError(f"unknown implementation {implementation!r}")


def is_violating_pair(ordering: Sequence[Monomial], j: int, i: int) -> bool:
    """True when predecessor j witnesses failure of the gcd criterion at
    position i (0-based): no h < i gives a variable colon dividing
    colon(m_j, m_i)."""
    if not 0 <= j < i < len(ordering):
        raise LinquotError("need 0 <= j < i < len(ordering)")
    exps = [m.exponents for m in ordering]
    return j in _step_witnesses(exps, i)


# ------------------------------------------------------- pd / Betti data

@dataclass(frozen=True)
class BettiTable:
    """Total Betti numbers beta_0..beta_pd of an ideal.

    ``degree_shift`` records the common generating degree when the ideal is
    equigenerated (all beta_i then live in degree degree_shift + i under
    linear quotients); mixed-degree inputs leave it unset.
    """

    pd: int
    betti: tuple[int, ...]
    degree_shift: Optional[int] = None

    def __post_init__(self):
        if len(self.betti) != self.pd + 1:
            raise LinquotError("betti table length must be pd + 1")
        if self.betti[self.pd] < 1 or self.betti[0] < 1:
            raise LinquotError("betti numbers at the ends must be positive")

    def text(self) -> str:
        return f"pd={self.pd}\nbeta: " + " ".join(str(b) for b in self.betti)

    def to_json(self) -> dict:
        return {"pd": self.pd, "betti": list(self.betti),
                "degree_shift": self.degree_shift}

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        return cls(int(data["pd"]), tuple(int(b) for b in data["betti"]),
                   data.get("degree_shift"))

    @classmethod
    def parse_text(cls, text: str) -> "BettiTable":
        lines = [l.strip() for l in text.strip().splitlines() if l.strip()]
        if len(lines) != 2 or not lines[0].startswith("pd=") or not lines[1].startswith("beta:"):
            raise LinquotError("betti text form is 'pd=P' then 'beta: b0 b1 ... bP'")
        pd = int(lines[0][3:])
        betti = tuple(int(tok) for tok in lines[1][5:].split())
        return cls(pd, betti)


def quotient_variable_sets(ordering: Sequence[Monomial]) -> list[list[int]]:
    """The variable indices generating each colon ideal along a linear
    quotient ordering (position 1 gets the empty list).

    Raises :class:`NonLinearOrderingError` on the first failing position;
    a linear quotient's minimal generators are exactly its variable colons.
    """
    if not ordering:
        raise LinquotError("empty ordering")
    exps = [m.exponents for m in ordering]
    sets: list[list[int]] = [[]]
    for i in range(1, len(exps)):
        me = exps[i]
        colons = [_colon(exps[j], me) for j in range(i)]
        var_set = {c.index(1) for c in colons if sum(c) == 1}
        if not all(any(c[v] for v in var_set) for c in colons):
            raise NonLinearOrderingError(i + 1)
        sets.append(sorted(var_set))
    return sets


def quotient_counts(ordering: Sequence[Monomial]) -> list[int]:
    """nu_j along a linear quotient ordering (nu_1 = 0)."""
    return [len(s) for s in quotient_variable_sets(ordering)]


def pd_from_ordering(ordering: Sequence[Monomial]) -> int:
    return max(quotient_counts(ordering))


def betti_from_ordering(ordering: Sequence[Monomial]) -> BettiTable:
    nus = quotient_counts(ordering)
    pd = max(nus)
    betti = tuple(sum(comb(nu, i) for nu in nus) for i in range(pd + 1))
    degrees = {m.degree() for m in ordering}
    shift = degrees.pop() if len(degrees) == 1 else None
    return BettiTable(pd, betti, shift)
