"""Exact monomial arithmetic over a fixed variable set.

Monomials are immutable dense exponent vectors; all arithmetic is entrywise
integer min/max/sum, so everything here is exact and hashable.  The variable
count in play never exceeds a few dozen, which makes dense vectors both the
simplest and the fastest representation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import ContextMismatchError, LinquotError

_TERM_RE = re.compile(r"^([A-Za-z][A-Za-z0-9_]*?)(?:\^(\d+))?$")
_INDEXED_RE = re.compile(r"^x_?(\d+)$")


@dataclass(frozen=True)
class VariableContext:
    """Names for the ambient polynomial ring's variables.

    Arithmetic only needs the count; the names exist for parsing and
    printing.  Defaults to x1..xn.
    """

    names: tuple[str, ...]

    def __post_init__(self):
        if len(self.names) < 1:
            raise LinquotError("need at least one variable")
        if len(set(self.names)) != len(self.names):
            raise LinquotError("variable names must be pairwise distinct")

    @classmethod
    def default(cls, n: int) -> "VariableContext":
        if n < 1:
            raise LinquotError("need at least one variable")
        return cls(tuple(f"x{i + 1}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        """Resolve a variable name to its 0-based index.

        Accepts the stored names plus the x_i / xi spellings for default
        contexts, so paper-style input like ``x_6^2*x_2^2`` parses.
        """
        try:
            return self.names.index(name)
        except ValueError:
            pass
        m = _INDEXED_RE.match(name)
        if m:
            i = int(m.group(1)) - 1
            if 0 <= i < self.n:
                return i
        raise LinquotError(f"unknown variable {name!r}")


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial as a dense vector of non-negative exponents."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise LinquotError(f"negative exponent in {self.exponents}")

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, v: int, n: int) -> "Monomial":
        e = [0] * n
        e[v] = 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def _check(self, other: "Monomial") -> None:
        if len(self.exponents) != len(other.exponents):
            raise ContextMismatchError(
                f"monomials live in different rings ({self.n} vs {other.n} variables)")

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def colon(self, other: "Monomial") -> "Monomial":
        """self / gcd(self, other): the generator each prefix element
        contributes to a colon ideal."""
        self._check(other)
        return Monomial(tuple(max(a - b, 0) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise LinquotError("negative power")
        return Monomial(tuple(a * k for a in self.exponents))

    def support(self) -> set[int]:
        return {v for v, e in enumerate(self.exponents) if e > 0}

    # -- text / JSON forms ------------------------------------------------

    def text(self, context: VariableContext | None = None) -> str:
        ctx = context or VariableContext.default(self.n)
        parts = []
        for v, e in enumerate(self.exponents):
            if e == 1:
                parts.append(ctx.names[v])
            elif e > 1:
                parts.append(f"{ctx.names[v]}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self) -> str:
        return self.text()

    def to_json(self) -> list[int]:
        return list(self.exponents)

    @classmethod
    def from_json(cls, data: list[int]) -> "Monomial":
        return cls(tuple(int(e) for e in data))

    @classmethod
    def parse(cls, text: str, context: VariableContext) -> "Monomial":
        """Parse product notation like ``x1^2*x3`` or ``x_6^2*x_2^2``."""
        text = text.strip()
        exps = [0] * context.n
        if text in ("1", ""):
            return cls(tuple(exps))
        for term in text.split("*"):
            term = term.strip()
            m = _TERM_RE.match(term)
            if not m:
                raise LinquotError(f"cannot parse monomial factor {term!r}")
            v = context.index_of(m.group(1))
            exps[v] += int(m.group(2)) if m.group(2) else 1
        return cls(tuple(exps))


# Module-level spellings of the core operations; handy for functional code.

def degree(m: Monomial) -> int:
    return m.degree()


def divides(a: Monomial, b: Monomial) -> bool:
    return a.divides(b)


def gcd(a: Monomial, b: Monomial) -> Monomial:
    return a.gcd(b)


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return a.lcm(b)


def colon_single(a: Monomial, b: Monomial) -> Monomial:
    return a.colon(b)


def support(m: Monomial) -> set[int]:
    return m.support()


def product(monomials, n: int) -> Monomial:
    out = [0] * n
    for m in monomials:
        for v, e in enumerate(m.exponents):
            out[v] += e
    return Monomial(tuple(out))


def display_sorted(monomials) -> list[Monomial]:
    """Canonical display order: descending reverse-reading of exponents.

    For single variables this lists higher indices first, matching the way
    quotient generators are conventionally printed (x6, x4, x2, ...).
    """
    return sorted(monomials, key=lambda m: tuple(reversed(m.exponents)), reverse=True)
