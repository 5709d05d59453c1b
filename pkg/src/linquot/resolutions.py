"""Iterated mapping-cone resolutions from linear quotient orderings.

Adding generator m_j whose colon ideal is generated by variables Q_j glues
the Koszul complex on Q_j (shifted by m_j) onto the resolution built so
far.  The resulting free resolution of the ideal has one basis element
f(sigma; j) for every j and every subset sigma of Q_j, sitting in
homological position |sigma|, with differential

    d f(sigma; j) = sum_a (-1)^a v_a f(sigma - v_a; j)  -  L(sigma; j),

where L is a lift into the previously built complex chosen so that
d(d f) = 0.  Lifts exist by exactness; they are found per multidegree as
small exact linear systems.  Every column is verified against the rank
recurrence as it is laid down, and `verify_complex` re-checks d o d = 0
from scratch.

Sign convention: the Koszul part alternates starting with +1 on the
smallest variable, and the lift is subtracted.  Any convention passing
`verify_complex` would do; this one is fixed so outputs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from .errors import LiftError, LinquotError
from .monomials import Monomial
from .quotients import quotient_variable_sets

Exps = tuple[int, ...]

# A matrix column: list of (row_index, integer coefficient, monomial exponents).
Column = list[tuple[int, int, Exps]]


@dataclass(frozen=True)
class Resolution:
    """A free resolution of a monomial ideal.

    ``ranks[p]`` is the rank at homological position p (position 0 indexes
    the generators), ``differentials[p-1]`` holds the columns of the map
    from position p to position p-1, and ``augmentation`` is the row of
    generator monomials.  ``labels[p]`` records, for introspection, which
    (generator, variable subset) pair each basis element came from.
    """

    ranks: tuple[int, ...]
    augmentation: tuple[Monomial, ...]
    differentials: tuple[tuple[Column, ...], ...]
    labels: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]

    @property
    def length(self) -> int:
        return len(self.ranks)

    def entry(self, p: int, row: int, col: int) -> dict[Exps, int]:
        """The polynomial entry of the p-th differential as {monomial: coeff}."""
        out: dict[Exps, int] = {}
        for (r, c, mono) in self.differentials[p - 1][col]:
            if r == row:
                out[mono] = out.get(mono, 0) + c
        return {m: c for m, c in out.items() if c}

    def to_json(self) -> dict:
        diffs = []
        for p in range(1, self.length):
            rows, cols = self.ranks[p - 1], self.ranks[p]
            mat = [[[] for _ in range(cols)] for _ in range(rows)]
            for col, column in enumerate(self.differentials[p - 1]):
                for (row, coeff, mono) in column:
                    mat[row][col].append({"coeff": coeff, "monomial": list(mono)})
            diffs.append(mat)
        return {"ranks": list(self.ranks),
                "augmentation": [list(m.exponents) for m in self.augmentation],
                "differentials": diffs}

    @classmethod
    def from_json(cls, data: dict) -> "Resolution":
        ranks = tuple(int(x) for x in data["ranks"])
        aug = tuple(Monomial(tuple(e)) for e in data["augmentation"])
        diffs = []
        for p, mat in enumerate(data["differentials"], start=1):
            cols: list[Column] = [[] for _ in range(ranks[p])]
            for row, entries in enumerate(mat):
                for col, terms in enumerate(entries):
                    for t in terms:
                        cols[col].append((row, int(t["coeff"]), tuple(t["monomial"])))
            diffs.append(tuple(cols))
        labels = tuple(tuple((0, ()) for _ in range(r)) for r in ranks)
        return cls(ranks, aug, tuple(diffs), labels)


class _ConeBuilder:
    def __init__(self, n: int):
        self.n = n
        self.mdeg: list[list[Exps]] = [[]]        # per position: multidegrees
        self.step: list[list[int]] = [[]]         # per position: creating generator index
        self.sigma: list[list[tuple[int, ...]]] = [[]]
        self.cols: list[list[Column]] = [[]]      # cols[p] for p >= 1; cols[0] unused
        self.index: list[dict[Exps, list[int]]] = [{}]
        self.scalars: list[dict[int, dict[int, int]]] = [{}]
        self.aug: list[Exps] = []

    def _ensure(self, p: int) -> None:
        while len(self.mdeg) <= p:
            self.mdeg.append([])
            self.step.append([])
            self.sigma.append([])
            self.cols.append([])
            self.index.append({})
            self.scalars.append({})

    def _add_basis(self, p: int, mu: Exps, j: int, sigma: tuple[int, ...]) -> int:
        self._ensure(p)
        bid = len(self.mdeg[p])
        self.mdeg[p].append(mu)
        self.step[p].append(j)
        self.sigma[p].append(sigma)
        self.index[p].setdefault(mu, []).append(bid)
        return bid

    # -- lift machinery ---------------------------------------------------

    def _old_candidates(self, p: int, mu: Exps, j: int) -> list[int]:
        """Basis ids at position p, created before step j, whose multidegree
        divides mu with a degree-1 quotient (the only kind that occurs in a
        minimal strand)."""
        out: list[int] = []
        seen: set[int] = set()
        idx = self.index[p]
        step_p = self.step[p]
        for v in range(self.n):
            if mu[v]:
                key = tuple(e - 1 if w == v else e for w, e in enumerate(mu))
                for bid in idx.get(key, ()):
                    if step_p[bid] < j and bid not in seen:
                        seen.add(bid)
                        out.append(bid)
        return out

    def _all_candidates(self, p: int, mu: Exps, j: int) -> list[int]:
        return [bid for bid, md in enumerate(self.mdeg[p])
                if self.step[p][bid] < j and all(a <= b for a, b in zip(md, mu))]

    def _column_scalars(self, p: int, bid: int) -> dict[int, int]:
        cache = self.scalars[p]
        col = cache.get(bid)
        if col is None:
            col = {}
            for (row, coeff, _mono) in self.cols[p][bid]:
                col[row] = col.get(row, 0) + coeff
            cache[bid] = col
        return col

    def _solve_lift(self, p: int, mu: Exps, j: int, target: dict[int, int]) -> dict[int, int]:
        """Coefficients c_b with sum c_b * d(basis b) = target, where b runs
        over pre-step-j basis at position p and everything is multigraded of
        degree mu (so scalars suffice)."""
        cands = self._old_candidates(p, mu, j)
        sol = self._try_candidates(p, cands, target)
        if sol is None:
            wide = self._all_candidates(p, mu, j)
            if len(wide) > len(cands):
                sol = self._try_candidates(p, wide, target)
        if sol is None:
            raise LiftError(f"no lift found in multidegree {mu} at position {p} "
                            f"(step {j}); this is an internal bug")
        return sol

    def _try_candidates(self, p: int, cands: list[int],
                        target: dict[int, int]) -> Optional[dict[int, int]]:
        if not cands:
            return None
        residual = {r: c for r, c in target.items() if c}

        # Support closure: only candidates transitively row-connected to the
        # target can appear in a solution (any solution restricts to one on
        # the closure), so the system shrinks to its relevant core.
        rows_seen = set(residual)
        pending = [(bid, self._column_scalars(p, bid)) for bid in cands]
        columns: dict[int, dict[int, int]] = {}
        grew = True
        while grew and pending:
            grew = False
            still = []
            for bid, col in pending:
                if any(r in rows_seen for r in col):
                    columns[bid] = col
                    rows_seen.update(col)
                    grew = True
                else:
                    still.append((bid, col))
            pending = still

        # Constraint peeling with a worklist: a row touched by exactly one
        # active candidate forces that candidate's coefficient.  The systems
        # arising from multigraded lifts are near-triangular, so this
        # usually resolves everything without any elimination.
        sol: dict[int, int] = {}
        active = dict(columns)
        touch: dict[int, set[int]] = {}
        for bid, col in columns.items():
            for r in col:
                touch.setdefault(r, set()).add(bid)
        for r in residual:
            if r not in touch:
                return None              # unreachable row: no solution here
        work = [r for r, bids in touch.items() if len(bids) == 1]
        while work:
            r = work.pop()
            bids = touch.get(r)
            if bids is None or len(bids) != 1:
                continue
            bid = next(iter(bids))
            col = active.pop(bid, None)
            if col is None:
                continue
            t = residual.get(r, 0)
            q, rem = divmod(t, col[r])
            if rem:
                return None              # forced non-integral coefficient
            if q:
                sol[bid] = q
            for rr, cc in col.items():
                if q:
                    new = residual.get(rr, 0) - q * cc
                    if new:
                        residual[rr] = new
                    else:
                        residual.pop(rr, None)
                owners = touch.get(rr)
                if owners is not None:
                    owners.discard(bid)
                    if not owners:
                        del touch[rr]
                        if residual.get(rr):
                            return None  # row left uncovered but nonzero
                    elif len(owners) == 1:
                        work.append(rr)
        if not residual:
            return sol
        # Coupled leftover: finish with exact elimination on the small core.
        rest = self._gauss(sorted(active), [active[b] for b in sorted(active)], residual)
        if rest is None:
            return None
        sol.update(rest)
        return sol

    @staticmethod
    def _gauss(cands: list[int], columns: list[dict[int, int]],
               target: dict[int, int]) -> Optional[dict[int, int]]:
        """Solve sum c_b * column_b = target exactly.

        Gauss-Jordan preferring unit pivots: these systems are built from
        Koszul signs, so +-1 pivots almost always exist and keep everything
        in small integers.  Any non-unit remainder is finished over the
        rationals.
        """
        rows = sorted(set(target) | {r for col in columns for r in col})
        rpos = {r: i for i, r in enumerate(rows)}
        m, nc = len(rows), len(columns)
        A: list[list] = [[0] * (nc + 1) for _ in range(m)]
        for cidx, col in enumerate(columns):
            for r, c in col.items():
                A[rpos[r]][cidx] = c
        for r, c in target.items():
            A[rpos[r]][nc] = c

        pivots: list[tuple[int, int]] = []   # (row, column)
        piv_cols: set[int] = set()
        rr = 0
        while rr < m and len(piv_cols) < nc:
            pick = None
            for i in range(rr, m):
                row = A[i]
                for c in range(nc):
                    if c not in piv_cols and (row[c] == 1 or row[c] == -1):
                        pick = (i, c)
                        break
                if pick:
                    break
            if pick is None:
                break
            i, c = pick
            A[rr], A[i] = A[i], A[rr]
            prow = A[rr]
            pval = prow[c]
            for i2 in range(m):
                if i2 == rr:
                    continue
                f = A[i2][c]
                if f:
                    f *= pval            # pval is +-1, so this is f / pval
                    A[i2] = [x - f * y for x, y in zip(A[i2], prow)]
            pivots.append((rr, c))
            piv_cols.add(c)
            rr += 1

        if rr < m and any(any(A[i][c] for c in range(nc) if c not in piv_cols) or A[i][nc]
                          for i in range(rr, m)):
            sol_rest = _ConeBuilder._fraction_solve(A, rr, m, nc, piv_cols)
            if sol_rest is None:
                return None
        else:
            sol_rest = {}

        sol: dict[int, int] = {}
        for (ri, c) in pivots:
            val = Fraction(A[ri][nc], A[ri][c])
            for c2, v2 in sol_rest.items():
                if A[ri][c2]:
                    val -= Fraction(A[ri][c2] * v2) / A[ri][c]
            if val:
                if val.denominator != 1:
                    raise LiftError("lift coefficients came out non-integral")
                sol[cands[c]] = int(val)
        for c2, v2 in sol_rest.items():
            if v2:
                if v2.denominator != 1:
                    raise LiftError("lift coefficients came out non-integral")
                sol[cands[c2]] = int(v2)
        return sol

    @staticmethod
    def _fraction_solve(A, rr: int, m: int, nc: int,
                        piv_cols: set[int]) -> Optional[dict[int, Fraction]]:
        """Generic rational elimination on the leftover block (rare)."""
        free = [c for c in range(nc) if c not in piv_cols]
        B = [[Fraction(A[i][c]) for c in free] + [Fraction(A[i][nc])]
             for i in range(rr, m)]
        nrows, nfree = len(B), len(free)
        piv2: list[tuple[int, int]] = []
        r2 = 0
        for c in range(nfree):
            piv = next((i for i in range(r2, nrows) if B[i][c]), None)
            if piv is None:
                continue
            B[r2], B[piv] = B[piv], B[r2]
            pv = B[r2][c]
            for i in range(nrows):
                if i != r2 and B[i][c]:
                    f = B[i][c] / pv
                    B[i] = [x - f * y for x, y in zip(B[i], B[r2])]
            piv2.append((r2, c))
            r2 += 1
            if r2 == nrows:
                break
        for i in range(r2, nrows):
            if B[i][nfree]:
                return None
        out: dict[int, Fraction] = {c: Fraction(0) for c in free}
        for (ri, c) in piv2:
            out[free[c]] = B[ri][nfree] / B[ri][c]
        return out

    # -- one generator ----------------------------------------------------

    def add_generator(self, j: int, gen: Exps, qvars: Sequence[int]) -> None:
        self.aug.append(gen)
        pos0_id = self._add_basis(0, gen, j, ())
        qvars = tuple(sorted(qvars))
        ids: dict[tuple[int, ...], int] = {(): pos0_id}   # step-local sigma -> basis id
        for s in range(1, len(qvars) + 1):
            self._ensure(s)
            for sigma in combinations(qvars, s):
                mu = list(gen)
                for v in sigma:
                    mu[v] += 1
                mu = tuple(mu)
                column: Column = []
                target: dict[int, int] = {}
                own_rows: dict[int, int] = {}
                for a, v in enumerate(sigma):
                    sign = 1 if a % 2 == 0 else -1
                    sub = sigma[:a] + sigma[a + 1:]
                    row = ids[sub]
                    var_mono = tuple(1 if w == v else 0 for w in range(self.n))
                    column.append((row, sign, var_mono))
                    if s == 1:
                        continue
                    # accumulate d(koszul part) to build the lift target
                    for (row2, c2, _m2) in self.cols[s - 1][row]:
                        bucket = own_rows if self.step[s - 2][row2] == j else target
                        bucket[row2] = bucket.get(row2, 0) + sign * c2
                if s == 1:
                    # target is v * gen in the augmentation; lift through a
                    # predecessor generator dividing it (smallest index wins)
                    lift = self._lift_position0(mu, j)
                    column.append(lift)
                else:
                    assert not any(own_rows.values()), "Koszul square did not cancel"
                    target = {r: c for r, c in target.items() if c}
                    sol = self._solve_lift(s - 1, mu, j, target)
                    for bid, c in sol.items():
                        u = tuple(a - b for a, b in zip(mu, self.mdeg[s - 1][bid]))
                        column.append((bid, -c, u))
                bid = self._add_basis(s, mu, j, sigma)
                self.cols[s].append(column)
                ids[sigma] = bid

    def _lift_position0(self, mu: Exps, j: int) -> tuple[int, int, Exps]:
        best: Optional[int] = None
        for v in range(self.n):
            if mu[v]:
                key = tuple(e - 1 if w == v else e for w, e in enumerate(mu))
                for bid in self.index[0].get(key, ()):
                    if self.step[0][bid] < j and (best is None or bid < best):
                        best = bid
        if best is None:
            for bid in self._all_candidates(0, mu, j):
                if best is None or bid < best:
                    best = bid
        if best is None:
            raise LiftError(f"no predecessor generator divides {mu}")
        u = tuple(a - b for a, b in zip(mu, self.mdeg[0][best]))
        return (best, -1, u)


def mapping_cone_resolution(ordering: Sequence[Monomial]) -> Resolution:
    """Build the iterated mapping-cone resolution of the ideal generated by
    a linear quotient ordering.  Refuses non-linear orderings."""
    if not ordering:
        raise LinquotError("empty ordering")
    n = ordering[0].n
    qsets = quotient_variable_sets(ordering)   # raises NonLinearOrderingError
    exps = [m.exponents for m in ordering]
    builder = _ConeBuilder(n)
    for j, gen in enumerate(exps):
        qvars = qsets[j]
        before = [len(builder.mdeg[p]) if p < len(builder.mdeg) else 0
                  for p in range(len(qvars) + 1)]
        builder.add_generator(j, gen, qvars)
        for s in range(len(qvars) + 1):
            added = len(builder.mdeg[s]) - before[s]
            assert added == comb(len(qvars), s), "cone rank recurrence violated"
    ranks = tuple(len(md) for md in builder.mdeg)
    pd = len(ranks) - 1
    labels = tuple(tuple(zip(builder.step[p], builder.sigma[p])) for p in range(pd + 1))
    diffs = tuple(tuple(builder.cols[p]) for p in range(1, pd + 1))
    return Resolution(ranks, tuple(Monomial(e) for e in builder.aug), diffs, labels)


# ------------------------------------------------------------ verification

def complex_defect(res: Resolution) -> Optional[tuple[int, int]]:
    """First (position, column) where d o d (or augmentation o d_1) fails to
    vanish, or None when the complex checks out."""
    if res.length >= 2:
        for col, column in enumerate(res.differentials[0]):
            acc: dict[Exps, int] = {}
            for (row, coeff, mono) in column:
                key = tuple(a + b for a, b in zip(mono, res.augmentation[row].exponents))
                acc[key] = acc.get(key, 0) + coeff
            if any(acc.values()):
                return (1, col)
    for p in range(2, res.length):
        lower = res.differentials[p - 2]
        for col, column in enumerate(res.differentials[p - 1]):
            acc2: dict[tuple[int, Exps], int] = {}
            for (row, coeff, mono) in column:
                for (row2, coeff2, mono2) in lower[row]:
                    key = (row2, tuple(a + b for a, b in zip(mono, mono2)))
                    acc2[key] = acc2.get(key, 0) + coeff * coeff2
            if any(acc2.values()):
                return (p, col)
    return None


def verify_complex(res: Resolution) -> bool:
    """True iff consecutive differentials compose to zero and the first
    differential lands in the kernel of the augmentation."""
    return complex_defect(res) is None


def verify_minimal(res: Resolution) -> bool:
    """True iff no differential entry has a nonzero constant term."""
    for matrix in res.differentials:
        for column in matrix:
            acc: dict[tuple[int, Exps], int] = {}
            for (row, coeff, mono) in column:
                acc[(row, mono)] = acc.get((row, mono), 0) + coeff
            if any(c and not any(mono) for (_row, mono), c in acc.items()):
                return False
    return True


def render_matrix(res: Resolution, p: int, context=None) -> str:
    """Bracketed text display of the p-th differential."""
    rows, cols = res.ranks[p - 1], res.ranks[p]
    cells = [["0"] * cols for _ in range(rows)]
    for col in range(cols):
        for row in range(rows):
            entry = res.entry(p, row, col)
            if entry:
                parts = []
                for mono, c in sorted(entry.items()):
                    txt = Monomial(mono).text(context)
                    if c == 1:
                        parts.append(txt if txt != "1" else "1")
                    elif c == -1:
                        parts.append(f"-{txt}")
                    else:
                        parts.append(f"{c}*{txt}")
                s = "+".join(parts).replace("+-", "-")
                cells[row][col] = s
    widths = [max(len(cells[r][c]) for r in range(rows)) for c in range(cols)]
    lines = []
    for r in range(rows):
        body = "  ".join(cells[r][c].rjust(widths[c]) for c in range(cols))
        lines.append(f"[ {body} ]")
    return "\n".join(lines)
