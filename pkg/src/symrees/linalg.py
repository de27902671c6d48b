"""Exact rational linear algebra.

All computations here are over the rationals (Python ``int`` and
``fractions.Fraction``), with no floating point anywhere: the verdicts built
on top of this module are exact yes/no statements.  Rank and row-space
membership use fraction-free Bareiss elimination on integer-cleared rows;
null spaces come from a plain reduced row echelon form over ``Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

try:  # GMP integers when available; elimination entries reach thousands of bits
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover
    _mpz = int

Rat = int | Fraction


def falling_factorial(n: int, k: int) -> int:
    """Return n(n-1)...(n-k+1), the k-th falling factorial at n.

    Defined for any integer n (negative included) and k >= 0; the empty
    product (k = 0) is 1.  This is the value of the k-th derivative of
    v**n at v = 1, divided by nothing: d^k/dv^k v^n |_{v=1}.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = 1
    for i in range(k):
        out *= n - i
    return out


def _row_to_ints(row: Sequence[Rat]) -> list[int]:
    """Clear denominators of one row (rank is invariant under row scaling)."""
    denoms = [x.denominator for x in row if type(x) is not int]
    if not denoms:
        return list(row)
    scale = math.lcm(*denoms)
    return [int(x * scale) for x in row]


def _bareiss_rank(rows: list[list[int]], ncols: int, guard: int | None = None) -> tuple[int, bool]:
    """Fraction-free elimination; returns (rank, guard_row_reduced_to_zero).

    ``guard`` marks one row that is never chosen as a pivot; on return the
    second component tells whether that row was annihilated by the others,
    i.e. whether it lies in their row space.  Entries stay integral: each
    update is (p*a - q*b) // prev_pivot with exact division (the entries are
    minors of the input matrix).
    """
    rows = [[_mpz(x) for x in row] for row in rows]
    nrows = len(rows)
    live = [i for i in range(nrows) if i != guard]
    prev = _mpz(1)
    rank = 0
    col = 0
    while col < ncols and rank < len(live):
        # pivot: smallest nonzero magnitude in the column
        pivot_at = -1
        best = None
        for idx in range(rank, len(live)):
            v = rows[live[idx]][col]
            if v != 0 and (best is None or abs(v) < best):
                best = abs(v)
                pivot_at = idx
        if pivot_at < 0:
            col += 1
            continue
        live[rank], live[pivot_at] = live[pivot_at], live[rank]
        pr = rows[live[rank]]
        p = pr[col]
        targets = [live[i] for i in range(rank + 1, len(live))]
        if guard is not None:
            targets.append(guard)
        pr_tail = pr[col:]
        for i in targets:
            ri = rows[i]
            q = ri[col]
            if q == 0:
                if p != prev:
                    ri[col:] = [(p * x) // prev for x in ri[col:]]
            elif prev == 1:
                ri[col:] = [p * x - q * y for x, y in zip(ri[col:], pr_tail)]
            else:
                ri[col:] = [(p * x - q * y) // prev for x, y in zip(ri[col:], pr_tail)]
        prev = p
        rank += 1
        col += 1
    guard_zero = guard is not None and all(x == 0 for x in rows[guard])
    return rank, guard_zero


class QMatrix:
    """Dense exact matrix over the rationals with labelled columns.

    Immutable after construction; entries may be ``int`` or ``Fraction``
    (both exact).  Column labels are opaque tags used to keep witness
    coordinates attached to the lattice points they stand for.
    """

    def __init__(self, entries: Sequence[Sequence[Rat]], col_labels: Sequence | None = None):
        self.entries = [list(row) for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        for row in self.entries:
            if len(row) != self.cols:
                raise ValueError("ragged rows")
        if col_labels is None:
            col_labels = list(range(self.cols))
        self.col_labels = list(col_labels)
        if len(self.col_labels) != self.cols:
            raise ValueError("need one label per column")
        if len(set(self.col_labels)) != self.cols:
            raise ValueError("column labels must be distinct")

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"

    def rank(self) -> int:
        rows = [_row_to_ints(r) for r in self.entries]
        rows = [r for r in rows if any(r)]
        if not rows:
            return 0
        rank, _ = _bareiss_rank(rows, self.cols)
        return rank

    def rank_and_row_space_contains(self, v: Sequence[Rat]) -> tuple[int, bool]:
        """(rank of the matrix, whether v lies in its row space), one pass.

        The candidate row is carried through the elimination without ever
        being chosen as a pivot; it ends up zero exactly when it is a
        combination of the matrix rows.
        """
        if len(v) != self.cols:
            raise ValueError("length mismatch")
        rows = [_row_to_ints(r) for r in self.entries]
        rows = [r for r in rows if any(r)]
        guard = _row_to_ints(v)
        if not any(guard):
            return (0 if not rows else _bareiss_rank(rows, self.cols)[0]), True
        rows.append(guard)
        return _bareiss_rank(rows, self.cols, guard=len(rows) - 1)

    def row_space_contains(self, v: Sequence[Rat]) -> bool:
        """True iff v is a rational linear combination of the rows."""
        return self.rank_and_row_space_contains(v)[1]

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form over Fraction; returns (rows, pivot cols).

        Reference implementation (the RREF of a matrix is unique, so this is
        the oracle for the fraction-free variant below).  Pivot choice:
        largest |numerator * denominator| in the column.
        """
        m = [[Fraction(x) for x in row] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            best, best_size = -1, None
            for i in range(r, self.rows):
                if m[i][c] != 0:
                    size = abs(m[i][c].numerator * m[i][c].denominator)
                    if best_size is None or size > best_size:
                        best, best_size = i, size
            if best < 0:
                continue
            m[r], m[best] = m[best], m[r]
            inv = 1 / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def _rref_fraction_free(self) -> tuple[list[list[Fraction]], list[int]]:
        """Same (rows, pivots) as rref(), via integer Gauss-Jordan.

        One-step fraction-free Jordan elimination: every update divides by
        the previous pivot, exactly; a nonzero remainder would mean a logic
        error, so the division is checked.  Rows are normalized to leading 1
        only at the end.
        """
        m = [[_mpz(x) for x in _row_to_ints(row)] for row in self.entries]
        nrows = len(m)
        pivots: list[int] = []
        prev = _mpz(1)
        r = 0
        for c in range(self.cols):
            pivot_at = -1
            best = None
            for i in range(r, nrows):
                v = m[i][c]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot_at = i
            if pivot_at < 0:
                continue
            m[r], m[pivot_at] = m[pivot_at], m[r]
            pr = m[r]
            p = pr[c]
            for i in range(nrows):
                if i == r:
                    continue
                ri = m[i]
                q = ri[c]
                if q == 0:
                    if p != prev:
                        for j in range(self.cols):
                            num = p * ri[j]
                            quot, rem = divmod(num, prev)
                            if rem:
                                raise ArithmeticError("fraction-free division failed")
                            ri[j] = quot
                else:
                    for j in range(self.cols):
                        num = p * ri[j] - q * pr[j]
                        quot, rem = divmod(num, prev)
                        if rem:
                            raise ArithmeticError("fraction-free division failed")
                        ri[j] = quot
            prev = p
            pivots.append(c)
            r += 1
            if r == nrows:
                break
        reduced = []
        for row_index, pc in enumerate(pivots):
            lead = m[row_index][pc]
            reduced.append([Fraction(int(x), int(lead)) for x in m[row_index]])
        for row_index in range(len(pivots), nrows):
            reduced.append([Fraction(0)] * self.cols)
        return reduced, pivots

    def null_space(self) -> list[list[Fraction]]:
        """Basis of the exact kernel {x : Mx = 0}, one vector per free column.

        Deterministic: free columns in ascending order, and the basis vector
        for free column j has coordinate 1 there and 0 at the other free
        columns.  (This basis is canonical: it only depends on the RREF,
        which is unique.)
        """
        if self.cols == 0:
            return []
        m, pivots = self._rref_fraction_free()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [Fraction(0)] * self.cols
            vec[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                vec[pc] = -m[r][fc]
            basis.append(vec)
        return basis

    def mul_vector(self, x: Sequence[Rat]) -> list[Fraction]:
        if len(x) != self.cols:
            raise ValueError("length mismatch")
        return [sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0)) for row in self.entries]
