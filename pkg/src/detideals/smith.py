"""Smith normal forms over Z and Q[x], Delta_k oracles, cokernel groups.

snf_integer / snf_poly_q diagonalize by exact elementary operations;
delta_bruteforce recomputes every Delta_k as a gcd over all k-minors and is
the independent oracle the eliminations are tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .polyring import RING_Q, RING_Z, UniPoly, divmod_poly, gcd_poly_q, poly_str


@dataclass(frozen=True)
class SnfResult:
    """Invariant factors (nonzero only) of an n x n matrix over Z or Q[x]."""

    ring: str  # "Z" | "Qx"
    n: int
    factors: tuple

    @property
    def rank(self) -> int:
        return len(self.factors)

    def diagonal(self) -> tuple:
        """Diagonal padded with zeros to the matrix dimension."""
        zero = UniPoly.zero(RING_Q) if self.ring == "Qx" else 0
        return self.factors + (zero,) * (self.n - self.rank)

    def delta(self, k: int):
        """Delta_k = f_1 * ... * f_k (0 beyond the rank)."""
        if not 0 <= k <= self.n:
            raise ValueError("k out of range")
        if k > self.rank:
            return UniPoly.zero(RING_Q) if self.ring == "Qx" else 0
        if self.ring == "Qx":
            acc = UniPoly.const(1, RING_Q)
            for f in self.factors[:k]:
                acc = acc * f
            return acc
        acc = 1
        for f in self.factors[:k]:
            acc *= f
        return acc

    def delta_sequence(self) -> tuple:
        return tuple(self.delta(k) for k in range(1, self.n + 1))

    def to_json(self) -> dict:
        if self.ring == "Qx":
            factors = [poly_str(f) for f in self.diagonal()]
            return {"ring": "Qx", "n": self.n, "invariant_factors": factors}
        g = cokernel(self)
        return {
            "ring": "Z",
            "n": self.n,
            "invariant_factors": list(self.diagonal()),
            "cokernel": {"torsion": list(g.torsion), "free_rank": g.free_rank},
        }


@dataclass(frozen=True)
class GroupDescription:
    """Finitely generated abelian group: torsion orders (>1, dividing chain) + free rank."""

    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = [f"Z_{t}" for t in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


def cokernel(snf: SnfResult) -> GroupDescription:
    if snf.ring != "Z":
        raise ValueError("cokernel descriptions are computed over Z")
    return GroupDescription(
        torsion=tuple(f for f in snf.factors if f > 1),
        free_rank=snf.n - snf.rank,
    )


# ---------------------------------------------------------------------------
# integer SNF


def _divisibility_fix_int(diag: list[int]) -> list[int]:
    d = sorted(abs(x) for x in diag)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = math.gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] // g * d[j]
                    changed = True
        d.sort()
    return d


def snf_integer(matrix: Sequence[Sequence[int]]) -> SnfResult:
    """Invariant factors of a square integer matrix by elementary operations."""
    n = len(matrix)
    a = [[int(x) for x in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    diag: list[int] = []
    for t in range(n):
        # pivot: smallest nonzero absolute value in the remaining submatrix
        piv = None
        for i in range(t, n):
            for j in range(t, n):
                v = abs(a[i][j])
                if v and (piv is None or v < piv[0]):
                    piv = (v, i, j)
        if piv is None:
            break
        _, pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                v = a[i][t]
                if v:
                    q = v // p
                    if q:
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                v = a[t][j]
                if v:
                    q = v // p
                    if q:
                        for row in a:
                            row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if not dirty:
                break
        diag.append(a[t][t])
    return SnfResult("Z", n, tuple(_divisibility_fix_int(diag)))


# ---------------------------------------------------------------------------
# SNF over Q[x]


def _divisibility_fix_poly(diag: list[UniPoly]) -> list[UniPoly]:
    d = sorted((p.monic() for p in diag), key=lambda p: (p.degree, p.coeffs))
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                _, r = divmod_poly(d[j], d[i])
                if not r.is_zero():
                    g = gcd_poly_q(d[i], d[j])
                    q, _ = divmod_poly(d[i], g)
                    d[i], d[j] = g, (q * d[j]).monic()
                    changed = True
        d.sort(key=lambda p: (p.degree, p.coeffs))
    return d


def snf_poly_q(matrix: Sequence[Sequence[UniPoly]]) -> SnfResult:
    """Invariant factors (monic) of a square matrix over Q[x]."""
    n = len(matrix)
    a = [[p.to_q() for p in row] for row in matrix]
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    diag: list[UniPoly] = []
    for t in range(n):
        piv = None
        for i in range(t, n):
            for j in range(t, n):
                p = a[i][j]
                if not p.is_zero() and (piv is None or p.degree < piv[0]):
                    piv = (p.degree, i, j)
        if piv is None:
            break
        _, pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            scale = UniPoly.const(Fraction(1) / a[t][t].lc, RING_Q)
            a[t] = [scale * x for x in a[t]]
            p = a[t][t]
            dirty = False
            for i in range(t + 1, n):
                v = a[i][t]
                if not v.is_zero():
                    q, r = divmod_poly(v, p)
                    if not q.is_zero():
                        a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if not a[i][t].is_zero():
                        a[t], a[i] = a[i], a[t]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                v = a[t][j]
                if not v.is_zero():
                    q, r = divmod_poly(v, p)
                    if not q.is_zero():
                        for row in a:
                            row[j] = row[j] - q * row[t]
                    if not a[t][j].is_zero():
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
                        break
            if not dirty:
                break
        diag.append(a[t][t])
    return SnfResult("Qx", n, tuple(_divisibility_fix_poly(diag)))


# ---------------------------------------------------------------------------
# brute-force Delta_k oracle and characteristic polynomials


def minor_tables(matrix: Sequence[Sequence], max_k: int | None = None) -> dict:
    """All k x k subdeterminants for k = 1..max_k, memoized Laplace expansion.

    Works for any entry type supporting +, -, * (int, Fraction, UniPoly,
    MultiPoly).  Returns {k: {(rows, cols): det}}.
    """
    n = len(matrix)
    if max_k is None:
        max_k = n
    if not 1 <= max_k <= n:
        raise ValueError("k out of range")
    tables: dict[int, dict] = {}
    level = {((i,), (j,)): matrix[i][j] for i in range(n) for j in range(n)}
    tables[1] = level
    for k in range(2, max_k + 1):
        prev = tables[k - 1]
        level = {}
        for rows in combinations(range(n), k):
            r0 = rows[0]
            rest = rows[1:]
            for cols in combinations(range(n), k):
                acc = None
                for t, c in enumerate(cols):
                    sub = prev[(rest, cols[:t] + cols[t + 1 :])]
                    term = matrix[r0][c] * sub
                    if t % 2:
                        acc = -term if acc is None else acc - term
                    else:
                        acc = term if acc is None else acc + term
                level[(rows, cols)] = acc
        tables[k] = level
    return tables


def delta_bruteforce(matrix: Sequence[Sequence], k: int):
    """gcd of all k-minors, computed directly (the SNF oracle).

    Integer matrices give the nonnegative gcd; Q[x] matrices give the monic
    gcd (zero if every minor vanishes).
    """
    n = len(matrix)
    if not 1 <= k <= n:
        raise ValueError("k out of range")
    minors = list(minor_tables(matrix, k)[k].values())
    if isinstance(minors[0], UniPoly):
        g = UniPoly.zero(RING_Q)
        for m in minors:
            if m.is_zero():
                continue
            g = m.to_q().monic() if g.is_zero() else gcd_poly_q(g, m)
            if g.is_constant():
                break
        return g.monic() if not g.is_zero() else g
    g = 0
    for m in minors:
        g = math.gcd(g, m)
        if g == 1:
            break
    return g


def char_poly(matrix: Sequence[Sequence[int]]) -> UniPoly:
    """det(x*I - M) for an integer matrix, by the Faddeev-LeVerrier recurrence."""
    n = len(matrix)
    m = [[int(x) for x in row] for row in matrix]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    cur = [row[:] for row in m]
    for k in range(1, n + 1):
        c = -sum(cur[i][i] for i in range(n)) // k
        coeffs[n - k] = c
        if k == n:
            break
        for i in range(n):
            cur[i][i] += c
        cur = [
            [sum(m[i][t] * cur[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return UniPoly(coeffs, RING_Z)
