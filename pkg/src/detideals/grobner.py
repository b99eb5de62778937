"""Canonical ideal arithmetic over Z[x], Q[x] and Z[x0..x_{m-1}].

Over the Euclidean coefficient ring Z a plain field-style Buchberger loop is
wrong; completion here processes both S-polynomials (lcm of the leading
monomials, lcm of the leading coefficients) and G-polynomials (Bezout
combination realizing the gcd of the leading coefficients), and reduction
uses division with positive remainder.  The result is the minimal reduced
strong Groebner basis with positive leading coefficients, which is unique
for an ideal, so ideal equality is list equality.

No pair-skipping criterion beyond the provably redundant G-pairs is applied:
the product criterion familiar from field coefficients is unsound here
(e.g. the G-polynomial of the pair 2x+1, 3y+1 is xy+x-y and is essential).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from heapq import heappop, heappush
from typing import Iterable, Sequence

from .polyring import (
    DEGREVLEX,
    RING_Z,
    MultiPoly,
    UniPoly,
    divmod_poly,
    gcd_poly_q,
    monomial_key,
    poly_str,
)


@dataclass(frozen=True)
class Ring:
    """Ring tag for an ideal: Z[x], Q[x] or Z[x0..x_{arity-1}]."""

    kind: str  # "Zx" | "Qx" | "ZX"
    arity: int = 1
    order: str = DEGREVLEX

    def __post_init__(self):
        if self.kind not in ("Zx", "Qx", "ZX"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind in ("Zx", "Qx") and self.arity != 1:
            raise ValueError("univariate ring tags have arity 1")


ZX_UNI = Ring("Zx", 1, DEGREVLEX)
QX = Ring("Qx", 1, DEGREVLEX)


def zmulti(arity: int, order: str = DEGREVLEX) -> Ring:
    return Ring("ZX", arity, order)


class RingMismatchError(ValueError):
    pass


# ---------------------------------------------------------------------------
# strong Groebner engine on raw term dicts (exponent tuple -> int coefficient)


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _combine(t1: dict, c1: int, s1: tuple, t2: dict, c2: int, s2: tuple) -> dict:
    """c1 * x^s1 * t1 + c2 * x^s2 * t2."""
    out: dict = {}
    for m, a in t1.items():
        e = tuple(x + y for x, y in zip(m, s1))
        v = out.get(e, 0) + c1 * a
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    for m, a in t2.items():
        e = tuple(x + y for x, y in zip(m, s2))
        v = out.get(e, 0) + c2 * a
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _bezout(a: int, b: int) -> tuple[int, int]:
    """u, v with u*a + v*b == gcd(a, b) (a, b > 0)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_s, old_t


def _normal_form(terms: dict, elems: Sequence[tuple[dict, tuple, int]], key) -> dict:
    """Full reduction with positive remainders against (terms, lm, lc>0) records."""
    work = dict(terms)
    out: dict = {}
    while work:
        X = max(work, key=key)
        c = work.pop(X)
        while c:
            hit = None
            for gt, glm, glc in elems:
                if _divides(glm, X):
                    q = c // glc
                    if q:
                        hit = (gt, glm, glc, q)
                        break
            if hit is None:
                break
            gt, glm, glc, q = hit
            shift = tuple(x - g for g, x in zip(glm, X))
            c -= q * glc
            for m, a in gt.items():
                if m == glm:
                    continue
                e = tuple(x + y for x, y in zip(m, shift))
                v = work.get(e, 0) - q * a
                if v:
                    work[e] = v
                else:
                    work.pop(e, None)
        if c:
            out[X] = c
    return out


def _record(terms: dict, key) -> tuple[dict, tuple, int]:
    lm = max(terms, key=key)
    lc = terms[lm]
    if lc < 0:
        terms = {e: -c for e, c in terms.items()}
        lc = -lc
    return terms, lm, lc


def _poly_key(terms: dict, key):
    return tuple(sorted(((key(e), c) for e, c in terms.items()), reverse=True))


class StrongBasis:
    """Incremental strong Groebner basis over Z[x0..x_{arity-1}]."""

    def __init__(self, arity: int, order: str = DEGREVLEX):
        self.arity = arity
        self.key = monomial_key(order)
        self.elems: list[tuple[dict, tuple, int]] = []
        self._pairs: list = []
        self._unit = False

    def contains_unit(self) -> bool:
        return self._unit

    def reduce(self, terms: dict) -> dict:
        return _normal_form(terms, self.elems, self.key)

    def add(self, terms: dict) -> bool:
        """Feed one generator; returns True if it enlarged the basis."""
        if self._unit:
            return False
        r = self.reduce(terms)
        if not r:
            return False
        self._append(r)
        self._complete()
        return True

    def _append(self, terms: dict):
        rec = _record(terms, self.key)
        if not any(rec[1]) and rec[2] == 1:
            self._unit = True
        j = len(self.elems)
        self.elems.append(rec)
        _, lmj, _ = rec
        for i in range(j):
            lmi = self.elems[i][1]
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
            heappush(self._pairs, (self.key(lcm), i, j))

    def _complete(self):
        while self._pairs:
            if self._unit:
                self._pairs.clear()
                return
            _, i, j = heappop(self._pairs)
            ti, lmi, lci = self.elems[i]
            tj, lmj, lcj = self.elems[j]
            lcm = tuple(max(a, b) for a, b in zip(lmi, lmj))
            si = tuple(l - a for l, a in zip(lcm, lmi))
            sj = tuple(l - b for l, b in zip(lcm, lmj))
            g = math.gcd(lci, lcj)
            l = lci // g * lcj
            r = self.reduce(_combine(ti, l // lci, si, tj, -(l // lcj), sj))
            if r:
                self._append(r)
            if lci % lcj and lcj % lci:
                u, v = _bezout(lci, lcj)
                r = self.reduce(_combine(ti, u, si, tj, v, sj))
                if r:
                    self._append(r)

    def canonical(self) -> list[dict]:
        """Minimal reduced basis, signs positive, sorted ascending."""
        if self._unit:
            return [{(0,) * self.arity: 1}]
        elems = list(self.elems)
        while True:
            elems = self._minimalize(elems)
            elems, changed = self._interreduce(elems)
            if not changed:
                break
        elems.sort(key=lambda rec: (self.key(rec[1]), rec[2], _poly_key(rec[0], self.key)))
        return [dict(t) for t, _, _ in elems]

    def _minimalize(self, elems):
        elems = sorted(elems, key=lambda rec: (self.key(rec[1]), rec[2], _poly_key(rec[0], self.key)))
        keep: list[tuple[dict, tuple, int]] = []
        for t, lm, lc in elems:
            if any(_divides(klm, lm) and lc % klc == 0 for _, klm, klc in keep):
                continue
            keep.append((t, lm, lc))
        return keep

    def _interreduce(self, elems):
        changed = False
        while True:
            dirty = False
            for idx in range(len(elems)):
                t = elems[idx][0]
                others = elems[:idx] + elems[idx + 1 :]
                r = _normal_form(t, others, self.key)
                if r != t:
                    dirty = changed = True
                    if r:
                        elems[idx] = _record(r, self.key)
                    else:
                        del elems[idx]
                    break
            if not dirty:
                return elems, changed


def strong_groebner(gens: Iterable[dict], arity: int, order: str = DEGREVLEX) -> list[dict]:
    basis = StrongBasis(arity, order)
    for g in gens:
        basis.add(g)
    return basis.canonical()


# ---------------------------------------------------------------------------
# Ideal: generators + lazily computed canonical basis


def _sort_gens(polys, arity, order):
    """Deterministic ascending feed order; small generators first."""
    key = monomial_key(order)
    dicts = []
    seen = set()
    for t in polys:
        if not t:
            continue
        rec = _record(t, key)[0]
        fz = frozenset(rec.items())
        if fz in seen:
            continue
        seen.add(fz)
        dicts.append(rec)
    dicts.sort(key=lambda t: _poly_key(t, key))
    return dicts


class Ideal:
    """An ideal with a ring tag and a canonical basis for exact comparison."""

    __slots__ = ("ring", "gens", "_basis")

    def __init__(self, ring: Ring, gens: Iterable):
        gens = tuple(gens)
        if ring.kind == "ZX":
            for g in gens:
                if not isinstance(g, MultiPoly) or g.arity != ring.arity:
                    raise RingMismatchError("generator does not live in the tagged ring")
        elif ring.kind == "Zx":
            for g in gens:
                if not isinstance(g, UniPoly) or g.ring != RING_Z:
                    raise RingMismatchError("generator does not live in the tagged ring")
        else:  # Qx
            gens = tuple(g.to_q() if isinstance(g, UniPoly) else g for g in gens)
            for g in gens:
                if not isinstance(g, UniPoly):
                    raise RingMismatchError("generator does not live in the tagged ring")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", gens)
        object.__setattr__(self, "_basis", None)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Ideal is immutable")

    # -- canonical basis

    def canonical_basis(self) -> tuple:
        if self._basis is not None:
            return self._basis
        ring = self.ring
        if ring.kind == "Qx":
            nz = [g for g in self.gens if not g.is_zero()]
            if not nz:
                basis: tuple = ()
            else:
                g = nz[0]
                for h in nz[1:]:
                    if g.is_constant():
                        break
                    g = gcd_poly_q(g, h)
                basis = (g.monic(),)
        else:
            if ring.kind == "Zx":
                dicts = [{(i,): c for i, c in enumerate(g.coeffs) if c} for g in self.gens]
            else:
                dicts = [dict(g.terms) for g in self.gens]
            raw = strong_groebner(_sort_gens(dicts, ring.arity, ring.order), ring.arity, ring.order)
            if ring.kind == "Zx":
                basis = tuple(MultiPoly(1, t).to_unipoly() for t in raw)
            else:
                basis = tuple(MultiPoly(ring.arity, t) for t in raw)
        object.__setattr__(self, "_basis", basis)
        return basis

    # -- predicates

    def is_zero(self) -> bool:
        return not self.canonical_basis()

    def is_trivial(self) -> bool:
        basis = self.canonical_basis()
        if len(basis) != 1:
            return False
        g = basis[0]
        return g.is_constant() and g.constant_value() == 1

    def member(self, p) -> bool:
        ring = self.ring
        if ring.kind == "Qx":
            if isinstance(p, UniPoly):
                p = p.to_q()
            if not isinstance(p, UniPoly):
                raise RingMismatchError("element does not live in the ideal's ring")
            basis = self.canonical_basis()
            if p.is_zero():
                return True
            if not basis:
                return False
            _, r = divmod_poly(p, basis[0])
            return r.is_zero()
        if ring.kind == "Zx":
            if not isinstance(p, UniPoly) or p.ring != RING_Z:
                raise RingMismatchError("element does not live in the ideal's ring")
            terms = {(i,): c for i, c in enumerate(p.coeffs) if c}
        else:
            if not isinstance(p, MultiPoly) or p.arity != ring.arity:
                raise RingMismatchError("element does not live in the ideal's ring")
            terms = dict(p.terms)
        key = monomial_key(ring.order)
        elems = []
        for g in self.canonical_basis():
            t = ({(i,): c for i, c in enumerate(g.coeffs) if c}
                 if ring.kind == "Zx" else dict(g.terms))
            elems.append(_record(t, key))
        return not _normal_form(terms, elems, key)

    def equal(self, other: "Ideal") -> bool:
        if not isinstance(other, Ideal):
            raise TypeError("ideal_equal expects two Ideal values")
        if (self.ring.kind, self.ring.arity, self.ring.order) != (
            other.ring.kind,
            other.ring.arity,
            other.ring.order,
        ):
            raise RingMismatchError(f"cannot compare ideals over {self.ring} and {other.ring}")
        same = self.canonical_basis() == other.canonical_basis()
        if not same and __debug__:
            # canonical-form uniqueness guard: distinct lists must show a
            # failed membership somewhere
            mutual = all(other.member(g) for g in self.canonical_basis()) and all(
                self.member(g) for g in other.canonical_basis()
            )
            if mutual:
                raise AssertionError(
                    "canonical basis uniqueness violated: ideals are mutually "
                    f"contained but bases differ: {self.basis_strings()} vs {other.basis_strings()}"
                )
        return same

    # -- rendering

    def basis_strings(self, var: str = "x", names: Sequence[str] | None = None) -> list[str]:
        ring = self.ring
        if ring.kind == "ZX":
            return [poly_str(g, names=names, order=ring.order) for g in self.canonical_basis()]
        return [poly_str(g, var=var) for g in self.canonical_basis()]

    def to_json(self, k: int | None = None, var: str = "x",
                names: Sequence[str] | None = None) -> dict:
        out = {"ring": self.ring.kind, "basis": self.basis_strings(var=var, names=names)}
        if k is not None:
            out["k"] = k
        return out

    def __repr__(self) -> str:
        return f"Ideal({self.ring.kind}: <{', '.join(self.basis_strings())}>)"


def canonical_basis(ideal: Ideal) -> tuple:
    return ideal.canonical_basis()


def ideal_member(p, ideal: Ideal) -> bool:
    return ideal.member(p)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    return a.equal(b)


def is_trivial(ideal: Ideal) -> bool:
    return ideal.is_trivial()
