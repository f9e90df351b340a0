"""Ground-truth dimensions by exact linear algebra.

``dim C^r_k`` is the kernel dimension of the degree-k part of the map

    R^{f_2} + R(-r-1)^{f_1^0}  ->  R^{f_1^0},   [boundary | diag(l_tau^(r+1))]

whose kernel is the spline module on the cone.  Matrices are stored as
sparse integer rows; the rank is computed by fraction-free elimination, so
no rounding ever enters.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .geometry import Complex, LinForm, face_counts
from .hilbert import binom2_count

Monomial = tuple[int, int, int]


@lru_cache(maxsize=None)
def homog_basis(k: int) -> tuple[Monomial, ...]:
    """Exponent triples of the degree-k monomials in x, y, z (x-major order)."""
    if k < 0:
        return ()
    return tuple((i, j, k - i - j) for i in range(k, -1, -1) for j in range(k - i, -1, -1))


@lru_cache(maxsize=None)
def _basis_index(k: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(homog_basis(k))}


@lru_cache(maxsize=None)
def form_power(form: LinForm, e: int) -> tuple[tuple[Monomial, int], ...]:
    """Nonzero coefficients of ``form**e`` by the multinomial theorem."""
    a, b, c = form.coeffs
    out = []
    for i, j, m in homog_basis(e):
        coef = math.factorial(e) // (math.factorial(i) * math.factorial(j) * math.factorial(m))
        coef *= a**i * b**j * c**m
        if coef:
            out.append(((i, j, m), coef))
    return tuple(out)


def _multiply_column(power, mono: Monomial, k: int) -> dict[int, int]:
    index = _basis_index(k)
    return {
        index[(mono[0] + i, mono[1] + j, mono[2] + m)]: coef for (i, j, m), coef in power
    }


@dataclass
class ExactMatrix:
    """Sparse exact matrix: ``entries[i]`` maps column -> nonzero value of row i."""

    rows: int
    cols: int
    entries: list[dict[int, int | Fraction]]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i].get(j, 0)

    def to_dense(self) -> list[list]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for i, row in enumerate(self.entries):
            for j, v in row.items():
                out[i][j] = v
        return out

    def transpose(self) -> ExactMatrix:
        cols = [dict() for _ in range(self.cols)]
        for i, row in enumerate(self.entries):
            for j, v in row.items():
                cols[j][i] = v
        return ExactMatrix(self.cols, self.rows, cols)

    def rank(self) -> int:
        return exact_rank(self.entries)


def _integer_row(row: Mapping[int, int | Fraction]) -> dict[int, int]:
    vals = [v for v in row.values() if v != 0]
    if not vals:
        return {}
    den = math.lcm(*(Fraction(v).denominator for v in vals))
    out = {j: int(Fraction(v) * den) for j, v in row.items() if v != 0}
    g = math.gcd(*out.values())
    if g != 1:
        out = {j: v // g for j, v in out.items()}
    return out


def exact_rank(rows: Iterable[Mapping[int, int | Fraction]]) -> int:
    """Rank over Q of a list of sparse rows.

    Fraction-free: every update is ``row <- p*row - a*pivot_row`` followed by
    division by the row content.  Pivots are taken from the currently
    shortest row, preferring a unit entry in a sparse column, which keeps
    fill-in and coefficient growth small on the structured matrices here.
    """
    active: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    heap = []
    for rid, row in enumerate(rows):
        r = _integer_row(row)
        if not r:
            continue
        active[rid] = r
        for j in r:
            col_rows.setdefault(j, set()).add(rid)
        heapq.heappush(heap, (len(r), rid))

    rank = 0
    while heap:
        size, pid = heapq.heappop(heap)
        prow = active.get(pid)
        if prow is None or len(prow) != size:
            continue
        pc = min(prow, key=lambda j: (abs(prow[j]) != 1, len(col_rows[j]), abs(prow[j])))
        p = prow[pc]
        del active[pid]
        for j in prow:
            col_rows[j].discard(pid)
        rank += 1
        for rid in list(col_rows[pc]):
            row = active[rid]
            a = row[pc]
            g = math.gcd(p, a)
            mp, ma = p // g, a // g
            if mp != 1:
                for j in row:
                    row[j] *= mp
            for j, v in prow.items():
                nv = row.get(j, 0) - ma * v
                if nv:
                    if j not in row:
                        col_rows[j].add(rid)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    col_rows[j].discard(rid)
            if not row:
                del active[rid]
                continue
            content = math.gcd(*row.values())
            if content != 1:
                for j in row:
                    row[j] //= content
            heapq.heappush(heap, (len(row), rid))
    return rank


def build_phi(c: Complex, r: int, k: int, signs: Mapping[int, int] | None = None) -> ExactMatrix:
    """Degree-k component of the boundary-plus-powers map of a complex.

    Columns: one block of degree-k monomials per face, then one block of
    degree-(k-r-1) monomials per interior edge.  Rows: one block of degree-k
    monomials per interior edge.  The row block of edge tau carries +1 on
    its lower-indexed face and -1 on the other, times ``signs[tau]`` if
    given.
    """
    if r < 0 or k < 0:
        raise ValueError("r and k must be non-negative")
    basis = homog_basis(k)
    nb = len(basis)
    low = homog_basis(k - r - 1)
    nl = len(low)
    interior = c.interior_edges
    nf = len(c.faces)
    entries = []
    for t, e in enumerate(interior):
        f, h = sorted(c.edges[e].faces)
        sgn = 1 if signs is None else signs.get(e, 1)
        block = [{f * nb + m: sgn, h * nb + m: -sgn} for m in range(nb)]
        if nl:
            power = form_power(c.forms[e], r + 1)
            offset = nf * nb + t * nl
            for col, mono in enumerate(low):
                for row, coef in _multiply_column(power, mono, k).items():
                    block[row][offset + col] = coef
        entries.extend(block)
    return ExactMatrix(len(entries), nf * nb + len(interior) * nl, entries)


@lru_cache(maxsize=None)
def spline_dim_oracle(c: Complex, r: int, k: int) -> int:
    """``dim C^r_k(c)`` as the kernel dimension of the degree-k map."""
    counts = face_counts(c)
    domain = counts.f2 * binom2_count(k + 2)
    if k >= r + 1:
        domain += counts.f1_int * binom2_count(k - r + 1)
    return domain - build_phi(c, r, k).rank()


def _common_point(forms: Sequence[LinForm]):
    distinct = sorted(set(forms))
    if len(distinct) < 2:
        raise ValueError("need at least two non-proportional forms")
    xi = distinct[0].meet(distinct[1])
    if not all(f.vanishes_at(xi) for f in distinct):
        raise ValueError("forms do not pass through a common point")
    return xi


def ideal_matrix(forms: Sequence[LinForm], r: int, k: int) -> ExactMatrix:
    """Columns ``m * l^(r+1)`` for every form l and degree-(k-r-1) monomial m."""
    cols = []
    for form in forms:
        power = form_power(form, r + 1)
        for mono in homog_basis(k - r - 1):
            cols.append(_multiply_column(power, mono, k))
    # stored transposed: rank is unaffected
    return ExactMatrix(len(cols), len(homog_basis(k)), cols)


def ideal_dim_oracle(forms: Sequence[LinForm], r: int, k: int) -> int:
    """Dimension of the degree-k part of R / <l^(r+1) : l in forms>."""
    _common_point(forms)
    if r < 0 or k < 0:
        raise ValueError("r and k must be non-negative")
    return binom2_count(k + 2) - ideal_matrix(forms, r, k).rank()
