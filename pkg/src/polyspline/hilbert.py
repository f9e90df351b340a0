"""Closed-form Hilbert polynomials of planar spline modules.

All arithmetic is exact.  Inside polynomial identities the binomial
``C(m, 2)`` is the polynomial ``m(m-1)/2`` for every integer ``m``; the
counting convention (zero below 2) is only used where a dimension, not a
polynomial, is wanted.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import Complex, ProjPoint, face_counts, is_simplicial, vertex_slope_count
from .xigraph import CycleData, all_cycles


def binom2(m) -> Fraction:
    """``C(m, 2)`` as the polynomial m(m-1)/2."""
    return Fraction(m * (m - 1), 2)


def binom2_count(m: int) -> int:
    """``C(m, 2)`` as a count: zero for m < 2."""
    return m * (m - 1) // 2 if m >= 2 else 0


def _binom2_shifted(s) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (k^2, k, 1) of C(k + s, 2)."""
    s = Fraction(s)
    return Fraction(1, 2), (2 * s - 1) / 2, s * (s - 1) / 2


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class CycleTerm:
    xi: ProjPoint
    cycle: CycleData
    c: int


@dataclass(frozen=True)
class HilbPoly:
    """``a2*k^2 + a1*k + a0`` with an optional breakdown into named parts.

    For spline modules ``breakdown`` holds the free-module part (a
    polynomial with zero constant), the edge constant and the per-cycle
    constants, which add up to the whole polynomial.
    """

    a2: Fraction
    a1: Fraction
    a0: Fraction
    free_part: tuple[Fraction, Fraction] | None = None
    edge_constant: Fraction | None = None
    cycle_terms: tuple[CycleTerm, ...] = field(default=())

    def __call__(self, k) -> Fraction:
        return self.a2 * k * k + self.a1 * k + self.a0

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.a2, self.a1, self.a0

    @property
    def cycle_constant(self) -> int:
        return sum(t.c for t in self.cycle_terms)

    def cycle_constant_by_n(self) -> dict[int, int]:
        out = Counter()
        for t in self.cycle_terms:
            out[t.cycle.n] += t.c
        return dict(sorted(out.items()))

    def is_constant(self) -> bool:
        return self.a2 == 0 and self.a1 == 0

    def __eq__(self, other):
        if isinstance(other, HilbPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __sub__(self, other: HilbPoly) -> HilbPoly:
        return HilbPoly(self.a2 - other.a2, self.a1 - other.a1, self.a0 - other.a0)

    def __str__(self):
        return format_poly((self.a2, self.a1, self.a0))


def format_poly(coeffs, var: str = "k") -> str:
    """Render ``(a2, a1, a0)`` like ``7/2k^2 - 3/2k + 2``."""
    parts = []
    for coef, power in zip(coeffs, (2, 1, 0)):
        coef = Fraction(coef)
        if coef == 0:
            continue
        mag = abs(coef)
        if power == 0:
            body = _format_rational(mag)
        else:
            body = ("" if mag == 1 else _format_rational(mag)) + var + ("^2" if power == 2 else "")
        parts.append(("-" if coef < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class ResolutionData:
    """Shape of the minimal free resolution of R/<l_1^(r+1), ..., l_n^(r+1)>.

    The first syzygies sit in degrees ``r+1+alpha`` (``s1`` of them) and
    ``r+2+alpha`` (``s2`` of them).
    """

    n: int
    r: int
    alpha: int
    s1: int
    s2: int


def resolution_data(n: int, r: int) -> ResolutionData:
    if n < 2:
        raise ValueError(f"need at least two generators, got n={n}")
    if r < 0:
        raise ValueError(f"smoothness must be non-negative, got r={r}")
    alpha = (r + 1) // (n - 1)
    s1 = (n - 1) * alpha + n - r - 2
    s2 = r + 1 - (n - 1) * alpha
    assert s1 >= 0 and s2 >= 0 and s1 + s2 == n - 1
    assert s1 * (r + 1 + alpha) + s2 * (r + 2 + alpha) == n * (r + 1)
    return ResolutionData(n, r, alpha, s1, s2)


def hp_quotient(n: int, r: int) -> HilbPoly:
    """Hilbert polynomial of R/I for I generated by n powers l^(r+1) through a point."""
    res = resolution_data(n, r)
    terms = [
        (1, 2),
        (-n, 1 - r),
        (res.s1, 1 - r - res.alpha),
        (res.s2, -r - res.alpha),
    ]
    total = [Fraction(0)] * 3
    for mult, shift in terms:
        for i, coef in enumerate(_binom2_shifted(shift)):
            total[i] += mult * coef
    return HilbPoly(*total)


def c_value(n: int, r: int) -> int:
    """Constant contributed by one cycle whose edges span n distinct lines."""
    res = resolution_data(n, r)
    alpha = res.alpha
    first = (
        1
        - n * binom2(r)
        + res.s1 * binom2(r + alpha)
        + res.s2 * binom2(r + alpha + 1)
    )
    second = binom2(r + 2) + Fraction(alpha, 2) * (2 * r + 3 + alpha - n * (1 + alpha))
    if first != second:
        raise ArithmeticError(f"cycle constant mismatch at n={n}, r={r}: {first} != {second}")
    assert first.denominator == 1
    return int(first)


def planar_hp(c: Complex, r: int, cycles: dict[ProjPoint, list[CycleData]] | None = None) -> HilbPoly:
    """Hilbert polynomial of the module of C^r splines on the cone over c."""
    if r < 0:
        raise ValueError(f"smoothness must be non-negative, got r={r}")
    counts = face_counts(c)
    f2, f1 = counts.f2, counts.f1_int
    a2 = Fraction(f2, 2)
    a1 = Fraction(3 * f2 - 2 * (r + 1) * f1, 2)
    edge_const = f2 + (binom2(r) - 1) * f1
    if cycles is None:
        cycles = all_cycles(c)
    terms = tuple(
        CycleTerm(xi, cyc, c_value(cyc.n, r))
        for xi in sorted(cycles)
        for cyc in cycles[xi]
    )
    a0 = edge_const + sum(t.c for t in terms)
    return HilbPoly(a2, a1, a0, (a2, a1), edge_const, terms)


def sigma_vertex(n_v: int, r: int) -> int:
    """Sum over j >= 1 of max(r + 1 + j(1 - n_v), 0)."""
    if n_v < 2:
        raise ValueError(f"an interior vertex has at least two slopes, got {n_v}")
    total, j = 0, 1
    while (term := r + 1 + j * (1 - n_v)) > 0:
        total += term
        j += 1
    return total


def alfeld_schumaker_dim(c: Complex, r: int, k: int) -> int:
    """Dimension of C^r_k on a triangulation by the classical formula (exact for k >= 3r+1)."""
    if not is_simplicial(c):
        raise ValueError("the Alfeld-Schumaker formula needs a triangulation")
    counts = face_counts(c)
    sigma = sum(sigma_vertex(vertex_slope_count(c, v), r) for v in c.interior_vertices)
    value = (
        binom2(k + 2)
        + binom2(k - r + 1) * counts.f1_int
        - (binom2(k + 2) - binom2(r + 2)) * counts.f0_int
        + sigma
    )
    assert value.denominator == 1
    return int(value)
