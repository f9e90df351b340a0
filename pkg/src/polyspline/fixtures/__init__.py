"""Bundled example complexes and a generator of random triangulations."""

from __future__ import annotations

import random
from fractions import Fraction
from importlib import resources

from ..geometry import Complex, _orient, build_complex, parse_complex

FIXTURES = {
    "square": "square.json",
    "two-triangles": "two_triangles.json",
    "vertex-star": "vertex_star.json",
    "crossed-square": "crossed_square.json",
    "triangle-in-triangle": "tri_in_tri.json",
    "triangle-in-triangle-perturbed": "tri_in_tri_perturbed.json",
    "two-squares": "two_squares.json",
    "honeycomb": "honeycomb.json",
}


def fixture_text(name: str) -> str:
    try:
        fname = FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; choose from {sorted(FIXTURES)}") from None
    return resources.files(__name__).joinpath(fname).read_text(encoding="utf-8")


def load_fixture(name: str) -> Complex:
    return parse_complex(fixture_text(name))


def all_fixtures() -> dict[str, Complex]:
    return {name: load_fixture(name) for name in FIXTURES}


def _inside(tri, pts, s) -> bool:
    a, b, c = (pts[i] for i in tri)
    return _orient(a, b, s) > 0 and _orient(b, c, s) > 0 and _orient(c, a, s) > 0


def random_triangulation(seed: int, n_boundary: int = 6, n_interior: int = 3, flips: int = 4) -> Complex:
    """Triangulate a convex polygon with random interior points.

    Boundary vertices are rational points near a circle; interior points are
    inserted by splitting the containing triangle, then a few random
    diagonal flips scramble the connectivity.
    """
    rng = random.Random(seed)
    den = 8
    # rational points on the unit circle ((1-t^2)/(1+t^2), 2t/(1+t^2)) are exactly convex
    ts = sorted(rng.sample(range(-4 * den, 4 * den), n_boundary))
    pts = []
    for t in ts:
        t = Fraction(t, den)
        pts.append(((1 - t * t) / (1 + t * t) * 4, 2 * t / (1 + t * t) * 4))
    # sort counterclockwise around the centroid
    cx = sum(p[0] for p in pts) / len(pts)
    cy = sum(p[1] for p in pts) / len(pts)

    def quadrant_key(p):
        dx, dy = p[0] - cx, p[1] - cy
        half = 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1
        return half, -dx / (abs(dx) + abs(dy)) if half == 0 else dx / (abs(dx) + abs(dy))

    pts.sort(key=quadrant_key)
    pts.append((cx, cy))
    centre = len(pts) - 1
    tris = [(i, (i + 1) % n_boundary, centre) for i in range(n_boundary)]

    inserted = 0
    while inserted < n_interior:
        s = (Fraction(rng.randint(-3 * den, 3 * den), den), Fraction(rng.randint(-3 * den, 3 * den), den))
        if s in pts:
            continue
        host = [t for t in tris if _inside(t, pts, s)]
        if not host:
            continue
        a, b, c = host[0]
        pts.append(s)
        v = len(pts) - 1
        tris.remove(host[0])
        tris += [(a, b, v), (b, c, v), (c, a, v)]
        inserted += 1

    for _ in range(flips):
        shared = {}
        for ti, (a, b, c) in enumerate(tris):
            for u, w in ((a, b), (b, c), (c, a)):
                shared.setdefault(frozenset((u, w)), []).append(ti)
        options = []
        for key, owners in shared.items():
            if len(owners) != 2:
                continue
            u, w = sorted(key)
            (x,) = set(tris[owners[0]]) - key
            (y,) = set(tris[owners[1]]) - key
            # flip allowed iff the quadrilateral u-x-w-y is strictly convex
            if _orient(pts[x], pts[y], pts[u]) * _orient(pts[x], pts[y], pts[w]) < 0 and \
                    _orient(pts[u], pts[w], pts[x]) * _orient(pts[u], pts[w], pts[y]) < 0:
                options.append((owners, x, y, u, w))
        if not options:
            break
        owners, x, y, u, w = rng.choice(options)
        for ti in sorted(owners, reverse=True):
            tris.pop(ti)
        for t in ((x, y, u), (x, y, w)):
            a, b, c = t
            if _orient(pts[a], pts[b], pts[c]) < 0:
                t = (a, c, b)
            tris.append(t)

    return build_complex(pts, sorted(tris), name=f"random-triangulation-{seed}")
