"""Exact planar geometry for polyhedral complexes.

A complex is a list of rational vertices and a list of counterclockwise
convex faces.  Edges, interior/boundary classification and adjacency are
derived from the faces.  Every point ``(p, q)`` of the plane is identified
with ``(p, q, 1)`` on the cone over the complex, so lines through edges are
homogeneous linear forms ``a*x + b*y + c*z``.
"""

from __future__ import annotations

import json
import math
import warnings
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

Point = tuple[Fraction, Fraction]


class ComplexError(ValueError):
    """Raised when an input document does not describe a valid complex.

    ``invariant`` names the violated condition so that callers (the CLI in
    particular) can report it without parsing the message.
    """

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class HoleWarning(UserWarning):
    """The complex has Euler characteristic other than 1."""


def canonical_triple(a, b, c) -> tuple[int, int, int]:
    """Scale a nonzero rational triple to coprime integers, first nonzero positive."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a == 0 and b == 0 and c == 0:
        raise ValueError("zero triple has no canonical form")
    den = math.lcm(a.denominator, b.denominator, c.denominator)
    ints = [int(v * den) for v in (a, b, c)]
    g = math.gcd(*ints)
    ints = [v // g for v in ints]
    lead = next(v for v in ints if v != 0)
    if lead < 0:
        ints = [-v for v in ints]
    return ints[0], ints[1], ints[2]


def _cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point of the projective plane; ``Z == 0`` is a direction at infinity."""

    X: int
    Y: int
    Z: int

    def __post_init__(self):
        if (self.X, self.Y, self.Z) != canonical_triple(self.X, self.Y, self.Z):
            raise ValueError(f"non-canonical point {(self.X, self.Y, self.Z)}")

    @classmethod
    def from_coords(cls, X, Y, Z=1) -> ProjPoint:
        return cls(*canonical_triple(X, Y, Z))

    @property
    def at_infinity(self) -> bool:
        return self.Z == 0

    def affine(self) -> Point | None:
        if self.Z == 0:
            return None
        return Fraction(self.X, self.Z), Fraction(self.Y, self.Z)

    def __str__(self):
        if self.Z == 0:
            return f"[{self.X}:{self.Y}:0]"
        x, y = self.affine()
        return f"({x}, {y})"


@dataclass(frozen=True, order=True)
class LinForm:
    """The linear form ``a*x + b*y + c*z`` in canonical normalization.

    Two forms define the same line iff they compare equal.
    """

    a: int
    b: int
    c: int

    def __post_init__(self):
        if (self.a, self.b, self.c) != canonical_triple(self.a, self.b, self.c):
            raise ValueError(f"non-canonical form {(self.a, self.b, self.c)}")

    @classmethod
    def from_coeffs(cls, a, b, c) -> LinForm:
        return cls(*canonical_triple(a, b, c))

    @classmethod
    def through(cls, p: Point, q: Point) -> LinForm:
        """The form vanishing on the homogenized points ``(p, 1)`` and ``(q, 1)``."""
        return cls.from_coeffs(*_cross((p[0], p[1], 1), (q[0], q[1], 1)))

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    def __call__(self, point: Point) -> Fraction:
        return self.a * point[0] + self.b * point[1] + self.c

    def vanishes_at(self, xi: ProjPoint) -> bool:
        return self.a * xi.X + self.b * xi.Y + self.c * xi.Z == 0

    def meet(self, other: LinForm) -> ProjPoint:
        """Intersection point of two distinct lines (possibly at infinity)."""
        if self == other:
            raise ValueError("proportional forms do not meet in a point")
        return ProjPoint.from_coords(*_cross(self.coeffs, other.coeffs))

    def __str__(self):
        terms = []
        for coef, var in zip(self.coeffs, "xyz"):
            if coef == 0:
                continue
            sign = "-" if coef < 0 else "+"
            mag = "" if abs(coef) == 1 else str(abs(coef))
            terms.append((sign, f"{mag}{var}"))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    faces: tuple[int, ...]

    @property
    def interior(self) -> bool:
        return len(self.faces) == 2


class FaceCounts(NamedTuple):
    f2: int
    f1_int: int
    f0_int: int
    f1_bdry: int
    f0_bdry: int


class Star(NamedTuple):
    """Index sets (into the parent complex) of the faces of a star."""

    vertices: frozenset[int]
    edges: frozenset[int]
    faces: frozenset[int]


def _orient(p: Point, q: Point, s: Point) -> Fraction:
    return (q[0] - p[0]) * (s[1] - p[1]) - (q[1] - p[1]) * (s[0] - p[0])


@dataclass(frozen=True)
class Complex:
    """A planar polyhedral complex with exact rational coordinates.

    Construct through :func:`build_complex` or :func:`parse_complex`, which
    validate; the bare constructor only derives edges.
    """

    vertices: tuple[Point, ...]
    faces: tuple[tuple[int, ...], ...]
    name: str | None = None

    @cached_property
    def edges(self) -> tuple[Edge, ...]:
        incident = defaultdict(list)
        for fi, face in enumerate(self.faces):
            for i, u in enumerate(face):
                v = face[(i + 1) % len(face)]
                incident[(min(u, v), max(u, v))].append(fi)
        return tuple(Edge(u, v, tuple(fs)) for (u, v), fs in sorted(incident.items()))

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {(e.u, e.v): i for i, e in enumerate(self.edges)}

    @cached_property
    def interior_edges(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.edges) if e.interior)

    @cached_property
    def boundary_vertices(self) -> frozenset[int]:
        out = set()
        for e in self.edges:
            if not e.interior:
                out.update((e.u, e.v))
        return frozenset(out)

    @cached_property
    def interior_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in range(len(self.vertices)) if v not in self.boundary_vertices)

    def face_edges(self, fi: int) -> list[int]:
        face = self.faces[fi]
        out = []
        for i, u in enumerate(face):
            v = face[(i + 1) % len(face)]
            out.append(self.edge_index[(min(u, v), max(u, v))])
        return out

    @cached_property
    def forms(self) -> tuple[LinForm, ...]:
        return tuple(
            LinForm.through(self.vertices[e.u], self.vertices[e.v]) for e in self.edges
        )


def _coerce(value) -> Fraction:
    if isinstance(value, bool):
        raise ComplexError("malformed document", f"boolean coordinate {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        num, sep, den = text.partition("/")
        try:
            if not sep:
                return Fraction(int(num))
            if int(den) <= 0:
                raise ValueError
            return Fraction(int(num), int(den))
        except ValueError:
            pass
    raise ComplexError("malformed document", f"bad coordinate {value!r}")


def parse_complex(text: str) -> Complex:
    """Parse and fully validate a complex from its JSON document."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexError("malformed document", str(exc)) from None
    if not isinstance(doc, dict):
        raise ComplexError("malformed document", "top level must be an object")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ComplexError("malformed document", "name must be a string")
    verts = doc.get("vertices")
    faces = doc.get("faces")
    if not isinstance(verts, list) or not isinstance(faces, list):
        raise ComplexError("malformed document", "vertices and faces must be lists")
    points = []
    for v in verts:
        if not isinstance(v, list) or len(v) != 2:
            raise ComplexError("malformed document", f"vertex {v!r} is not a pair")
        points.append((_coerce(v[0]), _coerce(v[1])))
    cycles = []
    for f in faces:
        if not isinstance(f, list) or not all(
            isinstance(i, int) and not isinstance(i, bool) for i in f
        ):
            raise ComplexError("malformed document", f"face {f!r} is not an index list")
        cycles.append(f)
    return build_complex(points, cycles, name)


def dump_complex(c: Complex) -> str:
    """Serialize to the input document format (round-trips with parse_complex)."""

    def coord(q: Fraction):
        return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    doc = {}
    if c.name is not None:
        doc["name"] = c.name
    doc["vertices"] = [[coord(x), coord(y)] for x, y in c.vertices]
    doc["faces"] = [list(f) for f in c.faces]
    return json.dumps(doc)


def build_complex(
    vertices: Iterable[Sequence], faces: Iterable[Sequence[int]], name: str | None = None,
    validate: bool = True,
) -> Complex:
    c = Complex(
        tuple((Fraction(x), Fraction(y)) for x, y in vertices),
        tuple(tuple(f) for f in faces),
        name,
    )
    if validate:
        validate_complex(c)
    return c


def _check_faces(c: Complex) -> None:
    nv = len(c.vertices)
    if len(set(c.vertices)) != nv:
        raise ComplexError("duplicate vertices", "two vertices share coordinates")
    if not c.faces:
        raise ComplexError("malformed document", "no faces")
    for fi, face in enumerate(c.faces):
        if len(face) < 3:
            raise ComplexError("malformed document", f"face {fi} has fewer than 3 vertices")
        if any(not 0 <= i < nv for i in face):
            raise ComplexError("malformed document", f"face {fi} has an out-of-range index")
        if len(set(face)) != len(face):
            raise ComplexError("face not convex/CCW", f"face {fi} repeats a vertex")
        pts = [c.vertices[i] for i in face]
        m = len(pts)
        # strictly left of every directed edge <=> strictly convex, simple, CCW
        for i in range(m):
            p, q = pts[i], pts[(i + 1) % m]
            for j in range(m):
                if j in (i, (i + 1) % m):
                    continue
                if _orient(p, q, pts[j]) <= 0:
                    raise ComplexError(
                        "face not convex/CCW",
                        f"face {fi} is not a strictly convex counterclockwise polygon",
                    )


def _check_edges(c: Complex) -> None:
    for e in c.edges:
        if len(e.faces) > 2:
            raise ComplexError(
                "edge with >=3 incident faces", f"edge ({e.u}, {e.v}) lies on {len(e.faces)} faces"
            )
    directed = set()
    for fi, face in enumerate(c.faces):
        for i, u in enumerate(face):
            v = face[(i + 1) % len(face)]
            if (u, v) in directed:
                raise ComplexError(
                    "overlapping faces", f"edge ({u}, {v}) traversed twice in the same direction"
                )
            directed.add((u, v))
    verts = c.vertices
    for e in c.edges:
        p, q = verts[e.u], verts[e.v]
        for w, s in enumerate(verts):
            if w in (e.u, e.v) or _orient(p, q, s) != 0:
                continue
            if min(p[0], q[0]) <= s[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= s[1] <= max(p[1], q[1]):
                raise ComplexError(
                    "T-junction", f"vertex {w} lies inside edge ({e.u}, {e.v})"
                )
    edges = c.edges
    for i in range(len(edges)):
        p, q = verts[edges[i].u], verts[edges[i].v]
        for j in range(i + 1, len(edges)):
            if {edges[i].u, edges[i].v} & {edges[j].u, edges[j].v}:
                continue
            s, t = verts[edges[j].u], verts[edges[j].v]
            d1, d2 = _orient(p, q, s), _orient(p, q, t)
            d3, d4 = _orient(s, t, p), _orient(s, t, q)
            if d1 * d2 < 0 and d3 * d4 < 0:
                raise ComplexError(
                    "overlapping faces", f"edges {i} and {j} cross"
                )
    for fi, face in enumerate(c.faces):
        pts = [verts[i] for i in face]
        m = len(pts)
        for w, s in enumerate(verts):
            if w in face:
                continue
            if all(_orient(pts[i], pts[(i + 1) % m], s) > 0 for i in range(m)):
                raise ComplexError("overlapping faces", f"vertex {w} lies inside face {fi}")


def validate_complex(c: Complex) -> None:
    """Check every structural invariant; raise ComplexError on the first violation."""
    _check_faces(c)
    used = {i for f in c.faces for i in f}
    if len(used) != len(c.vertices):
        raise ComplexError("malformed document", "vertex not used by any face")
    _check_edges(c)
    if not nx.is_connected(dual_graph(c)):
        raise ComplexError("disconnected dual graph", "faces do not form one edge-connected piece")
    if not is_hereditary(c):
        raise ComplexError("hereditary violation", "some vertex star has a disconnected dual graph")
    chi = len(c.vertices) - len(c.edges) + len(c.faces)
    if chi != 1:
        warnings.warn(
            f"Euler characteristic {chi} != 1; dimension formulas are not guaranteed",
            HoleWarning,
            stacklevel=2,
        )


def face_counts(c: Complex) -> FaceCounts:
    f1_int = len(c.interior_edges)
    f0_bdry = len(c.boundary_vertices)
    return FaceCounts(
        f2=len(c.faces),
        f1_int=f1_int,
        f0_int=len(c.vertices) - f0_bdry,
        f1_bdry=len(c.edges) - f1_int,
        f0_bdry=f0_bdry,
    )


def edge_form(c: Complex, e: int) -> LinForm:
    return c.forms[e]


def dual_graph(c: Complex) -> nx.Graph:
    """Faces as nodes, one graph edge (tagged with ``edge=index``) per interior edge."""
    g = nx.Graph()
    g.add_nodes_from(range(len(c.faces)))
    for i in c.interior_edges:
        f, h = c.edges[i].faces
        g.add_edge(f, h, edge=i)
    return g


def star(c: Complex, dim: int, index: int) -> Star:
    """Smallest subcomplex containing every face that contains the given cell.

    ``dim`` is 0 (vertex), 1 (edge) or 2 (face).
    """
    if dim == 0:
        top = [fi for fi, f in enumerate(c.faces) if index in f]
    elif dim == 1:
        top = list(c.edges[index].faces)
    elif dim == 2:
        top = [index]
    else:
        raise ValueError(f"no cells of dimension {dim}")
    faces = frozenset(top)
    edges = frozenset(e for fi in faces for e in c.face_edges(fi))
    verts = frozenset(v for fi in faces for v in c.faces[fi])
    return Star(verts, edges, faces)


def is_hereditary(c: Complex) -> bool:
    """Whether the dual graph of every vertex and edge star is connected."""
    cells = [(0, v) for v in range(len(c.vertices))] + [(1, e) for e in range(len(c.edges))]
    for dim, idx in cells:
        st = star(c, dim, idx)
        g = nx.Graph()
        g.add_nodes_from(st.faces)
        for e in st.edges:
            if c.edges[e].interior:
                g.add_edge(*c.edges[e].faces)
        if g.number_of_nodes() and not nx.is_connected(g):
            return False
    return True


def is_simplicial(c: Complex) -> bool:
    return all(len(f) == 3 for f in c.faces)


def vertex_slope_count(c: Complex, v: int) -> int:
    """Number of distinct lines among the edges at an interior vertex."""
    if v in c.boundary_vertices:
        raise ValueError(f"vertex {v} is a boundary vertex")
    return len({c.forms[i] for i, e in enumerate(c.edges) if v in (e.u, e.v)})


def affine_image(c: Complex, matrix, offset=(0, 0)) -> Complex:
    """Apply ``p -> matrix @ p + offset``; faces are reversed if orientation flips."""
    (m00, m01), (m10, m11) = [[Fraction(x) for x in row] for row in matrix]
    det = m00 * m11 - m01 * m10
    if det == 0:
        raise ValueError("affine map is not invertible")
    tx, ty = Fraction(offset[0]), Fraction(offset[1])
    verts = tuple((m00 * x + m01 * y + tx, m10 * x + m11 * y + ty) for x, y in c.vertices)
    faces = c.faces
    if det < 0:
        faces = tuple((f[0],) + tuple(reversed(f[1:])) for f in faces)
    return Complex(verts, faces, c.name)
