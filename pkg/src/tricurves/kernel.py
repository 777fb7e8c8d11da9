"""Exact projective and affine geometry over homogeneous rational coordinates.

Points and lines are homogeneous integer triples relative to a reference
triangle given by rational side lengths; the triangle's vertices are
(1:0:0), (0:1:0) and (0:0:1).  Every triple is kept in canonical form
(coprime integers, first nonzero entry positive), so equality of values is
equality of the geometric objects they represent.

Metric predicates are routed through the symbols

    SA = (b^2 + c^2 - a^2) / 2      (and cyclically SB, SC)
    S2 = SA*SB + SB*SC + SC*SA      (square of twice the area)

which make squared distances, perpendicular feet and perpendicularity of
directions rational functions of the squared side lengths.  The module is
floating-point free: all arithmetic is ``int`` / ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence, Union

Rat = Union[int, Fraction]


class GeometryError(Exception):
    """Base class for every error raised by the exact-geometry core."""


class ZeroVector(GeometryError):
    """A homogeneous tuple with all entries zero was produced or supplied."""


class CoincidentArguments(GeometryError):
    """Two arguments that must be distinct canonical objects coincide."""


class PointAtInfinity(GeometryError):
    """A finite point was required but the coordinates sum to zero."""


class LineAtInfinity(GeometryError):
    """The line at infinity is not a valid argument here."""


class WeightSumNotOne(GeometryError):
    """Weights of an affine combination must sum to exactly one."""


class NotADirection(GeometryError):
    """Expected a point at infinity (coordinate sum zero)."""


class DegenerateFrame(GeometryError):
    """Three supposed frame points are affinely dependent or unusable."""


class InvalidTriangle(GeometryError):
    """Side lengths do not describe a nondegenerate triangle."""


# ---------------------------------------------------------------------------
# canonicalization

_bit_high_water = 0


def reset_bit_high_water() -> None:
    """Reset the running maximum of canonicalized integer bit lengths."""
    global _bit_high_water
    _bit_high_water = 0


def bit_high_water() -> int:
    """Largest bit length seen in any canonicalized tuple since the last reset."""
    return _bit_high_water


def _fraction(v: Rat) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"exact core accepts int/Fraction only, got {type(v).__name__}")


def canonical_ints(values: Iterable[Rat]) -> tuple[int, ...]:
    """Clear denominators, divide by the gcd, make the first nonzero entry positive."""
    fracs = [_fraction(v) for v in values]
    if all(f == 0 for f in fracs):
        raise ZeroVector("all coordinates are zero")
    den = 1
    for f in fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    for v in ints:
        if v != 0:
            if v < 0:
                ints = [-w for w in ints]
            break
    global _bit_high_water
    for v in ints:
        b = v.bit_length()
        if b > _bit_high_water:
            _bit_high_water = b
    return tuple(ints)


class _Homogeneous:
    """Canonical homogeneous integer triple; base of points and lines."""

    __slots__ = ("_v",)

    def __init__(self, u: Rat, v: Rat, w: Rat):
        object.__setattr__(self, "_v", canonical_ints((u, v, w)))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @property
    def triple(self) -> tuple[int, int, int]:
        return self._v

    def __eq__(self, other) -> bool:
        return type(other) is type(self) and other._v == self._v

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._v))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self._v[0]}, {self._v[1]}, {self._v[2]})"

    def __str__(self) -> str:
        return f"{self._v[0]}:{self._v[1]}:{self._v[2]}"


class HomPoint(_Homogeneous):
    """Point in homogeneous barycentric coordinates (canonical integer triple)."""

    @property
    def x(self) -> int:
        return self._v[0]

    @property
    def y(self) -> int:
        return self._v[1]

    @property
    def z(self) -> int:
        return self._v[2]

    def is_infinite(self) -> bool:
        return sum(self._v) == 0


class HomLine(_Homogeneous):
    """Line {l*x + m*y + n*z = 0} as a canonical integer coefficient triple."""

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return self._v

    def is_line_at_infinity(self) -> bool:
        return self._v == (1, 1, 1)


VERTEX_A = HomPoint(1, 0, 0)
VERTEX_B = HomPoint(0, 1, 0)
VERTEX_C = HomPoint(0, 0, 1)
LINE_AT_INFINITY = HomLine(1, 1, 1)


def canonical(obj: _Homogeneous) -> _Homogeneous:
    """Return the canonical representative (idempotent by construction)."""
    return type(obj)(*obj.triple)


# ---------------------------------------------------------------------------
# incidence

def cross(u: Sequence[int], v: Sequence[int]) -> tuple[int, int, int]:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(rows: Sequence[Sequence[int]]) -> int:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate3(rows: Sequence[Sequence[int]]) -> tuple[tuple[int, int, int], ...]:
    (a, b, c), (d, e, f), (g, h, i) = rows
    return (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )


def mat_vec(rows: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(r[j] * v[j] for j in range(3)) for r in rows)


def join(p: HomPoint, q: HomPoint) -> HomLine:
    """The unique line through two distinct points."""
    if p == q:
        raise CoincidentArguments(f"join of coincident points {p}")
    return HomLine(*cross(p.triple, q.triple))


def meet(l: HomLine, m: HomLine) -> HomPoint:
    """The unique common point of two distinct lines."""
    if l == m:
        raise CoincidentArguments(f"meet of coincident lines {l}")
    return HomPoint(*cross(l.triple, m.triple))


def collinear(p: HomPoint, q: HomPoint, r: HomPoint) -> bool:
    return det3((p.triple, q.triple, r.triple)) == 0


def concurrent(l: HomLine, m: HomLine, n: HomLine) -> bool:
    return det3((l.triple, m.triple, n.triple)) == 0


def incident(p: HomPoint, l: HomLine) -> bool:
    return sum(a * b for a, b in zip(p.triple, l.triple)) == 0


def span_points(l: HomLine) -> tuple[HomPoint, HomPoint]:
    """Two distinct (possibly infinite) points spanning the line."""
    found: list[HomPoint] = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        w = cross(l.triple, e)
        if w == (0, 0, 0):
            continue
        p = HomPoint(*w)
        if p not in found:
            found.append(p)
        if len(found) == 2:
            return found[0], found[1]
    raise ZeroVector("line has no two distinct points (zero coefficients?)")


def two_points_on(l: HomLine) -> tuple[HomPoint, HomPoint]:
    """Two distinct finite points on a line other than the line at infinity."""
    if l.is_line_at_infinity():
        raise LineAtInfinity("no finite points on the line at infinity")
    r0, r1 = span_points(l)
    finite: list[HomPoint] = []
    for cand in (
        r0,
        r1,
        HomPoint(r0.x + r1.x, r0.y + r1.y, r0.z + r1.z),
        HomPoint(r0.x + 2 * r1.x, r0.y + 2 * r1.y, r0.z + 2 * r1.z),
    ):
        if not cand.is_infinite() and cand not in finite:
            finite.append(cand)
        if len(finite) == 2:
            return finite[0], finite[1]
    raise AssertionError("a projective line has at most one infinite point")


def sample_line_points(
    l: HomLine,
    count: int,
    accept: Optional[Callable[[HomPoint], bool]] = None,
) -> list[HomPoint]:
    """Deterministically sample ``count`` distinct finite points on ``l``.

    Optionally filter with ``accept``; raises if the filter never lets
    enough points through (bounded scan).
    """
    if l.is_line_at_infinity():
        raise LineAtInfinity("cannot sample finite points on the line at infinity")
    r0, r1 = span_points(l)
    pts: list[HomPoint] = []
    k = 0
    limit = 16 * count + 64
    while len(pts) < count and k < limit:
        cand = HomPoint(r0.x + k * r1.x, r0.y + k * r1.y, r0.z + k * r1.z)
        k += 1
        if cand.is_infinite():
            continue
        if accept is not None and not accept(cand):
            continue
        pts.append(cand)
    if len(pts) < count:
        raise GeometryError(f"could not sample {count} admissible points on {l}")
    return pts


# ---------------------------------------------------------------------------
# affine structure

def normalize_affine(p: HomPoint) -> tuple[Fraction, Fraction, Fraction]:
    """Scale so the coordinates sum to one; rejects points at infinity."""
    s = p.x + p.y + p.z
    if s == 0:
        raise PointAtInfinity(f"{p} is a direction, not an affine point")
    return (Fraction(p.x, s), Fraction(p.y, s), Fraction(p.z, s))


def affine_combine(terms: Sequence[tuple[HomPoint, Rat]]) -> HomPoint:
    """Exact affine combination; the weights must sum to one."""
    weights = [_fraction(w) for _, w in terms]
    if sum(weights) != 1:
        raise WeightSumNotOne(f"weights sum to {sum(weights)}, not 1")
    acc = [Fraction(0)] * 3
    for (p, _), w in zip(terms, weights):
        n = normalize_affine(p)
        for i in range(3):
            acc[i] += w * n[i]
    return HomPoint(*acc)


def midpoint(p: HomPoint, q: HomPoint) -> HomPoint:
    return affine_combine(((p, Fraction(1, 2)), (q, Fraction(1, 2))))


def reflect_through(center: HomPoint, p: HomPoint) -> HomPoint:
    """Point reflection of ``p`` through ``center``."""
    return affine_combine(((center, 2), (p, -1)))


# ---------------------------------------------------------------------------
# metric context

class Metric:
    """Squared-side-length context for metric computations.

    Carries the squared sides (a2, b2, c2), the derived symbols SA, SB, SC
    and S2, and optionally the exact (unsquared) sides when those are
    rational.  Derived triangles whose sides involve square roots have a
    perfectly good Metric (their squared sides are rational) but no
    ``sides`` attribute.
    """

    __slots__ = ("a2", "b2", "c2", "SA", "SB", "SC", "S2", "sides")

    def __init__(self, a2: Rat, b2: Rat, c2: Rat,
                 sides: Optional[Sequence[Rat]] = None):
        a2, b2, c2 = _fraction(a2), _fraction(b2), _fraction(c2)
        if a2 <= 0 or b2 <= 0 or c2 <= 0:
            raise InvalidTriangle("squared side lengths must be positive")
        self.a2, self.b2, self.c2 = a2, b2, c2
        self.SA = (b2 + c2 - a2) / 2
        self.SB = (c2 + a2 - b2) / 2
        self.SC = (a2 + b2 - c2) / 2
        self.S2 = self.SA * self.SB + self.SB * self.SC + self.SC * self.SA
        if self.S2 <= 0:
            raise InvalidTriangle("degenerate triangle: S^2 <= 0")
        if sides is not None:
            sides = tuple(_fraction(s) for s in sides)
            if len(sides) != 3 or any(s <= 0 for s in sides):
                raise InvalidTriangle("sides must be three positive rationals")
            if (sides[0] ** 2, sides[1] ** 2, sides[2] ** 2) != (a2, b2, c2):
                raise InvalidTriangle("sides inconsistent with squared sides")
        self.sides = sides

    @property
    def has_sides(self) -> bool:
        return self.sides is not None

    def rot(self) -> "Metric":
        """Cyclic relabel (a, b, c) -> (b, c, a); used to close formulas cyclically."""
        sides = None if self.sides is None else (self.sides[1], self.sides[2], self.sides[0])
        return Metric(self.b2, self.c2, self.a2, sides=sides)

    def is_right(self) -> bool:
        return self.SA == 0 or self.SB == 0 or self.SC == 0

    def is_acute(self) -> bool:
        return self.SA > 0 and self.SB > 0 and self.SC > 0


class RefTriangle(Metric):
    """Reference triangle given by rational side lengths a, b, c."""

    __slots__ = ()

    def __init__(self, a: Rat, b: Rat, c: Rat):
        a, b, c = _fraction(a), _fraction(b), _fraction(c)
        if a <= 0 or b <= 0 or c <= 0:
            raise InvalidTriangle("side lengths must be positive")
        if a + b <= c or b + c <= a or c + a <= b:
            raise InvalidTriangle(f"triangle inequality fails for ({a}, {b}, {c})")
        super().__init__(a * a, b * b, c * c, sides=(a, b, c))

    @property
    def a(self) -> Fraction:
        return self.sides[0]

    @property
    def b(self) -> Fraction:
        return self.sides[1]

    @property
    def c(self) -> Fraction:
        return self.sides[2]

    def __repr__(self) -> str:
        return f"RefTriangle({self.a}, {self.b}, {self.c})"


# ---------------------------------------------------------------------------
# metric operations

def squared_distance(p: HomPoint, q: HomPoint, m: Metric) -> Fraction:
    """Exact squared distance between two finite points."""
    sp = p.x + p.y + p.z
    sq = q.x + q.y + q.z
    if sp == 0 or sq == 0:
        raise PointAtInfinity("squared_distance requires finite points")
    u = p.x * sq - q.x * sp
    v = p.y * sq - q.y * sp
    w = p.z * sq - q.z * sp
    num = -(m.a2 * v * w + m.b2 * w * u + m.c2 * u * v)
    return num / Fraction(sp * sp * sq * sq)


def point_line_distance_sq(p: HomPoint, l: HomLine, m: Metric) -> Fraction:
    """Exact squared distance from a finite point to a line.

    Computed from two sample points on the line; the result does not
    depend on which sample points are taken.
    """
    if l.is_line_at_infinity():
        raise LineAtInfinity("distance to the line at infinity is undefined")
    if p.is_infinite():
        raise PointAtInfinity("point at infinity has no distance to a line")
    q1, q2 = two_points_on(l)
    d = det3((p.triple, q1.triple, q2.triple))
    if d == 0:
        return Fraction(0)
    sp = p.x + p.y + p.z
    s1 = q1.x + q1.y + q1.z
    s2 = q2.x + q2.y + q2.z
    det_norm_sq = Fraction(d * d, (sp * s1 * s2) ** 2)
    return det_norm_sq * m.S2 / squared_distance(q1, q2, m)


def infinite_point(l: HomLine) -> HomPoint:
    """The direction of a line (its point on the line at infinity)."""
    if l.is_line_at_infinity():
        raise LineAtInfinity("the line at infinity has no single direction")
    return meet(l, LINE_AT_INFINITY)


def perpendicular_infinite_point(d: HomPoint, m: Metric) -> HomPoint:
    """The unique direction perpendicular to the direction ``d``.

    Perpendicularity of directions (x,y,z), (x',y',z') with zero coordinate
    sums is SA*x*x' + SB*y*y' + SC*z*z' = 0.
    """
    if not d.is_infinite():
        raise NotADirection(f"{d} has nonzero coordinate sum")
    w = cross(
        tuple(canonical_ints((m.SA * d.x, m.SB * d.y, m.SC * d.z))),
        (1, 1, 1),
    )
    return HomPoint(*w)


def perpendicular_line_through(l: HomLine, p: HomPoint, m: Metric) -> HomLine:
    """The perpendicular to ``l`` through ``p``."""
    return join(p, perpendicular_infinite_point(infinite_point(l), m))


def foot_of_perpendicular(p: HomPoint, l: HomLine, m: Metric) -> HomPoint:
    return meet(l, perpendicular_line_through(l, p, m))


def bisector_line(p: HomPoint, q: HomPoint, m: Metric) -> HomLine:
    """Perpendicular bisector: locus of equal squared distance to p and q."""
    if p == q:
        raise CoincidentArguments("bisector of coincident points")
    P = normalize_affine(p)
    Q = normalize_affine(q)
    l1 = -m.b2 * (Q[2] - P[2]) - m.c2 * (Q[1] - P[1])
    l2 = -m.a2 * (Q[2] - P[2]) - m.c2 * (Q[0] - P[0])
    l3 = -m.a2 * (Q[1] - P[1]) - m.b2 * (Q[0] - P[0])
    c0 = -(
        m.a2 * (P[1] * P[2] - Q[1] * Q[2])
        + m.b2 * (P[2] * P[0] - Q[2] * Q[0])
        + m.c2 * (P[0] * P[1] - Q[0] * Q[1])
    )
    return HomLine(l1 + c0, l2 + c0, l3 + c0)


def equidistant_point(p1: HomPoint, p2: HomPoint, p3: HomPoint, m: Metric) -> HomPoint:
    """The point equidistant from three non-collinear finite points."""
    try:
        center = meet(bisector_line(p1, p2, m), bisector_line(p1, p3, m))
    except CoincidentArguments as exc:
        raise DegenerateFrame("equidistant point undefined (collinear inputs)") from exc
    if center.is_infinite():
        raise DegenerateFrame("equidistant point at infinity (collinear inputs)")
    return center


def orthocenter_of(p1: HomPoint, p2: HomPoint, p3: HomPoint, m: Metric) -> HomPoint:
    """Orthocenter of the triangle p1 p2 p3 (any finite non-collinear triple)."""
    alt1 = perpendicular_line_through(join(p2, p3), p1, m)
    alt2 = perpendicular_line_through(join(p1, p3), p2, m)
    return meet(alt1, alt2)


# ---------------------------------------------------------------------------
# frames

def _frame_matrix(v1: HomPoint, v2: HomPoint, v3: HomPoint):
    for v in (v1, v2, v3):
        if v.is_infinite():
            raise DegenerateFrame(f"frame vertex {v} is at infinity")
    rows = (
        (v1.x, v2.x, v3.x),
        (v1.y, v2.y, v3.y),
        (v1.z, v2.z, v3.z),
    )
    if det3(rows) == 0:
        raise DegenerateFrame("frame points are affinely dependent")
    return rows


def local_coords(p: HomPoint, v1: HomPoint, v2: HomPoint, v3: HomPoint) -> HomPoint:
    """Barycentric coordinates of ``p`` relative to the triangle v1 v2 v3."""
    rows = _frame_matrix(v1, v2, v3)
    w = mat_vec(adjugate3(rows), p.triple)
    s1 = v1.x + v1.y + v1.z
    s2 = v2.x + v2.y + v2.z
    s3 = v3.x + v3.y + v3.z
    return HomPoint(s1 * w[0], s2 * w[1], s3 * w[2])


def from_local(q: HomPoint, v1: HomPoint, v2: HomPoint, v3: HomPoint) -> HomPoint:
    """Inverse of :func:`local_coords`: map frame barycentrics back."""
    _frame_matrix(v1, v2, v3)
    s1 = v1.x + v1.y + v1.z
    s2 = v2.x + v2.y + v2.z
    s3 = v3.x + v3.y + v3.z
    w1 = q.x * s2 * s3
    w2 = q.y * s1 * s3
    w3 = q.z * s1 * s2
    return HomPoint(
        w1 * v1.x + w2 * v2.x + w3 * v3.x,
        w1 * v1.y + w2 * v2.y + w3 * v3.y,
        w1 * v1.z + w2 * v2.z + w3 * v3.z,
    )
