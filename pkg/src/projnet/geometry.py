"""The projective plane P2(F_q) over a finite field.

Points are triples of field integers in canonical form ``(1, x, y)``,
``(0, 1, x)`` or ``(0, 0, 1)``.  Lines are not a separate type: a line is
identified with its dual point, and a point P lies on the line L iff
``dot(P, L) == 0``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .field import FieldSpec, prime_power


class ProjectivePoint(NamedTuple):
    a: int
    b: int
    c: int


class GeometryError(ValueError):
    pass


def canonicalize(F: FieldSpec, v) -> ProjectivePoint:
    a, b, c = v
    for i, lead in enumerate((a, b, c)):
        if lead:
            s = F.inv(lead)
            out = [0, 0, 0]
            for j in range(i, 3):
                out[j] = F.mul(s, v[j])
            return ProjectivePoint(*out)
    raise GeometryError("the zero vector is not a projective point")


@lru_cache(maxsize=None)
def plane_points(F: FieldSpec) -> tuple[ProjectivePoint, ...]:
    """All q^2+q+1 canonical points, sorted lexicographically."""
    q = F.q
    pts = [ProjectivePoint(0, 0, 1)]
    pts += [ProjectivePoint(0, 1, x) for x in range(q)]
    pts += [ProjectivePoint(1, x, y) for x in range(q) for y in range(q)]
    return tuple(pts)


@lru_cache(maxsize=None)
def point_index(F: FieldSpec) -> dict[ProjectivePoint, int]:
    return {P: i for i, P in enumerate(plane_points(F))}


def dot(F: FieldSpec, P, Q) -> int:
    add, mul = F.add, F.mul
    return add(add(mul(P[0], Q[0]), mul(P[1], Q[1])), mul(P[2], Q[2]))


def cross(F: FieldSpec, P, Q) -> ProjectivePoint:
    """Canonical vector product; orthogonal to both arguments."""
    sub, mul = F.sub, F.mul
    v = (sub(mul(P[1], Q[2]), mul(P[2], Q[1])),
         sub(mul(P[2], Q[0]), mul(P[0], Q[2])),
         sub(mul(P[0], Q[1]), mul(P[1], Q[0])))
    if v == (0, 0, 0):
        raise GeometryError(f"{tuple(P)} and {tuple(Q)} are projectively equal")
    return canonicalize(F, v)


def is_orthogonal(F: FieldSpec, P, Q) -> bool:
    return dot(F, P, Q) == 0


def self_orthogonal_points(F: FieldSpec) -> list[ProjectivePoint]:
    return [P for P in plane_points(F) if dot(F, P, P) == 0]


@lru_cache(maxsize=None)
def orthogonal_lists(F: FieldSpec) -> tuple[tuple[int, ...], ...]:
    """For each point index, the sorted indices of its q+1 orthogonal points.

    Each orthogonal set is the line with that dual point, so it is enumerated
    directly by parametrising the line instead of scanning all points.
    """
    pts = plane_points(F)
    idx = point_index(F)
    out = []
    for L in pts:
        # two distinct points spanning the line L^perp
        A, B = _line_basis(F, L)
        members = {idx[canonicalize(F, A)]}
        for t in range(F.q):
            v = tuple(F.add(F.mul(t, A[k]), B[k]) for k in range(3))
            members.add(idx[canonicalize(F, v)])
        out.append(tuple(sorted(members)))
    return tuple(out)


def _line_basis(F: FieldSpec, L):
    a, b, c = L
    # solve a x + b y + c z = 0 with two independent solutions
    if a:
        ia = F.inv(a)
        return ((F.neg(F.mul(b, ia)), 1, 0), (F.neg(F.mul(c, ia)), 0, 1))
    if b:
        ib = F.inv(b)
        return ((1, 0, 0), (0, F.neg(F.mul(c, ib)), 1))
    return ((1, 0, 0), (0, 1, 0))


# -- Baer subplane partition ---------------------------------------------------

def _apply(F: FieldSpec, M, v):
    return tuple(F.add(F.add(F.mul(M[r][0], v[0]), F.mul(M[r][1], v[1])), F.mul(M[r][2], v[2]))
                 for r in range(3))


@lru_cache(maxsize=None)
def singer_cycle(F: FieldSpec) -> tuple[ProjectivePoint, ...]:
    """Orbit of (1,0,0) under a collineation acting regularly on the points.

    The collineation is the companion matrix of the first cubic
    x^3 - c2 x^2 - c1 x - c0 (enumeration order over (c0, c1, c2)) whose
    projective orbit has full length q^2+q+1.
    """
    q = F.q
    n = q * q + q + 1
    start = ProjectivePoint(1, 0, 0)
    for c0 in range(1, q):
        for c1 in range(q):
            for c2 in range(q):
                M = ((0, 0, c0), (1, 0, c1), (0, 1, c2))
                orbit = [start]
                cur = start
                while True:
                    cur = canonicalize(F, _apply(F, M, cur))
                    if cur == start:
                        break
                    orbit.append(cur)
                    if len(orbit) > n:
                        break
                if len(orbit) == n:
                    return tuple(orbit)
    raise GeometryError(f"no Singer cycle found for {F}")


def subplane_partition(F: FieldSpec) -> list[list[ProjectivePoint]]:
    """Partition P2(F_{p^2}) into p^2-p+1 Baer subplanes P2(F_p).

    With a Singer cycle s of order p^4+p^2+1, the orbits of the subgroup
    generated by s^(p^2-p+1) have size p^2+p+1 and are Baer subplanes; they are
    the residue classes of the cycle index modulo p^2-p+1.
    """
    pm = prime_power(F.q)
    if pm is None or pm[1] % 2:
        raise GeometryError(f"q = {F.q} is not the square of a prime power")
    p = pm[0] ** (pm[1] // 2)
    k = p * p - p + 1
    orbit = singer_cycle(F)
    return [list(orbit[j::k]) for j in range(k)]


def subplane_lines(F: FieldSpec, group) -> list[ProjectivePoint]:
    """Dual points of the lines meeting ``group`` in at least two points."""
    lines = set()
    g = list(group)
    for i in range(len(g)):
        for j in range(i + 1, len(g)):
            lines.add(cross(F, g[i], g[j]))
    return sorted(lines)

