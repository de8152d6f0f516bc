"""Delaunay triangulation in R^2 and R^3 by incremental Bowyer-Watson.

Conflict tests use the sign-exact predicates, so the output is a valid
Delaunay triangulation for any input, including grids and cospherical
configurations. Points exactly on a circumsphere are treated as outside it
(no conflict); with points inserted in index order this resolves every
cospherical tie deterministically in favor of the earliest-built simplices.

The triangulation of the hull exterior is represented by ghost simplices,
one per hull facet, sharing a single synthetic vertex ``GHOST``. A point
conflicts with a ghost simplex when it lies strictly beyond the facet's
hyperplane, or lies on the hyperplane and conflicts with the facet's real
neighbor; this keeps the cavity star-shaped and never produces flat
simplices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PointCloud, closure_of
from .errors import AffinelyDegenerateInput, DuplicatePoints, TooFewPoints
from .predicates import collinear3d, incircle, insphere, orient2d, orient3d

GHOST = -1


@dataclass(frozen=True)
class DelaunayComplex:
    """Delaunay triangulation plus its face closure.

    ``degenerate`` is set when some cospherical (d+2)-point configuration was
    resolved by the insertion-order tie-break, i.e. the triangulation is not
    unique.
    """

    cloud: PointCloud
    top_simplices: tuple
    all_simplices: frozenset
    degenerate: bool

    def simplices_of_dim(self, dim: int) -> tuple:
        return tuple(sorted(s for s in self.all_simplices if len(s) == dim + 1))


class _Triangulation:
    """Mutable Bowyer-Watson state; real + ghost simplices keyed by sorted
    vertex tuples, with a face -> incident-simplices map for adjacency."""

    def __init__(self, pts, dim):
        self.pts = pts
        self.dim = dim
        self.simplices = set()
        self.faces = {}
        self.orient_sign = {}
        self.start = None
        if dim == 2:
            self._orient = lambda q: orient2d(*q)
            self._inball = lambda q: incircle(*q)
        else:
            self._orient = lambda q: orient3d(*q)
            self._inball = lambda q: insphere(*q)

    # -- structure maintenance -------------------------------------------

    def _facets(self, key):
        return [key[:i] + key[i + 1:] for i in range(len(key))]

    def _add(self, key):
        self.simplices.add(key)
        for f in self._facets(key):
            self.faces.setdefault(f, []).append(key)
        if key[0] != GHOST:
            sign = self._orient([self.pts[v] for v in key])
            assert sign != 0, f"flat simplex {key}"
            self.orient_sign[key] = sign
            self.start = key

    def _remove(self, key):
        self.simplices.discard(key)
        for f in self._facets(key):
            lst = self.faces[f]
            lst.remove(key)
            if not lst:
                del self.faces[f]
        self.orient_sign.pop(key, None)

    def _neighbor(self, key, facet):
        for other in self.faces[facet]:
            if other != key:
                return other
        return None

    # -- predicates on the structure --------------------------------------

    def _beyond(self, key, facet, p):
        """Side of ``facet``'s hyperplane the point p is on, relative to the
        real simplex ``key``: +1 strictly beyond (away from key's interior),
        0 on the hyperplane, -1 on key's side."""
        opp = next(v for v in key if v not in facet)
        pos = key.index(opp)
        coords = [self.pts[v] for v in key]
        coords[pos] = self.pts[p]
        rep = self._orient(coords)
        if rep == 0:
            return 0
        return 1 if rep != self.orient_sign[key] else -1

    def _in_ball(self, key, p):
        """Sign of 'p strictly inside the circumball of real simplex key'."""
        coords = [self.pts[v] for v in key] + [self.pts[p]]
        return self._inball(coords) * self.orient_sign[key]

    def _conflicts(self, key, p) -> bool:
        if key[0] == GHOST:
            facet = key[1:]
            nb = self._neighbor(key, facet)
            side = self._beyond(nb, facet, p)
            if side != 0:
                return side > 0
            return self._in_ball(nb, p) > 0
        return self._in_ball(key, p) > 0

    # -- point location ----------------------------------------------------

    def _locate(self, p):
        """Walk to one simplex in conflict with p."""
        cur = self.start
        limit = 4 * len(self.simplices) + 32
        for _ in range(limit):
            moved = False
            for i in range(len(cur)):
                facet = cur[:i] + cur[i + 1:]
                if self._beyond(cur, facet, p) > 0:
                    nxt = self._neighbor(cur, facet)
                    if nxt[0] == GHOST:
                        return nxt  # p beyond a hull facet
                    cur = nxt
                    moved = True
                    break
            if not moved:
                return cur  # p inside the closed simplex
        return self._locate_scan(p)  # walk cycled on a degenerate input

    def _locate_scan(self, p):
        for key in sorted(self.simplices):
            if self._conflicts(key, p):
                return key
        raise AssertionError("no conflicting simplex found")  # unreachable

    # -- insertion ----------------------------------------------------------

    def insert(self, p):
        seed = self._locate(p)
        if not self._conflicts(seed, p):
            seed = self._locate_scan(p)
        cavity = {seed}
        queue = [seed]
        while queue:
            s = queue.pop()
            for facet in self._facets(s):
                nb = self._neighbor(s, facet)
                if nb is None or nb in cavity:
                    continue
                if self._conflicts(nb, p):
                    cavity.add(nb)
                    queue.append(nb)
        new_keys = []
        for s in sorted(cavity):
            for facet in self._facets(s):
                nb = self._neighbor(s, facet)
                if nb in cavity:
                    continue
                new_keys.append(tuple(sorted(facet + (p,))))
        for s in cavity:
            self._remove(s)
        for key in new_keys:
            self._add(key)

    # -- degeneracy ----------------------------------------------------------

    def had_tie_break(self) -> bool:
        """True iff some internal facet has cospherical opposite vertices."""
        for facet, incident in self.faces.items():
            if len(incident) != 2:
                continue
            s1, s2 = incident
            if s1[0] == GHOST or s2[0] == GHOST:
                continue
            opp = next(v for v in s2 if v not in facet)
            if self._in_ball(s1, opp) == 0:
                return True
        return False


def _initial_vertices(pts, dim):
    """First dim+1 affinely independent points in index order."""
    chosen = [0]
    for i in range(1, len(pts)):
        if pts[i] != pts[0]:
            chosen.append(i)
            break
    if len(chosen) < 2:
        raise AffinelyDegenerateInput("all points coincide")
    for i in range(chosen[1] + 1, len(pts)):
        a, b, c = pts[chosen[0]], pts[chosen[1]], pts[i]
        flat = orient2d(a, b, c) == 0 if dim == 2 else collinear3d(a, b, c)
        if not flat:
            chosen.append(i)
            break
    if len(chosen) < 3:
        raise AffinelyDegenerateInput("all points are collinear")
    if dim == 3:
        for i in range(chosen[2] + 1, len(pts)):
            coords = [pts[v] for v in chosen] + [pts[i]]
            if orient3d(*coords) != 0:
                chosen.append(i)
                break
        if len(chosen) < 4:
            raise AffinelyDegenerateInput("all points are coplanar")
    return chosen


def delaunay(cloud: PointCloud) -> DelaunayComplex:
    """Delaunay triangulation of the cloud.

    Deterministic for a fixed input: exact predicates with insertion in index
    order, so cospherical ties always resolve the same way (and set the
    ``degenerate`` flag).

    Raises TooFewPoints for n < dim+1, DuplicatePoints for coincident points,
    and AffinelyDegenerateInput when all points share a hyperplane.
    """
    dim = cloud.dim
    pts = cloud.points
    n = len(pts)
    if n < dim + 1:
        raise TooFewPoints(f"need at least {dim + 1} points in R^{dim}, got {n}")
    seen = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise DuplicatePoints(f"points {seen[p]} and {i} coincide")
        seen[p] = i

    init = _initial_vertices(pts, dim)
    tri = _Triangulation(pts, dim)
    first = tuple(sorted(init))
    tri._add(first)
    for facet in tri._facets(first):
        tri._add(tuple(sorted((GHOST,) + facet)))
    used = set(init)
    for p in range(n):
        if p not in used:
            tri.insert(p)

    tops = tuple(sorted(k for k in tri.simplices if k[0] != GHOST))
    all_simplices = frozenset(closure_of(tops))
    return DelaunayComplex(
        cloud=cloud,
        top_simplices=tops,
        all_simplices=all_simplices,
        degenerate=tri.had_tie_break(),
    )
