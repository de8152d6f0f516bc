"""Exact bottleneck distance between persistence diagrams.

The optimal value is one of finitely many candidates: the pairwise sup-norm
distances between points of the two diagrams, the per-point diagonal costs,
and the essential-class matching cost. We binary-search that candidate set,
testing feasibility of each threshold with bipartite matchings; by the
Mendelsohn-Dulmage theorem it suffices to check that the points whose
diagonal cost exceeds the threshold can be covered on each side separately,
and the two covers can then be merged into a single witness matching.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InfiniteDistance, ValidationError

DIAGONAL_CONVENTIONS = ("half", "full")


@dataclass(frozen=True)
class Matching:
    """Witness for a bottleneck value: a bijection up to the diagonal.

    Indices refer to positions in the input pair sequences. ``cost`` is the
    maximum over matched sup-norm distances and diagonal costs.
    """

    matched: tuple  # ((index in X, index in Y), ...)
    to_diagonal_x: tuple
    to_diagonal_y: tuple
    cost: float


def _dist_inf(a, b) -> float:
    d0 = abs(a[0] - b[0])
    if a[1] == b[1]:  # covers inf deaths on both sides
        return d0
    return max(d0, abs(a[1] - b[1]))


def _diag_cost(pair, convention: str) -> float:
    pers = pair[1] - pair[0]
    return pers if convention == "full" else pers / 2.0


def _kuhn_cover(left, adj, n_right) -> dict | None:
    """Matching covering every left vertex, or None if impossible.

    ``adj[i]`` lists right vertices available to left vertex ``left[i]``.
    Returns {left_vertex: right_vertex}.
    """
    match_right = {}

    def try_augment(i, seen):
        for r in adj[i]:
            if r in seen:
                continue
            seen.add(r)
            if r not in match_right or try_augment(match_right[r], seen):
                match_right[r] = i
                return True
        return False

    for i in range(len(left)):
        if not try_augment(i, set()):
            return None
    return {left[i]: r for r, i in match_right.items()}


def bottleneck(x_pairs, y_pairs, diagonal: str = "half"):
    """Bottleneck distance between two same-dimension diagrams.

    Returns ``(value, Matching)``. ``diagonal`` selects the diagonal cost of
    an unmatched pair: "half" is (death - birth) / 2, the sup-norm distance
    to the nearest diagonal point; "full" is death - birth.

    Raises InfiniteDistance when the diagrams have different numbers of
    infinite-death classes (no finite-cost bijection exists).
    """
    if diagonal not in DIAGONAL_CONVENTIONS:
        raise ValidationError(f"unknown diagonal convention {diagonal!r}")
    xs = [(float(b), float(d)) for b, d in x_pairs]
    ys = [(float(b), float(d)) for b, d in y_pairs]

    x_ess = sorted((i for i, p in enumerate(xs) if math.isinf(p[1])),
                   key=lambda i: xs[i][0])
    y_ess = sorted((i for i, p in enumerate(ys) if math.isinf(p[1])),
                   key=lambda i: ys[i][0])
    if len(x_ess) != len(y_ess):
        raise InfiniteDistance(
            f"essential-class counts differ: {len(x_ess)} vs {len(y_ess)}")
    # Sorted birth-to-birth matching minimizes the max gap on the line.
    ess_matched = tuple(zip(x_ess, y_ess))
    ess_cost = max((abs(xs[i][0] - ys[j][0]) for i, j in ess_matched),
                   default=0.0)

    x_fin = [i for i, p in enumerate(xs) if not math.isinf(p[1])]
    y_fin = [i for i, p in enumerate(ys) if not math.isinf(p[1])]
    dist = [[_dist_inf(xs[i], ys[j]) for j in y_fin] for i in x_fin]
    diag_x = [_diag_cost(xs[i], diagonal) for i in x_fin]
    diag_y = [_diag_cost(ys[j], diagonal) for j in y_fin]

    candidates = {0.0, ess_cost}
    candidates.update(v for row in dist for v in row)
    candidates.update(diag_x)
    candidates.update(diag_y)
    cand = sorted(candidates)

    def hard_sets(c):
        hx = [a for a, v in enumerate(diag_x) if v > c]
        hy = [b for b, v in enumerate(diag_y) if v > c]
        return hx, hy

    def feasible(c):
        hx, hy = hard_sets(c)
        adj_x = [[b for b in range(len(y_fin)) if dist[a][b] <= c] for a in hx]
        if _kuhn_cover(hx, adj_x, len(y_fin)) is None:
            return False
        adj_y = [[a for a in range(len(x_fin)) if dist[a][b] <= c] for b in hy]
        return _kuhn_cover(hy, adj_y, len(x_fin)) is not None

    lo, hi = 0, len(cand) - 1
    while cand[lo] < ess_cost:
        lo += 1
    best = hi
    a, b = lo, hi
    while a <= b:
        mid = (a + b) // 2
        if feasible(cand[mid]):
            best = mid
            b = mid - 1
        else:
            a = mid + 1
    value = cand[best]

    matching = _build_matching(xs, ys, x_fin, y_fin, dist, diag_x, diag_y,
                               ess_matched, value)
    return value, matching


def _build_matching(xs, ys, x_fin, y_fin, dist, diag_x, diag_y,
                    ess_matched, c) -> Matching:
    nx, ny = len(x_fin), len(y_fin)
    hx = [a for a, v in enumerate(diag_x) if v > c]
    hy = [b for b, v in enumerate(diag_y) if v > c]
    adj_x = [[b for b in range(ny) if dist[a][b] <= c] for a in hx]
    cover_x = _kuhn_cover(hx, adj_x, ny)
    adj_y = [[a for a in range(nx) if dist[a][b] <= c] for b in hy]
    cover_y = _kuhn_cover(hy, adj_y, nx)
    assert cover_x is not None and cover_y is not None

    # Merge the two covers (Mendelsohn-Dulmage): start from the X-side cover
    # and walk alternating chains to pull in each uncovered hard Y vertex
    # without ever exposing a hard X vertex.
    match_xy = dict(cover_x)
    match_yx = {b: a for a, b in match_xy.items()}
    hy_set = set(hy)
    for b in hy:
        if b in match_yx:
            continue
        y_cur = b
        while True:
            a = cover_y[y_cur]
            prev = match_xy.get(a)
            match_xy[a] = y_cur
            match_yx[y_cur] = a
            if prev is None:
                break
            del match_yx[prev]
            if prev not in hy_set:
                break
            y_cur = prev

    matched = [(x_fin[a], y_fin[b]) for a, b in sorted(match_xy.items())]
    matched.extend(ess_matched)
    used_x = {i for i, _ in matched}
    used_y = {j for _, j in matched}
    to_diag_x = tuple(i for i in range(len(xs)) if i not in used_x)
    to_diag_y = tuple(j for j in range(len(ys)) if j not in used_y)
    return Matching(matched=tuple(sorted(matched)),
                    to_diagonal_x=to_diag_x,
                    to_diagonal_y=to_diag_y,
                    cost=c)
