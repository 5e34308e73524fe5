"""Configuration invariants under PGL(4) x permutation.

``canonical_form`` normalizes the configuration by every ordered 5-point
frame (send it to e0, e1, e2, e3, (1:1:1:1)), sorts the resulting canonical
points, and keeps the lexicographically least serialization.  Two
configurations are equivalent iff their canonical forms agree.
"""

from __future__ import annotations

import itertools
import math

from .errors import NoFrameError
from .linalg import adjugate4, det4, mat_vec
from .projective import Configuration

_PERMS4 = tuple(itertools.permutations(range(4)))

# images of the frame points themselves, shared by every candidate
_FRAME_IMAGES = (
    ((0, 0, 0, 1), b"0,0,0,1"),
    ((0, 0, 1, 0), b"0,0,1,0"),
    ((0, 1, 0, 0), b"0,1,0,0"),
    ((1, 0, 0, 0), b"1,0,0,0"),
    ((1, 1, 1, 1), b"1,1,1,1"),
)


def serialize_points(k, pts) -> bytes:
    """Byte encoding of a point list: ``k|x0,x1,x2,x3;...`` in decimal."""
    return b"%d|" % k + b";".join(b",".join(b"%d" % v for v in p) for p in pts)


def canonical_form(config: Configuration) -> bytes:
    """Deterministic byte-string invariant under point permutation and PGL(4).

    Enumerating ordered frames is organized per unordered 5-subset: changing
    the order of the four vertex points only permutes the rows of the
    normalizing map (the permutation sign cancels against the row scales), so
    each candidate is a coordinate permutation of one precomputed image set.
    """
    pts = [p.coords for p in config.points]
    k = len(pts)
    det_of = {}
    adj_of = {}
    for sub in itertools.combinations(range(k), 4):
        cols = tuple(tuple(pts[sub[j]][i] for j in range(4)) for i in range(4))
        d = det4(cols)
        det_of[sub] = d
        if d:
            adj_of[sub] = adjugate4(cols)

    best = None
    found = False
    prefix = b"%d|" % k
    for frame in itertools.combinations(range(k), 5):
        if any(det_of[sub] == 0 for sub in itertools.combinations(frame, 4)):
            continue
        found = True
        rest = [t for t in range(k) if t not in frame]
        for unit in frame:
            base = tuple(x for x in frame if x != unit)
            adj = adj_of[base]
            c = mat_vec(adj, pts[unit])
            p01 = c[0] * c[1]
            p23 = c[2] * c[3]
            scale = (c[1] * p23, c[0] * p23, p01 * c[3], p01 * c[2])
            variable = []
            for t in rest:
                w = mat_vec(adj, pts[t])
                y = (scale[0] * w[0], scale[1] * w[1], scale[2] * w[2], scale[3] * w[3])
                g = math.gcd(*y)
                y = (y[0] // g, y[1] // g, y[2] // g, y[3] // g)
                variable.append((y, tuple(b"%d" % abs(v) for v in y)))
            for sigma in _PERMS4:
                entries = list(_FRAME_IMAGES)
                for y, digits in variable:
                    yy = (y[sigma[0]], y[sigma[1]], y[sigma[2]], y[sigma[3]])
                    for v in yy:
                        if v:
                            if v < 0:
                                yy = (-yy[0], -yy[1], -yy[2], -yy[3])
                            break
                    blob = b",".join(
                        b"-" + s if v < 0 else s
                        for v, s in zip(yy, (digits[sigma[0]], digits[sigma[1]],
                                             digits[sigma[2]], digits[sigma[3]]))
                    )
                    entries.append((yy, blob))
                entries.sort()
                cand = prefix + b";".join(e[1] for e in entries)
                if best is None or cand < best:
                    best = cand
    if not found:
        raise NoFrameError("no 5 points of the configuration form a projective frame")
    return best


def equivalent(a: Configuration, b: Configuration) -> bool:
    """True iff some relabeling plus a projective map carries b onto a."""
    if a.k != b.k:
        return False
    return canonical_form(a) == canonical_form(b)
