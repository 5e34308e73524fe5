"""Shared helpers for the test suite."""

from __future__ import annotations

import itertools
import random

import cremona_orbits as co


def cfg_from_rows(rows) -> co.Configuration:
    return co.Configuration(tuple(co.normalize_point(tuple(r)) for r in rows))


def rand_invertible_map(rng, bound=9) -> co.ProjectiveMap:
    while True:
        rows = [[rng.randint(-bound, bound) for _ in range(4)] for _ in range(4)]
        try:
            return co.ProjectiveMap.from_rows(rows)
        except ValueError:
            continue


def rand_permutation(rng, k) -> tuple[int, ...]:
    perm = list(range(1, k + 1))
    rng.shuffle(perm)
    return tuple(perm)


def rand_divisor(rng, k=8, bound=9) -> co.DivisorClass:
    return co.DivisorClass(
        rng.randint(-bound, bound), tuple(rng.randint(-bound, bound) for _ in range(k))
    )


def special_coplanar_config(seed, height=20) -> co.Configuration:
    """Points 5-8 on the plane X3 = 0; the only coplanar 4-tuple is {5,6,7,8}."""
    rng = random.Random(seed)
    for _attempt in range(200):
        pts = []
        while len(pts) < 8:
            raw = [rng.randint(-height, height) for _ in range(4)]
            if len(pts) >= 4:
                raw[3] = 0
            if tuple(raw) == (0, 0, 0, 0):
                continue
            p = co.normalize_point(tuple(raw))
            if any(p == q for q in pts):
                continue
            pts.append(p)
        cfg = co.Configuration(tuple(pts))
        if co.coplanar_scan(cfg) == ((5, 6, 7, 8),):
            return cfg
    raise RuntimeError("failed to sample a special configuration for seed %d" % seed)


def brute_force_canonical(config) -> bytes:
    """Reference canonical form, straight from the definition.

    Normalize by every ordered 5-point frame via the public frame_transform,
    sort the canonical points, serialize, and keep the byte-least outcome.
    """
    best = None
    k = config.k
    for order in itertools.permutations(range(k), 5):
        try:
            t = co.frame_transform([config.points[i] for i in order])
        except co.FrameError:
            continue
        pts = sorted(t.apply(p).coords for p in config.points)
        blob = b"%d|" % k + b";".join(b",".join(b"%d" % v for v in p) for p in pts)
        if best is None or blob < best:
            best = blob
    if best is None:
        raise co.NoFrameError("no frame among the test points")
    return best
