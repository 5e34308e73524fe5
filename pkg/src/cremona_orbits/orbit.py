"""Drivers joining the geometric Cremona action to its lattice shadow.

``coxeter_iterate`` runs the degree-growth iteration (Cremona at the first
four points, then the cyclic shift) while cross-checking geometry against the
tracked divisor class; ``orbit_bfs`` explores the full orbit under all center
choices with canonical-form deduplication.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canonical import canonical_form
from .errors import NoFrameError, StarViolationError
from .lattice import (
    DivisorClass,
    LatticeMap,
    cremona_map,
    cyclic_shift,
    iterate_class,
    permutation_map,
    plane_through_last_four,
)
from .projective import (
    CenterSet,
    Configuration,
    condition_star,
    coplanar,
    cremona_at,
    permute_config,
    star_violation,
)


@dataclass(frozen=True, slots=True)
class CremonaMove:
    centers: CenterSet


@dataclass(frozen=True, slots=True)
class PermuteMove:
    perm: tuple[int, ...]


@dataclass(frozen=True, slots=True)
class CremonaWord:
    """A sequence of Cremona moves and relabelings."""

    moves: tuple

    def __post_init__(self):
        object.__setattr__(self, "moves", tuple(self.moves))
        for mv in self.moves:
            if not isinstance(mv, (CremonaMove, PermuteMove)):
                raise TypeError("unknown move %r" % (mv,))

    @classmethod
    def coxeter_step(cls, k: int = 8) -> "CremonaWord":
        """Cremona at {1,2,3,4} followed by the shift putting point 1 last."""
        return cls((CremonaMove(CenterSet((1, 2, 3, 4))), PermuteMove(cyclic_shift(k))))


def apply_word(config: Configuration, word: CremonaWord):
    """Apply the word; return the final configuration and the composite lattice map.

    The shadow multiplies on the left move by move, so the result sends a
    class on the input to its strict transform on the output.  Fails
    atomically on the first condition-(*) violation, reporting the step.
    """
    k = config.k
    cur = config
    shadow = LatticeMap.identity(k)
    for step, move in enumerate(word.moves):
        if isinstance(move, CremonaMove):
            if move.centers.indices[-1] > k:
                raise ValueError("move %d: centers %r out of range 1..%d"
                                 % (step, move.centers.indices, k))
            try:
                cur = cremona_at(cur, move.centers)
            except StarViolationError as e:
                raise StarViolationError(e.violation, step=step) from None
            shadow = cremona_map(k, move.centers.indices) @ shadow
        else:
            cur = permute_config(cur, move.perm)
            shadow = permutation_map(k, move.perm) @ shadow
    return cur, shadow


# ---------------------------------------------------------------------------
# the degree-growth iteration

def coplanar_scan(config: Configuration) -> tuple[tuple[int, int, int, int], ...]:
    """All 4-subsets of labels (sorted) whose points lie on a common plane."""
    return tuple(
        sub
        for sub in itertools.combinations(range(1, config.k + 1), 4)
        if coplanar(*(config.point(i) for i in sub))
    )


@dataclass(frozen=True, slots=True)
class IterationReport:
    """Per-step record of the iteration, geometric scan included.

    Entry n of each per-step field describes the configuration after n steps;
    ``tracked[n]`` is the n-th power of the Coxeter element applied to
    H - E_{k-3} - .. - E_k.
    """

    k: int
    steps_requested: int
    steps_completed: int
    truncated: bool
    configs: tuple[Configuration, ...]
    star_ok: tuple[bool, ...]
    coplanar_tuples: tuple[tuple[tuple[int, int, int, int], ...], ...]
    tracked: tuple[DivisorClass, ...]
    degrees: tuple[int, ...]
    bit_lengths: tuple[int, ...]
    canonical_forms: tuple[bytes, ...]
    inequivalent: tuple[tuple[bool, ...], ...]
    all_pairwise_inequivalent: bool


def _max_bits(config: Configuration) -> int:
    return max(abs(v).bit_length() for p in config.points for v in p.coords)


def _assemble_report(steps_requested, truncated, configs, tracked) -> IterationReport:
    centers = CenterSet((1, 2, 3, 4))
    n = len(configs)
    forms = tuple(canonical_form(c) for c in configs)
    ineq = tuple(
        tuple(i != j and forms[i] != forms[j] for j in range(n)) for i in range(n)
    )
    return IterationReport(
        k=configs[0].k,
        steps_requested=steps_requested,
        steps_completed=n - 1,
        truncated=truncated,
        configs=tuple(configs),
        star_ok=tuple(condition_star(c, centers) for c in configs),
        coplanar_tuples=tuple(coplanar_scan(c) for c in configs),
        tracked=tuple(tracked[:n]),
        degrees=tuple(c.d for c in tracked[:n]),
        bit_lengths=tuple(_max_bits(c) for c in configs),
        canonical_forms=forms,
        inequivalent=ineq,
        all_pairwise_inequivalent=all(
            forms[i] != forms[j] for i in range(n) for j in range(i + 1, n)
        ),
    )


def coxeter_iterate(config: Configuration, steps: int,
                    height_cap_bits: int | None = None) -> IterationReport:
    """Iterate (Cremona at the first four points, then cyclic shift).

    Condition (*) is verified before every step; on a violation the raised
    error carries the step index and a partial report of what completed.
    The optional height cap truncates gracefully once coordinates outgrow it.
    """
    if config.k != 8:
        raise ValueError("iteration is defined for k = 8, got k = %d" % config.k)
    if steps < 1:
        raise ValueError("steps must be >= 1")
    centers = CenterSet((1, 2, 3, 4))
    shift = cyclic_shift(8)
    tracked = iterate_class(plane_through_last_four(8), steps)
    configs = [config]
    truncated = False
    for n in range(steps):
        cur = configs[-1]
        if height_cap_bits is not None and _max_bits(cur) > height_cap_bits:
            truncated = True
            break
        viol = star_violation(cur, centers)
        if viol is not None:
            err = StarViolationError(viol, step=n)
            err.partial_report = _assemble_report(steps, True, configs, tracked)
            raise err
        configs.append(permute_config(cremona_at(cur, centers), shift))
    return _assemble_report(steps, truncated, configs, tracked)


def consistency_check(report: IterationReport) -> bool:
    """Recompute the lattice prediction and the geometric scans; compare.

    Coplanar 4-tuples may only occur where the tracked class is a plane class
    H - E_a - E_b - E_c - E_d, and then only at exactly {a,b,c,d}.
    """
    centers = CenterSet((1, 2, 3, 4))
    expected = iterate_class(plane_through_last_four(report.k), report.steps_completed)
    if tuple(expected) != report.tracked:
        return False
    if tuple(c.d for c in expected) != report.degrees:
        return False
    for i, cfg in enumerate(report.configs):
        if coplanar_scan(cfg) != report.coplanar_tuples[i]:
            return False
        if condition_star(cfg, centers) != report.star_ok[i]:
            return False
        found = report.coplanar_tuples[i]
        if found:
            cls = report.tracked[i]
            if cls.d != 1 or any(mi not in (0, 1) for mi in cls.m):
                return False
            ones = tuple(j + 1 for j, mi in enumerate(cls.m) if mi == 1)
            if len(ones) != 4 or found != (ones,):
                return False
    return True


# ---------------------------------------------------------------------------
# breadth-first orbit search

@dataclass(frozen=True, slots=True)
class OrbitNode:
    canonical_form: bytes
    representative: Configuration
    depth: int
    parent_edge: tuple[bytes, CenterSet] | None


@dataclass(frozen=True, slots=True)
class OrbitGraph:
    nodes: dict
    edges: tuple
    truncated: bool
    frontier_remaining: int
    degenerate: tuple


def _expand_edge(task):
    parent_canon, cfg, centers = task
    child = cremona_at(cfg, centers)
    try:
        return parent_canon, centers, child, canonical_form(child)
    except NoFrameError:
        return parent_canon, centers, None, None


def _worker_count(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get("CREMONA_ORBITS_WORKERS", "")
    return max(1, int(env)) if env.strip() else 1


def orbit_bfs(config: Configuration, max_depth: int, max_nodes: int,
              workers: int | None = None) -> OrbitGraph:
    """Breadth-first orbit exploration with canonical-form deduplication.

    From each node every admissible center set is tried.  Results are
    level-synchronous and sorted before insertion, so the node and edge sets
    do not depend on worker count or scheduling.  ``workers`` defaults to the
    CREMONA_ORBITS_WORKERS environment variable (1 if unset).
    """
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if max_nodes < 1:
        raise ValueError("max_nodes must be >= 1")
    nworkers = _worker_count(workers)
    root_canon = canonical_form(config)
    nodes = {root_canon: OrbitNode(root_canon, config, 0, None)}
    edges = []
    degenerate = []
    expanded = set()
    truncated = False
    frontier = [root_canon]
    depth = 0
    while frontier and depth < max_depth and not truncated:
        tasks = []
        for canon in frontier:
            cfg = nodes[canon].representative
            expanded.add(canon)
            for sub in itertools.combinations(range(1, cfg.k + 1), 4):
                centers = CenterSet(sub)
                if condition_star(cfg, centers):
                    tasks.append((canon, cfg, centers))
        if nworkers > 1 and len(tasks) > 1:
            with ProcessPoolExecutor(max_workers=nworkers) as pool:
                results = list(pool.map(_expand_edge, tasks))
        else:
            results = [_expand_edge(t) for t in tasks]
        hits = []
        for parent_canon, centers, child, canon in results:
            if child is None:
                degenerate.append((parent_canon, centers))
            else:
                hits.append((canon, parent_canon, centers, child))
        hits.sort(key=lambda r: (r[0], r[1], r[2].indices))
        degenerate.sort(key=lambda r: (r[0], r[1].indices))
        frontier = []
        for canon, parent_canon, centers, child in hits:
            if canon not in nodes:
                if len(nodes) >= max_nodes:
                    truncated = True
                    continue  # node budget exhausted: drop node and edge
                nodes[canon] = OrbitNode(canon, child, depth + 1, (parent_canon, centers))
                frontier.append(canon)
            edges.append((parent_canon, canon, centers))
        depth += 1
    return OrbitGraph(
        nodes=nodes,
        edges=tuple(edges),
        truncated=truncated,
        frontier_remaining=sum(1 for c in nodes if c not in expanded),
        degenerate=tuple(degenerate),
    )
