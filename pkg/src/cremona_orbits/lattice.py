"""Integer model of the divisor and curve lattices of a blown-up P^3.

A divisor class d*H - sum(m_i * E_i) is stored as (d, m).  Matrices act on
coefficient vectors in the (H, E_1..E_k) basis, where the E_i-coefficient
of d*H - sum(m_i E_i) is -m_i; ``_to_vector`` / ``_from_vector`` own that
sign convention, nothing else converts by hand.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .errors import DimensionError


@dataclass(frozen=True, slots=True)
class DivisorClass:
    """The class d*H - sum(m_i * E_i)."""

    d: int
    m: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(self.m))

    @property
    def k(self) -> int:
        return len(self.m)

    def __str__(self):
        parts = ["%dH" % self.d] if self.d else []
        for i, mi in enumerate(self.m, start=1):
            if mi:
                parts.append("%+dE%d" % (-mi, i))
        return " ".join(parts) if parts else "0"


@dataclass(frozen=True, slots=True)
class CurveClass:
    """The class a*l - sum(n_i * e_i) in the curve lattice."""

    a: int
    n: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(self.n))

    @property
    def k(self) -> int:
        return len(self.n)


def _to_vector(c: DivisorClass) -> tuple[int, ...]:
    return (c.d, *(-x for x in c.m))


def _from_vector(v) -> DivisorClass:
    return DivisorClass(v[0], tuple(-x for x in v[1:]))


@dataclass(frozen=True, slots=True)
class LatticeMap:
    """(k+1)x(k+1) integer matrix acting on (H, E_1..E_k) coefficient vectors."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValueError("matrix must be square")
        if abs(linalg.det_bareiss(rows)) != 1:
            raise ValueError("lattice map must be unimodular")

    @property
    def k(self) -> int:
        return len(self.entries) - 1

    @classmethod
    def identity(cls, k: int) -> "LatticeMap":
        return cls(linalg.identity(k + 1))

    def apply(self, c: DivisorClass) -> DivisorClass:
        if c.k != self.k:
            raise DimensionError("class has k=%d, map has k=%d" % (c.k, self.k))
        return _from_vector(linalg.mat_vec(self.entries, _to_vector(c)))

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        if self.k != other.k:
            raise DimensionError("cannot compose maps with k=%d and k=%d" % (self.k, other.k))
        return LatticeMap(linalg.mat_mul(self.entries, other.entries))


# ---------------------------------------------------------------------------
# basic classes

def hyperplane_class(k: int = 8) -> DivisorClass:
    return DivisorClass(1, (0,) * k)


def exceptional_class(i: int, k: int = 8) -> DivisorClass:
    """The exceptional divisor E_i (so d=0 and m_i = -1)."""
    m = [0] * k
    m[i - 1] = -1
    return DivisorClass(0, tuple(m))


def anticanonical_class(k: int = 8) -> DivisorClass:
    return DivisorClass(4, (2,) * k)


def plane_through_last_four(k: int = 8) -> DivisorClass:
    """H - E_{k-3} - E_{k-2} - E_{k-1} - E_k."""
    m = [0] * k
    for i in range(k - 4, k):
        m[i] = 1
    return DivisorClass(1, tuple(m))


def line_curve(k: int = 8) -> CurveClass:
    return CurveClass(1, (0,) * k)


def exceptional_curve(i: int, k: int = 8) -> CurveClass:
    n = [0] * k
    n[i - 1] = -1
    return CurveClass(0, tuple(n))


def quartic_curve_class(k: int = 8) -> CurveClass:
    """4*l - sum(e_i): the degree-4 curve class through all the points."""
    return CurveClass(4, (1,) * k)


# ---------------------------------------------------------------------------
# the two generators and the Coxeter element

def _check_centers(centers, k):
    idx = tuple(sorted(centers))
    if len(idx) != 4 or len(set(idx)) != 4:
        raise ValueError("need exactly 4 distinct center labels, got %r" % (centers,))
    if idx[0] < 1 or idx[-1] > k:
        raise ValueError("center labels %r out of range 1..%d" % (idx, k))
    return idx


def cremona_pushforward(c: DivisorClass, centers) -> DivisorClass:
    """Strict-transform class under the Cremona transformation at the centers.

    With s the sum of the center multiplicities: d' = 3d - s, and
    m'_i = 2d + m_i - s on centers, m'_i = m_i off them.
    """
    idx = _check_centers(centers, c.k)
    s = sum(c.m[i - 1] for i in idx)
    shift = 2 * c.d - s
    m2 = list(c.m)
    for i in idx:
        m2[i - 1] += shift
    return DivisorClass(3 * c.d - s, tuple(m2))


def permute_class(c: DivisorClass, perm) -> DivisorClass:
    """Relabel multiplicities: new m_i = old m_{perm[i]} (1-based labels)."""
    _check_perm(perm, c.k)
    return DivisorClass(c.d, tuple(c.m[p - 1] for p in perm))


def _check_perm(perm, k):
    if len(perm) != k or sorted(perm) != list(range(1, k + 1)):
        raise ValueError("not a permutation of 1..%d: %r" % (k, perm))


def cyclic_shift(k: int) -> tuple[int, ...]:
    """Permutation moving the first point to the last place: new i holds old i+1."""
    return tuple(range(2, k + 1)) + (1,)


def cremona_map(k: int, centers) -> LatticeMap:
    cols = [
        _to_vector(cremona_pushforward(_from_vector(e), centers))
        for e in linalg.identity(k + 1)
    ]
    return LatticeMap(tuple(zip(*cols)))


def permutation_map(k: int, perm) -> LatticeMap:
    cols = [
        _to_vector(permute_class(_from_vector(e), perm))
        for e in linalg.identity(k + 1)
    ]
    return LatticeMap(tuple(zip(*cols)))


def coxeter_element(k: int = 8) -> LatticeMap:
    """Cremona at {1,2,3,4} followed by the cyclic shift, as one lattice map."""
    if k < 8:
        raise ValueError("need k >= 8, got %d" % k)
    return permutation_map(k, cyclic_shift(k)) @ cremona_map(k, (1, 2, 3, 4))


# ---------------------------------------------------------------------------
# pairing and root classes

def intersect(dc: DivisorClass, cc: CurveClass) -> int:
    """Pairing with H.l = 1 and E_i.e_j = -delta_ij, so the value is d*a - sum(m_i n_i)."""
    if dc.k != cc.k:
        raise DimensionError("divisor has k=%d, curve has k=%d" % (dc.k, cc.k))
    return dc.d * cc.a - sum(mi * ni for mi, ni in zip(dc.m, cc.n))


def is_root_class(c: DivisorClass, curve: CurveClass | None = None) -> bool:
    """True iff the class pairs to zero against the quartic curve class.

    For k = 8 the quartic 4*l - sum(e_i) is implied; other k require an
    explicit pairing curve.
    """
    if curve is None:
        if c.k != 8:
            raise DimensionError("default quartic pairing only defined for k=8")
        curve = quartic_curve_class(8)
    return intersect(c, curve) == 0


def flopped_curve_classes(centers, k: int = 8) -> list[CurveClass]:
    """The six classes l - e_i - e_j over pairs of centers (the flopped lines)."""
    idx = _check_centers(centers, k)
    out = []
    for i, j in itertools.combinations(idx, 2):
        n = [0] * k
        n[i - 1] = 1
        n[j - 1] = 1
        out.append(CurveClass(1, tuple(n)))
    return out


# ---------------------------------------------------------------------------
# iteration and certificates

def iterate_class(v: DivisorClass, n: int) -> list[DivisorClass]:
    """[v, Mv, .., M^n v] for M the Coxeter element of the same k."""
    msigma = coxeter_element(v.k)
    out = [v]
    cur = v
    for _ in range(n):
        cur = msigma.apply(cur)
        out.append(cur)
    return out


@dataclass(frozen=True, slots=True)
class JordanCertificate:
    """Eigenvalue-1 structure of an integer matrix, certified by exact ranks.

    ``ranks[j-1]`` is the rank of (M - I)^j over Q, j = 1..4.
    """

    multiplicity_of_one: int
    ranks: tuple[int, int, int, int]
    charpoly: tuple[int, ...]

    def __post_init__(self):
        if list(self.ranks) != sorted(self.ranks, reverse=True):
            raise ValueError("ranks must be weakly decreasing: %r" % (self.ranks,))

    @property
    def stabilized(self) -> bool:
        """Nilpotency degree at eigenvalue 1 is at most 3."""
        return self.ranks[2] == self.ranks[3]

    def eigenvalue_one_block_sizes(self) -> tuple[int, ...]:
        """Jordan block sizes at eigenvalue 1, largest first (needs stabilized ranks)."""
        if not self.stabilized:
            raise ValueError("ranks did not stabilize by exponent 4")
        n = len(self.charpoly) - 1
        kernels = [0] + [n - r for r in self.ranks]
        at_least = [kernels[j] - kernels[j - 1] for j in range(1, 5)] + [0]
        sizes = []
        for size in range(4, 0, -1):
            sizes.extend([size] * (at_least[size - 1] - at_least[size]))
        return tuple(sizes)


def jordan_certificate(M: LatticeMap) -> JordanCertificate:
    """Exact characteristic polynomial plus the ranks of (M - I)^j, j = 1..4."""
    mat = M.entries
    coeffs = linalg.charpoly(mat)
    n = linalg.mat_sub(mat, linalg.identity(len(mat)))
    ranks = []
    power = n
    for _ in range(4):
        ranks.append(linalg.rank(power))
        power = linalg.mat_mul(power, n)
    return JordanCertificate(
        multiplicity_of_one=linalg.multiplicity_at_one(coeffs),
        ranks=tuple(ranks),
        charpoly=coeffs,
    )


@dataclass(frozen=True, slots=True)
class DistinctnessReport:
    """Exact-iteration evidence that the orbit of a class is injective up to N.

    ``trailing_min`` pairs (t, min degree over steps t..N) demonstrate degree
    growth; ``quadratic_part_nonzero`` records (M - I)^2 v != 0, i.e. the class
    meets the rank-3 Jordan block so its degree growth is quadratic.
    """

    N: int
    start: DivisorClass
    all_distinct: bool
    first_collision: tuple[int, int] | None
    degrees: tuple[int, ...]
    trailing_min: tuple[tuple[int, int], ...]
    degree_growth: bool
    quadratic_part_nonzero: bool


def distinctness_certificate(v: DivisorClass, N: int) -> DistinctnessReport:
    if N < 1:
        raise ValueError("N must be >= 1")
    orbit = iterate_class(v, N)
    seen: dict[tuple, int] = {}
    first_collision = None
    for n, c in enumerate(orbit):
        key = (c.d, c.m)
        if key in seen:
            first_collision = (seen[key], n)
            break
        seen[key] = n
    degrees = tuple(c.d for c in orbit)
    checkpoints = sorted({(N // 10) * i for i in range(10)})
    trailing = tuple((t, min(degrees[t:])) for t in checkpoints)
    msigma = coxeter_element(v.k)
    once = msigma.apply(v)
    twice = msigma.apply(once)
    # (M - I)^2 v = M^2 v - 2 M v + v
    quad = DivisorClass(
        twice.d - 2 * once.d + v.d,
        tuple(a - 2 * b + c for a, b, c in zip(twice.m, once.m, v.m)),
    )
    return DistinctnessReport(
        N=N,
        start=v,
        all_distinct=first_collision is None,
        first_collision=first_collision,
        degrees=degrees,
        trailing_min=trailing,
        degree_growth=trailing[-1][1] > trailing[0][1],
        quadratic_part_nonzero=(quad.d, quad.m) != (0, (0,) * v.k),
    )


# ---------------------------------------------------------------------------
# Coxeter presentation checks

def _transposition(k: int, i: int) -> tuple[int, ...]:
    perm = list(range(1, k + 1))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return tuple(perm)


def coxeter_relations(k: int) -> list[tuple[str, bool]]:
    """Each defining relation of the rank-k presentation with a verdict.

    Generators: s_i swaps E_i, E_{i+1} (i = 1..k-1); r is the Cremona map at
    {1,2,3,4}.  The diagram is a path s_1..s_{k-1} with r attached at s_4.
    """
    if k < 8:
        raise ValueError("need k >= 8, got %d" % k)
    ident = linalg.identity(k + 1)
    r = cremona_map(k, (1, 2, 3, 4)).entries
    s = {i: permutation_map(k, _transposition(k, i)).entries for i in range(1, k)}

    def power(m, e):
        return linalg.mat_pow(m, e)

    out = [("r^2 = 1", power(r, 2) == ident)]
    for i, j in itertools.combinations(range(1, k), 2):
        if j - i >= 2:
            out.append(
                ("(s%d s%d)^2 = 1" % (i, j), power(linalg.mat_mul(s[i], s[j]), 2) == ident)
            )
    for i in range(1, k - 1):
        out.append(
            ("(s%d s%d)^3 = 1" % (i, i + 1), power(linalg.mat_mul(s[i], s[i + 1]), 3) == ident)
        )
    out.append(("(r s4)^3 = 1", power(linalg.mat_mul(r, s[4]), 3) == ident))
    for i in [1, 2, 3] + list(range(5, k)):
        out.append(("(r s%d)^2 = 1" % i, power(linalg.mat_mul(r, s[i]), 2) == ident))
    return out


def coxeter_relations_check(k: int) -> bool:
    """True iff every defining relation holds as an exact matrix identity."""
    return all(ok for _, ok in coxeter_relations(k))
