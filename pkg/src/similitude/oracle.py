"""Brute-force verification of the similarity counts, sharing no logic with
the closed-form rules.

Sublattices of a given index are enumerated directly in Hermite normal form;
a sublattice is recognized as a similar image by searching for a generating
quadruple whose Gram matrix is an exact integer multiple of the ambient one.
Icosian similarity submodules are enumerated as products of a right and a
left ideal, found by a bounded coordinate search.  No floating point is used
anywhere; dedup is by lattice-key equality.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .lattice import LatticeKey
from .orders import Order, element, is_member, module_lattice
from .quadfield import QuadInt, Ring, is_representable_index
from .quat import Quat

DEFAULT_INDEX_BOUND = 49
DEFAULT_ICOSIAN_BOUND = 25


@dataclass(frozen=True)
class AmbientLattice:
    """A rank-4 ambient lattice described by an integer Gram matrix in its
    own coordinates (doubled once for the D4* weight lattice so that every
    entry stays integral)."""

    name: str
    gram: tuple[tuple[int, ...], ...]


Z4 = AmbientLattice(
    "z4",
    ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
)

# Coordinates over the basis {1, i, j, (1+i+j+k)/2}; Gram doubled to stay integral.
D4STAR = AmbientLattice(
    "d4star",
    ((2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1), (1, 1, 1, 2)),
)

_LATTICES = {"z4": Z4, "d4star": D4STAR}


def ambient(name: str) -> AmbientLattice:
    try:
        return _LATTICES[name]
    except KeyError:
        raise ValueError(f"unknown lattice {name!r}") from None


@lru_cache(maxsize=64)
def _short_vectors(lattice_name: str, m: int) -> tuple[tuple[int, ...], ...]:
    """All coordinate vectors whose (scaled) squared length is m * gram[0][0]."""
    out = []
    if lattice_name == "z4":
        r = math.isqrt(m)
        for v in itertools.product(range(-r, r + 1), repeat=4):
            if v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] == m:
                out.append(v)
    else:
        # D4*: quaternions of reduced norm m.  Enumerate doubled 1,i,j,k
        # coordinates (all even or all odd) with square sum 4m, then convert
        # to basis coordinates.
        target = 4 * m
        r = math.isqrt(target)
        for u in itertools.product(range(-r, r + 1), repeat=4):
            if (u[0] & 1) == (u[1] & 1) == (u[2] & 1) == (u[3] & 1):
                if u[0] * u[0] + u[1] * u[1] + u[2] * u[2] + u[3] * u[3] == target:
                    x0, x1, x2, x3 = u
                    out.append(((x0 - x3) // 2, (x1 - x3) // 2, (x2 - x3) // 2, x3))
    return tuple(sorted(out))


def _filter_members(hnf_np: np.ndarray, diag: tuple[int, ...], vecs: np.ndarray) -> np.ndarray:
    """Rows of `vecs` lying in the lattice with lower-triangular row basis hnf."""
    w = vecs
    mask = np.ones(len(vecs), dtype=bool)
    for i in (3, 2, 1, 0):
        q, r = np.divmod(w[:, i], diag[i])
        mask &= r == 0
        if i:
            w = w - q[:, None] * hnf_np[i]
    return vecs[mask]


def _has_gram_quadruple(cands: list[tuple[int, ...]], gram, m: int) -> bool:
    """Backtracking search for v1..v4 among cands with <v_i, v_j> = m * gram."""
    if len(cands) < 4:
        return False
    gcols = [[sum(gram[i][j] * v[j] for j in range(4)) for i in range(4)] for v in cands]

    def dot(i: int, j: int) -> int:
        vi = cands[i]
        gj = gcols[j]
        return vi[0] * gj[0] + vi[1] * gj[1] + vi[2] * gj[2] + vi[3] * gj[3]

    n = len(cands)

    def extend(chosen: list[int], depth: int) -> bool:
        if depth == 4:
            return True
        for c in range(n):
            ok = True
            for t, prev in enumerate(chosen):
                if dot(prev, c) != m * gram[t][depth]:
                    ok = False
                    break
            if ok:
                chosen.append(c)
                if extend(chosen, depth + 1):
                    return True
                chosen.pop()
        return False

    return extend([], 0)


def _diag_tuples(index: int):
    """Ordered 4-tuples of positive integers with product = index."""
    out = []

    def rec(prefix, rem, k):
        if k == 1:
            out.append((*prefix, rem))
            return
        for d in range(1, rem + 1):
            if rem % d == 0:
                rec((*prefix, d), rem // d, k - 1)

    rec((), index, 4)
    return out


def _hnf_matrices_for_diag(diag: tuple[int, ...]):
    """All HNF row bases with the given diagonal (below-diagonal reduced)."""
    ranges = []
    positions = []
    for i in range(4):
        for j in range(i):
            positions.append((i, j))
            ranges.append(range(diag[j]))
    base = [[0] * 4 for _ in range(4)]
    for i in range(4):
        base[i][i] = diag[i]
    for combo in itertools.product(*ranges):
        rows = [list(r) for r in base]
        for (i, j), v in zip(positions, combo):
            rows[i][j] = v
        yield tuple(tuple(r) for r in rows)


def enumerate_sublattices(lattice: AmbientLattice, index: int,
                          bound: int = DEFAULT_INDEX_BOUND) -> list[LatticeKey]:
    """One key per sublattice of the given index, by direct HNF enumeration."""
    if index < 1:
        raise ValueError("index must be >= 1")
    if index > bound:
        raise ValueError(f"index {index} exceeds the enumeration bound {bound}")
    keys = []
    for diag in _diag_tuples(index):
        for rows in _hnf_matrices_for_diag(diag):
            keys.append(LatticeKey(4, rows, index))
    return keys


def is_similar_sublattice(key: LatticeKey, lattice: AmbientLattice) -> bool:
    """True iff the sublattice is an inflated isometric image of the ambient one.

    Needs a basis with Gram exactly m * ambient Gram where m^2 is the index;
    a non-square index can never support an integral Gram of that shape, so
    it is rejected outright.
    """
    if key.rank != 4:
        raise ValueError("ambient lattices here have rank 4")
    if any(key.hnf[i][i] <= 0 for i in range(4)) or any(
        key.hnf[i][j] != 0 for i in range(4) for j in range(i + 1, 4)
    ):
        raise ValueError("not a sublattice key: bad Hermite normal form")
    m = math.isqrt(key.index)
    if m * m != key.index:
        return False
    vecs = _short_vectors(lattice.name, m)
    if len(vecs) < 4:
        return False
    varr = np.array(vecs, dtype=np.int64)
    hnf_np = np.array(key.hnf, dtype=np.int64)
    diag = tuple(int(key.hnf[i][i]) for i in range(4))
    members = [tuple(int(x) for x in row) for row in _filter_members(hnf_np, diag, varr)]
    return _has_gram_quadruple(members, lattice.gram, m)


def _count_chunk(lattice: AmbientLattice, m: int, diags) -> int:
    vecs = _short_vectors(lattice.name, m)
    varr = np.array(vecs, dtype=np.int64)
    gram = lattice.gram
    count = 0
    for diag in diags:
        for rows in _hnf_matrices_for_diag(diag):
            hnf_np = np.array(rows, dtype=np.int64)
            members = [tuple(int(x) for x in r) for r in _filter_members(hnf_np, diag, varr)]
            if _has_gram_quadruple(members, gram, m):
                count += 1
    return count


def count_ssl_bruteforce(lattice: AmbientLattice, m: int,
                         bound: int = DEFAULT_INDEX_BOUND, threads: int = 1) -> int:
    """Number of index-m^2 sublattices that are similar images of the ambient
    lattice, by exhaustive enumeration and testing."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m * m > bound:
        raise ValueError(f"index {m * m} exceeds the enumeration bound {bound}")
    diags = _diag_tuples(m * m)
    if threads <= 1 or len(diags) < 2:
        return _count_chunk(lattice, m, diags)
    chunks = [diags[i::threads] for i in range(threads)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        parts = list(pool.map(lambda c: _count_chunk(lattice, m, c), chunks))
    return sum(parts)


# -- icosian similarity submodules -------------------------------------------

def _sign_le(z: QuadInt, bound: int, conj: bool) -> bool:
    """Exact test sigma(z) <= bound (or the conjugate embedding)."""
    if conj:
        z = z.conjugate()
    return (z - QuadInt(Ring.GOLDEN, bound)).sign() <= 0


def _coordinate_candidates(c_bound: int) -> list[tuple[int, int, QuadInt]]:
    """Coordinates x = (p + q tau)/2 with both embeddings of x^2 at most
    c_bound; returns (p, q, (p + q tau)^2), i.e. the square of 2x."""
    out = []
    qmax = math.isqrt((16 * c_bound) // 5) + 2
    pspan = math.isqrt(16 * c_bound) + 2
    for q in range(-qmax, qmax + 1):
        for twop_plus_q in range(-pspan, pspan + 1):
            if (twop_plus_q - q) % 2:
                continue
            p = (twop_plus_q - q) // 2
            z = QuadInt(Ring.GOLDEN, p, q)
            z2 = z * z
            # (2x)^2 <= 4 c_bound under both embeddings
            if _sign_le(z2, 4 * c_bound, False) and _sign_le(z2, 4 * c_bound, True):
                out.append((p, q, z2))
    return out


def _icosian_elements_by_norm(m: int) -> dict[int, list[Quat]]:
    """Nonzero icosians a, bucketed by n = N(|a|^2) for n dividing m.

    Every one-sided ideal of norm index n^2 <= m^2 has a generator in the
    searched box: a scalar power of the fundamental unit balances the two
    embeddings of |a|^2 so that both are at most tau * sqrt(m), and the box
    bound C = ceil(tau * sqrt(m)) covers that.
    """
    # smallest integer C with C >= tau * sqrt(m):  4C^2 >= (6 + 2 sqrt5) m,
    # decided exactly by squaring out the sqrt5
    c_bound = 1
    while not (4 * c_bound * c_bound >= 6 * m and (4 * c_bound * c_bound - 6 * m) ** 2 >= 20 * m * m):
        c_bound += 1
    cands = _coordinate_candidates(c_bound)
    four_c = 4 * c_bound
    buckets: dict[int, list[Quat]] = {}
    divs = {d for d in range(1, m + 1) if m % d == 0}

    def feasible(s: QuadInt) -> bool:
        return _sign_le(s, four_c, False) and _sign_le(s, four_c, True)

    for p0, q0, z0 in cands:
        if not feasible(z0):
            continue
        for p1, q1, z1 in cands:
            s1 = z0 + z1
            if not feasible(s1):
                continue
            for p2, q2, z2 in cands:
                s2 = s1 + z2
                if not feasible(s2):
                    continue
                for p3, q3, z3 in cands:
                    s3 = s2 + z3
                    # s3 = 4 |a|^2 must be integral in the ring and positive
                    if s3.a % 4 or s3.b % 4:
                        continue
                    if not (s3.a or s3.b):
                        continue
                    if not feasible(s3):
                        continue
                    nrd = QuadInt(Ring.GOLDEN, s3.a // 4, s3.b // 4)
                    n = nrd.norm()
                    if n not in divs:
                        continue
                    quat = Quat(
                        Ring.GOLDEN,
                        (QuadInt(Ring.GOLDEN, p0, q0), QuadInt(Ring.GOLDEN, p1, q1),
                         QuadInt(Ring.GOLDEN, p2, q2), QuadInt(Ring.GOLDEN, p3, q3)),
                        2,
                    )
                    if is_member(Order.ICOSIAN, quat):
                        buckets.setdefault(n, []).append(quat)
    return buckets


@dataclass(frozen=True)
class IcosianSSM:
    key: LatticeKey
    kind: str  # "left-ideal" | "right-ideal" | "two-sided" | "product"


def enumerate_ssm_icosian(m: int, bound: int = DEFAULT_ICOSIAN_BOUND,
                          threads: int = 1) -> list[IcosianSSM]:
    """All similarity submodules of the icosian order of index m^2, each as a
    deduplicated lattice key with an ideal-type classification."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m > bound:
        raise ValueError(f"m = {m} exceeds the enumeration bound {bound}")
    if not is_representable_index(m, Ring.GOLDEN):
        raise ValueError(f"index {m}^2 is not attainable for the icosian order")
    one = element(Order.ICOSIAN, Quat.scalar(Ring.GOLDEN, 1))
    buckets = _icosian_elements_by_norm(m)

    def dedup(quats: list[Quat], side: str) -> dict[LatticeKey, object]:
        out = {}
        for q in quats:
            e = element(Order.ICOSIAN, q)
            key = module_lattice(e, one) if side == "right" else module_lattice(one, e)
            out.setdefault(key, e)
        return out

    right_by_n = {n: dedup(quats, "right") for n, quats in buckets.items()}
    left_by_n = {n: dedup(quats, "left") for n, quats in buckets.items()}

    modules: dict[LatticeKey, None] = {}
    for na, rights in sorted(right_by_n.items()):
        nb = m // na
        if na * nb != m:
            continue
        lefts = left_by_n.get(nb)
        if not lefts:
            continue
        pairs = [(ra, lb) for ra in rights.values() for lb in lefts.values()]
        if threads > 1 and len(pairs) > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                keys = list(pool.map(lambda ab: module_lattice(ab[0], ab[1]), pairs))
        else:
            keys = [module_lattice(ra, lb) for ra, lb in pairs]
        for key in keys:
            modules[key] = None

    left_keys = set(left_by_n.get(m, {}))
    right_keys = set(right_by_n.get(m, {}))
    out = []
    for key in modules:
        if key in left_keys and key in right_keys:
            kind = "two-sided"
        elif key in left_keys:
            kind = "left-ideal"
        elif key in right_keys:
            kind = "right-ideal"
        else:
            kind = "product"
        out.append(IcosianSSM(key, kind))
    out.sort(key=lambda s: s.key.hnf)
    return out


def icosian_generator_counts(m: int) -> dict[int, list[int]]:
    """Raw generator multiplicities per distinct one-sided ideal, for the
    unit-orbit divisibility property (each count is a multiple of 120)."""
    one = element(Order.ICOSIAN, Quat.scalar(Ring.GOLDEN, 1))
    buckets = _icosian_elements_by_norm(m)
    counts: dict[int, list[int]] = {}
    for n, quats in buckets.items():
        per_key: dict[LatticeKey, int] = {}
        for q in quats:
            key = module_lattice(element(Order.ICOSIAN, q), one)
            per_key[key] = per_key.get(key, 0) + 1
        counts[n] = sorted(per_key.values())
    return counts
