"""Characteristic polynomials of difference arrangements.

Three routes that share no code beyond the arrangement type:

* ``charpoly_mobius``: sum of ``mu(ambient, X) t^dim X`` over the
  intersection poset;
* ``charpoly_deletion_restriction``: the recursion
  ``chi(A) = chi(A - H) - chi(A^H)``, memoised;
* ``charpoly_finite_field``: counting points of ``F_q^dim`` that avoid
  every wall.

Internally a flat is ``(zero, reps, offs)`` over coordinate positions:
``reps[p]`` is the least position in the block of ``p`` and
``x_p = x_reps[p] + offs[p]`` (times ``z`` in a cone).  ``zero`` marks flats
inside ``z = 0``, where all offsets collapse to 0.
"""

from __future__ import annotations

import itertools
import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arrangement import Arrangement, Hyperplane
from .polynomial import IntPolynomial

DEFAULT_MAX_POINTS = 10**8


@dataclass(frozen=True)
class Flat:
    """An element of the intersection poset, in coordinate labels.

    ``blocks`` are sorted by least label; ``offsets[v]`` is ``x_v`` minus the
    block representative (a multiple of ``z`` in a cone).  ``z_zero`` says
    the flat lies in ``z = 0``, in which case every offset is 0.
    """

    blocks: tuple
    offsets: tuple
    z_zero: bool = False
    coned: bool = False

    @property
    def dimension(self) -> int:
        return len(self.blocks) + (self.coned and not self.z_zero)

    def equations(self) -> list:
        off = dict(self.offsets)
        out = []
        zs = " z" if self.coned else ""
        for b in self.blocks:
            r = b[0]
            out.extend(f"x{v} - x{r} = {off[v]}{zs}" for v in b[1:])
        if self.z_zero:
            out.append("z = 0")
        return out


def _hyperplane_positions(A: Arrangement) -> list:
    pos = {v: p for p, v in enumerate(A.coordinates)}
    return [(pos[h.i], pos[h.j], h.c) for h in A.hyperplanes]


def _meet(flat, a, b, c):
    """Intersect an internal flat with ``x_a - x_b = c``; None if contained or empty."""
    zero, reps, offs = flat
    if zero:
        c = 0
    ra, rb = reps[a], reps[b]
    if ra == rb:
        return None
    # x_ra + offs[a] - x_rb - offs[b] = c
    if ra < rb:
        keep, gone, shift = ra, rb, offs[a] - offs[b] - c  # x_rb = x_ra + shift
    else:
        keep, gone, shift = rb, ra, c + offs[b] - offs[a]  # x_ra = x_rb + shift
    nreps = list(reps)
    noffs = list(offs)
    for p, r in enumerate(reps):
        if r == gone:
            nreps[p] = keep
            if not zero:
                noffs[p] = offs[p] + shift
    return (zero, tuple(nreps), tuple(noffs))


def _meet_z0(flat):
    zero, reps, offs = flat
    if zero:
        return None
    return (True, reps, (0,) * len(reps))


def _enumerate_flats(A: Arrangement) -> dict:
    """All internal flats keyed to their codimension, built rank by rank."""
    n = len(A.coordinates)
    hs = _hyperplane_positions(A)
    top = (False, tuple(range(n)), (0,) * n)
    level = {top}
    flats = {top: 0}
    rank = 0
    while level:
        rank += 1
        nxt = set()
        for X in level:
            if A.coned:
                Y = _meet_z0(X)
                if Y is not None and Y not in flats:
                    nxt.add(Y)
            for a, b, c in hs:
                Y = _meet(X, a, b, c)
                if Y is not None and Y not in flats:
                    nxt.add(Y)
        for Y in nxt:
            flats[Y] = rank
        level = nxt
    return flats


def _internal_dim(flat, coned: bool) -> int:
    zero, reps, _ = flat
    return sum(1 for p, r in enumerate(reps) if p == r) + (coned and not zero)


def _to_flat(A: Arrangement, flat) -> Flat:
    zero, reps, offs = flat
    labels = A.coordinates
    blocks = defaultdict(list)
    for p, r in enumerate(reps):
        blocks[r].append(labels[p])
    ordered = tuple(tuple(sorted(b)) for _, b in sorted(blocks.items(), key=lambda kv: min(kv[1])))
    # re-base offsets on the least label of each block
    off = {}
    for r, members in blocks.items():
        base = offs[labels.index(min(members))]
        for v in members:
            off[v] = offs[labels.index(v)] - base
    return Flat(ordered, tuple(sorted(off.items())), zero, A.coned)


class IntersectionPoset:
    """The flats of an arrangement ordered by reverse inclusion.

    ``flats[0]`` is the ambient space.  ``leq(x, y)`` is the poset order:
    ``x <= y`` when flat ``x`` contains flat ``y``.
    """

    def __init__(self, A: Arrangement):
        self.arrangement = A
        raw = _enumerate_flats(A)
        self._raw = sorted(raw, key=lambda f: (raw[f], f))
        self._rank = [raw[f] for f in self._raw]
        self.flats = [_to_flat(A, f) for f in self._raw]

    def __len__(self):
        return len(self._raw)

    def rank(self, x: int) -> int:
        return self._rank[x]

    def dimension(self, x: int) -> int:
        return _internal_dim(self._raw[x], self.arrangement.coned)

    def leq(self, x: int, y: int) -> bool:
        return _contains(self._raw[x], self._raw[y])

    def mobius_from_top(self) -> list:
        """``mu(ambient, X)`` for every flat by the plain recursion over the poset."""
        mu = [0] * len(self)
        mu[0] = 1
        for y in range(1, len(self)):
            mu[y] = -sum(mu[x] for x in range(y) if self._rank[x] < self._rank[y] and self.leq(x, y))
        return mu

    def charpoly(self) -> IntPolynomial:
        out = [0] * (self.arrangement.dimension + 1)
        for x, m in enumerate(self.mobius_from_top()):
            out[self.dimension(x)] += m
        return IntPolynomial(out)


def _contains(big, small) -> bool:
    """Does internal flat ``big`` contain internal flat ``small``?"""
    bz, breps, boffs = big
    sz, sreps, soffs = small
    if bz and not sz:
        return False
    for p, r in enumerate(breps):
        if sreps[p] != sreps[r]:
            return False
        if not sz and soffs[p] - soffs[r] != boffs[p]:
            return False
    return True


def intersection_poset(A: Arrangement) -> IntersectionPoset:
    return IntersectionPoset(A)


@lru_cache(maxsize=None)
def _chromatic(k: int, edges: frozenset) -> tuple:
    """Chromatic polynomial coefficients (low degree first) by deletion-contraction."""
    if not edges:
        return (0,) * k + (1,)
    a, b = min(edges)
    rest = edges - {(a, b)}
    # contract b into a, then close the gap left by b
    ren = {v: (a if v == b else v - (v > b)) for v in range(k)}
    merged = frozenset(tuple(sorted((ren[x], ren[y]))) for x, y in rest if {ren[x], ren[y]} != {ren[a]})
    deleted, contracted = _chromatic(k, rest), _chromatic(k - 1, merged)
    out = list(deleted)
    for d, c in enumerate(contracted):
        out[d] -= c
    return tuple(out)


def _graphic_mobius(k: int, edges: frozenset) -> int:
    """``mu`` from bottom to top of the bond lattice of a connected graph.

    This is the linear coefficient of the chromatic polynomial, the
    characteristic polynomial of the graphic arrangement.
    """
    return _chromatic(k, frozenset(tuple(sorted(e)) for e in edges))[1] if k > 1 else 1


def _block_sums(n: int, pairs: dict) -> tuple:
    """Per vertex subset: the sum of ``mu`` over its connected offset configurations.

    A configuration fixes the offset of every member against the least one
    and joins ``a`` to ``b`` whenever ``o_a - o_b`` is one of their
    constants; it is a flat of the block alone exactly when that graph is
    connected.  Configurations are grown one attached vertex at a time.
    Returns ``(sums, realised)`` keyed by bitmask.
    """
    sums: dict = defaultdict(int)
    realised = set()
    seen = set()
    for root in range(n):
        stack = [((root, 0),)]
        while stack:
            state = stack.pop()
            if state in seen:
                continue
            seen.add(state)
            off = dict(state)
            members = sorted(off)
            mask = sum(1 << p for p in members)
            realised.add(mask)
            idx = {p: q for q, p in enumerate(members)}
            edges = frozenset(
                (idx[a], idx[b]) for a, b in itertools.combinations(members, 2)
                if off[a] - off[b] in pairs.get((a, b), ())
            )
            sums[mask] += _graphic_mobius(len(members), edges)
            for v in range(root + 1, n):
                if v in off:
                    continue
                for u in members:
                    for c in pairs.get((v, u), ()):
                        nxt = tuple(sorted(state + ((v, off[u] + c),)))
                        if nxt not in seen:
                            stack.append(nxt)
    return sums, realised


def _set_partitions(n: int):
    """Set partitions of ``0..n-1`` as tuples of bitmasks."""
    def rec(rest: int):
        if not rest:
            yield ()
            return
        low = rest & -rest
        others = rest ^ low
        sub = others
        while True:
            block = low | sub
            for tail in rec(rest ^ block):
                yield (block,) + tail
            if not sub:
                break
            sub = (sub - 1) & others
    yield from rec((1 << n) - 1)


def _refines_masks(fine, coarse_of) -> bool:
    """``coarse_of[e]`` is the block mask holding element ``e``."""
    return all(b & ~coarse_of[(b & -b).bit_length() - 1] == 0 for b in fine)


def _block_lookup(n: int, part) -> list:
    out = [0] * n
    for B in part:
        for e in range(n):
            if B >> e & 1:
                out[e] = B
    return out


def charpoly_mobius(A: Arrangement) -> IntPolynomial:
    """``sum mu(ambient, X) t^dim X`` over the intersection poset.

    Off ``z = 0`` a flat is a set partition of the coordinates plus an
    offset configuration on each block.  The walls through it split into
    one graphic arrangement per block, so ``mu`` is the product of the
    blocks' bond-lattice values and sums factor over the blocks.  Flats
    inside ``z = 0`` are indexed by the realisable partitions; their ``mu``
    comes from the recursion over the flats containing them.
    """
    n = len(A.coordinates)
    pairs = defaultdict(set)
    for a, b, c in _hyperplane_positions(A):
        pairs[(a, b)].add(c)
        pairs[(b, a)].add(-c)
    sums, realised = _block_sums(n, pairs)
    coeffs = [0] * (A.dimension + 1)
    free_mass = {}
    for part in _set_partitions(n):
        if not all(B in realised for B in part):
            continue
        mu = 1
        for B in part:
            mu *= sums[B]
        free_mass[part] = mu
        coeffs[len(part) + A.coned] += mu
    if A.coned:
        # free flats below Z_pi: their partitions refine pi, so the mass
        # factors over the blocks of pi
        below: dict = {0: 1}
        for mask in range(1, 1 << n):
            low = mask & -mask
            others = mask ^ low
            total, sub = 0, others
            while True:
                B = low | sub
                if B in realised:
                    total += sums[B] * below[mask ^ B]
                if not sub:
                    break
                sub = (sub - 1) & others
            below[mask] = total
        zero_mu: dict = {}
        for part in sorted(free_mass, key=len, reverse=True):
            look = _block_lookup(n, part)
            total = 1
            for B in part:
                total *= below[B]
            total += sum(m for Q, m in zero_mu.items() if _refines_masks(Q, look))
            zero_mu[part] = -total
            coeffs[len(part)] -= total
    return IntPolynomial(coeffs)


# --- deletion-restriction ---------------------------------------------------

def _normalise(k: int, pairs: dict) -> tuple:
    """Key for a difference arrangement on positions ``0..k-1``.

    ``pairs`` maps ``(a, b)`` with ``a < b`` to the constants of
    ``x_a - x_b = c``.  Untouched positions are dropped (each is a factor
    ``t``) and the rest are renumbered in order.
    """
    used = sorted({p for ab, cs in pairs.items() if cs for p in ab})
    ren = {p: q for q, p in enumerate(used)}
    items = tuple(sorted(((ren[a], ren[b]), tuple(sorted(cs))) for (a, b), cs in pairs.items() if cs))
    return k - len(used), len(used), items


class _DelRest:
    def __init__(self, coned: bool):
        self.coned = coned
        self.memo: dict = {}
        self.t = IntPolynomial([0, 1])

    def chi(self, k: int, pairs: dict) -> IntPolynomial:
        isolated, k, items = _normalise(k, pairs)
        return IntPolynomial.monomial(isolated) * self._chi_key(k, items)

    def _chi_key(self, k: int, items: tuple) -> IntPolynomial:
        key = (k, items)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if not items:
            out = IntPolynomial.monomial(k)
            if self.coned:
                out = out * IntPolynomial([-1, 1])
            self.memo[key] = out
            return out
        pairs = {ab: set(cs) for ab, cs in items}
        if not self.coned:
            comps = _components(k, pairs)
            if len(comps) > 1:
                out = IntPolynomial([1])
                for comp in comps:
                    sub = {ab: cs for ab, cs in pairs.items() if ab[0] in comp}
                    out = out * self.chi(k, sub).divide_by_t_power(k - len(comp))
                self.memo[key] = out
                return out
        (a, b), cs = self._pick(k, pairs)
        deleted = {ab: c for ab, c in pairs.items() if ab != (a, b)}
        out = self.chi(k, deleted)
        # removing the walls of one pair one at a time: every earlier wall is
        # parallel to the next one, so each restriction sees the full arrangement
        for c in sorted(cs):
            out = out - self.chi(k - 1, _restrict_pairs(k, pairs, a, b, c))
        self.memo[key] = out
        return out

    @staticmethod
    def _pick(k, pairs):
        deg = [0] * k
        for a, b in pairs:
            deg[a] += 1
            deg[b] += 1
        v = min((p for p in range(k) if deg[p]), key=lambda p: (deg[p], p))
        best = min((ab for ab in pairs if v in ab), key=lambda ab: (len(pairs[ab]), ab))
        return best, pairs[best]


def _components(k: int, pairs: dict) -> list:
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in pairs:
        parent[find(a)] = find(b)
    comps = defaultdict(set)
    for p in range(k):
        comps[find(p)].add(p)
    return [c for c in comps.values() if any(a in c for a, _ in pairs)]


def _restrict_pairs(k: int, pairs: dict, a: int, b: int, c: int) -> dict:
    """Restrict to ``x_a - x_b = c`` by eliminating ``a``; positions above ``a`` shift down."""
    def ren(p):
        return p - 1 if p > a else p

    out: dict = defaultdict(set)
    for (i, j), cs in pairs.items():
        if (i, j) == (a, b):
            continue
        if i == a:      # x_a - x_j = d  ->  x_b - x_j = d - c
            i2, j2, shift = b, j, -c
        elif j == a:    # x_i - x_a = d  ->  x_i - x_b = d + c
            i2, j2, shift = i, b, c
        else:
            i2, j2, shift = i, j, 0
        if i2 == j2:
            continue
        for d in cs:
            d2 = d + shift
            if i2 < j2:
                out[(ren(i2), ren(j2))].add(d2)
            else:
                out[(ren(j2), ren(i2))].add(-d2)
    return out


def charpoly_deletion_restriction(A: Arrangement) -> IntPolynomial:
    """Memoised deletion-restriction on the walls of one coordinate pair at a time."""
    pos = {v: p for p, v in enumerate(A.coordinates)}
    pairs: dict = defaultdict(set)
    for h in A.hyperplanes:
        a, b = pos[h.i], pos[h.j]
        if a < b:
            pairs[(a, b)].add(h.c)
        else:
            pairs[(b, a)].add(-h.c)
    return _DelRest(A.coned).chi(len(A.coordinates), pairs)


# --- finite field -----------------------------------------------------------

def is_prime(q: int) -> bool:
    if q < 2:
        return False
    if q % 2 == 0:
        return q == 2
    d = 3
    while d * d <= q:
        if q % d == 0:
            return False
        d += 2
    return True


def min_valid_prime_bound(A: Arrangement) -> int:
    """Primes strictly above this bound are accepted for point counting."""
    return 2 * A.max_constant() + len(A)


def valid_primes(A: Arrangement, count: int = 3) -> list:
    out, q = [], min_valid_prime_bound(A) + 1
    while len(out) < count:
        if is_prime(q):
            out.append(q)
        q += 1
    return out


def max_points() -> int:
    raw = os.environ.get("ARRANGEO_MAX_POINTS")
    return int(raw) if raw else DEFAULT_MAX_POINTS


def charpoly_finite_field(A: Arrangement, q: int, *, exhaustive: bool = False, jobs: int = 1) -> int:
    """Number of points of ``F_q^dim`` on no wall of ``A``.

    Difference walls are invariant under adding the same scalar to every
    ``x_i``, and a cone under scaling, so by default the first coordinate is
    pinned to 0 and ``z`` to 1, and the count is multiplied back by ``q``
    and ``q - 1``; ``exhaustive=True`` walks the whole space instead.
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    bound = min_valid_prime_bound(A)
    if q <= bound:
        raise ValueError(f"q = {q} is too small for this arrangement (need q > {bound})")
    n = len(A.coordinates)
    pinned = not exhaustive and n > 0
    free = n - 1 if pinned else n
    walked = q ** free * ((q - 1 if exhaustive else 1) if A.coned else 1)
    if walked > max_points():
        raise ValueError(f"{walked} points exceed the limit of {max_points()} "
                         "(set ARRANGEO_MAX_POINTS to raise it)")
    hs = _hyperplane_positions(A)
    # axes: optional z, then the x coordinates with x_0 possibly pinned
    zvals = None
    if A.coned:
        zvals = np.arange(1, q, dtype=np.int64) if exhaustive else np.ones(1, dtype=np.int64)
    axes = ([zvals] if A.coned else []) + [np.arange(q, dtype=np.int64)] * free

    def count_slice(first):
        sub = axes[:]
        if sub:
            sub[0] = np.asarray([first], dtype=np.int64)
        grids = np.meshgrid(*sub, indexing="ij") if sub else []
        shape = grids[0].shape if grids else (1,)
        zgrid = grids[0] if A.coned else None
        xs = grids[1:] if A.coned else grids
        if pinned:
            xs = [np.zeros(shape, dtype=np.int64)] + list(xs)
        ok = np.ones(shape, dtype=bool)
        for a, b, c in hs:
            rhs = c * zgrid if A.coned else c
            ok &= (xs[a] - xs[b] - rhs) % q != 0
        return int(ok.sum())

    firsts = list(axes[0]) if axes else [None]
    if jobs > 1 and len(firsts) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            total = sum(pool.map(count_slice, firsts))
    else:
        total = sum(count_slice(f) for f in firsts)
    if pinned:
        total *= q
    if A.coned and not exhaustive:
        total *= q - 1
    return total


def finite_field_agrees(A: Arrangement, chi: IntPolynomial, primes=None) -> bool:
    """``chi(q)`` equals the point count for each prime (three valid ones by default)."""
    primes = primes or valid_primes(A, 3)
    return all(charpoly_finite_field(A, q) == chi(q) for q in primes)
