"""Finite posets and lattices over dense element indices.

Subsets of the carrier are int bitmasks: bit i stands for element i.
``up[i]`` is the mask of everything above element i (inclusive), ``down[i]``
the mask of everything below.  A fixed linear extension ``topo`` orders all
witness searches, so every reported counterexample is deterministic and
lexicographically least in that order.
"""

from dataclasses import dataclass, field

from . import _kernels as kernels
from .errors import CycleDetectedError, DuplicateNameError, SizeBudgetError, UnknownNameError

MAX_ELEMENTS = 64


class Poset:
    """Immutable finite poset: element names plus closed up-masks."""

    __slots__ = ("names", "up", "down", "topo", "rank", "top", "bottom", "_index", "_covers")

    def __init__(self, names, up):
        names = tuple(names)
        up = tuple(up)
        n = len(names)
        if n == 0:
            raise ValueError("poset needs at least one element")
        if len(set(names)) != n:
            raise DuplicateNameError("element names must be distinct")
        if len(up) != n:
            raise ValueError("up-mask count does not match element count")
        full = (1 << n) - 1
        down = [0] * n
        for i in range(n):
            row = up[i]
            if row & ~full:
                raise ValueError(f"up-mask of {names[i]!r} has bits outside the carrier")
            if not row >> i & 1:
                raise ValueError(f"order is not reflexive at {names[i]!r}")
            m = row
            while m:
                low = m & -m
                down[low.bit_length() - 1] |= 1 << i
                m ^= low
        for i in range(n):
            if up[i] & down[i] != 1 << i:
                j = (up[i] & down[i] & ~(1 << i)).bit_length() - 1
                raise CycleDetectedError(names[i], names[j])
            acc = 0
            m = up[i]
            while m:
                low = m & -m
                acc |= up[low.bit_length() - 1]
                m ^= low
            if acc != up[i]:
                raise ValueError(f"order is not transitive at {names[i]!r}")
        self.names = names
        self.up = up
        self.down = tuple(down)
        self.topo = tuple(sorted(range(n), key=lambda i: (bin(down[i]).count("1"), i)))
        rank = [0] * n
        for r, i in enumerate(self.topo):
            rank[i] = r
        self.rank = tuple(rank)
        self._index = {name: i for i, name in enumerate(names)}
        self.top = next((i for i in range(n) if down[i] == full), None)
        self.bottom = next((i for i in range(n) if up[i] == full), None)
        self._covers = None

    @property
    def n(self):
        return len(self.names)

    @property
    def full(self):
        return (1 << len(self.names)) - 1

    def leq(self, i, j):
        return bool(self.up[i] >> j & 1)

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise UnknownNameError(f"unknown element {name!r}") from None

    def covers(self):
        """Transitive reduction as (lower, upper) index pairs, sorted."""
        if self._covers is None:
            out = []
            for i in range(self.n):
                strict = self.up[i] & ~(1 << i)
                m = strict
                while m:
                    low = m & -m
                    j = low.bit_length() - 1
                    m ^= low
                    if not strict & self.down[j] & ~(1 << j):
                        out.append((i, j))
            self._covers = tuple(sorted(out))
        return self._covers

    def mask_of(self, elems):
        """Bitmask for an iterable of element names or indices."""
        mask = 0
        for e in elems:
            mask |= 1 << (e if isinstance(e, int) else self.index(e))
        return mask

    def names_of(self, mask):
        return tuple(self.names[i] for i in range(self.n) if mask >> i & 1)

    def iter_mask(self, mask):
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __eq__(self, other):
        return isinstance(other, Poset) and self.names == other.names and self.up == other.up

    def __hash__(self):
        return hash((self.names, self.up))

    def __repr__(self):
        return f"Poset({len(self.names)} elements: {' '.join(self.names)})"


def make_poset(names, cover_pairs, max_size=MAX_ELEMENTS):
    """Build a poset from cover pairs (lower, upper) given by element name.

    The carrier is capped at ``max_size`` (default 64, one machine word per
    mask); pass a larger cap to fall back to unbounded Python-int masks.
    """
    names = tuple(names)
    if len(names) > max_size:
        raise SizeBudgetError(f"{len(names)} elements exceed the cap of {max_size}")
    if len(set(names)) != len(names):
        dup = next(x for x in names if names.count(x) > 1)
        raise DuplicateNameError(f"duplicate element name {dup!r}")
    index = {name: i for i, name in enumerate(names)}
    adj = [0] * len(names)
    for lo, hi in cover_pairs:
        for name in (lo, hi):
            if name not in index:
                raise UnknownNameError(f"cover references unknown element {name!r}")
        adj[index[lo]] |= 1 << index[hi]
    up = kernels.closure(len(names), adj)
    for i in range(len(names)):
        bad = up[i] & ~(1 << i)
        while bad:
            low = bad & -bad
            j = low.bit_length() - 1
            bad ^= low
            if up[j] >> i & 1:
                raise CycleDetectedError(names[i], names[j])
    return Poset(names, up)


def upper_set(p, mask):
    """Common upper bounds of the subset; the empty set yields everything."""
    acc = p.full
    for i in p.iter_mask(mask):
        acc &= p.up[i]
    return acc


def lower_set(p, mask):
    """Common lower bounds of the subset; the empty set yields everything."""
    acc = p.full
    for i in p.iter_mask(mask):
        acc &= p.down[i]
    return acc


def bounds(p):
    """(bottom, top) indices, either may be None."""
    return (p.bottom, p.top)


@dataclass(frozen=True)
class NotALattice:
    """Witness that a pair has no lub or no glb.

    ``frontier`` holds the minimal upper bounds (kind 'join') or maximal
    lower bounds (kind 'meet') of the offending pair; it is an antichain
    that never has exactly one member.
    """

    kind: str
    pair: tuple
    frontier: tuple


@dataclass(frozen=True)
class LatticeOps:
    """Total join/meet tables over a poset; verified against the order."""

    poset: Poset
    join: tuple
    meet: tuple
    top: int = field(init=False)
    bottom: int = field(init=False)

    def __post_init__(self):
        p = self.poset
        n = p.n
        for a in range(n):
            for b in range(n):
                j = self.join[a][b]
                u = p.up[a] & p.up[b]
                if not (u >> j & 1 and u & ~p.up[j] == 0):
                    raise ValueError(f"join table wrong at ({p.names[a]}, {p.names[b]})")
                m = self.meet[a][b]
                d = p.down[a] & p.down[b]
                if not (d >> m & 1 and d & ~p.down[m] == 0):
                    raise ValueError(f"meet table wrong at ({p.names[a]}, {p.names[b]})")
        object.__setattr__(self, "top", p.top)
        object.__setattr__(self, "bottom", p.bottom)

    @property
    def n(self):
        return self.poset.n

    def join_of(self, a, b):
        return self.join[a][b]

    def meet_of(self, a, b):
        return self.meet[a][b]

    def flat_join(self):
        return [x for row in self.join for x in row]

    def flat_meet(self):
        return [x for row in self.meet for x in row]


def _minimal_of(p, mask):
    return tuple(i for i in p.topo if mask >> i & 1 and p.down[i] & mask == 1 << i)


def _maximal_of(p, mask):
    return tuple(i for i in p.topo if mask >> i & 1 and p.up[i] & mask == 1 << i)


def as_lattice(p):
    """LatticeOps when every pair has a lub and glb, else a NotALattice witness.

    The witness pair is the first failure in the fixed topological order;
    the kernel result is re-verified independently by LatticeOps.
    """
    tabs = kernels.lattice_tables(p.n, p.up, p.down)
    if tabs is None:
        for ra in range(p.n):
            a = p.topo[ra]
            for rb in range(ra, p.n):
                b = p.topo[rb]
                u = p.up[a] & p.up[b]
                mins = _minimal_of(p, u)
                if len(mins) != 1:
                    return NotALattice("join", (a, b), mins)
                d = p.down[a] & p.down[b]
                maxs = _maximal_of(p, d)
                if len(maxs) != 1:
                    return NotALattice("meet", (a, b), maxs)
        raise AssertionError("kernel reported a failure the rescan cannot find")
    join_flat, meet_flat = tabs
    n = p.n
    join = tuple(tuple(join_flat[i * n + j] for j in range(n)) for i in range(n))
    meet = tuple(tuple(meet_flat[i * n + j] for j in range(n)) for i in range(n))
    return LatticeOps(p, join, meet)
