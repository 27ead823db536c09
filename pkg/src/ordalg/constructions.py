"""Named structures, direct products, and small-structure catalogs.

The fixtures are the hand-checked structures the test suite leans on:
the pentagon lattice and the bounded bowtie poset each carry a frozen
sectional-pseudocomplement table, and the residuated chain carries a
multiplication that differs from meet.  Catalogs enumerate every poset
or lattice of a given size, optionally deduplicated up to isomorphism
through a canonical relabeling.
"""

import re
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Tuple

from . import _kernels as kernels
from .binop import BinOp
from .errors import BudgetError, SizeBudgetError, UnknownFixtureError
from .poset import MAX_ELEMENTS, Poset, make_poset


@dataclass(frozen=True)
class Fixture:
    """A named poset plus whatever frozen operation tables it carries."""

    name: str
    poset: Poset
    star: Optional[BinOp] = None
    mult: Optional[BinOp] = None
    imp: Optional[BinOp] = None


# star tables are stored over the declared element order
_PENTAGON_STAR = (
    (4, 4, 4, 4, 4),
    (2, 4, 2, 4, 4),
    (3, 1, 4, 3, 4),
    (2, 1, 2, 4, 4),
    (0, 1, 2, 3, 4),
)

_BOWTIE_STAR = (
    (5, 5, 5, 5, 5, 5),
    (2, 5, 2, 5, 5, 5),
    (1, 1, 5, 5, 5, 5),
    (0, 1, 2, 5, 4, 5),
    (0, 1, 2, 3, 5, 5),
    (0, 1, 2, 3, 4, 5),
)

_RESIDUATED_CHAIN_MULT = ((0, 0, 0), (0, 0, 1), (0, 1, 2))
_RESIDUATED_CHAIN_IMP = ((2, 2, 2), (1, 2, 2), (0, 1, 2))

FIXTURE_NAMES = (
    "pentagon",
    "diamond",
    "bowtie",
    "residuated-chain",
    "chainK  (2 <= K <= 64)",
    "boolK   (1 <= K <= 6)",
)


def fixture(name):
    """Build a named fixture; chainK and boolK take a numeric suffix."""
    if name == "pentagon":
        p = make_poset(
            ("0", "a", "b", "c", "1"),
            (("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")),
        )
        return Fixture(name, p, star=BinOp(5, _PENTAGON_STAR))
    if name == "diamond":
        p = make_poset(
            ("0", "a", "b", "c", "1"),
            (("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")),
        )
        return Fixture(name, p)
    if name == "bowtie":
        p = make_poset(
            ("0", "a", "b", "c", "d", "1"),
            (("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
             ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")),
        )
        return Fixture(name, p, star=BinOp(6, _BOWTIE_STAR))
    if name == "residuated-chain":
        p = make_poset(("0", "a", "1"), (("0", "a"), ("a", "1")))
        return Fixture(
            name, p,
            mult=BinOp(3, _RESIDUATED_CHAIN_MULT),
            imp=BinOp(3, _RESIDUATED_CHAIN_IMP),
        )
    m = re.fullmatch(r"chain(\d+)", name)
    if m:
        k = int(m.group(1))
        if not 2 <= k <= MAX_ELEMENTS:
            raise UnknownFixtureError(f"chain length must be 2..{MAX_ELEMENTS}, not {k}")
        names = tuple(f"c{i}" for i in range(k))
        return Fixture(name, make_poset(names, tuple(zip(names, names[1:]))))
    m = re.fullmatch(r"bool(\d+)", name)
    if m:
        k = int(m.group(1))
        if not 1 <= k <= 6:
            raise UnknownFixtureError(f"boolean rank must be 1..6, not {k}")
        names = tuple(format(v, f"0{k}b") for v in range(1 << k))
        covers = []
        for v in range(1 << k):
            for bit in range(k):
                if not v >> bit & 1:
                    covers.append((names[v], names[v | 1 << bit]))
        return Fixture(name, make_poset(names, covers))
    raise UnknownFixtureError(f"no fixture named {name!r}")


def direct_product(p, q, max_size=MAX_ELEMENTS):
    """Componentwise order on pairs, named left.right in row-major order."""
    n, m = p.n, q.n
    if n * m > max_size:
        raise SizeBudgetError(f"product has {n * m} elements, budget is {max_size}")
    names = tuple(f"{a}.{b}" for a in p.names for b in q.names)
    up = []
    for i in range(n):
        for j in range(m):
            mask = 0
            rest = p.up[i]
            while rest:
                low = rest & -rest
                mask |= q.up[j] << (low.bit_length() - 1) * m
                rest ^= low
            up.append(mask)
    return Poset(names, up)


CATALOG_KINDS = ("all-posets", "posets-with-top", "lattices", "lattices-with-top")

# naturally labeled posets explode beyond seven points
_POSET_LIMIT = 7
_LATTICE_LIMIT = 8


@dataclass(frozen=True)
class Catalog:
    """Every structure of one size, in a deterministic order."""

    kind: str
    size: int
    deduped: bool
    members: Tuple[Poset, ...]

    def __len__(self):
        return len(self.members)


def _unpack(n, packed):
    return [packed >> 8 * i & (1 << n) - 1 for i in range(n)]


def _pack(n, up):
    out = 0
    for i in range(n):
        out |= up[i] << 8 * i
    return out


def _rank(keys):
    order = {k: r for r, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _color_classes(n, up, down):
    """Stable color classes whose concatenation is a linear extension.

    Strictly comparable elements start with different down-set sizes, so
    they never share a class and lower ones always sort first; refinement
    only splits classes, preserving that order.
    """
    strict_d = [down[i] & ~(1 << i) for i in range(n)]
    strict_u = [up[i] & ~(1 << i) for i in range(n)]
    col = _rank([(bin(strict_d[i]).count("1"), bin(strict_u[i]).count("1"))
                 for i in range(n)])
    while True:
        sig = []
        for i in range(n):
            below = sorted(col[j] for j in range(n) if strict_d[i] >> j & 1)
            above = sorted(col[j] for j in range(n) if strict_u[i] >> j & 1)
            sig.append((col[i], tuple(below), tuple(above)))
        new = _rank(sig)
        if new == col:
            break
        col = new
    classes = {}
    for i in range(n):
        classes.setdefault(col[i], []).append(i)
    return [tuple(classes[c]) for c in sorted(classes)]


def _canonical_packed(n, up):
    down = [0] * n
    for i in range(n):
        rest = up[i]
        while rest:
            low = rest & -rest
            down[low.bit_length() - 1] |= 1 << i
            rest ^= low
    classes = _color_classes(n, up, down)
    best = None
    for combo in product(*(permutations(c) for c in classes)):
        seq = [i for cls in combo for i in cls]
        pos = [0] * n
        for new_i, old in enumerate(seq):
            pos[old] = new_i
        packed = 0
        for new_i, old in enumerate(seq):
            row = 0
            rest = up[old]
            while rest:
                low = rest & -rest
                row |= 1 << pos[low.bit_length() - 1]
                rest ^= low
            packed |= row << 8 * new_i
        if best is None or packed < best:
            best = packed
    return best


def canonical_key(p):
    """Relabeling-invariant integer key; equal keys mean isomorphic posets."""
    if p.n > 8:
        raise BudgetError("canonical keys support at most 8 elements")
    return _canonical_packed(p.n, list(p.up))


def are_isomorphic(p, q):
    """Backtracking search for an order isomorphism."""
    if p.n != q.n:
        return False
    n = p.n
    inv_p = [(bin(p.down[i]).count("1"), bin(p.up[i]).count("1")) for i in range(n)]
    inv_q = [(bin(q.down[i]).count("1"), bin(q.up[i]).count("1")) for i in range(n)]
    if sorted(inv_p) != sorted(inv_q):
        return False
    order = p.topo
    img = [-1] * n
    used = [False] * n

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in range(n):
            if used[j] or inv_p[i] != inv_q[j]:
                continue
            ok = True
            for prev in range(k):
                i2 = order[prev]
                j2 = img[i2]
                if (p.up[i2] >> i & 1) != (q.up[j2] >> j & 1) \
                        or (p.up[i] >> i2 & 1) != (q.up[j] >> j2 & 1):
                    ok = False
                    break
            if ok:
                img[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                used[j] = False
                img[i] = -1
        return False

    return extend(0)


def enumerate_structures(n, kind, dedup=True):
    """Catalog of all posets or lattices on n points.

    Kinds: all-posets, posets-with-top, lattices, lattices-with-top.
    Every finite lattice has a top, so the last two kinds coincide; both
    names are accepted.  Deduplicated catalogs hold one canonical member
    per isomorphism class, sorted by packed order matrix.
    """
    if kind not in CATALOG_KINDS:
        raise ValueError(f"kind must be one of {', '.join(CATALOG_KINDS)}")
    lattices = kind in ("lattices", "lattices-with-top")
    limit = _LATTICE_LIMIT if lattices else _POSET_LIMIT
    if not 1 <= n <= limit:
        raise BudgetError(f"{kind} catalogs support 1 <= n <= {limit}")
    names = tuple(f"e{i}" for i in range(n))
    full = (1 << n) - 1
    rows = []
    for packed in kernels.enum_orders(n, lattices):
        up = _unpack(n, packed)
        if kind == "posets-with-top":
            common = full
            for mask in up:
                common &= mask
            if not common:
                continue
        rows.append(up)
    if dedup:
        keys = sorted({_canonical_packed(n, up) for up in rows})
        members = tuple(Poset(names, _unpack(n, key)) for key in keys)
    else:
        members = tuple(Poset(names, up) for up in rows)
    return Catalog(kind, n, dedup, members)
