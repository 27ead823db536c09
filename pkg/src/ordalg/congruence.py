"""Congruences of finite algebras with binary operations and constants.

A congruence is stored as a canonical label vector: every element maps to
the least index of its block.  All congruences of an algebra are the joins
of its principal congruences; the enumeration closes the principal ones
under pairwise join and is cross-checked in the tests against filtering
every set partition of the carrier.
"""

from dataclasses import dataclass

from .binop import BinOp
from .errors import BudgetError, MissingConstantError
from .verdict import Verdict

CARRIER_BUDGET = 16


@dataclass(frozen=True)
class FiniteAlgebra:
    """Carrier with named total binary operations and named constants.

    Conventional op names: join, meet, *, mult, imp.  Constants map a
    name like 'one' to an element index.
    """

    poset: object
    ops: tuple
    constants: tuple = ()

    def __post_init__(self):
        n = self.poset.n
        for name, op in self.ops:
            if not isinstance(op, BinOp) or op.n != n or not op.is_total:
                raise ValueError(f"op {name!r} must be a total table on the carrier")
        for name, c in self.constants:
            if not 0 <= c < n:
                raise ValueError(f"constant {name!r} outside the carrier")

    @classmethod
    def build(cls, poset, ops, constants=()):
        return cls(poset, tuple(ops.items() if isinstance(ops, dict) else ops),
                   tuple(constants.items() if isinstance(constants, dict) else constants))

    @property
    def n(self):
        return self.poset.n

    def op(self, name):
        for key, table in self.ops:
            if key == name:
                return table
        raise KeyError(name)

    def op_names(self):
        return tuple(name for name, _ in self.ops)

    def constant(self, name):
        for key, c in self.constants:
            if key == name:
                return c
        raise MissingConstantError(f"algebra has no constant {name!r}")


def _canon(labels):
    n = len(labels)
    first = {}
    out = [0] * n
    for i in range(n):
        root = labels[i]
        if root not in first:
            first[root] = i
        out[i] = first[root]
    return tuple(out)


@dataclass(frozen=True)
class Congruence:
    """Partition by least-member labels; equality is structural."""

    labels: tuple

    @property
    def n(self):
        return len(self.labels)

    def relates(self, a, b):
        return self.labels[a] == self.labels[b]

    def block_of(self, x):
        lx = self.labels[x]
        return tuple(i for i in range(self.n) if self.labels[i] == lx)

    def blocks(self):
        seen = {}
        for i, l in enumerate(self.labels):
            seen.setdefault(l, []).append(i)
        return tuple(tuple(b) for _, b in sorted(seen.items()))

    @property
    def num_blocks(self):
        return len(set(self.labels))

    def block_masks(self):
        masks = {}
        for i, l in enumerate(self.labels):
            masks[l] = masks.get(l, 0) | 1 << i
        return [masks[l] for l in self.labels]

    def meet(self, other):
        pair_labels = {}
        out = []
        for i in range(self.n):
            key = (self.labels[i], other.labels[i])
            out.append(pair_labels.setdefault(key, i))
        return Congruence(_canon(tuple(out)))

    def join(self, other):
        parent = list(range(self.n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i in range(self.n):
            for lab in (self.labels[i], other.labels[i]):
                ri, rl = find(i), find(lab)
                if ri != rl:
                    parent[max(ri, rl)] = min(ri, rl)
        return Congruence(_canon(tuple(find(i) for i in range(self.n))))

    @classmethod
    def diagonal(cls, n):
        return cls(tuple(range(n)))

    @classmethod
    def total(cls, n):
        return cls((0,) * n)

    @classmethod
    def from_blocks(cls, n, blocks):
        labels = list(range(n))
        for block in blocks:
            m = min(block)
            for x in block:
                labels[x] = m
        return cls(_canon(tuple(labels)))

    def is_compatible(self, algebra):
        """True when every operation maps related pairs to related pairs."""
        for _, op in algebra.ops:
            t = op.table
            for x in range(self.n):
                for y in range(x + 1, self.n):
                    if self.labels[x] != self.labels[y]:
                        continue
                    for z in range(self.n):
                        if self.labels[t[x][z]] != self.labels[t[y][z]]:
                            return False
                        if self.labels[t[z][x]] != self.labels[t[z][y]]:
                            return False
        return True


def principal_congruence(algebra, a, b):
    """Least congruence relating a and b: merge, close under ops, repeat."""
    n = algebra.n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    union(a, b)
    changed = True
    while changed:
        changed = False
        roots = [find(i) for i in range(n)]
        for _, op in algebra.ops:
            t = op.table
            for x in range(n):
                for y in range(x + 1, n):
                    if roots[x] != roots[y]:
                        continue
                    for z in range(n):
                        if union(t[x][z], t[y][z]):
                            changed = True
                        if union(t[z][x], t[z][y]):
                            changed = True
    return Congruence(_canon(tuple(find(i) for i in range(n))))


def all_congruences(algebra, budget=CARRIER_BUDGET):
    """Every congruence, ordered by block count then labels.

    Principal congruences are closed under pairwise join; the diagonal and
    the total congruence always appear.
    """
    n = algebra.n
    if n > budget:
        raise BudgetError(f"carrier of {n} exceeds the congruence budget {budget}")
    found = {Congruence.diagonal(n)}
    work = []
    for a in range(n):
        for b in range(a + 1, n):
            c = principal_congruence(algebra, a, b)
            if c not in found:
                found.add(c)
                work.append(c)
    frontier = list(work)
    while frontier:
        nxt = []
        for c in frontier:
            for d in list(found):
                j = c.join(d)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    if n >= 1:
        total = Congruence.total(n)
        if total not in found:
            found.add(total)
    return sorted(found, key=lambda c: (c.num_blocks, c.labels))


def _compose(theta, phi):
    # relation composition on block masks: x (theta;phi) z iff some y has
    # x theta y and y phi z
    n = theta.n
    tmask = theta.block_masks()
    pmask = phi.block_masks()
    out = []
    for x in range(n):
        acc = 0
        m = tmask[x]
        while m:
            low = m & -m
            acc |= pmask[low.bit_length() - 1]
            m ^= low
        out.append(acc)
    return out


def check_permutable(algebra, congs=None):
    """Verdict: every pair of congruences permutes under composition."""
    congs = all_congruences(algebra) if congs is None else congs
    for i, theta in enumerate(congs):
        for phi in congs[i + 1:]:
            left = _compose(theta, phi)
            right = _compose(phi, theta)
            if left != right:
                for x in range(algebra.n):
                    diff = left[x] ^ right[x]
                    if diff:
                        z = (diff & -diff).bit_length() - 1
                        return Verdict(False, (theta, phi, (x, z)))
    return Verdict(True)


def check_congruence_distributive(algebra, congs=None):
    """Verdict: the congruence lattice satisfies the distributive law."""
    congs = all_congruences(algebra) if congs is None else congs
    for a in congs:
        for b in congs:
            for c in congs:
                if a.meet(b.join(c)) != a.meet(b).join(a.meet(c)):
                    return Verdict(False, (a, b, c))
    return Verdict(True)


def check_weakly_regular(algebra, congs=None):
    """Verdict: congruences are determined by their block of the constant one.

    When an implication-like op is present (imp, else star), also verifies
    the term condition: both directed implications equal one exactly for
    equal arguments.
    """
    one = algebra.constant("one")
    congs = all_congruences(algebra) if congs is None else congs
    seen = {}
    for c in congs:
        key = c.block_of(one)
        if key in seen:
            return Verdict(False, (seen[key], c), "same block of one")
        seen[key] = c
    imp_name = None
    for candidate in ("imp", "*"):
        if candidate in algebra.op_names():
            imp_name = candidate
            break
    if imp_name is not None:
        t = algebra.op(imp_name).table
        for x in range(algebra.n):
            for y in range(algebra.n):
                both_one = t[x][y] == one and t[y][x] == one
                if both_one != (x == y):
                    return Verdict(False, (x, y), f"term condition via {imp_name}")
    return Verdict(True)


def maltsev_replay(algebra, congs=None):
    """Replay the permutability term; returns mismatches, empty when clean.

    For a theta b phi c the element ((a->b)->c) ^ ((c->b)->a) should be
    phi-related to a and theta-related to c.  Any deviation is reported as
    (theta, phi, a, b, c, m, side) rather than asserted.
    """
    imp_name = "imp" if "imp" in algebra.op_names() else "*"
    imp = algebra.op(imp_name).table
    meet = algebra.op("meet").table
    congs = all_congruences(algebra) if congs is None else congs
    bad = []
    for theta in congs:
        for phi in congs:
            for a in range(algebra.n):
                for b in range(algebra.n):
                    if not theta.relates(a, b):
                        continue
                    for c in range(algebra.n):
                        if not phi.relates(b, c):
                            continue
                        m = meet[imp[imp[a][b]][c]][imp[imp[c][b]][a]]
                        if not phi.relates(a, m):
                            bad.append((theta, phi, a, b, c, m, "phi side"))
                        if not theta.relates(m, c):
                            bad.append((theta, phi, a, b, c, m, "theta side"))
    return bad
