"""Independent oracles the tests compare library results against.

Everything here is deliberately naive: partitions are enumerated as
restricted growth strings, posets as transitive upper-triangular
relations, isomorphism by trying every permutation.  Slow but obviously
correct, which is the point.
"""

from itertools import permutations

from ordalg import BinOp, Congruence, FiniteAlgebra, Poset, as_lattice


def all_partitions(n):
    """Every partition of n points as a Congruence, via growth strings."""
    out = []

    def grow(prefix, used):
        i = len(prefix)
        if i == n:
            first = {}
            labels = []
            for pos, v in enumerate(prefix):
                first.setdefault(v, pos)
                labels.append(first[v])
            out.append(Congruence(tuple(labels)))
            return
        for v in range(used + 2):
            grow(prefix + [v], max(used, v))

    grow([], -1)
    return out


def congruence_oracle(algebra):
    """Compatible partitions by exhaustive filtering, in library order."""
    good = [c for c in all_partitions(algebra.n) if c.is_compatible(algebra)]
    return sorted(good, key=lambda c: (c.num_blocks, c.labels))


def lattice_algebra(p, star=None, constants=None):
    """Join/meet algebra on a lattice poset, optionally with a star table."""
    lat = as_lattice(p)
    ops = {
        "join": BinOp(p.n, tuple(tuple(r) for r in lat.join)),
        "meet": BinOp(p.n, tuple(tuple(r) for r in lat.meet)),
    }
    if star is not None:
        ops["*"] = star
    if constants is None:
        constants = {"one": p.top} if p.top is not None else {}
    return FiniteAlgebra.build(p, ops, constants)


def naive_labeled_posets(n):
    """All naturally labeled posets on n points by filtering relations.

    Tries every set of strictly upper-triangular pairs and keeps the
    transitive ones; returns up-mask tuples including reflexivity.
    """
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for choice in range(1 << len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if choice >> k & 1:
                rel[i][j] = True
        ok = True
        for i in range(n):
            for j in range(n):
                if not rel[i][j]:
                    continue
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(tuple(
                sum(1 << j for j in range(n) if rel[i][j]) for i in range(n)
            ))
    return out


def iso_by_permutation(p, q):
    """Order isomorphism test by brute force over every bijection."""
    if p.n != q.n:
        return False
    n = p.n
    for perm in permutations(range(n)):
        if all(
            p.leq(i, j) == q.leq(perm[i], perm[j])
            for i in range(n)
            for j in range(n)
        ):
            return True
    return False


def permutation_classes(members):
    """Partition posets into isomorphism classes using only iso_by_permutation."""
    classes = []
    for p in members:
        for cls in classes:
            if iso_by_permutation(p, cls[0]):
                cls.append(p)
                break
        else:
            classes.append([p])
    return classes


def poset_from_edges(n, edges):
    """Poset from acyclic edges (i, j) with i < j, closing transitively."""
    up = [1 << i for i in range(n)]
    for i, j in edges:
        up[i] |= 1 << j
    for k in range(n):
        for i in range(n):
            if up[i] >> k & 1:
                up[i] |= up[k]
    return Poset(tuple(f"e{i}" for i in range(n)), tuple(up))
