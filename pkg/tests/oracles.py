"""Brute-force reference computations, written independently of the package internals."""
import itertools
import math
from fractions import Fraction


def ordered_bell(n):
    a = [1]
    for m in range(1, n + 1):
        a.append(sum(math.comb(m, k) * a[m - k] for k in range(1, m + 1)))
    return a[n]


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def integer_partition_count(n):
    p = [1] + [0] * n
    for k in range(1, n + 1):
        for m in range(k, n + 1):
            p[m] += p[m - k]
    return p[n]


def refines(H, G):
    """H <= G: walk G's blocks left to right, merging consecutive runs into H's blocks."""
    gs = [set(b) for b in G]
    i = 0
    for h in H:
        acc = set()
        while acc != set(h):
            if i >= len(gs) or not gs[i] <= set(h):
                return False
            acc |= gs[i]
            i += 1
    return i == len(gs)


def glb_by_scan(F, G, all_comps):
    """Meet by scanning every composition for the largest common lower bound."""
    lower = [H for H in all_comps if refines(H, F) and refines(H, G)]
    best = [H for H in lower if all(refines(K, H) for K in lower)]
    assert len(best) == 1
    return best[0]


def all_set_compositions(ground):
    """Via ordered set partitions: permutations of unordered partitions."""
    ground = sorted(ground)
    out = set()

    def partitions(rest):
        if not rest:
            yield []
            return
        first, others = rest[0], rest[1:]
        for p in partitions(others):
            yield [[first]] + p
            for i in range(len(p)):
                yield p[:i] + [[first] + p[i]] + p[i + 1:]

    for p in partitions(ground):
        for perm in itertools.permutations(p):
            out.add(tuple(tuple(sorted(b)) for b in perm))
    return out


def area_by_positions(S, T, blocks):
    pos = {}
    for k, b in enumerate(blocks):
        for x in b:
            pos[x] = k
    return sum(1 for i in S for j in T if pos[i] > pos[j])


def boolean_by_series(a):
    """1 - 1/(1 + sum a x^n) by long division, coefficient by coefficient."""
    n = len(a)
    A = [Fraction(1)] + [Fraction(x) for x in a]
    inv = [Fraction(1)]
    for m in range(1, n + 1):
        inv.append(-sum(A[k] * inv[m - k] for k in range(1, m + 1)))
    return [-c for c in inv[1:]]


def compositions_of(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions_of(n - first):
            yield (first,) + rest


def partial_sums(parts):
    return frozenset(itertools.accumulate(parts[:-1]))
