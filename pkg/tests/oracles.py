"""Independent brute-force oracles.

Each oracle recomputes a quantity by a route different from the library's
(dict-of-sets closures instead of bitmask propagation, scan-all-candidates
bounds, permutation sweeps instead of backtracking, intersection-of-closed
-sets instead of fixpoint iteration) so the two sides check each other.
"""

from __future__ import annotations

import itertools

from mosaic_lab.bits import bits, mask_of


def closure_oracle(names, covers):
    """Reflexive-transitive closure as a dict of up-sets; None on a cycle."""
    up = {x: {x} for x in names}
    changed = True
    while changed:
        changed = False
        for lo, hi in covers:
            add = up[hi] - up[lo]
            if add:
                up[lo] |= add
                changed = True
        for x in names:
            for y in list(up[x]):
                add = up[y] - up[x]
                if add:
                    up[x] |= add
                    changed = True
    for x in names:
        for y in up[x]:
            if x != y and x in up[y]:
                return None
    return up


def brute_bound(up: dict, pool, xs, upper: bool):
    """Least upper / greatest lower bound by definition-direct scanning."""
    if upper:
        cands = [m for m in pool if all(m in up[x] for x in xs)]
        least = [m for m in cands if all(c in up[m] for c in cands)]
    else:
        cands = [m for m in pool if all(x in up[m] for x in xs)]
        least = [m for m in cands if all(m in up[c] for c in cands)]
    return least[0] if len(least) == 1 else None


def all_involutions(n: int):
    for perm in itertools.permutations(range(n)):
        if all(perm[perm[x]] == x for x in range(n)):
            yield perm


def nakano_cell_oracle(l, x: int, y: int, additive: bool = True) -> frozenset:
    """N(x,y) from the defining equations, with bounds recomputed by scanning."""
    up = {i: set(bits(l.leq[i])) for i in range(l.size)}
    pool = range(l.size)

    def b(*xs):
        return brute_bound(up, pool, xs, additive)

    t = b(x, y)
    return frozenset(z for z in pool if b(x, z) == t and b(z, y) == t)


def least_closed_superset(l, seeds, pi=None) -> frozenset:
    """Intersection of all meet/join(/pi)-closed subsets containing the seeds."""
    n = l.size
    seeds = set(seeds)
    best = None
    for mask in range(1 << n):
        members = set(bits(mask))
        if not seeds <= members:
            continue
        if pi is not None and any(pi(x) not in members for x in members):
            continue
        if any(
            l.join(x, y) not in members or l.meet(x, y) not in members
            for x in members
            for y in members
        ):
            continue
        if best is None or len(members) < len(best):
            best = frozenset(members)
    return best


def brute_sublattice_copy(l, pattern):
    """Search all injections for a meet/join-preserving embedding."""
    k = pattern.size
    for image in itertools.permutations(range(l.size), k):
        if all(
            image[pattern.join(u, v)] == l.join(image[u], image[v])
            and image[pattern.meet(u, v)] == l.meet(image[u], image[v])
            for u in range(k)
            for v in range(k)
        ):
            return image
    return None


def brute_poset_iso(up1, up2):
    n = len(up1)
    if len(up2) != n:
        return None
    for perm in itertools.permutations(range(n)):
        if all(
            (up1[i] >> j & 1) == (up2[perm[i]] >> perm[j] & 1)
            for i in range(n)
            for j in range(n)
        ):
            return perm
    return None


def brute_bounded_lattices(n: int):
    """All isomorphism classes of n-element bounded lattices, by enumerating
    every upper-triangular transitive relation (every poset has such a natural
    labeling) and deduplicating with full-permutation isomorphism tests."""
    if n == 1:
        return [(1,)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    classes = []
    for sub in range(1 << len(pairs)):
        up = [1 << i for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if sub >> k & 1:
                up[i] |= 1 << j
        if not _transitive(up, n):
            continue
        if not _bounded_lattice(up, n):
            continue
        if any(brute_poset_iso(up, seen) for seen in classes):
            continue
        classes.append(tuple(up))
    return classes


def _transitive(up, n) -> bool:
    for i in range(n):
        for j in bits(up[i]):
            if up[j] & ~up[i]:
                return False
    return True


def _bounded_lattice(up, n) -> bool:
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    full = (1 << n) - 1
    if full not in up or full not in down:
        return False
    for rows in (up, down):
        for i in range(n):
            for j in range(i + 1, n):
                common = rows[i] & rows[j]
                if not any(common & ~rows[m] == 0 for m in bits(common)):
                    return False
    return True


def mosaic_isomorphism(a, b):
    """Unitary strong bijection between two mosaics, by backtracking on
    row profiles (multisets of cell sizes)."""
    n = a.size
    if b.size != n:
        return None

    def profile(m, x):
        return tuple(sorted(bin(m.cell(x, y)).count("1") for y in range(n)))

    pa = [profile(a, x) for x in range(n)]
    pb = [profile(b, x) for x in range(n)]
    if sorted(pa) != sorted(pb):
        return None
    assign = [-1] * n
    used = [False] * n

    def ok(x, v):
        if (x == a.neutral) != (v == b.neutral):
            return False
        for x2 in range(n):
            v2 = assign[x2]
            if v2 < 0:
                continue
            img = mask_of(assign[z] for z in bits(a.cell(x, x2)) if assign[z] >= 0)
            tgt = b.cell(v, v2)
            if img & ~tgt:
                return False
            if bin(a.cell(x, x2)).count("1") != bin(tgt).count("1"):
                return False
        return True

    def rec(x):
        if x == n:
            for i in range(n):
                for j in range(n):
                    if mask_of(assign[z] for z in bits(a.cell(i, j))) != b.cell(assign[i], assign[j]):
                        return None
            return tuple(assign)
        for v in range(n):
            if not used[v] and pb[v] == pa[x] and ok(x, v):
                assign[x] = v
                used[v] = True
                got = rec(x + 1)
                if got:
                    return got
                assign[x] = -1
                used[v] = False
        return None

    return rec(0)
