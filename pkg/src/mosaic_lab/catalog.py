"""Named example lattices and exhaustive small-n enumeration up to isomorphism.

Enumeration generates naturally-labeled middle posets recursively, keeps the
bounded ones that are lattices, and deduplicates by canonical form (minimal
leq bit matrix over invariant-class-respecting relabelings).  Counts are
never copied from external sources; tests freeze what the independent oracle
and this generator produce.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

from .bits import bits, full_mask, mask_of
from .equivalence import OrthoPair
from .errors import SizeTooLarge, UnknownName
from .lattice_core import (
    FiniteBoundedLattice,
    Involution,
    _lub,
    build_from_covers,
    from_leq,
    hexagon_pattern,
    lattice_automorphisms,
    orthocomplementations,
    pentagon_pattern,
)

MAX_ENUM = 8


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    lattice: FiniteBoundedLattice
    ortho: Involution | None
    expected_flags: dict

    def __post_init__(self):
        for key in ("modular", "ortholattice", "orthomodular"):
            if key not in self.expected_flags:
                raise ValueError(f"missing flag {key}")


def _letters(k: int) -> list[str]:
    out = []
    for i in range(k):
        out.append(chr(ord("a") + i) if k <= 8 else f"x{i + 1}")
    return out


def _chain(n: int) -> FiniteBoundedLattice:
    if n == 1:
        return build_from_covers(["0"], [])
    names = ["0"] + _letters(n - 2) + ["1"]
    return build_from_covers(names, list(zip(names, names[1:])))


def _boolean(n: int) -> FiniteBoundedLattice:
    atoms = _letters(n)
    subsets = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))
    def lab(s):
        if s == 0:
            return "0"
        if s == (1 << n) - 1 and n > 1:
            return "1"
        return "".join(a for i, a in enumerate(atoms) if s >> i & 1)
    pos = {s: i for i, s in enumerate(subsets)}
    up = [mask_of(pos[t] for t in range(1 << n) if s & ~t == 0) for s in subsets]
    return from_leq([lab(s) for s in subsets], up)


def _mo(n: int) -> FiniteBoundedLattice:
    pairs = [(x, x + "'") for x in _letters(n)]
    names = ["0"] + [lab for p in pairs for lab in p] + ["1"]
    covers = [("0", lab) for p in pairs for lab in p] + [(lab, "1") for p in pairs for lab in p]
    return build_from_covers(names, covers)


def _pairing(l: FiniteBoundedLattice, pairs) -> Involution:
    m = list(range(l.size))
    for a, b in pairs:
        i, j = l.index(a), l.index(b)
        m[i], m[j] = j, i
    return Involution(tuple(m))


def named(name: str) -> CatalogEntry:
    chain = re.fullmatch(r"chain_(\d+)", name)
    boolean = re.fullmatch(r"boolean_(\d+)", name)
    mo = re.fullmatch(r"[Mm][Oo]_(\d+)", name)
    if name == "pentagon":
        return CatalogEntry(
            name, pentagon_pattern(), None,
            {"modular": False, "ortholattice": False, "orthomodular": False},
        )
    if name == "hexagon":
        l = hexagon_pattern()
        pi = _pairing(l, [("0", "1"), ("a", "a'"), ("b", "b'")])
        # the pentagon {0,b,a,a',1} sits inside H, so H is NOT modular
        return CatalogEntry(
            name, l, pi,
            {"modular": False, "ortholattice": True, "orthomodular": False},
        )
    if name == "diamond_M3":
        l = build_from_covers(
            ["0", "a", "b", "c", "1"],
            [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        )
        return CatalogEntry(
            name, l, None,
            {"modular": True, "ortholattice": False, "orthomodular": False},
        )
    if chain:
        n = int(chain.group(1))
        if not 1 <= n <= 16:
            raise SizeTooLarge(f"chain_{n}")
        l = _chain(n)
        pi = None
        if n == 1:
            pi = Involution.identity(1)
        elif n == 2:
            pi = _pairing(l, [("0", "1")])
        return CatalogEntry(
            name, l, pi,
            {"modular": True, "ortholattice": n <= 2, "orthomodular": n <= 2},
        )
    if boolean:
        n = int(boolean.group(1))
        if not 1 <= n <= 4:
            raise SizeTooLarge(f"boolean_{n}")
        l = _boolean(n)
        comp = Involution(tuple(l.index(_complement_label(l, i)) for i in range(l.size)))
        return CatalogEntry(
            name, l, comp,
            {"modular": True, "ortholattice": True, "orthomodular": True},
        )
    if mo:
        n = int(mo.group(1))
        if not 1 <= n <= 6:
            raise SizeTooLarge(f"MO_{n}")
        l = _mo(n)
        pi = _pairing(l, [("0", "1")] + [(x, x + "'") for x in _letters(n)])
        return CatalogEntry(
            f"MO_{n}", l, pi,
            {"modular": True, "ortholattice": True, "orthomodular": True},
        )
    raise UnknownName(f"unknown catalog name {name!r}")


def _complement_label(l: FiniteBoundedLattice, i: int) -> str:
    for j in range(l.size):
        if l.join(i, j) == l.top and l.meet(i, j) == l.bottom:
            return l.names[j]
    raise AssertionError("boolean lattice must be complemented")


CATALOG_NAMES = ("pentagon", "hexagon", "diamond_M3", "chain_1", "chain_2", "chain_3",
                 "boolean_1", "boolean_2", "boolean_3", "MO_2", "MO_3")


# -- enumeration ---------------------------------------------------------------


def _middle_posets(m: int):
    """Naturally-labeled posets on 0..m-1 as strict down-set bitmask rows."""
    downs = []

    def rec(i: int):
        if i == m:
            yield tuple(downs)
            return
        for cand in range(1 << i):
            if all(downs[j] & ~cand == 0 for j in bits(cand)):
                downs.append(cand)
                yield from rec(i + 1)
                downs.pop()

    yield from rec(0)


def _bounded_lattice_candidates(n: int):
    """Up-mask rows of every naturally-labeled n-element bounded lattice."""
    if n == 1:
        yield (1,)
        return
    m = n - 2
    top_bit = 1 << (n - 1)
    for downs in _middle_posets(m):
        up = [0] * n
        up[0] = full_mask(n)
        up[n - 1] = top_bit
        for i in range(m):
            mask = 1 << (i + 1) | top_bit
            for j in range(m):
                if downs[j] >> i & 1:
                    mask |= 1 << (j + 1)
            up[i + 1] = mask
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        if all(
            _lub(up, i, j) is not None and _lub(down, i, j) is not None
            for i in range(n) for j in range(i + 1, n)
        ):
            yield tuple(up)


def _canonical_key(up: tuple[int, ...]) -> tuple[int, ...]:
    """Minimal leq bit matrix over invariant-class-respecting relabelings."""
    n = len(up)
    down = [0] * n
    for i in range(n):
        for j in bits(up[i]):
            down[j] |= 1 << i
    base = [(bin(down[i]).count("1"), bin(up[i]).count("1")) for i in range(n)]
    inv = [
        (
            base[i],
            tuple(sorted(base[j] for j in bits(up[i]))),
            tuple(sorted(base[j] for j in bits(down[i]))),
        )
        for i in range(n)
    ]
    groups: dict = {}
    for i in range(n):
        groups.setdefault(inv[i], []).append(i)
    ordered = sorted(groups)
    best = None
    for parts in itertools.product(*(itertools.permutations(groups[key]) for key in ordered)):
        old_at = [i for part in parts for i in part]  # new position -> old element
        newpos = [0] * n
        for p, old in enumerate(old_at):
            newpos[old] = p
        key = tuple(
            mask_of(newpos[j] for j in bits(up[old_at[p]])) for p in range(n)
        )
        if best is None or key < best:
            best = key
    return best


def enumerate_lattices(n: int) -> list[FiniteBoundedLattice]:
    """Every isomorphism class of n-element bounded lattices, exactly once,
    in canonical-key order."""
    if not 1 <= n <= MAX_ENUM:
        raise SizeTooLarge(f"enumeration supports 1..{MAX_ENUM}, got {n}")
    seen = {}
    for up in _bounded_lattice_candidates(n):
        key = _canonical_key(up)
        if key not in seen:
            seen[key] = key
    names = [f"x{i}" for i in range(n)]
    return [from_leq(names, key) for key in sorted(seen)]


def enumerate_ortholattices(n: int) -> list[OrthoPair]:
    """Each enumerated lattice paired with each orthocomplementation, up to
    isomorphisms commuting with pi."""
    if not 1 <= n <= MAX_ENUM:
        raise SizeTooLarge(f"enumeration supports 1..{MAX_ENUM}, got {n}")
    out = []
    for l in enumerate_lattices(n):
        pis = orthocomplementations(l)
        if not pis:
            continue
        auts = lattice_automorphisms(l)
        seen = set()
        for pi in sorted(pis, key=lambda p: p.map):
            orbit = min(
                tuple(sigma[pi(_inverse_at(sigma, p))] for p in range(l.size))
                for sigma in auts
            )
            if orbit not in seen:
                seen.add(orbit)
                out.append(OrthoPair(l, pi))
    return out


def _inverse_at(sigma: tuple[int, ...], p: int) -> int:
    for i, v in enumerate(sigma):
        if v == p:
            return i
    raise ValueError("not a permutation")


def census(n: int) -> list[dict]:
    """Classifier summary rows for the n-element enumeration."""
    from .lattice_core import is_modular, is_orthomodular
    rows = []
    orthos = {}
    for pair in enumerate_ortholattices(n):
        orthos.setdefault(pair.lattice.leq, []).append(pair)
    for i, l in enumerate(enumerate_lattices(n)):
        pairs = orthos.get(l.leq, [])
        rows.append(
            {
                "id": f"n{n}_{i}",
                "size": n,
                "modular": is_modular(l).holds,
                "ortholattice": bool(pairs),
                "ortho_count": len(pairs),
                "orthomodular": [is_orthomodular(p.lattice, p.pi).holds for p in pairs],
                "covers": [[l.names[a], l.names[b]] for a, b in l.covers()],
            }
        )
    return rows
