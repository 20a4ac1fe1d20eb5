"""Multivalued operations and the mosaic axiom stack: magmas, neutral elements,
reversibility, mosaics, polygroups, morphisms, L-mosaic axioms, induced order,
strong closure and pi-dualization.

Table cells are bitmask subsets of the carrier; empty cells are representable
(partial magma) but rejected by verify_mosaic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bits import bits, elements, full_mask, mask_of
from .errors import NotAnLMosaic, NotASubmosaic, SizeMismatch
from .lattice_core import AxiomReport, Involution


@dataclass(frozen=True)
class Multimap:
    """Multimap dom -> powerset(cod); row x is the bitmask image of x."""

    dom: int
    cod: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.dom:
            raise SizeMismatch("row count != domain size")
        full = full_mask(self.cod)
        if any(row & ~full for row in self.rows):
            raise ValueError("row not a subset of the codomain")

    @classmethod
    def identity(cls, n: int) -> "Multimap":
        return cls(n, n, tuple(1 << x for x in range(n)))


def compose_relations(f: Multimap, g: Multimap) -> Multimap:
    """(g o f)(x) = union of g(y) over y in f(x)."""
    if f.cod != g.dom:
        raise SizeMismatch(f"codomain {f.cod} != domain {g.dom}")
    rows = tuple(mask_of(z for y in bits(f.rows[x]) for z in bits(g.rows[y])) for x in range(f.dom))
    return Multimap(f.dom, g.cod, rows)


@dataclass(frozen=True)
class Multioperation:
    """n x n table of carrier subsets."""

    size: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        full = full_mask(self.size)
        if len(self.table) != self.size or any(len(r) != self.size for r in self.table):
            raise SizeMismatch("table is not size x size")
        if any(c & ~full for r in self.table for c in r):
            raise ValueError("cell not a subset of the carrier")

    @classmethod
    def from_cells(cls, size: int, cells) -> "Multioperation":
        """cells: mapping (x, y) -> iterable of elements; missing cells are empty."""
        table = [[0] * size for _ in range(size)]
        for (x, y), zs in cells.items():
            table[x][y] = mask_of(zs)
        return cls(size, tuple(tuple(r) for r in table))

    @classmethod
    def build(cls, size: int, fn) -> "Multioperation":
        """fn(x, y) -> bitmask cell."""
        return cls(size, tuple(tuple(fn(x, y) for y in range(size)) for x in range(size)))

    def cell(self, x: int, y: int) -> int:
        return self.table[x][y]

    def cell_set(self, x: int, y: int) -> frozenset[int]:
        return elements(self.table[x][y])

    def dual(self) -> "Multioperation":
        return Multioperation(self.size, tuple(tuple(self.table[y][x] for y in range(self.size)) for x in range(self.size)))

    def is_total(self) -> bool:
        return all(c for r in self.table for c in r)

    def is_deterministic(self) -> bool:
        return all(bin(c).count("1") <= 1 for r in self.table for c in r)

    def is_commutative(self) -> bool:
        return all(self.table[x][y] == self.table[y][x] for x in range(self.size) for y in range(x))

    def left_extend(self, xmask: int, y: int) -> int:
        """X [.] y as a set union."""
        m = 0
        for x in bits(xmask):
            m |= self.table[x][y]
        return m

    def right_extend(self, x: int, ymask: int) -> int:
        m = 0
        for y in bits(ymask):
            m |= self.table[x][y]
        return m

    def set_product(self, xmask: int, ymask: int) -> int:
        m = 0
        for x in bits(xmask):
            for y in bits(ymask):
                m |= self.table[x][y]
        return m

    def with_cell(self, x: int, y: int, zs) -> "Multioperation":
        """Copy with one cell replaced (mutation testing helper)."""
        table = [list(r) for r in self.table]
        table[x][y] = mask_of(zs)
        return Multioperation(self.size, tuple(tuple(r) for r in table))


@dataclass(frozen=True)
class Mosaic:
    """Commutative unital magma, reversible with respect to rho.

    rho(x) is the unique inverse of x; construct through verify_mosaic.
    """

    op: Multioperation
    neutral: int
    rho: Involution

    def __post_init__(self):
        n = self.op.size
        if self.rho.size != n or not 0 <= self.neutral < n:
            raise SizeMismatch("carrier sizes disagree")
        e = self.neutral
        for x in range(n):
            if self.op.cell(e, x) != 1 << x or self.op.cell(x, e) != 1 << x:
                raise ValueError(f"{e} is not neutral at {x}")
        if self.rho(e) != e:
            raise ValueError("rho does not fix the neutral element")

    @property
    def size(self) -> int:
        return self.op.size

    def cell(self, x: int, y: int) -> int:
        return self.op.cell(x, y)


@dataclass(frozen=True)
class MorphismWitness:
    """A structure map together with the strongest kind it satisfies."""

    map: tuple[int, ...]
    kind: str
    unitary: bool


def classify_morphism(f, a: "Mosaic", b: "Mosaic"):
    """Strongest of embedding > strong > morphism that f satisfies, or None."""
    f = tuple(f)
    for kind in ("embedding", "strong", "morphism"):
        if check_morphism(f, a, b, kind).holds:
            return MorphismWitness(f, kind, f[a.neutral] == b.neutral)
    return None


def find_neutral(op: Multioperation):
    """The unique neutral element, or None."""
    for e in range(op.size):
        if all(op.cell(e, x) == 1 << x and op.cell(x, e) == 1 << x for x in range(op.size)):
            return e
    return None


def inverses(op: Multioperation, neutral: int, x: int) -> frozenset[int]:
    """All y with neutral in (x [.] y) & (y [.] x)."""
    e = 1 << neutral
    return frozenset(
        y for y in range(op.size) if op.cell(x, y) & e and op.cell(y, x) & e
    )


@dataclass(frozen=True)
class MosaicVerification:
    reports: tuple[AxiomReport, ...]
    mosaic: Mosaic | None

    @property
    def ok(self) -> bool:
        return self.mosaic is not None

    def report(self, axiom: str) -> AxiomReport:
        for r in self.reports:
            if r.axiom == axiom:
                return r
        raise KeyError(axiom)


def verify_mosaic(op: Multioperation) -> MosaicVerification:
    """Full pipeline: commutative, total, neutral, unique inverses, rho := inverse
    map, reversibility; on success also asserts the structural consequences
    (rho fixes neutral, rho is a strong iso onto the dual operation, RINV and
    the three-way membership equivalences)."""
    n = op.size
    reports = []

    witness = next(
        ((x, y) for x in range(n) for y in range(n) if op.cell(x, y) != op.cell(y, x)),
        None,
    )
    reports.append(AxiomReport("commutative", witness is None, witness, witness and "cell asymmetry"))
    witness = next(((x, y) for x in range(n) for y in range(n) if not op.cell(x, y)), None)
    reports.append(AxiomReport("total", witness is None, witness, witness and "empty cell"))
    if not all(r.holds for r in reports):
        return MosaicVerification(tuple(reports), None)

    e = find_neutral(op)
    if e is None:
        reports.append(AxiomReport("neutral", False, (), "no neutral element"))
        return MosaicVerification(tuple(reports), None)
    reports.append(AxiomReport("neutral", True))

    inv = []
    for x in range(n):
        ys = inverses(op, e, x)
        if len(ys) != 1:
            reason = "no inverse" if not ys else "multiple inverses"
            reports.append(AxiomReport("unique-inverses", False, (x,), reason))
            return MosaicVerification(tuple(reports), None)
        inv.append(next(iter(ys)))
    reports.append(AxiomReport("unique-inverses", True))
    rho = Involution(tuple(inv))

    for x in range(n):
        for y in range(n):
            for z in bits(op.cell(x, y)):
                if not op.cell(z, rho(y)) >> x & 1 or not op.cell(rho(x), z) >> y & 1:
                    reports.append(AxiomReport("reversible", False, (x, y, z), "RE fails"))
                    return MosaicVerification(tuple(reports), None)
    reports.append(AxiomReport("reversible", True))

    # structural consequences, asserted now that the pipeline passed
    assert rho(e) == e
    for x in range(n):
        rx = rho(x)
        assert op.cell(x, rx) >> e & 1 and op.cell(rx, x) >> e & 1, "RINV"
        for y in range(n):
            assert rho.image_mask(op.cell(x, y)) == op.cell(rho(y), rho(x)), "dual iso"
            for z in range(n):
                a = bool(op.cell(x, y) >> z & 1)
                b = bool(op.cell(z, rho(y)) >> x & 1)
                c = bool(op.cell(rho(x), z) >> y & 1)
                assert a == b == c, "membership equivalences"
    reports.append(AxiomReport("lemma1-consequences", True))

    return MosaicVerification(tuple(reports), Mosaic(op, e, rho))


def is_associative(op: Multioperation) -> AxiomReport:
    """(x [.] y) [.] z = x [.] (y [.] z), set-extended on both sides."""
    n = op.size
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if op.right_extend(x, op.cell(y, z)) != op.left_extend(op.cell(x, y), z):
                    return AxiomReport("associative", False, (x, y, z), "associativity")
    return AxiomReport("associative", True)


def is_polygroup(op: Multioperation) -> bool:
    """Polygroups are precisely the associative mosaics."""
    return verify_mosaic(op).ok and is_associative(op).holds


def check_morphism(f, a: Mosaic, b: Mosaic, kind: str = "morphism") -> AxiomReport:
    """Morphism check per kind: inclusion f(x[.]y) <= f(x)[.]f(y), equality for
    strong, the intersection-with-image equation for embedding.  Mosaic
    morphisms are unitary; inverse preservation, which unitary morphisms of
    invertible magmas cannot break, is verified alongside."""
    if kind not in ("morphism", "strong", "embedding"):
        raise ValueError(f"unknown morphism kind {kind!r}")
    f = tuple(f)
    if len(f) != a.size or any(not 0 <= v < b.size for v in f):
        raise SizeMismatch("f is not a map between the carriers")
    name = f"{kind}-morphism"
    if f[a.neutral] != b.neutral:
        return AxiomReport(name, False, (a.neutral,), "not unitary")
    if kind == "embedding":
        for x in range(a.size):
            for y in range(x):
                if f[x] == f[y]:
                    return AxiomReport(name, False, (y, x), "not injective")
    image = mask_of(f)
    for x in range(a.size):
        for y in range(a.size):
            fcell = mask_of(f[z] for z in bits(a.cell(x, y)))
            target = b.cell(f[x], f[y])
            if kind == "morphism":
                ok = fcell & ~target == 0
            elif kind == "strong":
                ok = fcell == target
            else:
                ok = fcell == target & image
            if not ok:
                return AxiomReport(name, False, (x, y), "cell condition fails")
    for x in range(a.size):
        if f[a.rho(x)] != b.rho(f[x]):
            return AxiomReport(name, False, (x,), "inverse preservation fails")
    return AxiomReport(name, True)


# -- L-mosaics ----------------------------------------------------------------


def verify_lmosaic(m: Mosaic) -> tuple[AxiomReport, ...]:
    """The four L-mosaic axioms; Lms4 failures report zero or multiple join
    candidates at the witness pair."""
    op, e, n = m.op, m.neutral, m.size
    lms1 = AxiomReport("Lms1", True)
    for x in range(n):
        diag = op.cell(x, x)
        if not (diag >> e & 1 and diag >> x & 1):
            lms1 = AxiomReport("Lms1", False, (x,), "0,x not both in x+x")
            break
    lms2 = AxiomReport("Lms2", True)
    for x in range(n):
        diag = op.cell(x, x)
        if op.set_product(diag, diag) != diag:
            lms2 = AxiomReport("Lms2", False, (x,), "(x+x)+(x+x) != x+x")
            break
    lms3 = AxiomReport("Lms3", True)
    for x in range(n):
        for y in range(n):
            cell = op.cell(x, y)
            left = op.right_extend(x, cell)
            right = op.left_extend(cell, y)
            if left & right & ~cell:
                lms3 = AxiomReport("Lms3", False, (x, y), "intersection leaks")
                break
        if not lms3.holds:
            break
    lms4 = AxiomReport("Lms4", True)
    for x in range(n):
        for y in range(n):
            cands = [
                z for z in bits(op.cell(x, y))
                if op.cell(z, z) >> x & 1 and op.cell(z, z) >> y & 1
            ]
            if len(cands) != 1:
                reason = "no join candidate" if not cands else "multiple join candidates"
                lms4 = AxiomReport("Lms4", False, (x, y), reason)
                break
        if not lms4.holds:
            break
    return (lms1, lms2, lms3, lms4)


def is_lmosaic(m: Mosaic) -> bool:
    return all(r.holds for r in verify_lmosaic(m))


def induced_order(m: Mosaic) -> tuple[int, ...]:
    """Order matrix of a verified L-mosaic (y <= x iff y in x+x), as up-set
    bitmask rows in the lattice_core convention: bit j of row i iff i <= j."""
    bad = [r for r in verify_lmosaic(m) if not r.holds]
    if bad:
        raise NotAnLMosaic(f"{bad[0].axiom} fails at {bad[0].witness}")
    n = m.size
    rows = [0] * n
    for j in range(n):
        for i in bits(m.cell(j, j)):
            rows[i] |= 1 << j
    full = full_mask(n)
    assert rows[m.neutral] == full, "neutral is not the bottom"
    for i in range(n):
        assert rows[i] >> i & 1, "not reflexive"
        for j in bits(rows[i]):
            assert i == j or not rows[j] >> i & 1, "not antisymmetric"
            assert rows[j] & ~rows[i] == 0, "not transitive"
    return tuple(rows)


def strong_closure(m: Mosaic, subset) -> frozenset[int]:
    """Union of the principal cells x+x over x in the subset: the least strong
    submosaic containing it.  Requires Lms1 and Lms2.

    The union is a strong submosaic when the input is join-closed enough (an
    L-submosaic; principal cells and strong submosaics always are); otherwise
    the input was no submosaic and NotASubmosaic is raised."""
    members = list(subset if not isinstance(subset, int) else bits(subset))
    if not members or any(not 0 <= x < m.size for x in members):
        raise NotASubmosaic("need a nonempty subset of the carrier")
    lms1, lms2, _, _ = verify_lmosaic(m)
    if not (lms1.holds and lms2.holds):
        raise NotAnLMosaic("strong closure needs Lms1 and Lms2")
    acc = 0
    for x in members:
        acc |= m.cell(x, x)
    if not is_strong_submosaic(m, acc):
        raise NotASubmosaic("union of principal cells leaks: input is not a submosaic")
    return elements(acc)


def is_strong_submosaic(m: Mosaic, subset) -> bool:
    """Contains the neutral element and no cell leaks out of the subset."""
    mask = subset if isinstance(subset, int) else mask_of(subset)
    if not mask >> m.neutral & 1:
        return False
    members = list(bits(mask))
    return all(m.cell(x, y) & ~mask == 0 for x in members for y in members)


def dualize(m: Mosaic, pi: Involution, literal: bool = False):
    """pi-dual of a commutative mosaic: table (x,y) -> pi(pi(x) + pi(y)) with
    neutral pi(0).  The outer pi is a deliberate correction: with the literal
    form pi(x) + pi(y) (exposed via literal=True) pi(0) is neutral only when
    pi is the identity, and pi would not be an isomorphism onto the dual.
    Returns the dual mosaic iff it verifies, None otherwise."""
    if pi.size != m.size:
        raise SizeMismatch("involution size disagrees with the carrier")
    if literal:
        fn = lambda x, y: m.cell(pi(x), pi(y))
    else:
        fn = lambda x, y: pi.image_mask(m.cell(pi(x), pi(y)))
    table = Multioperation.build(m.size, fn)
    got = verify_mosaic(table)
    if got.mosaic is None or got.mosaic.neutral != pi(m.neutral):
        return None
    return got.mosaic


def is_reproductive(op: Multioperation) -> AxiomReport:
    """x [.] A = A for every x (row-union check)."""
    full = full_mask(op.size)
    for x in range(op.size):
        acc = 0
        for y in range(op.size):
            acc |= op.cell(x, y)
        if acc != full:
            return AxiomReport("reproductive", False, (x,), "row union misses elements")
    return AxiomReport("reproductive", True)
