"""The ortholattice <-> dualizable L-mosaic equivalence: functor, inverse
reconstruction, morphism transfer and the mosaic-side orthomodularity test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .bits import bits, full_mask, mask_of, subsets
from .errors import (
    NotAnLMosaic,
    NotAnOrthocomplementation,
    PreconditionFailed,
    ReconstructionFailure,
    SizeTooLarge,
)
from .hyperstructure import (
    Mosaic,
    Multioperation,
    check_morphism,
    dualize,
    induced_order,
    is_associative,
    verify_lmosaic,
    verify_mosaic,
)
from .lattice_core import (
    AxiomReport,
    FiniteBoundedLattice,
    Involution,
    from_leq,
    generated_sublattice,
    is_orthocomplementation,
)
from .nakano import additive_nakano, restrict_to_sublattice


@dataclass(frozen=True)
class OrthoPair:
    """An ortholattice: a bounded lattice together with one orthocomplementation."""

    lattice: FiniteBoundedLattice
    pi: Involution

    def __post_init__(self):
        if not is_orthocomplementation(self.lattice, self.pi):
            raise NotAnOrthocomplementation("pi does not orthocomplement the lattice")

    @property
    def size(self) -> int:
        return self.lattice.size


def _dualizability_failure(mosaic: Mosaic, pi: Involution):
    """Why (mosaic, pi) is not a dualizable L-mosaic pair; None when it is.

    Beyond the transported-mosaic check (which any involution passes, the
    outer-pi table being an isomorphic copy), pi must orthocomplement the
    induced order: order-reversing, with pi(0) in x + pi(x) for every x.
    Without these the reconstructed structure is no pi-ortholattice.
    """
    bad = [r for r in verify_lmosaic(mosaic) if not r.holds]
    if bad:
        return f"{bad[0].axiom} fails at {bad[0].witness}", bad[0].witness
    dual = dualize(mosaic, pi)
    if dual is None:
        return "pi-dual table is not a mosaic", ()
    bad = [r for r in verify_lmosaic(dual) if not r.holds]
    if bad:
        return f"pi-dual violates {bad[0].axiom} at {bad[0].witness}", bad[0].witness
    n = mosaic.size
    for x in range(n):
        for y in range(n):
            below = bool(mosaic.cell(x, x) >> y & 1)  # y <= x
            rev = bool(mosaic.cell(pi(y), pi(y)) >> pi(x) & 1)  # pi(x) <= pi(y)
            if below != rev:
                return "pi does not reverse the induced order", (x, y)
    one = pi(mosaic.neutral)
    for x in range(n):
        if not mosaic.cell(x, pi(x)) >> one & 1:
            return "pi(x) is no complement of x", (x,)
    return None


def is_genuinely_dualizable(mosaic: Mosaic, pi: Involution) -> bool:
    return _dualizability_failure(mosaic, pi) is None


@dataclass(frozen=True)
class DualizableLMosaicPair:
    """A verified L-mosaic with an involution that orthocomplements its
    induced order (equivalently: reconstruction yields a pi-ortholattice)."""

    mosaic: Mosaic
    pi: Involution

    def __post_init__(self):
        failure = _dualizability_failure(self.mosaic, self.pi)
        if failure is not None:
            reason, witness = failure
            if "Lms" in reason:
                raise NotAnLMosaic(reason)
            raise ReconstructionFailure(reason, witness)

    @property
    def size(self) -> int:
        return self.mosaic.size

    @property
    def one(self) -> int:
        return self.pi(self.mosaic.neutral)


def functor_E(op: OrthoPair) -> DualizableLMosaicPair:
    """Object assignment of the equivalence: the additive Nakano mosaic with
    the same orthocomplementation."""
    return DualizableLMosaicPair(additive_nakano(op.lattice).mosaic, op.pi)


def reconstruct_from(mosaic: Mosaic, pi: Involution, names=None) -> OrthoPair:
    """Rebuild the pi-ortholattice on the mosaic's own carrier: order from the
    principal cells, joins from the unique Lms4 candidate, top = pi(0), meets
    transported through pi.  Raises ReconstructionFailure when the input is
    not genuinely a dualizable L-mosaic."""
    failure = _dualizability_failure(mosaic, pi)
    if failure is not None:
        raise ReconstructionFailure(*failure)
    n = mosaic.size
    leq = induced_order(mosaic)
    if names is None:
        names = [f"x{i}" for i in range(n)]
    lattice = from_leq(names, leq)
    assert lattice.bottom == mosaic.neutral and lattice.top == pi(mosaic.neutral)
    for x in range(n):
        for y in range(n):
            # the Lms4 candidate is the least upper bound
            z = lattice.join(x, y)
            if not (mosaic.cell(x, y) >> z & 1):
                raise ReconstructionFailure("join escapes its cell", (x, y))
            if lattice.meet(x, y) != pi(lattice.join(pi(x), pi(y))):
                raise ReconstructionFailure("meet is not the pi-transported join", (x, y))
    rebuilt = additive_nakano(lattice)
    for x in range(n):
        for y in range(n):
            if rebuilt.cell(x, y) != mosaic.cell(x, y):
                raise ReconstructionFailure("mosaic is not the Nakano mosaic of its order", (x, y))
    return OrthoPair(lattice, pi)


def reconstruct_lattice(p: DualizableLMosaicPair, names=None) -> OrthoPair:
    return reconstruct_from(p.mosaic, p.pi, names)


@dataclass(frozen=True)
class MorphismTransferReport:
    """Raw lattice/mosaic morphism status of one map plus the pi-intertwining
    flag.  The provable coincidence is between the arrow statuses (morphism
    and intertwining), not the raw ones."""

    map: tuple[int, ...]
    lattice_hom: bool
    mosaic_hom: bool
    intertwines: bool

    @property
    def lattice_arrow(self) -> bool:
        return self.lattice_hom and self.intertwines

    @property
    def mosaic_arrow(self) -> bool:
        return self.mosaic_hom and self.intertwines

    @property
    def agree(self) -> bool:
        return self.lattice_arrow == self.mosaic_arrow

    def as_report(self) -> AxiomReport:
        if self.agree:
            return AxiomReport("morphism-transfer", True)
        return AxiomReport("morphism-transfer", False, self.map, "arrow statuses disagree")


def morphism_transfer_check(f, src: OrthoPair, dst: OrthoPair) -> MorphismTransferReport:
    f = tuple(f)
    a, b = src.lattice, dst.lattice
    lattice_hom = all(
        f[a.join(x, y)] == b.join(f[x], f[y]) and f[a.meet(x, y)] == b.meet(f[x], f[y])
        for x in range(a.size)
        for y in range(a.size)
    )
    ma = additive_nakano(a).mosaic
    mb = additive_nakano(b).mosaic
    mosaic_hom = check_morphism(f, ma, mb, "morphism").holds
    intertwines = all(f[src.pi(x)] == dst.pi(f[x]) for x in range(a.size))
    return MorphismTransferReport(f, lattice_hom, mosaic_hom, intertwines)


def is_orthomodular_mosaic(p: DualizableLMosaicPair) -> AxiomReport:
    """Criterion: x in y+y and 1 in x + pi(y) imply x = y, with 1 = pi(0)."""
    one = p.one
    m, pi = p.mosaic, p.pi
    for x in range(p.size):
        for y in range(p.size):
            if x == y:
                continue
            if m.cell(y, y) >> x & 1 and m.cell(x, pi(y)) >> one & 1:
                return AxiomReport("orthomodular-mosaic", False, (x, y), "criterion violated")
    return AxiomReport("orthomodular-mosaic", True)


def generated_polygroup_check(p: DualizableLMosaicPair, x: int, y: int) -> AxiomReport:
    """Smallest pi-closed L-submosaic containing x and y, realized through the
    reconstructed lattice; its restricted multioperation must be an
    associative mosaic (a polygroup)."""
    if not is_orthomodular_mosaic(p).holds:
        raise PreconditionFailed("mosaic is not orthomodular")
    ortho = reconstruct_lattice(p)
    seeds = {x, y, p.mosaic.neutral, p.one}
    closed = generated_sublattice(ortho.lattice, seeds, p.pi)
    restricted = restrict_to_sublattice(additive_nakano(ortho.lattice), closed)
    got = verify_mosaic(restricted.op)
    if not got.ok:
        failed = next(r for r in got.reports if not r.holds)
        return AxiomReport("generated-polygroup", False, (x, y), f"mosaic check: {failed.axiom}")
    assoc = is_associative(restricted.op)
    if not assoc.holds:
        return AxiomReport("generated-polygroup", False, (x, y), "restriction not associative")
    return AxiomReport("generated-polygroup", True)


# -- exhaustive search for dualizable pairs on tiny carriers -------------------


def _orders_with_bottom(n: int):
    """All labeled partial orders on 0..n-1 with bottom 0 and pairwise joins,
    yielded as down-set bitmask rows."""
    down = [0] * n
    down[0] = 1

    def rec(i: int):
        if i == n:
            rows = tuple(down)
            if _all_joins_exist(rows):
                yield rows
            return
        base = 1 | 1 << i
        others = [j for j in range(1, n) if j != i]
        for extra in range(1 << len(others)):
            cand = base | mask_of(others[k] for k in bits(extra))
            down[i] = cand
            yield from rec(i + 1)
        down[i] = 0

    def _all_joins_exist(rows) -> bool:
        # antisymmetry + transitivity + pairwise least upper bounds
        up = [mask_of(j for j in range(n) if rows[j] >> i & 1) for i in range(n)]
        for i in range(n):
            for j in bits(up[i]):
                if i != j and up[j] >> i & 1:
                    return False
                if up[j] & ~up[i]:
                    return False
        for i in range(n):
            for j in range(n):
                common = up[i] & up[j]
                if not any(common & ~up[m] == 0 for m in bits(common)):
                    return False
        return True

    yield from rec(1) if n > 1 else iter([(1,)])


def enumerate_dualizable_pairs(max_n: int):
    """Exhaustively discover (L-mosaic, pi) pairs on carriers up to max_n <= 4,
    generating only tables that satisfy the Lms1 diagonal constraints (and the
    neutral row) before running the full verification pipeline."""
    if max_n > 4:
        raise SizeTooLarge("raw table search is capped at carrier size 4")
    out = []
    for n in range(1, max_n + 1):
        for rows in _orders_with_bottom(n):
            up = [mask_of(j for j in range(n) if rows[j] >> i & 1) for i in range(n)]
            join = {}
            for i in range(n):
                for j in range(n):
                    common = up[i] & up[j]
                    join[i, j] = next(m for m in bits(common) if common & ~up[m] == 0)
            free_pairs = [(x, y) for x in range(1, n) for y in range(x + 1, n)]
            free_space = []
            for x, y in free_pairs:
                ubs = up[x] & up[y]
                free_space.append([m | 1 << join[x, y] for m in subsets(full_mask(n) & ~ubs)])
            for choice in itertools.product(*free_space):
                table = [[0] * n for _ in range(n)]
                for x in range(n):
                    table[0][x] = table[x][0] = 1 << x
                for x in range(1, n):
                    table[x][x] = rows[x]
                for (x, y), cell in zip(free_pairs, choice):
                    table[x][y] = table[y][x] = cell
                op = Multioperation(n, tuple(tuple(r) for r in table))
                got = verify_mosaic(op)
                if not got.ok or not all(r.holds for r in verify_lmosaic(got.mosaic)):
                    continue
                for pi in _involutions(n):
                    if is_genuinely_dualizable(got.mosaic, pi):
                        out.append(DualizableLMosaicPair(got.mosaic, pi))
    return out


def _involutions(n: int):
    for perm in itertools.permutations(range(n)):
        if all(perm[perm[x]] == x for x in range(n)):
            yield Involution(perm)
