"""Cartan involutions on a root datum and their restricted root systems.

An involution theta acts on the weight space of a root system, preserving the
invariant pairing and permuting the roots.  Its (-1)-eigenspace plays the role
of the dual split part: restriction of a weight is (lam - theta(lam)) / 2, and
the nonzero restrictions of roots form the (possibly non-reduced) restricted
root system, each with a multiplicity equal to its number of preimages.

A positive system of the ambient roots is *compatible* when its nonzero
restrictions form a positive system of the restricted roots.  The validator
keeps the default positive system when it is already compatible and otherwise
re-chooses one deterministically, recording the Weyl chamber transform that
carries the default system onto the chosen one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from . import linalg
from .errors import (
    CapExceeded,
    NotInvolution,
    NotIsometric,
    NotRootPreserving,
    RankMismatch,
)
from .linalg import Mat
from .rootdata import (
    DEFAULT_CAP,
    IntMat,
    RootSystem,
    Weight,
    WeylElement,
    apply,
    dominant_representative,
    enumerate_weyl,
)

HALF = Fraction(1, 2)


@dataclass(frozen=True, eq=False)
class CartanInvolution:
    """Validated involution data on a fixed root system.

    ``positive_roots`` is the chosen compatible positive system and ``chamber``
    the Weyl element carrying the default positive system onto it (identity
    when the default was already compatible).  ``source`` records provenance:
    entries built by the catalog are marked "catalog"; anything else carries a
    realizability warning in reports, because an involution that passes the
    algebraic checks need not come from a maximally split Cartan subalgebra of
    a real form.
    """

    root_system: RootSystem
    theta: IntMat
    sigma: IntMat
    split_basis: tuple[Weight, ...]
    compact_basis: tuple[Weight, ...]
    positive_roots: frozenset[Weight]
    chamber: WeylElement
    default_compatible: bool
    source: str = "user"

    @property
    def split_rank(self) -> int:
        return len(self.split_basis)

    def act(self, lam: Weight) -> Weight:
        """theta applied to a weight."""
        n = len(self.theta)
        if lam.rank != n:
            raise RankMismatch("weight rank does not match involution")
        return Weight(
            tuple(
                Fraction(sum(row[j] * lam.coords[j] for j in range(n)))
                for row in self.theta
            )
        )

    def restrict(self, lam: Weight) -> Weight:
        """Projection onto the (-1)-eigenspace: (lam - theta(lam)) / 2."""
        return (lam - self.act(lam)).scale(HALF)

    def to_split_coords(self, v: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a (-1)-eigenspace vector against split_basis."""
        cols = tuple(
            tuple(b.coords[i] for b in self.split_basis) for i in range(v.rank)
        )
        sol = linalg.solve(cols, v.coords)
        if sol is None:
            raise RankMismatch("vector is not in the split part")
        return sol

    def from_split_coords(self, values) -> Weight:
        if isinstance(values, Weight):
            values = values.coords
        vals = [linalg.frac(v) for v in values]
        if len(vals) != self.split_rank:
            raise RankMismatch("split coordinate length mismatch")
        out = Weight.zero(len(self.theta))
        for c, b in zip(vals, self.split_basis):
            out = out + b.scale(c)
        return out


def _eigenbasis(theta: IntMat, sign: int) -> tuple[Weight, ...]:
    n = len(theta)
    shifted = tuple(
        tuple(Fraction(theta[i][j]) - (sign if i == j else 0) for j in range(n))
        for i in range(n)
    )
    return tuple(Weight(v) for v in linalg.nullspace(shifted))


def _regular_combination(rs: RootSystem, basis: tuple[Weight, ...], targets) -> Weight:
    """Deterministic vector in span(basis) pairing nonzero with every target."""
    if not targets:
        return Weight.zero(rs.rank) if not basis else basis[0].scale(0)
    t = 1
    while True:
        v = Weight.zero(rs.rank)
        for i, b in enumerate(basis):
            v = v + b.scale(Fraction(t) ** i)
        if all(rs.pairing(v, x) != 0 for x in targets):
            return v
        t += 1


def validate_involution(
    rs: RootSystem, theta_matrix, source: str = "user"
) -> CartanInvolution:
    """Check a candidate involution and assemble its CartanInvolution data.

    Raises NotInvolution, NotIsometric or NotRootPreserving in that order of
    testing.  The compatible positive system is the default one when possible,
    otherwise it is re-chosen deterministically from a regular split vector.
    """
    theta_rows = linalg.matrix(theta_matrix)
    n = rs.rank
    if len(theta_rows) != n or any(len(r) != n for r in theta_rows):
        raise RankMismatch("involution matrix size does not match rank")
    if linalg.mat_mul(theta_rows, theta_rows) != linalg.identity(n):
        raise NotInvolution("matrix does not square to the identity")
    form = rs.form
    lhs = linalg.mat_mul(linalg.mat_mul(linalg.transpose(theta_rows), form), theta_rows)
    if lhs != form:
        raise NotIsometric("matrix does not preserve the invariant pairing")
    if not linalg.is_integral(theta_rows):
        raise NotRootPreserving("matrix does not preserve the root lattice")
    theta = linalg.as_int_matrix(theta_rows)
    probe = CartanInvolution(
        root_system=rs,
        theta=theta,
        sigma=linalg.as_int_matrix(linalg.mat_neg(theta_rows)),
        split_basis=(),
        compact_basis=(),
        positive_roots=frozenset(),
        chamber=rs.identity,
        default_compatible=True,
        source=source,
    )
    for root in rs.all_roots:
        if probe.act(root) not in rs.all_roots:
            raise NotRootPreserving("matrix does not permute the roots")

    split_basis = _eigenbasis(theta, -1)
    compact_basis = _eigenbasis(theta, +1)
    positive, chamber, default_ok = _compatible_positive_system(rs, probe)
    return CartanInvolution(
        root_system=rs,
        theta=theta,
        sigma=probe.sigma,
        split_basis=split_basis,
        compact_basis=compact_basis,
        positive_roots=positive,
        chamber=chamber,
        default_compatible=default_ok,
        source=source,
    )


def _compatible_positive_system(
    rs: RootSystem, inv: CartanInvolution
) -> tuple[frozenset[Weight], WeylElement, bool]:
    restrictions = {root: inv.restrict(root) for root in rs.all_roots}
    default_restr = {
        restrictions[r] for r in rs.positive_roots if not restrictions[r].is_zero()
    }
    if not any(-v in default_restr for v in default_restr):
        return frozenset(rs.positive_roots), rs.identity, True

    split_basis = _eigenbasis(inv.theta, -1)
    compact_basis = _eigenbasis(inv.theta, +1)
    nonzero = [v for v in set(restrictions.values()) if not v.is_zero()]
    fixed = [r for r in rs.all_roots if restrictions[r].is_zero()]
    lam_split = _regular_combination(rs, split_basis, nonzero)
    lam_compact = (
        _regular_combination(rs, compact_basis, fixed)
        if fixed
        else Weight.zero(rs.rank)
    )
    # scale the split part until it dominates the compact part on every root
    min_split = min(
        abs(rs.pairing(restrictions[r], lam_split))
        for r in rs.all_roots
        if not restrictions[r].is_zero()
    )
    max_compact = max(
        (abs(rs.pairing(r, lam_compact)) for r in rs.all_roots), default=Fraction(0)
    )
    scale = max_compact / min_split + 1
    regular = lam_split.scale(scale) + lam_compact
    positive = frozenset(r for r in rs.all_roots if rs.pairing(r, regular) > 0)
    if len(positive) != len(rs.positive_roots):
        raise NotRootPreserving("failed to choose a compatible positive system")
    _, to_dominant = dominant_representative(rs, regular)
    chamber = to_dominant.inverse()
    if {apply(chamber, r) for r in rs.positive_roots} != positive:
        raise NotRootPreserving("chamber transform does not match positive system")
    return positive, chamber, False


@dataclass(frozen=True, eq=False)
class RestrictedRootSystem:
    """Restrictions of the ambient roots to the dual split part.

    Restricted roots are stored as ambient vectors lying in the
    (-1)-eigenspace.  ``positive_restricted`` is induced by the involution's
    compatible positive system; ``vanishing_roots`` are the ambient roots that
    restrict to zero; ``indivisible`` is the reduced subsystem of restricted
    roots whose half is not itself a restricted root.
    """

    root_system: RootSystem
    involution: CartanInvolution
    restricted_roots: frozenset[Weight]
    multiplicity: Mapping[Weight, int]
    positive_restricted: frozenset[Weight]
    vanishing_roots: frozenset[Weight]
    rho_restricted: Weight
    simple_restricted: tuple[Weight, ...]
    indivisible: frozenset[Weight]

    @property
    def split_rank(self) -> int:
        return self.involution.split_rank

    def pairing(self, x: Weight, y: Weight) -> Fraction:
        return self.root_system.pairing(x, y)


def restricted_roots(rs: RootSystem, inv: CartanInvolution) -> RestrictedRootSystem:
    """Compute the restricted root system with multiplicities."""
    mult: dict[Weight, int] = {}
    vanishing = []
    for root in rs.all_roots:
        v = inv.restrict(root)
        if v.is_zero():
            vanishing.append(root)
        else:
            mult[v] = mult.get(v, 0) + 1
    restricted = frozenset(mult)
    positive = frozenset(
        inv.restrict(r)
        for r in inv.positive_roots
        if not inv.restrict(r).is_zero()
    )
    rho_r = Weight.zero(rs.rank)
    for v in positive:
        rho_r = rho_r + v.scale(Fraction(mult[v], 2))
    sums = {a + b for a in positive for b in positive}
    simple = tuple(
        sorted((v for v in positive if v not in sums), key=lambda w: w.coords)
    )
    indivisible = frozenset(v for v in restricted if v.scale(HALF) not in restricted)
    return RestrictedRootSystem(
        root_system=rs,
        involution=inv,
        restricted_roots=restricted,
        multiplicity=mult,
        positive_restricted=positive,
        vanishing_roots=frozenset(vanishing),
        rho_restricted=rho_r,
        simple_restricted=simple,
        indivisible=indivisible,
    )


def multiplicity_identity_holds(rrs: RestrictedRootSystem) -> bool:
    """2 * (number of positive restricted preimages) + |vanishing| = |roots|."""
    covered = 2 * sum(rrs.multiplicity[v] for v in rrs.positive_restricted)
    return covered + len(rrs.vanishing_roots) == len(rrs.root_system.all_roots)


def _component_split(rrs: RestrictedRootSystem) -> list[list[Weight]]:
    """Connected components of the simple restricted roots."""
    comps: list[list[Weight]] = []
    remaining = list(rrs.simple_restricted)
    while remaining:
        comp = [remaining.pop(0)]
        changed = True
        while changed:
            changed = False
            for v in list(remaining):
                if any(rrs.pairing(v, u) != 0 for u in comp):
                    comp.append(v)
                    remaining.remove(v)
                    changed = True
        comps.append(comp)
    return comps


def classify_restricted_type(rrs: RestrictedRootSystem) -> str:
    """Cartan-type label of the restricted system, "BC_r" when non-reduced.

    The self-dual rank-2 case is reported as "B2".  Empty restricted systems
    (compact forms) are labeled "0".
    """
    if not rrs.restricted_roots:
        return "0"
    labels = []
    for comp in _component_split(rrs):
        span_pos = [
            v
            for v in rrs.positive_restricted
            if _supported_on(rrs, v, comp)
        ]
        r = len(comp)
        doubled = any(v.scale(2) in rrs.restricted_roots for v in span_pos)
        if doubled:
            labels.append(f"BC{r}")
            continue
        count = 2 * len(span_pos)
        norms = sorted({rrs.pairing(v, v) for v in span_pos})
        ratio = norms[-1] / norms[0]
        if r == 1:
            labels.append("A1")
        elif ratio == 1:
            if count == r * (r + 1):
                labels.append(f"A{r}")
            elif count == 2 * r * (r - 1):
                labels.append(f"D{r}")
            elif (r, count) in {(6, 72), (7, 126), (8, 240)}:
                labels.append(f"E{r}")
            else:
                labels.append(f"?{r}")
        elif ratio == 2:
            if r == 4 and count == 48:
                labels.append("F4")
            elif r == 2:
                labels.append("B2")
            else:
                long_count = sum(1 for v in span_pos if rrs.pairing(v, v) == norms[-1])
                labels.append(f"C{r}" if 2 * long_count == 2 * r else f"B{r}")
        elif ratio == 3:
            labels.append("G2")
        else:
            labels.append(f"?{r}")
    return "x".join(sorted(labels))


def _supported_on(rrs: RestrictedRootSystem, v: Weight, comp: list[Weight]) -> bool:
    others = [u for u in rrs.simple_restricted if u not in comp]
    return all(rrs.pairing(v, u) == 0 for u in others) and any(
        rrs.pairing(v, u) != 0 for u in comp
    )


@dataclass(frozen=True)
class ExactSequenceReport:
    """Orders and checks for 1 -> W_vanishing -> W^theta -> W_restricted -> 1."""

    order_commutant: int
    order_vanishing: int
    order_restricted: int
    kernel_matches: bool
    image_matches: bool
    order_identity: bool

    @property
    def passed(self) -> bool:
        return self.kernel_matches and self.image_matches and self.order_identity


def _split_action_matrix(
    rrs: RestrictedRootSystem, w: WeylElement
) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of w restricted to the split part, in split_basis coordinates."""
    inv = rrs.involution
    cols = [inv.to_split_coords(apply(w, b)) for b in inv.split_basis]
    r = len(cols)
    return tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))


def _restricted_weyl_matrices(
    rrs: RestrictedRootSystem, cap: int
) -> set[tuple[tuple[Fraction, ...], ...]]:
    """The reflection group of the reduced restricted system, on split coords."""
    inv = rrs.involution
    r = rrs.split_rank
    if r == 0:
        return {()}
    ident = linalg.identity(r)
    gens = []
    basis_split = [inv.to_split_coords(b) for b in inv.split_basis]
    gram = tuple(
        tuple(rrs.pairing(inv.split_basis[i], inv.split_basis[j]) for j in range(r))
        for i in range(r)
    )

    def pair(x, y):
        return sum(x[i] * gram[i][j] * y[j] for i in range(r) for j in range(r))

    for beta in sorted(rrs.indivisible, key=lambda w: w.coords):
        b = inv.to_split_coords(beta)
        nb = pair(b, b)
        cols = []
        for j in range(r):
            e = tuple(Fraction(1 if i == j else 0) for i in range(r))
            c = 2 * pair(e, b) / nb
            cols.append(tuple(e[i] - c * b[i] for i in range(r)))
        gens.append(tuple(tuple(cols[j][i] for j in range(r)) for i in range(r)))
    seen = {ident}
    queue = deque([ident])
    while queue:
        m = queue.popleft()
        for g in gens:
            nxt = linalg.mat_mul(m, g)
            if nxt not in seen:
                if len(seen) >= cap:
                    raise CapExceeded(f"restricted Weyl group exceeded cap {cap}")
                seen.add(nxt)
                queue.append(nxt)
    return seen


def verify_exact_sequence(
    rs: RootSystem, inv: CartanInvolution, cap: int = DEFAULT_CAP
) -> ExactSequenceReport:
    """Check kernel, image and order identity of the restriction homomorphism.

    The theta-commutant of the Weyl group restricts to the split part; the
    kernel must be exactly the reflection group of the vanishing roots and the
    image exactly the Weyl group of the reduced restricted system.
    """
    rrs = restricted_roots(rs, inv)
    group = enumerate_weyl(rs, cap)
    theta = inv.theta
    commutant = [
        w
        for w in group
        if linalg.mat_mul(linalg.matrix(w.matrix), linalg.matrix(theta))
        == linalg.mat_mul(linalg.matrix(theta), linalg.matrix(w.matrix))
    ]

    vanishing_group: set[WeylElement] = {rs.identity}
    gens = [rs.reflection_in_root(g) for g in sorted(rrs.vanishing_roots, key=lambda w: w.coords)]
    queue = deque([rs.identity])
    while queue:
        w = queue.popleft()
        for g in gens:
            nxt = w.compose(g)
            if nxt not in vanishing_group:
                if len(vanishing_group) >= cap:
                    raise CapExceeded(f"vanishing Weyl group exceeded cap {cap}")
                vanishing_group.add(nxt)
                queue.append(nxt)

    restricted_group = _restricted_weyl_matrices(rrs, cap)
    r = rrs.split_rank
    ident_split = linalg.identity(r) if r else ()
    kernel = {w for w in commutant if _split_action_matrix(rrs, w) == ident_split}
    image = {_split_action_matrix(rrs, w) for w in commutant}
    return ExactSequenceReport(
        order_commutant=len(commutant),
        order_vanishing=len(vanishing_group),
        order_restricted=len(restricted_group),
        kernel_matches=kernel == set(vanishing_group),
        image_matches=image == restricted_group,
        order_identity=len(commutant)
        == len(vanishing_group) * len(restricted_group),
    )
