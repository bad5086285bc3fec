"""Cartan involutions, restricted root systems, and the exact sequence."""

from fractions import Fraction

import pytest

from cartan_ds import (
    CapExceeded,
    NotInvolution,
    NotIsometric,
    NotRootPreserving,
    RankMismatch,
    Weight,
    build_default_catalog,
    build_root_system,
    catalog_form,
    classify_restricted_type,
    entry_involution,
    entry_root_system,
    multiplicity_identity_holds,
    restricted_roots,
    validate_involution,
    verify_exact_sequence,
)

HALF = Fraction(1, 2)


def form(form_id):
    entry = catalog_form(form_id)
    rs = entry_root_system(entry)
    inv = entry_involution(entry, rs=rs)
    return rs, inv


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def test_validate_rejects_wrong_size():
    rs = build_root_system("A2")
    with pytest.raises(RankMismatch):
        validate_involution(rs, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def test_validate_rejects_non_involution():
    rs = build_root_system("A2")
    with pytest.raises(NotInvolution):
        validate_involution(rs, ((1, 1), (0, 1)))


def test_validate_rejects_non_isometry():
    rs = build_root_system("A2")
    # diag(1, -1) squares to the identity but distorts the invariant form
    with pytest.raises(NotIsometric):
        validate_involution(rs, ((1, 0), (0, -1)))


def test_validate_rejects_non_root_preserving():
    rs = build_root_system("D2")
    # an honest euclidean reflection that misses the root lattice
    theta = (
        (Fraction(3, 5), Fraction(4, 5)),
        (Fraction(4, 5), Fraction(-3, 5)),
    )
    with pytest.raises(NotRootPreserving):
        validate_involution(rs, theta)


def test_validate_accepts_identity_and_minus_identity():
    rs = build_root_system("B2")
    plus = validate_involution(rs, ((1, 0), (0, 1)))
    minus = validate_involution(rs, ((-1, 0), (0, -1)))
    assert plus.split_rank == 0 and len(plus.compact_basis) == 2
    assert minus.split_rank == 2 and len(minus.compact_basis) == 0


# ---------------------------------------------------------------------------
# eigenspaces and restriction
# ---------------------------------------------------------------------------


def test_restriction_is_projection_onto_split_part():
    rs, inv = form("su(2,1)")
    for lam in list(rs.all_roots) + [rs.rho, rs.fundamental_weights[0]]:
        bar = inv.restrict(lam)
        # theta acts by -1 on the restriction
        assert inv.act(bar) == -bar
        # restricting twice changes nothing
        assert inv.restrict(bar) == bar


def test_split_coordinate_roundtrip():
    rs, inv = form("su(3,1)")
    assert inv.split_rank == 1
    v = inv.split_basis[0].scale(Fraction(-7, 3))
    coords = inv.to_split_coords(v)
    assert inv.from_split_coords(coords) == v


def test_to_split_coords_rejects_vectors_outside_split_part():
    rs, inv = form("su(2,1)")
    compact = inv.compact_basis[0]
    with pytest.raises(RankMismatch):
        inv.to_split_coords(compact)


# ---------------------------------------------------------------------------
# compatible positive system
# ---------------------------------------------------------------------------


def test_default_positive_system_kept_when_compatible():
    _, inv = form("su(2,1)")
    assert inv.default_compatible
    assert inv.chamber.word == ()


def test_positive_system_rechosen_for_simple_reflection_involution():
    # theta = s_1 on A2 restricts the default positives onto {a1, -a1/2, a1/2},
    # which contains an opposite pair, so a new chamber must be chosen.
    rs = build_root_system("A2")
    s1 = rs.simple_reflection(0)
    inv = validate_involution(rs, s1.matrix)
    assert not inv.default_compatible
    assert inv.chamber.matrix == rs.simple_reflection(1).matrix
    rrs = restricted_roots(rs, inv)
    alpha1 = rs.simple_roots[0]
    assert rrs.positive_restricted == frozenset({alpha1, alpha1.scale(HALF)})
    assert rrs.multiplicity[alpha1.scale(HALF)] == 2
    assert rrs.multiplicity[alpha1] == 1
    assert classify_restricted_type(rrs) == "BC1"


# ---------------------------------------------------------------------------
# restricted root data on frozen forms
# ---------------------------------------------------------------------------


def test_su21_restricted_data():
    rs, inv = form("su(2,1)")
    rrs = restricted_roots(rs, inv)
    half_rho = rs.rho.scale(HALF)
    assert rrs.positive_restricted == frozenset({half_rho, rs.rho})
    assert rrs.multiplicity[half_rho] == 2
    assert rrs.multiplicity[rs.rho] == 1
    assert rrs.vanishing_roots == frozenset()
    assert rrs.simple_restricted == (half_rho,)
    # indivisible = roots whose half is not itself a restricted root
    assert rrs.indivisible == frozenset({half_rho, -half_rho})
    assert classify_restricted_type(rrs) == "BC1"
    assert multiplicity_identity_holds(rrs)
    # rho_a = (2 * rho/2 + 1 * rho) / 2 = rho
    assert rrs.rho_restricted == rs.rho


def test_so41_restricted_data():
    rs, inv = form("so(4,1)")
    rrs = restricted_roots(rs, inv)
    assert inv.split_rank == 1
    assert len(rrs.vanishing_roots) == 2
    pos = list(rrs.positive_restricted)
    assert len(pos) == 1
    assert rrs.multiplicity[pos[0]] == 3
    assert classify_restricted_type(rrs) == "A1"


def test_compact_form_has_no_restricted_roots():
    rs, inv = form("compact(A2)")
    rrs = restricted_roots(rs, inv)
    assert rrs.restricted_roots == frozenset()
    assert rrs.vanishing_roots == frozenset(rs.all_roots)
    assert classify_restricted_type(rrs) == "0"


def test_split_form_restricted_system_is_the_full_system():
    rs, inv = form("split(G2)")
    rrs = restricted_roots(rs, inv)
    assert rrs.restricted_roots == frozenset(rs.all_roots)
    assert all(m == 1 for m in rrs.multiplicity.values())
    assert rrs.vanishing_roots == frozenset()
    assert classify_restricted_type(rrs) == "G2"
    assert rrs.rho_restricted == rs.rho


@pytest.mark.parametrize(
    "form_id,label",
    [
        ("sl(2,R)", "A1"),
        ("sl(4,R)", "A3"),
        ("su(1,1)", "A1"),
        ("su(2,1)", "BC1"),
        ("su(3,1)", "BC1"),
        ("su(2,2)", "B2"),  # rank-2 systems with two lengths use the B label
        ("su(3,2)", "BC2"),
        ("so(3,2)", "B2"),
        ("so(4,2)", "B2"),
        ("so(3,3)", "A3"),
        ("so(5,3)", "B3"),
        ("so(4,4)", "D4"),
        ("sp(3,R)", "C3"),
        ("split(F4)", "F4"),
        ("compact(B3)", "0"),
    ],
)
def test_restricted_type_classification(form_id, label):
    rs, inv = form(form_id)
    rrs = restricted_roots(rs, inv)
    assert classify_restricted_type(rrs) == label


def test_multiplicity_identity_across_whole_catalog():
    for entry in build_default_catalog():
        rs = entry_root_system(entry)
        inv = entry_involution(entry, rs=rs)
        rrs = restricted_roots(rs, inv)
        assert multiplicity_identity_holds(rrs), entry.id
        # the involution's split rank always matches the restricted span
        assert len(rrs.simple_restricted) <= inv.split_rank


# ---------------------------------------------------------------------------
# exact sequence
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "form_id,orders",
    [
        ("sl(2,R)", (2, 1, 2)),
        ("su(2,1)", (2, 1, 2)),
        ("compact(A2)", (6, 6, 1)),
        ("split(B2)", (8, 1, 8)),
        ("so(4,1)", (4, 2, 2)),
    ],
)
def test_exact_sequence_orders(form_id, orders):
    rs, inv = form(form_id)
    report = verify_exact_sequence(rs, inv)
    assert report.passed
    assert (
        report.order_commutant,
        report.order_vanishing,
        report.order_restricted,
    ) == orders
    assert report.kernel_matches and report.image_matches and report.order_identity


def test_exact_sequence_for_rechosen_chamber():
    # theta = s_1 on A2: the commutant of s_1 is {1, s_1}
    rs = build_root_system("A2")
    inv = validate_involution(rs, rs.simple_reflection(0).matrix)
    report = verify_exact_sequence(rs, inv)
    assert report.passed
    assert (
        report.order_commutant,
        report.order_vanishing,
        report.order_restricted,
    ) == (2, 1, 2)


def test_exact_sequence_cap():
    rs, inv = form("split(B3)")
    with pytest.raises(CapExceeded):
        verify_exact_sequence(rs, inv, cap=10)
