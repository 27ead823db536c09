"""Subset-operator residuation on posets with a greatest element."""

import pytest

from ordalg import (
    CanonicalResidual,
    ExplicitProduct,
    ExplicitResidual,
    NoTopError,
    NotVerifiedError,
    OperatorPoset,
    PartialStarError,
    SubsetBudgetError,
    adjointness_solutions,
    canonical_operators,
    check_operator_axioms,
    enumerate_structures,
    fixture,
    generated_family,
    make_poset,
    operator_derived_laws,
    star_table_poset,
)

AXIOMS = (
    "subset-commutativity",
    "subset-unit",
    "adjointness-forward",
    "adjointness-backward",
)


def operators_for(name):
    fx = fixture(name)
    return canonical_operators(fx.poset, fx.star)


@pytest.mark.parametrize("name", ["pentagon", "bowtie"])
@pytest.mark.parametrize("exhaustive", [False, True])
def test_canonical_operators_pass(name, exhaustive):
    op = operators_for(name)
    report = check_operator_axioms(op, exhaustive_subsets=exhaustive)
    assert tuple(k for k, _ in report.verdicts) == AXIOMS
    assert report.passed


@pytest.mark.parametrize("name", ["pentagon", "bowtie"])
def test_derived_laws_i_to_v(name):
    op = operators_for(name)
    report = check_operator_axioms(op, exhaustive_subsets=True)
    laws = operator_derived_laws(op, report)
    assert sorted(laws) == ["i", "ii", "iii", "iv", "v"]
    assert all(laws.values())


def test_derived_laws_gate_on_verified_report():
    op = operators_for("pentagon")
    with pytest.raises(NotVerifiedError):
        operator_derived_laws(op, None)
    other = operators_for("bowtie")
    other_report = check_operator_axioms(other)
    with pytest.raises(NotVerifiedError):
        operator_derived_laws(op, other_report)


def test_generated_family_contents():
    p = fixture("bowtie").poset
    fam = generated_family(p)
    assert 0 in fam and p.full in fam
    a, b = p.index("a"), p.index("b")
    assert p.up[a] & p.up[b] in fam
    assert all(1 << i in fam for i in range(p.n))


def test_broken_residual_fails_forward_adjointness():
    p = fixture("bowtie").poset
    bad = ExplicitResidual(
        p, {(x, y): p.down[y] for x in range(p.n) for y in range(p.n)}
    )
    op = OperatorPoset(p, canonical_operators(p, fixture("bowtie").star).prod, bad)
    report = check_operator_axioms(op)
    assert not report.passed
    assert "adjointness-forward" in report.failed()


def test_table_backed_operators_match_canonical_on_family():
    fx = fixture("pentagon")
    p = fx.poset
    canon = canonical_operators(p, fx.star)
    fam = generated_family(p)
    prod = ExplicitProduct(
        p, {(x, y): canon.prod.m(x, y) for x in fam for y in fam}
    )
    resid = ExplicitResidual(
        p, {(x, y): canon.resid.r(x, y) for x in range(p.n) for y in range(p.n)}
    )
    op = OperatorPoset(p, prod, resid)
    report = check_operator_axioms(op)
    assert report.passed


def test_partial_star_rejected():
    p = fixture("diamond").poset
    star = star_table_poset(p)
    with pytest.raises(PartialStarError):
        CanonicalResidual(p, star)


def test_no_top_rejected():
    p = make_poset(("x", "y"), ())
    with pytest.raises(NoTopError):
        canonical_operators(p, star_table_poset(make_poset(("x",), ())))


def test_subset_budget_guard():
    p = fixture("bool4").poset
    op = canonical_operators(p, star_table_poset(p))
    with pytest.raises(SubsetBudgetError):
        check_operator_axioms(op, exhaustive_subsets=True)


def test_adjointness_solutions_match_star_on_fixtures():
    for name in ("pentagon", "bowtie"):
        p = fixture(name).poset
        star = star_table_poset(p)
        for a in range(p.n):
            for b in range(p.n):
                sols = adjointness_solutions(p, a, b)
                d = star.value(a, b)
                assert sols == ((d,) if d is not None else ())


def test_adjointness_solutions_sweep_small_posets_with_top():
    for n in range(1, 5):
        for p in enumerate_structures(n, "posets-with-top").members:
            star = star_table_poset(p)
            for a in range(n):
                for b in range(n):
                    sols = adjointness_solutions(p, a, b)
                    d = star.value(a, b)
                    assert sols == ((d,) if d is not None else ())


def test_residual_masks_are_lower_cones():
    fx = fixture("bowtie")
    op = canonical_operators(fx.poset, fx.star)
    p = fx.poset
    for x in range(p.n):
        for y in range(p.n):
            mask = op.resid.r(x, y)
            assert mask == p.down[fx.star.value(x, y)]
            spread = 0
            for i in p.iter_mask(mask):
                spread |= p.down[i]
            assert spread == mask
